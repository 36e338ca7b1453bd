#ifndef SNREORDER_TSP_REORDER_HPP_
#define SNREORDER_TSP_REORDER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "snreorder/blockmetrics.hpp"
#include "snreorder/symbolic.hpp"
#include "snreorder/workspace.hpp"

namespace snr {

enum class InsertionRule { arbitrary, nearest, farthest };

std::optional<InsertionRule> parse_rule(std::string_view name);
std::string_view to_string(InsertionRule r);

// Block-count minimization within one supernode posed as a TSP.
//
// Each local row r carries the set D(r) of updaters whose higher adjacency
// contains it. The distance between two cities is the total weight of the
// symmetric difference of their D sets, and a dummy city with D = {} closes
// the circuit. Along any tour cut at the dummy, each updater s enters and
// leaves its rows once per block, so
//   length = sum_s 2 * w_s * bc_s.
// Rows with identical D sets are collapsed into one city.
class TspInstance {
 public:
  static constexpr Index kDenseLimit = 512;

  TspInstance() = default;
  // `compress` collapses rows with identical D sets.
  static TspInstance from_updaters(const LocalUpdaters& u, bool compress);

  Index rows() const { return rows_; }
  Index cities() const { return static_cast<Index>(city_ptr_.size()) - 1; }
  Index dummy() const { return cities(); }
  std::span<const Index> rows_of(Index city) const;
  std::span<const Index> indicator(Index city) const;  // D set (slot ids)
  Index smallest_row(Index city) const { return rows_of(city)[0]; }

  Count distance(Index a, Index b) const;
  Count tour_length(std::span<const Index> tour) const;

  // Local rows read off a tour cut at the dummy city.
  std::vector<Index> row_order(std::span<const Index> tour) const;

 private:
  Count sparse_distance(Index a, Index b) const;

  Index rows_ = 0;
  mem::vector<Index> city_ptr_;
  mem::vector<Index> city_rows_;
  mem::vector<Index> d_ptr_;
  mem::vector<Index> d_set_;
  mem::vector<Count> weight_;     // per updater slot
  mem::vector<Count> city_mass_;  // sum of weights over D(city)
  mem::vector<Count> dense_;      // (cities+1)^2 when small enough
};

// The instance for supernode t: updaters are the descendants whose higher
// adjacency meets t, weighted by width when `weighted`.
TspInstance build_instance(Index t, const SupernodePartition& part,
                           const SupernodalTree& tree,
                           const HigherAdjacency& hadj, bool weighted,
                           bool compress = true);

// Cyclic order of all cities; order[0] is the dummy.
struct Tour {
  std::vector<Index> order;
  Count length = 0;
  // Cities in the order they were inserted (empty for exact tours).
  std::vector<Index> inserted;
};

// Insertion heuristic. Starts from the dummy plus one city chosen by the rule
// from distance-to-dummy, then repeatedly picks a city (arbitrary: seeded
// pseudorandom; nearest/farthest: min/max distance to the circuit) and
// inserts it where the circuit grows least. Position ties take the earliest
// slot; selection ties take the smallest row.
Tour insertion_solve(const TspInstance& inst, InsertionRule rule,
                     std::uint64_t seed);

// Exhaustive optimum with the dummy fixed. Refuses more than 10 cities.
Tour exact_solve(const TspInstance& inst);

// Within-supernode reordering of every supernode via insertion tours.
Permutation tsp_reorder(const SupernodePartition& part,
                        const SupernodalTree& tree, const HigherAdjacency& hadj,
                        InsertionRule rule, bool weighted, std::uint64_t seed);

}  // namespace snr

#endif  // SNREORDER_TSP_REORDER_HPP_
