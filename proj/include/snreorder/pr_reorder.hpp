#ifndef SNREORDER_PR_REORDER_HPP_
#define SNREORDER_PR_REORDER_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "snreorder/symbolic.hpp"
#include "snreorder/workspace.hpp"

namespace snr {

// Key used to pick the next updater among those whose parent has already
// been scheduled. Ties go to the larger supernode index.
enum class Strategy { natural, ndesc, work };

std::optional<Strategy> parse_strategy(std::string_view name);
std::string_view to_string(Strategy s);

// Does hadj(s) meet the columns of supernode t?
bool updates(const SupernodePartition& part, const HigherAdjacency& hadj,
             Index s, Index t);

// Descendants of t that update t, parents before children.
std::vector<Index> updater_schedule(Index t, const SupernodePartition& part,
                                    const SupernodalTree& tree,
                                    const HigherAdjacency& hadj,
                                    Strategy strategy);

// Same, written into caller-owned working storage.
void updater_schedule(Index t, const SupernodePartition& part,
                      const SupernodalTree& tree, const HigherAdjacency& hadj,
                      Strategy strategy, mem::vector<Index>& out);

// Ordered partition of the local rows 0..m-1 of one supernode. Splitting a
// set costs time proportional to the refining set.
class OrderedPartition {
 public:
  explicit OrderedPartition(Index capacity = 0);

  // Restarts with the single set {0, ..., size-1}.
  void reset(Index size);

  // Splits every set S with S∩H and S∖H both nonempty. Within each run of
  // consecutive splittable sets the H part goes right for the first set and
  // alternates sides after that. H must be sorted, unique, nonempty and
  // within range (throws Error otherwise).
  void refine(std::span<const Index> h);

  Index size() const { return size_; }
  Index set_count() const { return sets_; }
  // Sets in order, each listed ascending.
  std::vector<std::vector<Index>> sets() const;
  // Local rows set by set, ascending inside each set.
  std::vector<Index> ordering() const;

 private:
  Index size_ = 0;
  Index sets_ = 0;
  mem::vector<Index> elems_;
  mem::vector<Index> pos_;
  mem::vector<Index> set_of_;
  mem::vector<Index> begin_;
  mem::vector<Index> end_;
  mem::vector<Index> hits_;
  mem::vector<Index> cursor_;
  mem::vector<char> right_;
  mem::vector<Index> touched_;
};

// Local row order of supernode t after refining by each updater in turn.
std::vector<Index> pr_order_supernode(Index t, const SupernodePartition& part,
                                      const HigherAdjacency& hadj,
                                      std::span<const Index> schedule,
                                      OrderedPartition& scratch);

// Within-supernode reordering of every supernode by partition refinement.
Permutation pr_reorder(const SupernodePartition& part,
                       const SupernodalTree& tree, const HigherAdjacency& hadj,
                       Strategy strategy);

}  // namespace snr

#endif  // SNREORDER_PR_REORDER_HPP_
