#ifndef SNREORDER_BLOCKMETRICS_HPP_
#define SNREORDER_BLOCKMETRICS_HPP_

#include <span>
#include <vector>

#include "snreorder/symbolic.hpp"
#include "snreorder/workspace.hpp"

namespace snr {

// Contiguous rows [first, last] of hadj(source), in reordered labels.
// For ordinary blocks first_target == last_target; a maximal block may run
// across consecutive targets.
struct Block {
  Index source;
  Index first_target;
  Index last_target;
  Index first;
  Index last;

  Index rows() const { return last - first + 1; }
};

struct BlockList {
  std::vector<Index> block_ptr{0};
  std::vector<Block> blocks;
  std::vector<Index> maximal_ptr{0};
  std::vector<Block> maximal;

  Index sources() const { return static_cast<Index>(block_ptr.size()) - 1; }
  std::span<const Block> blocks_of(Index s) const {
    return {blocks.data() + block_ptr[s],
            static_cast<std::size_t>(block_ptr[s + 1] - block_ptr[s])};
  }
  std::span<const Block> maximal_of(Index s) const {
    return {maximal.data() + maximal_ptr[s],
            static_cast<std::size_t>(maximal_ptr[s + 1] - maximal_ptr[s])};
  }
};

// hadj(s) mapped to the permuted labels of `order`, sorted.
HigherAdjacency permute_hadj(const HigherAdjacency& hadj,
                             const Permutation& order);

// Throws StructureError if `order` moves a column out of its supernode.
void check_boundary_preserving(const SupernodePartition& part,
                               const Permutation& order);

// Blocks of every supernode under the within-supernode reordering `order`
// (hadj given in labels before the reordering).
BlockList block_list(const SupernodePartition& part,
                     const HigherAdjacency& hadj, const Permutation& order);

struct PairCount {
  Index target;
  Index source;
  Index count;
};

struct TargetStats {
  Index width = 0;
  Index updaters = 0;
  Count block_count = 0;     // sum_r bc(J_k, J_r)
  Count weighted_count = 0;  // sum_r |J_r| bc(J_k, J_r)
  Index max_block = 0;
  double mean_block = 0.0;
};

struct BlockStats {
  std::vector<PairCount> pairs;  // sorted by (target, source)
  std::vector<TargetStats> per_target;
  Count total = 0;
  Count weighted_total = 0;
  // Bucket b counts blocks with 2^b <= rows < 2^(b+1).
  std::vector<Count> histogram;

  // bc(target, source); 0 when the pair has no blocks.
  Index count(Index target, Index source) const;
};

BlockStats block_stats(const SupernodePartition& part, const BlockList& list);

struct Objective {
  std::vector<Count> per_supernode;
  Count total = 0;
};

// Unweighted: sum_r bc(J_k, J_r). Weighted: sum_r |J_r| bc(J_k, J_r).
Objective objective(const BlockStats& stats, bool weighted);

// Updater sets restricted to one supernode, in local row numbers 0..m-1.
struct LocalUpdaters {
  Index rows = 0;
  mem::vector<mem::vector<Index>> sets;
  mem::vector<Count> weights;
};

// sum_s w_s * (runs of set s) along `row_order`, a permutation of 0..m-1.
Count weighted_block_count(const LocalUpdaters& u,
                           std::span<const Index> row_order);

// Exhaustive minimum of weighted_block_count over all row orders.
// Refuses (throws Error) when rows > 8.
Count brute_force_min_blocks(const LocalUpdaters& u);

}  // namespace snr

#endif  // SNREORDER_BLOCKMETRICS_HPP_
