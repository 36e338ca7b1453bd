#ifndef SNREORDER_AMALGAMATE_HPP_
#define SNREORDER_AMALGAMATE_HPP_

#include <vector>

#include "snreorder/symbolic.hpp"

namespace snr {

// Explicit zeros created by merging child supernode c into its parent p:
// |J_c| * ((|J_p| + r_p) - r_c), where r_x is the size of x's higher adjacency.
// Exact because a child's off-block rows lie inside its parent's columns and
// off-block rows.
Count merge_cost(Index child_width, Index child_hadj, Index parent_width,
                 Index parent_hadj);

// Checked form for a fundamental pair; throws StructureError unless
// parent == tree.parent[child].
Count merge_cost(const SupernodePartition& part, const SupernodalTree& tree,
                 const HigherAdjacency& hadj, Index child, Index parent);

struct MergeStep {
  Index step;
  Index child;   // top fundamental supernode of the absorbed group
  Index parent;  // top fundamental supernode of the absorbing group
  Count cost;
  double cumulative_ratio;
};

struct Amalgamation {
  // Relabels columns so that every merged group is contiguous. Identity when
  // every merge joined a parent with its last child.
  Permutation relabel;
  // Merged partition in relabeled columns.
  SupernodePartition partition;
  // Merged group of each fundamental supernode, numbered in final order.
  std::vector<Index> group_of;
  std::vector<MergeStep> log;
  Count base_nnz = 0;
  Count added_zeros = 0;
  Count base_flops = 0;
  Count merged_flops = 0;

  double storage_growth() const {
    return base_nnz == 0 ? 0.0 : static_cast<double>(added_zeros) / base_nnz;
  }
  double work_growth() const {
    return base_flops == 0
               ? 0.0
               : static_cast<double>(merged_flops - base_flops) / base_flops;
  }
};

// Greedy child-parent merging driven by a min-heap on merge cost. A merge is
// taken while (added zeros so far + cost) / nnz(L) stays within `cap`;
// merging stops at the first pair that would exceed it. Equal costs go to
// the larger child index. A cap <= 0 disables merging.
Amalgamation amalgamate(const SupernodePartition& part,
                        const SupernodalTree& tree,
                        const EliminationStructure& es, double cap);

}  // namespace snr

#endif  // SNREORDER_AMALGAMATE_HPP_
