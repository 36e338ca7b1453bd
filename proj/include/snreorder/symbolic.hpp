#ifndef SNREORDER_SYMBOLIC_HPP_
#define SNREORDER_SYMBOLIC_HPP_

#include <span>
#include <vector>

#include "snreorder/pattern.hpp"

namespace snr {

// Elimination tree and the row structure of every column of L.
// Roots carry the sentinel parent n.
struct EliminationStructure {
  std::vector<Index> parent;
  // postorder[k] is the column visited k-th (children before parents,
  // siblings in ascending order).
  std::vector<Index> postorder;
  std::vector<Index> col_counts;
  // Sorted row structure of each column of L, diagonal included.
  std::vector<Index> l_ptr{0};
  std::vector<Index> l_rows;

  Index n() const { return static_cast<Index>(parent.size()); }
  Count nnz() const { return static_cast<Count>(l_rows.size()); }
  std::span<const Index> factor_column(Index j) const {
    return {l_rows.data() + l_ptr[j],
            static_cast<std::size_t>(l_ptr[j + 1] - l_ptr[j])};
  }
};

std::vector<Index> elimination_tree(const SymmetricPattern& a);

// Postorder of a forest given by a parent array (sentinel = size).
std::vector<Index> tree_postorder(std::span<const Index> parent);

EliminationStructure factor_structure(const SymmetricPattern& a,
                                      std::span<const Index> parent);

inline EliminationStructure symbolic_factorization(const SymmetricPattern& a) {
  return factor_structure(a, elimination_tree(a));
}

// Contiguous supernodes J_0..J_{N-1}; supernode s spans [first[s], first[s+1]).
struct SupernodePartition {
  std::vector<Index> first{0};
  std::vector<Index> snode_of;

  Index count() const { return static_cast<Index>(first.size()) - 1; }
  Index n() const { return first.back(); }
  Index begin(Index s) const { return first[s]; }
  Index end(Index s) const { return first[s + 1]; }
  Index width(Index s) const { return first[s + 1] - first[s]; }
  Index max_width() const;

  friend bool operator==(const SupernodePartition&,
                         const SupernodePartition&) = default;
};

// Builds the column->supernode map from a boundary list ending in n.
SupernodePartition partition_from_boundaries(std::vector<Index> first);

// Column j+1 extends the supernode of j iff parent(j) = j+1, j+1 has exactly
// one child, and col_counts(j) = col_counts(j+1) + 1.
SupernodePartition fundamental_supernodes(const EliminationStructure& es);

// Higher adjacency: for each supernode, the sorted rows beyond its last column
// that appear in any of its factor columns.
struct HigherAdjacency {
  std::vector<Index> ptr{0};
  std::vector<Index> rows;

  Index count() const { return static_cast<Index>(ptr.size()) - 1; }
  std::span<const Index> of(Index s) const {
    return {rows.data() + ptr[s], static_cast<std::size_t>(ptr[s + 1] - ptr[s])};
  }
  Index size(Index s) const { return ptr[s + 1] - ptr[s]; }
};

HigherAdjacency higher_adjacency(const SupernodePartition& part,
                                 const EliminationStructure& es);

// Supernodal elimination tree with per-supernode subtree statistics.
// Column work is modeled as c_j^2 where c_j counts column j's entries in the
// supernodal (dense-block) structure.
struct SupernodalTree {
  std::vector<Index> parent;       // sentinel = count()
  std::vector<Index> descendants;  // proper descendants
  std::vector<Count> subtree_work;
  std::vector<Index> child_ptr{0};
  std::vector<Index> child_idx;  // ascending within each supernode

  Index count() const { return static_cast<Index>(parent.size()); }
  bool is_root(Index s) const { return parent[s] == count(); }
  std::span<const Index> children(Index s) const {
    return {child_idx.data() + child_ptr[s],
            static_cast<std::size_t>(child_ptr[s + 1] - child_ptr[s])};
  }
};

SupernodalTree supernodal_etree(const SupernodePartition& part,
                                const EliminationStructure& es);

// Entries stored when every supernode keeps a dense trapezoid:
// sum over s of w(w+1)/2 + w*|hadj(s)|.
Count supernodal_nnz(const SupernodePartition& part,
                     const HigherAdjacency& hadj);

// sum over columns of c_j^2 in the supernodal structure.
Count supernodal_flops(const SupernodePartition& part,
                       const HigherAdjacency& hadj);

}  // namespace snr

#endif  // SNREORDER_SYMBOLIC_HPP_
