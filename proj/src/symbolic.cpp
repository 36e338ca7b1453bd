#include "snreorder/symbolic.hpp"

#include <algorithm>

namespace snr {

std::vector<Index> elimination_tree(const SymmetricPattern& a) {
  const Index n = a.n;
  // Row k of the lower triangle lists the columns i < k with a_ki != 0.
  std::vector<Index> row_ptr(n + 1, 0);
  for (Index j = 0; j < n; ++j) {
    for (Index i : a.column(j)) {
      if (i != j) ++row_ptr[i + 1];
    }
  }
  for (Index i = 0; i < n; ++i) row_ptr[i + 1] += row_ptr[i];
  std::vector<Index> row_cols(row_ptr.back());
  std::vector<Index> next(row_ptr.begin(), row_ptr.end() - 1);
  for (Index j = 0; j < n; ++j) {
    for (Index i : a.column(j)) {
      if (i != j) row_cols[next[i]++] = j;
    }
  }

  std::vector<Index> parent(n, n);
  std::vector<Index> ancestor(n, n);
  for (Index k = 0; k < n; ++k) {
    for (Index p = row_ptr[k]; p < row_ptr[k + 1]; ++p) {
      // Walk from i to the root of its current subtree, compressing the path.
      for (Index i = row_cols[p]; i != n && i < k;) {
        Index up = ancestor[i];
        ancestor[i] = k;
        if (up == n) parent[i] = k;
        i = up;
      }
    }
  }
  return parent;
}

std::vector<Index> tree_postorder(std::span<const Index> parent) {
  const auto n = static_cast<Index>(parent.size());
  std::vector<Index> head(n + 1, -1), sibling(n, -1);
  // Push in reverse so child lists come out ascending.
  for (Index j = n - 1; j >= 0; --j) {
    Index p = parent[j];
    sibling[j] = head[p];
    head[p] = j;
  }
  std::vector<Index> post;
  post.reserve(n);
  std::vector<Index> stack;
  for (Index root = head[n]; root != -1; root = sibling[root]) {
    stack.push_back(root);
    while (!stack.empty()) {
      Index top = stack.back();
      Index child = head[top];
      if (child == -1) {
        stack.pop_back();
        post.push_back(top);
      } else {
        head[top] = sibling[child];
        stack.push_back(child);
      }
    }
  }
  return post;
}

EliminationStructure factor_structure(const SymmetricPattern& a,
                                      std::span<const Index> parent) {
  const Index n = a.n;
  if (static_cast<Index>(parent.size()) != n) {
    throw StructureError("parent array does not match matrix dimension");
  }
  EliminationStructure es;
  es.parent.assign(parent.begin(), parent.end());
  es.postorder = tree_postorder(parent);

  std::vector<Index> child_ptr(n + 1, 0);
  for (Index j = 0; j < n; ++j) {
    if (parent[j] != n) ++child_ptr[parent[j] + 1];
  }
  for (Index j = 0; j < n; ++j) child_ptr[j + 1] += child_ptr[j];
  std::vector<Index> children(child_ptr.back());
  {
    std::vector<Index> next(child_ptr.begin(), child_ptr.end() - 1);
    for (Index j = 0; j < n; ++j) {
      if (parent[j] != n) children[next[parent[j]]++] = j;
    }
  }

  std::vector<Index> mark(n, -1);
  es.col_counts.resize(n);
  es.l_ptr.assign(n + 1, 0);
  es.l_rows.reserve(a.row_idx.size());
  for (Index j = 0; j < n; ++j) {
    const auto start = static_cast<Index>(es.l_rows.size());
    auto add = [&](Index r) {
      if (mark[r] != j) {
        mark[r] = j;
        es.l_rows.push_back(r);
      }
    };
    for (Index r : a.column(j)) add(r);
    for (Index c = child_ptr[j]; c < child_ptr[j + 1]; ++c) {
      Index child = children[c];
      for (Index p = es.l_ptr[child]; p < es.l_ptr[child + 1]; ++p) {
        Index r = es.l_rows[p];
        if (r > j) add(r);
      }
    }
    std::sort(es.l_rows.begin() + start, es.l_rows.end());
    es.l_ptr[j + 1] = static_cast<Index>(es.l_rows.size());
    es.col_counts[j] = es.l_ptr[j + 1] - start;
  }
  return es;
}

Index SupernodePartition::max_width() const {
  Index m = 0;
  for (Index s = 0; s < count(); ++s) m = std::max(m, width(s));
  return m;
}

SupernodePartition partition_from_boundaries(std::vector<Index> first) {
  if (first.empty() || first.front() != 0) {
    throw StructureError("supernode boundaries must start at 0");
  }
  SupernodePartition part;
  part.first = std::move(first);
  part.snode_of.resize(part.first.back());
  for (Index s = 0; s < part.count(); ++s) {
    if (part.first[s + 1] <= part.first[s]) {
      throw StructureError("supernode boundaries must increase");
    }
    for (Index j = part.first[s]; j < part.first[s + 1]; ++j) {
      part.snode_of[j] = s;
    }
  }
  return part;
}

SupernodePartition fundamental_supernodes(const EliminationStructure& es) {
  const Index n = es.n();
  std::vector<Index> nchildren(n + 1, 0);
  for (Index j = 0; j < n; ++j) ++nchildren[es.parent[j]];
  std::vector<Index> first;
  first.reserve(n + 1);
  for (Index j = 0; j < n; ++j) {
    bool extends = j > 0 && es.parent[j - 1] == j && nchildren[j] == 1 &&
                   es.col_counts[j - 1] == es.col_counts[j] + 1;
    if (!extends) first.push_back(j);
  }
  first.push_back(n);
  return partition_from_boundaries(std::move(first));
}

HigherAdjacency higher_adjacency(const SupernodePartition& part,
                                 const EliminationStructure& es) {
  HigherAdjacency h;
  const Index N = part.count();
  h.ptr.assign(N + 1, 0);
  std::vector<Index> mark(es.n(), -1);
  for (Index s = 0; s < N; ++s) {
    const Index last = part.end(s) - 1;
    const auto start = static_cast<Index>(h.rows.size());
    for (Index j = part.begin(s); j <= last; ++j) {
      for (Index r : es.factor_column(j)) {
        if (r > last && mark[r] != s) {
          mark[r] = s;
          h.rows.push_back(r);
        }
      }
    }
    std::sort(h.rows.begin() + start, h.rows.end());
    h.ptr[s + 1] = static_cast<Index>(h.rows.size());
  }
  return h;
}

SupernodalTree supernodal_etree(const SupernodePartition& part,
                                const EliminationStructure& es) {
  const Index N = part.count();
  const Index n = es.n();
  SupernodalTree t;
  t.parent.resize(N);
  for (Index s = 0; s < N; ++s) {
    Index p = es.parent[part.end(s) - 1];
    t.parent[s] = p == n ? N : part.snode_of[p];
    if (t.parent[s] != N && t.parent[s] <= s) {
      throw StructureError("supernodal parent does not follow its child");
    }
  }

  t.child_ptr.assign(N + 1, 0);
  for (Index s = 0; s < N; ++s) {
    if (t.parent[s] != N) ++t.child_ptr[t.parent[s] + 1];
  }
  for (Index s = 0; s < N; ++s) t.child_ptr[s + 1] += t.child_ptr[s];
  t.child_idx.resize(t.child_ptr.back());
  std::vector<Index> next(t.child_ptr.begin(), t.child_ptr.end() - 1);
  for (Index s = 0; s < N; ++s) {
    if (t.parent[s] != N) t.child_idx[next[t.parent[s]]++] = s;
  }

  const HigherAdjacency hadj = higher_adjacency(part, es);
  t.descendants.assign(N, 0);
  t.subtree_work.assign(N, 0);
  for (Index s = 0; s < N; ++s) {
    const Count r = hadj.size(s);
    for (Index j = part.begin(s); j < part.end(s); ++j) {
      const Count c = (part.end(s) - j) + r;
      t.subtree_work[s] += c * c;
    }
  }
  // Children precede parents in index order.
  for (Index s = 0; s < N; ++s) {
    Index p = t.parent[s];
    if (p == N) continue;
    t.descendants[p] += t.descendants[s] + 1;
    t.subtree_work[p] += t.subtree_work[s];
  }
  return t;
}

Count supernodal_nnz(const SupernodePartition& part,
                     const HigherAdjacency& hadj) {
  Count total = 0;
  for (Index s = 0; s < part.count(); ++s) {
    const Count w = part.width(s);
    total += w * (w + 1) / 2 + w * hadj.size(s);
  }
  return total;
}

Count supernodal_flops(const SupernodePartition& part,
                       const HigherAdjacency& hadj) {
  Count total = 0;
  for (Index s = 0; s < part.count(); ++s) {
    for (Index j = part.begin(s); j < part.end(s); ++j) {
      const Count c = (part.end(s) - j) + hadj.size(s);
      total += c * c;
    }
  }
  return total;
}

}  // namespace snr
