#include "snreorder/amalgamate.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace snr {

Count merge_cost(Index child_width, Index child_hadj, Index parent_width,
                 Index parent_hadj) {
  const Count grown = static_cast<Count>(parent_width) + parent_hadj;
  if (grown < child_hadj) {
    throw StructureError("child rows exceed parent structure");
  }
  return static_cast<Count>(child_width) * (grown - child_hadj);
}

Count merge_cost(const SupernodePartition& part, const SupernodalTree& tree,
                 const HigherAdjacency& hadj, Index child, Index parent) {
  if (child < 0 || child >= tree.count() || tree.parent[child] != parent) {
    throw StructureError("supernode " + std::to_string(parent) +
                         " is not the parent of " + std::to_string(child));
  }
  return merge_cost(part.width(child), hadj.size(child), part.width(parent),
                    hadj.size(parent));
}

namespace {

struct Candidate {
  Count cost;
  Index child;
  Index parent;
  Index child_version;
  Index parent_version;
};

// Min-heap on cost; equal costs pop the larger child first.
struct CandidateOrder {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.child < b.child;
  }
};

}  // namespace

Amalgamation amalgamate(const SupernodePartition& part,
                        const SupernodalTree& tree,
                        const EliminationStructure& es, double cap) {
  const Index N = part.count();
  const HigherAdjacency hadj = higher_adjacency(part, es);

  Amalgamation out;
  out.base_nnz = supernodal_nnz(part, hadj);
  out.base_flops = supernodal_flops(part, hadj);

  // Groups are identified by their top (highest) fundamental supernode.
  std::vector<Index> leader(N), width(N), rows(N), version(N, 0);
  std::vector<std::vector<Index>> kids(N);
  for (Index s = 0; s < N; ++s) {
    leader[s] = s;
    width[s] = part.width(s);
    rows[s] = hadj.size(s);
    auto c = tree.children(s);
    kids[s].assign(c.begin(), c.end());
  }
  auto find = [&](Index s) {
    Index root = s;
    while (leader[root] != root) root = leader[root];
    while (leader[s] != root) {
      Index up = leader[s];
      leader[s] = root;
      s = up;
    }
    return root;
  };

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> heap;
  auto push = [&](Index g) {
    if (tree.parent[g] == N) return;
    Index p = find(tree.parent[g]);
    heap.push({merge_cost(width[g], rows[g], width[p], rows[p]), g, p,
               version[g], version[p]});
  };

  if (cap > 0.0) {
    for (Index s = 0; s < N; ++s) push(s);
  }
  const double budget = cap * static_cast<double>(out.base_nnz);
  while (!heap.empty()) {
    Candidate c = heap.top();
    heap.pop();
    if (leader[c.child] != c.child || leader[c.parent] != c.parent ||
        version[c.child] != c.child_version ||
        version[c.parent] != c.parent_version) {
      continue;
    }
    if (static_cast<double>(out.added_zeros + c.cost) > budget) break;

    const Index g = c.child, p = c.parent;
    leader[g] = p;
    width[p] += width[g];
    ++version[p];
    ++version[g];
    auto& pk = kids[p];
    pk.erase(std::find(pk.begin(), pk.end(), g));
    pk.insert(pk.end(), kids[g].begin(), kids[g].end());
    kids[g].clear();
    std::sort(pk.begin(), pk.end());

    out.added_zeros += c.cost;
    out.log.push_back({static_cast<Index>(out.log.size()) + 1, g, p, c.cost,
                       out.base_nnz == 0 ? 0.0
                                         : static_cast<double>(out.added_zeros) /
                                               out.base_nnz});
    push(p);
    for (Index k : pk) push(k);
  }

  // Members of each group, ascending; ascending order is topological.
  std::vector<std::vector<Index>> members(N);
  for (Index s = 0; s < N; ++s) members[find(s)].push_back(s);

  // Postorder the merged tree, children by ascending top.
  std::vector<Index> order;  // group tops in final order
  std::vector<Index> stack;
  std::vector<std::size_t> cursor(N, 0);
  for (Index s = 0; s < N; ++s) {
    if (find(s) != s || tree.parent[s] != N) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      Index top = stack.back();
      if (cursor[top] < kids[top].size()) {
        stack.push_back(kids[top][cursor[top]++]);
      } else {
        stack.pop_back();
        order.push_back(top);
      }
    }
  }

  out.group_of.assign(N, 0);
  std::vector<Index> inverse;  // new column -> old column
  inverse.reserve(part.n());
  std::vector<Index> first{0};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Index g = order[k];
    for (Index s : members[g]) {
      out.group_of[s] = static_cast<Index>(k);
      for (Index j = part.begin(s); j < part.end(s); ++j) inverse.push_back(j);
    }
    first.push_back(static_cast<Index>(inverse.size()));
    const Count w = width[g], r = rows[g];
    for (Count i = 0; i < w; ++i) {
      const Count cnt = (w - i) + r;
      out.merged_flops += cnt * cnt;
    }
  }
  out.relabel = Permutation::from_inverse(std::move(inverse));
  out.partition = partition_from_boundaries(std::move(first));
  return out;
}

}  // namespace snr
