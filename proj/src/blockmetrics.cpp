#include "snreorder/blockmetrics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace snr {

HigherAdjacency permute_hadj(const HigherAdjacency& hadj,
                             const Permutation& order) {
  HigherAdjacency out;
  out.ptr = hadj.ptr;
  out.rows.resize(hadj.rows.size());
  for (Index s = 0; s < hadj.count(); ++s) {
    for (Index p = hadj.ptr[s]; p < hadj.ptr[s + 1]; ++p) {
      out.rows[p] = order.new_of(hadj.rows[p]);
    }
    std::sort(out.rows.begin() + out.ptr[s], out.rows.begin() + out.ptr[s + 1]);
  }
  return out;
}

void check_boundary_preserving(const SupernodePartition& part,
                               const Permutation& order) {
  if (order.size() != part.n()) {
    throw StructureError("ordering size does not match partition");
  }
  for (Index j = 0; j < part.n(); ++j) {
    if (part.snode_of[order.new_of(j)] != part.snode_of[j]) {
      throw StructureError("ordering moves column " + std::to_string(j) +
                           " out of its supernode");
    }
  }
}

BlockList block_list(const SupernodePartition& part,
                     const HigherAdjacency& hadj, const Permutation& order) {
  check_boundary_preserving(part, order);
  const HigherAdjacency rows = permute_hadj(hadj, order);
  BlockList list;
  const Index N = part.count();
  list.block_ptr.assign(N + 1, 0);
  list.maximal_ptr.assign(N + 1, 0);
  for (Index s = 0; s < N; ++s) {
    auto h = rows.of(s);
    std::size_t k = 0;
    while (k < h.size()) {
      // Maximal run of consecutive row labels.
      std::size_t e = k + 1;
      while (e < h.size() && h[e] == h[e - 1] + 1) ++e;
      list.maximal.push_back({s, part.snode_of[h[k]], part.snode_of[h[e - 1]],
                              h[k], h[e - 1]});
      // Split the run at target boundaries.
      Index first = h[k];
      while (first <= h[e - 1]) {
        Index t = part.snode_of[first];
        Index last = std::min(h[e - 1], part.end(t) - 1);
        list.blocks.push_back({s, t, t, first, last});
        first = last + 1;
      }
      k = e;
    }
    list.block_ptr[s + 1] = static_cast<Index>(list.blocks.size());
    list.maximal_ptr[s + 1] = static_cast<Index>(list.maximal.size());
  }
  return list;
}

Index BlockStats::count(Index target, Index source) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(),
                             PairCount{target, source, 0},
                             [](const PairCount& a, const PairCount& b) {
                               return a.target != b.target
                                          ? a.target < b.target
                                          : a.source < b.source;
                             });
  if (it != pairs.end() && it->target == target && it->source == source) {
    return it->count;
  }
  return 0;
}

BlockStats block_stats(const SupernodePartition& part, const BlockList& list) {
  BlockStats st;
  const Index N = part.count();
  st.per_target.resize(N);
  std::vector<Count> rows_into(N, 0);
  for (Index t = 0; t < N; ++t) st.per_target[t].width = part.width(t);

  for (Index s = 0; s < list.sources(); ++s) {
    auto blocks = list.blocks_of(s);
    std::size_t k = 0;
    while (k < blocks.size()) {
      const Index t = blocks[k].first_target;
      Index bc = 0;
      for (; k < blocks.size() && blocks[k].first_target == t; ++k) {
        ++bc;
        const Index r = blocks[k].rows();
        TargetStats& ts = st.per_target[t];
        ts.max_block = std::max(ts.max_block, r);
        rows_into[t] += r;
        auto bucket = static_cast<std::size_t>(std::bit_width(
                          static_cast<unsigned>(r))) - 1;
        if (st.histogram.size() <= bucket) st.histogram.resize(bucket + 1, 0);
        ++st.histogram[bucket];
      }
      st.pairs.push_back({t, s, bc});
      TargetStats& ts = st.per_target[t];
      ++ts.updaters;
      ts.block_count += bc;
      ts.weighted_count += static_cast<Count>(part.width(s)) * bc;
    }
  }
  std::sort(st.pairs.begin(), st.pairs.end(),
            [](const PairCount& a, const PairCount& b) {
              return a.target != b.target ? a.target < b.target
                                          : a.source < b.source;
            });
  for (Index t = 0; t < N; ++t) {
    TargetStats& ts = st.per_target[t];
    if (ts.block_count > 0) {
      ts.mean_block = static_cast<double>(rows_into[t]) / ts.block_count;
    }
    st.total += ts.block_count;
    st.weighted_total += ts.weighted_count;
  }
  return st;
}

Objective objective(const BlockStats& stats, bool weighted) {
  Objective obj;
  obj.per_supernode.reserve(stats.per_target.size());
  for (const TargetStats& ts : stats.per_target) {
    obj.per_supernode.push_back(weighted ? ts.weighted_count : ts.block_count);
  }
  obj.total = weighted ? stats.weighted_total : stats.total;
  return obj;
}

Count weighted_block_count(const LocalUpdaters& u,
                           std::span<const Index> row_order) {
  std::vector<char> member(u.rows, 0);
  Count total = 0;
  for (std::size_t s = 0; s < u.sets.size(); ++s) {
    std::fill(member.begin(), member.end(), 0);
    for (Index r : u.sets[s]) member[r] = 1;
    Count runs = 0;
    bool inside = false;
    for (Index r : row_order) {
      if (member[r] && !inside) ++runs;
      inside = member[r] != 0;
    }
    total += u.weights[s] * runs;
  }
  return total;
}

Count brute_force_min_blocks(const LocalUpdaters& u) {
  if (u.rows > 8) {
    throw Error("brute-force block minimization refused for " +
                std::to_string(u.rows) + " rows (limit 8)");
  }
  std::vector<Index> order(u.rows);
  std::iota(order.begin(), order.end(), 0);
  Count best = weighted_block_count(u, order);
  while (std::next_permutation(order.begin(), order.end())) {
    best = std::min(best, weighted_block_count(u, order));
  }
  return best;
}

}  // namespace snr
