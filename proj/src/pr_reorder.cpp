#include "snreorder/pr_reorder.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace snr {

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "natural") return Strategy::natural;
  if (name == "ndesc") return Strategy::ndesc;
  if (name == "work") return Strategy::work;
  return std::nullopt;
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::natural: return "natural";
    case Strategy::ndesc: return "ndesc";
    case Strategy::work: return "work";
  }
  return "?";
}

bool updates(const SupernodePartition& part, const HigherAdjacency& hadj,
             Index s, Index t) {
  auto h = hadj.of(s);
  auto it = std::lower_bound(h.begin(), h.end(), part.begin(t));
  return it != h.end() && *it < part.end(t);
}

namespace {

// (key, index) pairs compared lexicographically; the larger pops first.
using Keyed = std::pair<Count, Index>;

Count strategy_key(const SupernodalTree& tree, Strategy strategy, Index s) {
  switch (strategy) {
    case Strategy::natural: return s;
    case Strategy::ndesc: return tree.descendants[s];
    case Strategy::work: return tree.subtree_work[s];
  }
  return s;
}

void schedule_into(Index t, const SupernodePartition& part,
                   const SupernodalTree& tree, const HigherAdjacency& hadj,
                   Strategy strategy, mem::vector<Index>& out,
                   mem::vector<Keyed>& heap) {
  out.clear();
  heap.clear();
  auto offer = [&](Index parent) {
    for (Index c : tree.children(parent)) {
      // A descendant updates t only if its parent does, so pruning here
      // loses nothing.
      if (!updates(part, hadj, c, t)) continue;
      heap.emplace_back(strategy_key(tree, strategy, c), c);
      std::push_heap(heap.begin(), heap.end());
    }
  };
  offer(t);
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end());
    Index s = heap.back().second;
    heap.pop_back();
    out.push_back(s);
    offer(s);
  }
}

}  // namespace

std::vector<Index> updater_schedule(Index t, const SupernodePartition& part,
                                    const SupernodalTree& tree,
                                    const HigherAdjacency& hadj,
                                    Strategy strategy) {
  mem::vector<Index> out;
  mem::vector<Keyed> heap;
  schedule_into(t, part, tree, hadj, strategy, out, heap);
  return {out.begin(), out.end()};
}

void updater_schedule(Index t, const SupernodePartition& part,
                      const SupernodalTree& tree, const HigherAdjacency& hadj,
                      Strategy strategy, mem::vector<Index>& out) {
  mem::vector<Keyed> heap;
  schedule_into(t, part, tree, hadj, strategy, out, heap);
}

OrderedPartition::OrderedPartition(Index capacity) {
  elems_.reserve(capacity);
  pos_.reserve(capacity);
  set_of_.reserve(capacity);
  begin_.reserve(capacity);
  end_.reserve(capacity);
  hits_.reserve(capacity);
  cursor_.reserve(capacity);
  right_.reserve(capacity);
  touched_.reserve(capacity);
}

void OrderedPartition::reset(Index size) {
  size_ = size;
  sets_ = size > 0 ? 1 : 0;
  elems_.resize(size);
  pos_.resize(size);
  std::iota(elems_.begin(), elems_.end(), 0);
  std::iota(pos_.begin(), pos_.end(), 0);
  set_of_.assign(size, 0);
  begin_.assign(size, 0);
  end_.assign(size, 0);
  hits_.assign(size, 0);
  cursor_.assign(size, 0);
  right_.assign(size, 0);
  touched_.clear();
  if (size > 0) end_[0] = size;
}

void OrderedPartition::refine(std::span<const Index> h) {
  if (h.empty()) throw Error("refining set is empty");
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] < 0 || h[k] >= size_ || (k > 0 && h[k] <= h[k - 1])) {
      throw Error("refining set is not a sorted subset of the supernode");
    }
  }

  touched_.clear();
  for (Index e : h) {
    Index s = set_of_[e];
    if (hits_[s]++ == 0) touched_.push_back(s);
  }
  // Keep only partitionable sets, in partition order.
  auto keep = std::partition(touched_.begin(), touched_.end(), [&](Index s) {
    return hits_[s] < end_[s] - begin_[s];
  });
  for (auto it = keep; it != touched_.end(); ++it) hits_[*it] = 0;
  touched_.erase(keep, touched_.end());
  std::sort(touched_.begin(), touched_.end(),
            [&](Index a, Index b) { return begin_[a] < begin_[b]; });

  // Alternate sides along each partitionable interval.
  Index prev_end = -1;
  bool prev_right = false;
  for (Index s : touched_) {
    bool first_in_interval = begin_[s] != prev_end;
    bool right = first_in_interval ? true : !prev_right;
    right_[s] = right;
    cursor_[s] = right ? end_[s] : begin_[s];
    prev_end = end_[s];
    prev_right = right;
  }

  auto place = [&](Index e, Index slot) {
    Index other = elems_[slot];
    Index from = pos_[e];
    elems_[from] = other;
    pos_[other] = from;
    elems_[slot] = e;
    pos_[e] = slot;
  };
  for (Index e : h) {
    Index s = set_of_[e];
    if (hits_[s] == 0) continue;  // not partitionable
    if (right_[s]) {
      place(e, --cursor_[s]);
    } else {
      place(e, cursor_[s]++);
    }
  }

  for (Index s : touched_) {
    const Index k = hits_[s];
    const Index ns = sets_++;
    if (right_[s]) {
      begin_[ns] = end_[s] - k;
      end_[ns] = end_[s];
      end_[s] -= k;
    } else {
      begin_[ns] = begin_[s];
      end_[ns] = begin_[s] + k;
      begin_[s] += k;
    }
    for (Index p = begin_[ns]; p < end_[ns]; ++p) set_of_[elems_[p]] = ns;
    hits_[s] = 0;
  }
}

std::vector<std::vector<Index>> OrderedPartition::sets() const {
  std::vector<std::vector<Index>> out;
  Index p = 0;
  while (p < size_) {
    Index s = set_of_[elems_[p]];
    std::vector<Index> members(elems_.begin() + begin_[s],
                               elems_.begin() + end_[s]);
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
    p = end_[s];
  }
  return out;
}

std::vector<Index> OrderedPartition::ordering() const {
  std::vector<Index> out(elems_.begin(), elems_.end());
  Index p = 0;
  while (p < size_) {
    Index s = set_of_[elems_[p]];
    std::sort(out.begin() + begin_[s], out.begin() + end_[s]);
    p = end_[s];
  }
  return out;
}

std::vector<Index> pr_order_supernode(Index t, const SupernodePartition& part,
                                      const HigherAdjacency& hadj,
                                      std::span<const Index> schedule,
                                      OrderedPartition& scratch) {
  const Index first = part.begin(t), last = part.end(t);
  scratch.reset(part.width(t));
  mem::vector<Index> local;
  local.reserve(part.width(t));
  for (Index s : schedule) {
    auto rows = hadj.of(s);
    auto lo = std::lower_bound(rows.begin(), rows.end(), first);
    auto hi = std::lower_bound(lo, rows.end(), last);
    if (lo == hi) continue;
    local.clear();
    for (auto it = lo; it != hi; ++it) local.push_back(*it - first);
    scratch.refine(local);
  }
  return scratch.ordering();
}

Permutation pr_reorder(const SupernodePartition& part,
                       const SupernodalTree& tree, const HigherAdjacency& hadj,
                       Strategy strategy) {
  const Index n = part.n();
  std::vector<Index> forward(n);
  OrderedPartition scratch(part.max_width());
  mem::vector<Index> schedule;
  mem::vector<Keyed> heap;
  for (Index t = 0; t < part.count(); ++t) {
    schedule_into(t, part, tree, hadj, strategy, schedule, heap);
    const Index first = part.begin(t);
    if (schedule.empty()) {
      for (Index j = first; j < part.end(t); ++j) forward[j] = j;
      continue;
    }
    std::vector<Index> order =
        pr_order_supernode(t, part, hadj, schedule, scratch);
    for (Index k = 0; k < static_cast<Index>(order.size()); ++k) {
      forward[first + order[k]] = first + k;
    }
  }
  return Permutation::from_forward(std::move(forward));
}

}  // namespace snr
