#include "snreorder/tsp_reorder.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "snreorder/pr_reorder.hpp"

namespace snr {

std::optional<InsertionRule> parse_rule(std::string_view name) {
  if (name == "arbitrary") return InsertionRule::arbitrary;
  if (name == "nearest") return InsertionRule::nearest;
  if (name == "farthest") return InsertionRule::farthest;
  return std::nullopt;
}

std::string_view to_string(InsertionRule r) {
  switch (r) {
    case InsertionRule::arbitrary: return "arbitrary";
    case InsertionRule::nearest: return "nearest";
    case InsertionRule::farthest: return "farthest";
  }
  return "?";
}

TspInstance TspInstance::from_updaters(const LocalUpdaters& u, bool compress) {
  const Index m = u.rows;
  const auto slots = static_cast<Index>(u.sets.size());

  // D(r) for every row, slots ascending.
  mem::vector<Index> row_ptr(m + 1, 0);
  for (const auto& set : u.sets) {
    for (Index r : set) {
      if (r < 0 || r >= m) throw StructureError("updater row out of range");
      ++row_ptr[r + 1];
    }
  }
  for (Index r = 0; r < m; ++r) row_ptr[r + 1] += row_ptr[r];
  mem::vector<Index> row_d(row_ptr[m]);
  {
    mem::vector<Index> next(row_ptr.begin(), row_ptr.end() - 1);
    for (Index s = 0; s < slots; ++s) {
      for (Index r : u.sets[s]) row_d[next[r]++] = s;
    }
  }
  auto d_of = [&](Index r) {
    return std::span<const Index>(row_d.data() + row_ptr[r],
                                  row_d.data() + row_ptr[r + 1]);
  };

  // Group rows into cities.
  mem::vector<Index> by_key(m);
  std::iota(by_key.begin(), by_key.end(), 0);
  if (compress) {
    std::stable_sort(by_key.begin(), by_key.end(), [&](Index a, Index b) {
      auto da = d_of(a), db = d_of(b);
      return std::lexicographical_compare(da.begin(), da.end(), db.begin(),
                                          db.end());
    });
  }
  mem::vector<Index> group_start;  // positions in by_key
  for (Index k = 0; k < m; ++k) {
    bool fresh = k == 0 || !compress ||
                 !std::ranges::equal(d_of(by_key[k]), d_of(by_key[k - 1]));
    if (fresh) group_start.push_back(k);
  }
  group_start.push_back(m);
  // Number cities by their smallest row.
  const auto ncities = static_cast<Index>(group_start.size()) - 1;
  mem::vector<Index> city_order(ncities);
  std::iota(city_order.begin(), city_order.end(), 0);
  std::sort(city_order.begin(), city_order.end(), [&](Index a, Index b) {
    return by_key[group_start[a]] < by_key[group_start[b]];
  });

  TspInstance inst;
  inst.rows_ = m;
  inst.weight_.assign(u.weights.begin(), u.weights.end());
  inst.city_ptr_.assign(1, 0);
  inst.d_ptr_.assign(1, 0);
  for (Index g : city_order) {
    for (Index k = group_start[g]; k < group_start[g + 1]; ++k) {
      inst.city_rows_.push_back(by_key[k]);
    }
    inst.city_ptr_.push_back(static_cast<Index>(inst.city_rows_.size()));
    auto d = d_of(by_key[group_start[g]]);
    inst.d_set_.insert(inst.d_set_.end(), d.begin(), d.end());
    inst.d_ptr_.push_back(static_cast<Index>(inst.d_set_.size()));
  }
  // The dummy city: no rows, empty D.
  inst.d_ptr_.push_back(inst.d_ptr_.back());

  inst.city_mass_.assign(ncities + 1, 0);
  for (Index c = 0; c < ncities; ++c) {
    for (Index s : inst.indicator(c)) inst.city_mass_[c] += inst.weight_[s];
  }

  if (ncities + 1 <= kDenseLimit + 1) {
    const Index dim = ncities + 1;
    inst.dense_.assign(static_cast<std::size_t>(dim) * dim, 0);
    for (Index a = 0; a < dim; ++a) {
      for (Index b = a + 1; b < dim; ++b) {
        Count d = inst.sparse_distance(a, b);
        inst.dense_[static_cast<std::size_t>(a) * dim + b] = d;
        inst.dense_[static_cast<std::size_t>(b) * dim + a] = d;
      }
    }
  }
  return inst;
}

std::span<const Index> TspInstance::rows_of(Index city) const {
  return {city_rows_.data() + city_ptr_[city],
          static_cast<std::size_t>(city_ptr_[city + 1] - city_ptr_[city])};
}

std::span<const Index> TspInstance::indicator(Index city) const {
  return {d_set_.data() + d_ptr_[city],
          static_cast<std::size_t>(d_ptr_[city + 1] - d_ptr_[city])};
}

Count TspInstance::sparse_distance(Index a, Index b) const {
  auto da = indicator(a), db = indicator(b);
  Count shared = 0;
  std::size_t i = 0, j = 0;
  while (i < da.size() && j < db.size()) {
    if (da[i] < db[j]) {
      ++i;
    } else if (db[j] < da[i]) {
      ++j;
    } else {
      shared += weight_[da[i]];
      ++i;
      ++j;
    }
  }
  return city_mass_[a] + city_mass_[b] - 2 * shared;
}

Count TspInstance::distance(Index a, Index b) const {
  if (!dense_.empty()) {
    return dense_[static_cast<std::size_t>(a) * (cities() + 1) + b];
  }
  return a == b ? 0 : sparse_distance(a, b);
}

Count TspInstance::tour_length(std::span<const Index> tour) const {
  Count len = 0;
  for (std::size_t k = 0; k < tour.size(); ++k) {
    len += distance(tour[k], tour[(k + 1) % tour.size()]);
  }
  return len;
}

std::vector<Index> TspInstance::row_order(std::span<const Index> tour) const {
  auto cut = std::find(tour.begin(), tour.end(), dummy());
  if (cut == tour.end()) throw StructureError("tour misses the dummy city");
  std::vector<Index> out;
  out.reserve(rows_);
  for (std::size_t k = 1; k < tour.size(); ++k) {
    Index c = *(tour.begin() + ((cut - tour.begin()) + k) % tour.size());
    auto rows = rows_of(c);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

TspInstance build_instance(Index t, const SupernodePartition& part,
                           const SupernodalTree& tree,
                           const HigherAdjacency& hadj, bool weighted,
                           bool compress) {
  LocalUpdaters u;
  u.rows = part.width(t);
  const Index first = part.begin(t), last = part.end(t);
  mem::vector<Index> updaters;
  updater_schedule(t, part, tree, hadj, Strategy::natural, updaters);
  for (Index s : updaters) {
    auto rows = hadj.of(s);
    auto lo = std::lower_bound(rows.begin(), rows.end(), first);
    auto hi = std::lower_bound(lo, rows.end(), last);
    mem::vector<Index> local;
    for (auto it = lo; it != hi; ++it) local.push_back(*it - first);
    u.sets.push_back(std::move(local));
    u.weights.push_back(weighted ? part.width(s) : 1);
  }
  return TspInstance::from_updaters(u, compress);
}

Tour insertion_solve(const TspInstance& inst, InsertionRule rule,
                     std::uint64_t seed) {
  const Index C = inst.cities();
  const Index dummy = inst.dummy();
  Tour tour;
  tour.order.push_back(dummy);
  if (C == 0) return tour;

  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);

  mem::vector<Index> circuit;
  circuit.reserve(C + 1);
  circuit.push_back(dummy);
  mem::vector<Count> to_circuit(C);
  mem::vector<Index> remaining(C);  // ascending city ids
  std::iota(remaining.begin(), remaining.end(), 0);
  for (Index c = 0; c < C; ++c) to_circuit[c] = inst.distance(c, dummy);

  auto select = [&]() -> std::size_t {
    if (rule == InsertionRule::arbitrary) {
      return static_cast<std::size_t>(rng() % remaining.size());
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < remaining.size(); ++k) {
      Count d = to_circuit[remaining[k]], b = to_circuit[remaining[best]];
      bool better = rule == InsertionRule::farthest ? d > b : d < b;
      // Cities are numbered by smallest row, so strict comparison keeps the
      // smallest row on ties.
      if (better) best = k;
    }
    return best;
  };

  while (!remaining.empty()) {
    const std::size_t pick = select();
    const Index c = remaining[pick];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));

    std::size_t slot = 0;
    Count best = std::numeric_limits<Count>::max();
    const std::size_t len = circuit.size();
    for (std::size_t k = 0; k < len; ++k) {
      Index a = circuit[k], b = circuit[(k + 1) % len];
      Count grow = inst.distance(a, c) + inst.distance(c, b) -
                   (len == 1 ? 0 : inst.distance(a, b));
      if (grow < best) {
        best = grow;
        slot = k;
      }
    }
    circuit.insert(circuit.begin() + static_cast<std::ptrdiff_t>(slot) + 1, c);
    tour.inserted.push_back(c);
    for (Index r : remaining) {
      to_circuit[r] = std::min(to_circuit[r], inst.distance(r, c));
    }
  }
  tour.order.assign(circuit.begin(), circuit.end());
  tour.length = inst.tour_length(tour.order);
  return tour;
}

Tour exact_solve(const TspInstance& inst) {
  const Index C = inst.cities();
  if (C > 10) {
    throw Error("exact TSP refused for " + std::to_string(C) +
                " cities (limit 10)");
  }
  std::vector<Index> perm(C);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Index> candidate(C + 1);
  candidate[0] = inst.dummy();
  Tour best;
  best.length = std::numeric_limits<Count>::max();
  do {
    std::copy(perm.begin(), perm.end(), candidate.begin() + 1);
    Count len = inst.tour_length(candidate);
    if (len < best.length) {
      best.length = len;
      best.order = candidate;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Permutation tsp_reorder(const SupernodePartition& part,
                        const SupernodalTree& tree, const HigherAdjacency& hadj,
                        InsertionRule rule, bool weighted, std::uint64_t seed) {
  std::vector<Index> forward(part.n());
  for (Index t = 0; t < part.count(); ++t) {
    const Index first = part.begin(t);
    TspInstance inst = build_instance(t, part, tree, hadj, weighted);
    // Per-supernode stream so results do not depend on processing order.
    const std::uint64_t local_seed =
        seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
    Tour tour = insertion_solve(inst, rule, local_seed);
    std::vector<Index> order = inst.row_order(tour.order);
    for (Index k = 0; k < static_cast<Index>(order.size()); ++k) {
      forward[first + order[k]] = first + k;
    }
  }
  return Permutation::from_forward(std::move(forward));
}

}  // namespace snr
