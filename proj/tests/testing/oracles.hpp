#ifndef SNREORDER_TESTING_ORACLES_HPP_
#define SNREORDER_TESTING_ORACLES_HPP_

// Generators and slow reference computations shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "snreorder/blockmetrics.hpp"
#include "snreorder/matrixio.hpp"
#include "snreorder/ordering.hpp"
#include "snreorder/pattern.hpp"
#include "snreorder/symbolic.hpp"

namespace snr::testing {

inline constexpr const char* kGolden9 =
    "%%MatrixMarket matrix coordinate pattern symmetric\n"
    "9 9 27\n"
    "1 1\n2 1\n5 1\n6 1\n9 1\n"
    "2 2\n5 2\n9 2\n"
    "3 3\n4 3\n5 3\n7 3\n8 3\n"
    "4 4\n5 4\n8 4\n"
    "5 5\n6 5\n8 5\n"
    "6 6\n7 6\n9 6\n"
    "7 7\n8 7\n"
    "8 8\n9 8\n"
    "9 9\n";

inline SymmetricPattern golden9() { return parse_matrix_market(kGolden9); }

// Reordering of supernode {5..9} that turns golden into reordered golden
// (0-based forward map).
inline Permutation golden_reorder() {
  return Permutation::from_forward({0, 1, 2, 3, 6, 4, 7, 8, 5});
}

// Random symmetric pattern; each off-diagonal pair present with
// probability `density`. Values, when asked for, make the matrix strictly
// diagonally dominant with random off-diagonal signs.
inline SymmetricPattern random_pattern(Index n, double density,
                                       std::mt19937_64& rng,
                                       bool values = false) {
  std::bernoulli_distribution coin(density);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::vector<Entry> e;
  std::vector<double> rowsum(n, 0.0);
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      if (!coin(rng)) continue;
      double v = val(rng);
      e.push_back({i, j, v});
      rowsum[i] += std::abs(v);
      rowsum[j] += std::abs(v);
    }
  }
  for (Index j = 0; j < n; ++j) e.push_back({j, j, rowsum[j] + 1.0});
  return from_entries(n, e, values);
}

// nx-by-ny 5-point grid plus `extra` random edges between nearby nodes.
inline SymmetricPattern grid_pattern(Index nx, Index ny, std::mt19937_64& rng,
                                     Index extra = 0, bool values = false) {
  const Index n = nx * ny;
  std::vector<Entry> e;
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::vector<double> rowsum(n, 0.0);
  auto add = [&](Index a, Index b) {
    double v = val(rng);
    e.push_back({std::max(a, b), std::min(a, b), v});
    rowsum[a] += std::abs(v);
    rowsum[b] += std::abs(v);
  };
  for (Index y = 0; y < ny; ++y) {
    for (Index x = 0; x < nx; ++x) {
      const Index v = y * nx + x;
      if (x + 1 < nx) add(v, v + 1);
      if (y + 1 < ny) add(v, v + nx);
    }
  }
  std::uniform_int_distribution<Index> node(0, n - 1), hop(-2, 2);
  for (Index k = 0; k < extra; ++k) {
    const Index v = node(rng);
    const Index x = v % nx + hop(rng), y = v / nx + hop(rng);
    if (x < 0 || y < 0 || x >= nx || y >= ny) continue;
    const Index w = y * nx + x;
    if (w != v) add(v, w);
  }
  for (Index j = 0; j < n; ++j) e.push_back({j, j, rowsum[j] + 1.0});
  return from_entries(n, e, values);
}

// Mixed desk-scale corpus: dense-ish random, sparse random and perturbed
// grids, each scrambled by a random relabeling. Sizes up to `max_n`.
inline SymmetricPattern corpus_matrix(std::mt19937_64& rng, Index max_n,
                                      bool values = false) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<Index> size(std::min<Index>(8, max_n), max_n);
  SymmetricPattern a;
  switch (kind(rng)) {
    case 0: {
      const Index n = size(rng);
      a = random_pattern(n, std::uniform_real_distribution<double>(
                                1.0 / n, 6.0 / n)(rng),
                         rng, values);
      break;
    }
    case 1: {
      const Index n = size(rng);
      a = random_pattern(n, 0.15, rng, values);
      break;
    }
    default: {
      const Index side = std::max<Index>(
          2, static_cast<Index>(std::sqrt(static_cast<double>(size(rng)))));
      a = grid_pattern(side, side, rng, side, values);
      break;
    }
  }
  std::vector<Index> f(a.n);
  for (Index i = 0; i < a.n; ++i) f[i] = i;
  std::shuffle(f.begin(), f.end(), rng);
  return apply_symmetric_permutation(a, Permutation::from_forward(f));
}

// Dense boolean lower factor by straightforward elimination: column-major
// n*n, entry (i, j) set iff L(i, j) != 0 structurally.
inline std::vector<char> brute_fill(const SymmetricPattern& a) {
  const Index n = a.n;
  std::vector<char> l(static_cast<std::size_t>(n) * n, 0);
  auto at = [n](Index i, Index j) {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * n;
  };
  for (Index j = 0; j < n; ++j) {
    for (Index i : a.column(j)) l[at(i, j)] = 1;
  }
  for (Index k = 0; k < n; ++k) {
    for (Index i = k + 1; i < n; ++i) {
      if (!l[at(i, k)]) continue;
      for (Index j = k + 1; j <= i; ++j) {
        if (l[at(j, k)]) l[at(i, j)] = 1;
      }
    }
  }
  return l;
}

inline Count brute_nnz(const SymmetricPattern& a) {
  auto l = brute_fill(a);
  return std::count(l.begin(), l.end(), 1);
}

inline std::vector<Index> brute_etree(const SymmetricPattern& a) {
  const Index n = a.n;
  auto l = brute_fill(a);
  std::vector<Index> parent(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      if (l[i + static_cast<std::size_t>(j) * n]) {
        parent[j] = i;
        break;
      }
    }
  }
  return parent;
}

// Is `a` a proper ancestor of `d` in a forest given by parent (sentinel =
// size)?
inline bool is_ancestor(const std::vector<Index>& parent, Index a, Index d) {
  const Index root = static_cast<Index>(parent.size());
  for (Index x = parent[d]; x != root; x = parent[x]) {
    if (x == a) return true;
  }
  return false;
}

// Supernodal storage of `part` computed from the dense boolean factor:
// every supernode keeps the union of its columns' rows.
inline Count brute_supernodal_nnz(const SymmetricPattern& a,
                                  const SupernodePartition& part) {
  const Index n = a.n;
  auto l = brute_fill(a);
  Count total = 0;
  for (Index s = 0; s < part.count(); ++s) {
    std::set<Index> below;
    for (Index j = part.begin(s); j < part.end(s); ++j) {
      for (Index i = part.end(s); i < n; ++i) {
        if (l[i + static_cast<std::size_t>(j) * n]) below.insert(i);
      }
    }
    const Count w = part.width(s);
    total += w * (w + 1) / 2 + w * static_cast<Count>(below.size());
  }
  return total;
}

// Runs of hadj(s) inside target t after the reordering, counted by walking
// the target's columns in new order: a run starts wherever a member row
// follows a non-member.
inline Index scan_block_count(const SupernodePartition& part,
                              const HigherAdjacency& hadj,
                              const Permutation& order, Index t, Index s) {
  std::vector<char> member(part.n(), 0);
  for (Index r : hadj.of(s)) member[order.new_of(r)] = 1;
  Index runs = 0;
  bool inside = false;
  for (Index j = part.begin(t); j < part.end(t); ++j) {
    if (member[j] && !inside) ++runs;
    inside = member[j];
  }
  return runs;
}

// Random local updater instance: m rows, up to k updaters, weights 1..4.
inline LocalUpdaters random_updaters(std::mt19937_64& rng, Index max_rows,
                                     Index max_updaters, bool weighted) {
  LocalUpdaters u;
  u.rows = std::uniform_int_distribution<Index>(1, max_rows)(rng);
  const Index k = std::uniform_int_distribution<Index>(1, max_updaters)(rng);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<Count> w(1, 4);
  for (Index s = 0; s < k; ++s) {
    mem::vector<Index> set;
    for (Index r = 0; r < u.rows; ++r) {
      if (coin(rng)) set.push_back(r);
    }
    if (set.empty()) {
      set.push_back(std::uniform_int_distribution<Index>(0, u.rows - 1)(rng));
    }
    u.sets.push_back(std::move(set));
    u.weights.push_back(weighted ? w(rng) : 1);
  }
  return u;
}

}  // namespace snr::testing

#endif  // SNREORDER_TESTING_ORACLES_HPP_
