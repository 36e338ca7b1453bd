#include "snreorder/rlb.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace snr {

Count FactorStorage::stored_entries() const {
  Count total = 0;
  for (Index s = 0; s < part_.count(); ++s) {
    const Count w = part_.width(s), rows = ld(s);
    total += w * (w + 1) / 2 + w * (rows - w);
  }
  return total;
}

double FactorStorage::entry(Index i, Index j) const {
  const Index s = part_.snode_of[j];
  auto r = rows(s);
  auto it = std::lower_bound(r.begin(), r.end(), i);
  if (it == r.end() || *it != i || i < j) return 0.0;
  const auto local = static_cast<std::size_t>(it - r.begin());
  return panel(s)[local + static_cast<std::size_t>(j - part_.begin(s)) * ld(s)];
}

std::vector<double> FactorStorage::to_dense() const {
  const Index nn = n();
  std::vector<double> l(static_cast<std::size_t>(nn) * nn, 0.0);
  for (Index s = 0; s < part_.count(); ++s) {
    auto r = rows(s);
    for (Index c = 0; c < part_.width(s); ++c) {
      const Index j = part_.begin(s) + c;
      for (Index p = c; p < ld(s); ++p) {
        l[r[p] + static_cast<std::size_t>(j) * nn] =
            panel(s)[p + static_cast<std::size_t>(c) * ld(s)];
      }
    }
  }
  return l;
}

FactorStorage assemble(const SymmetricPattern& a, const SupernodePartition& part,
                       const HigherAdjacency& hadj) {
  if (a.n != part.n() || hadj.count() != part.count()) {
    throw StructureError("matrix, partition and adjacency disagree in size");
  }
  const SymmetricPattern synthesized =
      a.has_values() ? SymmetricPattern{} : with_synthesized_values(a);
  const SymmetricPattern& src = a.has_values() ? a : synthesized;

  FactorStorage fs;
  fs.part_ = part;
  const Index N = part.count();
  fs.row_ptr_.assign(N + 1, 0);
  fs.val_ptr_.assign(N + 1, 0);
  for (Index s = 0; s < N; ++s) {
    const Index rows = part.width(s) + hadj.size(s);
    fs.row_ptr_[s + 1] = fs.row_ptr_[s] + rows;
    fs.val_ptr_[s + 1] = fs.val_ptr_[s] + rows * part.width(s);
  }
  fs.row_idx_.reserve(fs.row_ptr_.back());
  for (Index s = 0; s < N; ++s) {
    for (Index j = part.begin(s); j < part.end(s); ++j) fs.row_idx_.push_back(j);
    auto h = hadj.of(s);
    fs.row_idx_.insert(fs.row_idx_.end(), h.begin(), h.end());
  }
  fs.values_.assign(fs.val_ptr_.back(), 0.0);

  for (Index j = 0; j < src.n; ++j) {
    const Index s = part.snode_of[j];
    auto r = fs.rows(s);
    const Index c = j - part.begin(s);
    double* col = fs.panel(s) + static_cast<std::size_t>(c) * fs.ld(s);
    auto vals = src.column_values(j);
    auto rows = src.column(j);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      auto it = std::lower_bound(r.begin() + c, r.end(), rows[k]);
      if (it == r.end() || *it != rows[k]) {
        throw StructureError("entry (" + std::to_string(rows[k]) + ", " +
                             std::to_string(j) +
                             ") lies outside the factor structure");
      }
      col[it - r.begin()] = vals[k];
    }
  }
  return fs;
}

std::string_view to_string(KernelKind k) {
  switch (k) {
    case KernelKind::cdiv_factor: return "cdiv_factor";
    case KernelKind::cdiv_solve: return "cdiv_solve";
    case KernelKind::syrk: return "syrk";
    case KernelKind::gemm: return "gemm";
  }
  return "?";
}

Count KernelTrace::count(KernelKind kind) const {
  return std::count_if(calls.begin(), calls.end(),
                       [&](const KernelCall& c) { return c.kind == kind; });
}

Count KernelTrace::count(KernelKind kind, Index source, Index target) const {
  return std::count_if(calls.begin(), calls.end(), [&](const KernelCall& c) {
    return c.kind == kind && c.source == source && c.target == target;
  });
}

class RlbFactorizer {
 public:
  RlbFactorizer(FactorStorage& fs, const BlockList& blocks,
                const kernels::KernelSet& k)
      : fs_(fs), blocks_(blocks), k_(k) {}

  KernelTrace run() {
    const SupernodePartition& part = fs_.part_;
    if (blocks_.sources() != part.count()) {
      throw StructureError("block list does not match the factor partition");
    }
    for (Index j = 0; j < part.count(); ++j) {
      cdiv(j);
      update_ancestors(j);
    }
    fs_.factored_ = true;
    return std::move(trace_);
  }

 private:
  // Position of global row `row` in supernode s's row list.
  Index local_row(Index s, Index row) const {
    auto r = fs_.rows(s);
    auto it = std::lower_bound(r.begin(), r.end(), row);
    if (it == r.end() || *it != row) {
      throw StructureError("row " + std::to_string(row) +
                           " missing from supernode " + std::to_string(s));
    }
    return static_cast<Index>(it - r.begin());
  }

  void cdiv(Index j) {
    const SupernodePartition& part = fs_.part_;
    const Index w = part.width(j), ld = fs_.ld(j);
    double* panel = fs_.panel(j);
    Index bad = k_.potrf(panel, w, ld);
    if (bad >= 0) throw NotPositiveDefinite(part.begin(j) + bad);
    trace_.calls.push_back({KernelKind::cdiv_factor, j, j, w, w, 0});
    const Index below = ld - w;
    if (below > 0) {
      k_.trsm(panel, w, ld, panel + w, below, ld);
      trace_.calls.push_back({KernelKind::cdiv_solve, j, j, below, w, 0});
    }
  }

  void update_ancestors(Index j) {
    const SupernodePartition& part = fs_.part_;
    const Index w = part.width(j), ldj = fs_.ld(j);
    const double* src = fs_.panel(j);
    auto blocks = blocks_.blocks_of(j);
    auto maximal = blocks_.maximal_of(j);
    // Blocks are sorted by row, hence by ancestor: walking them visits
    // p(J), p(p(J)), ... in turn, skipping ancestors J does not touch.
    for (const Block& b : blocks) {
      const Index target = b.first_target;
      const Index ldp = fs_.ld(target);
      double* dst = fs_.panel(target);
      const Index col = b.first - part.begin(target);
      const Index kb = b.rows();
      const double* src_b = src + local_row(j, b.first);

      k_.syrk(dst + col + static_cast<std::size_t>(col) * ldp, kb, ldp, src_b,
              w, ldj);
      trace_.calls.push_back({KernelKind::syrk, j, target, kb, kb, w});

      for (const Block& mb : maximal) {
        if (mb.last <= b.last) continue;
        const Index start = std::max(mb.first, b.last + 1);
        const Index rows = mb.last - start + 1;
        const Index at = local_row(target, start);
        if (fs_.rows(target)[at + rows - 1] != mb.last) {
          throw StructureError("block rows not contiguous in target panel");
        }
        k_.gemm(dst + at + static_cast<std::size_t>(col) * ldp, rows, kb, ldp,
                src + local_row(j, start), ldj, src_b, ldj, w);
        trace_.calls.push_back({KernelKind::gemm, j, target, rows, kb, w});
      }
    }
  }

  FactorStorage& fs_;
  const BlockList& blocks_;
  const kernels::KernelSet& k_;
  KernelTrace trace_;
};

KernelTrace rlb_factor(FactorStorage& fs, const BlockList& blocks,
                       const kernels::KernelSet& k) {
  return RlbFactorizer(fs, blocks, k).run();
}

std::vector<double> solve(const FactorStorage& fs, std::span<const double> b) {
  if (!fs.factored()) throw Error("factor storage has not been factored");
  const SupernodePartition& part = fs.partition();
  if (static_cast<Index>(b.size()) != fs.n()) {
    throw Error("right-hand side has wrong length");
  }
  std::vector<double> x(b.begin(), b.end());
  const Index N = part.count();
  // Forward: L y = b.
  for (Index s = 0; s < N; ++s) {
    const Index w = part.width(s), ld = fs.ld(s), base = part.begin(s);
    const double* p = fs.panel(s);
    auto rows = fs.rows(s);
    for (Index c = 0; c < w; ++c) {
      const double* col = p + static_cast<std::size_t>(c) * ld;
      const double v = x[base + c] / col[c];
      x[base + c] = v;
      for (Index r = c + 1; r < ld; ++r) x[rows[r]] -= col[r] * v;
    }
  }
  // Backward: L^T x = y.
  for (Index s = N - 1; s >= 0; --s) {
    const Index w = part.width(s), ld = fs.ld(s), base = part.begin(s);
    const double* p = fs.panel(s);
    auto rows = fs.rows(s);
    for (Index c = w - 1; c >= 0; --c) {
      const double* col = p + static_cast<std::size_t>(c) * ld;
      double v = x[base + c];
      for (Index r = c + 1; r < ld; ++r) v -= col[r] * x[rows[r]];
      x[base + c] = v / col[c];
    }
  }
  return x;
}

std::vector<double> dense_cholesky_oracle(std::span<const double> a, Index n) {
  if (n > 512) throw Error("dense oracle refused for n > 512");
  if (a.size() != static_cast<std::size_t>(n) * n) {
    throw Error("dense matrix has wrong size");
  }
  auto at = [n](Index i, Index j) {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * n;
  };
  std::vector<double> l(a.size(), 0.0);
  for (Index j = 0; j < n; ++j) {
    double d = a[at(j, j)];
    for (Index k = 0; k < j; ++k) d -= l[at(j, k)] * l[at(j, k)];
    if (!(d > 0.0)) throw NotPositiveDefinite(j);
    const double djj = std::sqrt(d);
    l[at(j, j)] = djj;
    for (Index i = j + 1; i < n; ++i) {
      double v = a[at(i, j)];
      for (Index k = 0; k < j; ++k) v -= l[at(i, k)] * l[at(j, k)];
      l[at(i, j)] = v / djj;
    }
  }
  return l;
}

}  // namespace snr
