#include "snreorder/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace snr {

void SymmetricPattern::validate() const {
  if (n < 0) throw StructureError("negative dimension");
  if (static_cast<Index>(col_ptr.size()) != n + 1 || col_ptr.front() != 0 ||
      col_ptr.back() != nnz()) {
    throw StructureError("column pointer array has wrong shape");
  }
  if (has_values() && values.size() != row_idx.size()) {
    throw StructureError("values not aligned with row indices");
  }
  for (Index j = 0; j < n; ++j) {
    if (col_ptr[j + 1] <= col_ptr[j]) {
      throw StructureError("column " + std::to_string(j) + " is empty");
    }
    auto col = column(j);
    if (col.front() != j) {
      throw StructureError("column " + std::to_string(j) +
                           " lacks its diagonal entry");
    }
    for (std::size_t k = 1; k < col.size(); ++k) {
      if (col[k] <= col[k - 1] || col[k] >= n) {
        throw StructureError("column " + std::to_string(j) +
                             " has unsorted, duplicate or out-of-range rows");
      }
    }
  }
}

SymmetricPattern from_entries(Index n, std::span<const Entry> entries,
                              bool with_values) {
  std::vector<Entry> lower;
  lower.reserve(entries.size() + n);
  for (const Entry& e : entries) {
    if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n) {
      throw StructureError("entry out of range");
    }
    lower.push_back(e.row >= e.col ? e : Entry{e.col, e.row, e.value});
  }
  for (Index j = 0; j < n; ++j) lower.push_back({j, j, 0.0});
  std::sort(lower.begin(), lower.end(), [](const Entry& a, const Entry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });

  SymmetricPattern out;
  out.n = n;
  out.col_ptr.assign(n + 1, 0);
  out.row_idx.reserve(lower.size());
  if (with_values) out.values.reserve(lower.size());
  for (std::size_t k = 0; k < lower.size(); ++k) {
    const Entry& e = lower[k];
    if (k > 0 && lower[k - 1].row == e.row && lower[k - 1].col == e.col) {
      if (with_values) out.values.back() += e.value;
      continue;
    }
    out.row_idx.push_back(e.row);
    if (with_values) out.values.push_back(e.value);
    ++out.col_ptr[e.col + 1];
  }
  std::partial_sum(out.col_ptr.begin(), out.col_ptr.end(), out.col_ptr.begin());
  return out;
}

SymmetricPattern pattern_only(const SymmetricPattern& a) {
  SymmetricPattern out = a;
  out.values.clear();
  return out;
}

SymmetricPattern with_synthesized_values(const SymmetricPattern& a) {
  SymmetricPattern out = a;
  out.values.assign(a.row_idx.size(), -1.0);
  for (Index j = 0; j < a.n; ++j) out.values[a.col_ptr[j]] = a.n;
  return out;
}

std::vector<double> to_dense(const SymmetricPattern& a) {
  std::vector<double> dense(static_cast<std::size_t>(a.n) * a.n, 0.0);
  for (Index j = 0; j < a.n; ++j) {
    auto rows = a.column(j);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      double v = a.has_values() ? a.values[a.col_ptr[j] + k] : 1.0;
      dense[rows[k] + static_cast<std::size_t>(j) * a.n] = v;
      dense[j + static_cast<std::size_t>(rows[k]) * a.n] = v;
    }
  }
  return dense;
}

Permutation Permutation::identity(Index n) {
  Permutation p;
  p.forward_.resize(n);
  std::iota(p.forward_.begin(), p.forward_.end(), 0);
  p.inverse_ = p.forward_;
  return p;
}

Permutation Permutation::from_forward(std::vector<Index> forward) {
  const auto n = static_cast<Index>(forward.size());
  std::vector<Index> inverse(n, -1);
  for (Index i = 0; i < n; ++i) {
    Index v = forward[i];
    if (v < 0 || v >= n) {
      throw Error("permutation entry " + std::to_string(v) +
                  " out of range [0, " + std::to_string(n) + ")");
    }
    if (inverse[v] != -1) {
      throw Error("permutation entry " + std::to_string(v) + " repeated");
    }
    inverse[v] = i;
  }
  Permutation p;
  p.forward_ = std::move(forward);
  p.inverse_ = std::move(inverse);
  return p;
}

Permutation Permutation::from_inverse(std::vector<Index> inverse) {
  return from_forward(std::move(inverse)).inverted();
}

bool Permutation::is_identity() const {
  for (Index i = 0; i < size(); ++i) {
    if (forward_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverted() const {
  Permutation p;
  p.forward_ = inverse_;
  p.inverse_ = forward_;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error("permutation sizes differ");
  std::vector<Index> fwd(size());
  for (Index i = 0; i < size(); ++i) fwd[i] = next.forward_[forward_[i]];
  return from_forward(std::move(fwd));
}

}  // namespace snr
