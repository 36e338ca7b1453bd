#ifndef SNREORDER_PATTERN_HPP_
#define SNREORDER_PATTERN_HPP_

#include <span>
#include <vector>

#include "snreorder/types.hpp"

namespace snr {

// Lower triangle of a sparse symmetric matrix in compressed column form.
// Column j holds the strictly increasing row indices i >= j; the diagonal is
// always present. `values` is either empty (pattern only) or aligned with
// `row_idx`.
struct SymmetricPattern {
  Index n = 0;
  std::vector<Index> col_ptr{0};
  std::vector<Index> row_idx;
  std::vector<double> values;

  bool has_values() const { return !values.empty(); }
  Index nnz() const { return static_cast<Index>(row_idx.size()); }

  std::span<const Index> column(Index j) const {
    return {row_idx.data() + col_ptr[j],
            static_cast<std::size_t>(col_ptr[j + 1] - col_ptr[j])};
  }
  std::span<const double> column_values(Index j) const {
    return {values.data() + col_ptr[j],
            static_cast<std::size_t>(col_ptr[j + 1] - col_ptr[j])};
  }

  // Throws StructureError when an invariant is broken.
  void validate() const;

  friend bool operator==(const SymmetricPattern&,
                         const SymmetricPattern&) = default;
};

// One entry in either triangle; assembled by `from_entries`.
struct Entry {
  Index row;
  Index col;
  double value = 0.0;
};

// Builds a pattern from entries in either triangle. Upper entries are mirrored,
// duplicates are summed, and missing diagonals are added with value 0.
// Values are kept only when `with_values` is set.
SymmetricPattern from_entries(Index n, std::span<const Entry> entries,
                              bool with_values);

// Drops the values.
SymmetricPattern pattern_only(const SymmetricPattern& a);

// Attaches diagonally dominant values: diagonal = n, off-diagonal = -1.
SymmetricPattern with_synthesized_values(const SymmetricPattern& a);

// Full dense column-major copy (both triangles). For tests and oracles.
std::vector<double> to_dense(const SymmetricPattern& a);

// Bijection on [0, n). `forward` maps an old label to its new label,
// `inverse` maps a new label back to the old one.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(Index n);
  // Throws Error on repeated or out-of-range entries.
  static Permutation from_forward(std::vector<Index> forward);
  static Permutation from_inverse(std::vector<Index> inverse);

  Index size() const { return static_cast<Index>(forward_.size()); }
  Index new_of(Index old_label) const { return forward_[old_label]; }
  Index old_of(Index new_label) const { return inverse_[new_label]; }
  std::span<const Index> forward() const { return forward_; }
  std::span<const Index> inverse() const { return inverse_; }

  bool is_identity() const;
  Permutation inverted() const;
  // Applies *this first, then `next`.
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::vector<Index> forward_;
  std::vector<Index> inverse_;
};

}  // namespace snr

#endif  // SNREORDER_PATTERN_HPP_
