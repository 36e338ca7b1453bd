#ifndef SNREORDER_MATRIXIO_HPP_
#define SNREORDER_MATRIXIO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "snreorder/pattern.hpp"

namespace snr {

// Matrix Market coordinate files declared `symmetric` with field `real`,
// `integer` or `pattern`. Upper-triangle entries are mirrored, duplicates
// summed, explicit zeros kept, and missing diagonals added.
// Throws ParseError naming the offending line.
SymmetricPattern parse_matrix_market(std::istream& in);
SymmetricPattern parse_matrix_market(std::string_view text);
SymmetricPattern read_matrix_market(const std::filesystem::path& path);

// Writes the lower triangle, 1-based. Pattern-only inputs get field `pattern`.
void write_matrix_market(std::ostream& out, const SymmetricPattern& a);

// Permutation files list the new label of each old label, one per line,
// optionally preceded by `# base 0` or `# base 1` (default 0).
Permutation parse_permutation(std::istream& in);
Permutation parse_permutation(std::string_view text);
Permutation read_permutation(const std::filesystem::path& path);
void write_permutation(std::ostream& out, const Permutation& perm,
                       int base = 0);

// Entry (i, j) of the result exists iff (old_of(i), old_of(j)) exists in `a`.
SymmetricPattern apply_symmetric_permutation(const SymmetricPattern& a,
                                             const Permutation& perm);

}  // namespace snr

#endif  // SNREORDER_MATRIXIO_HPP_
