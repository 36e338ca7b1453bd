#include "snreorder/matrixio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace snr {
namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Parses a 1-based index token into [0, n).
Index parse_index(std::istringstream& ss, Index n, std::size_t line_no) {
  long long v = 0;
  if (!(ss >> v)) throw ParseError(line_no, "expected an integer index");
  if (v < 1 || v > n) {
    throw ParseError(line_no, "index " + std::to_string(v) +
                                  " out of range [1, " + std::to_string(n) +
                                  "]");
  }
  return static_cast<Index>(v - 1);
}

}  // namespace

SymmetricPattern parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError(1, "empty input");
  ++line_no;
  std::istringstream header(lowercase(line));
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%matrixmarket" || object != "matrix") {
    throw ParseError(line_no, "missing %%MatrixMarket matrix header");
  }
  if (format != "coordinate") {
    throw ParseError(line_no, "only coordinate format is supported");
  }
  bool with_values = true;
  if (field == "pattern") {
    with_values = false;
  } else if (field != "real" && field != "integer" && field != "double") {
    throw ParseError(line_no, "unsupported field '" + field + "'");
  }
  if (symmetry != "symmetric") {
    throw ParseError(line_no, "matrix must be declared symmetric, got '" +
                                  symmetry + "'");
  }

  // Size line, after comments.
  long long rows = -1, cols = -1, declared = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    std::istringstream ss(line);
    if (!(ss >> rows >> cols >> declared) || rows < 0 || cols < 0 ||
        declared < 0) {
      throw ParseError(line_no, "malformed size line");
    }
    break;
  }
  if (rows < 0) throw ParseError(line_no, "missing size line");
  if (rows != cols) {
    throw ParseError(line_no, "matrix is not square (" + std::to_string(rows) +
                                  " x " + std::to_string(cols) + ")");
  }
  if (rows > std::numeric_limits<Index>::max() - 1) {
    throw ParseError(line_no, "dimension too large");
  }
  const auto n = static_cast<Index>(rows);

  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(declared));
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    if (static_cast<long long>(entries.size()) == declared) {
      throw ParseError(line_no, "more entries than declared");
    }
    std::istringstream ss(line);
    Entry e;
    e.row = parse_index(ss, n, line_no);
    e.col = parse_index(ss, n, line_no);
    if (with_values && !(ss >> e.value)) {
      throw ParseError(line_no, "missing value");
    }
    std::string extra;
    if (ss >> extra) throw ParseError(line_no, "trailing data '" + extra + "'");
    entries.push_back(e);
  }
  if (static_cast<long long>(entries.size()) != declared) {
    throw ParseError(line_no, "expected " + std::to_string(declared) +
                                  " entries, found " +
                                  std::to_string(entries.size()));
  }
  return from_entries(n, entries, with_values);
}

SymmetricPattern parse_matrix_market(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix_market(in);
}

SymmetricPattern read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SymmetricPattern& a) {
  out << "%%MatrixMarket matrix coordinate "
      << (a.has_values() ? "real" : "pattern") << " symmetric\n";
  out << a.n << ' ' << a.n << ' ' << a.nnz() << '\n';
  char buf[64];
  for (Index j = 0; j < a.n; ++j) {
    for (Index k = a.col_ptr[j]; k < a.col_ptr[j + 1]; ++k) {
      out << a.row_idx[k] + 1 << ' ' << j + 1;
      if (a.has_values()) {
        std::snprintf(buf, sizeof buf, " %.17g", a.values[k]);
        out << buf;
      }
      out << '\n';
    }
  }
}

Permutation parse_permutation(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int base = 0;
  bool seen_data = false;
  std::vector<long long> raw;
  std::vector<std::size_t> raw_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (lowercase(key) == "base") {
        if (seen_data) throw ParseError(line_no, "base header after data");
        if (!(ss >> base) || (base != 0 && base != 1)) {
          throw ParseError(line_no, "base must be 0 or 1");
        }
      }
      continue;
    }
    seen_data = true;
    std::istringstream ss(line);
    long long v = 0;
    while (ss >> v) {
      raw.push_back(v);
      raw_lines.push_back(line_no);
    }
    if (!ss.eof()) throw ParseError(line_no, "expected integers");
  }

  const auto n = static_cast<long long>(raw.size());
  std::vector<Index> forward(raw.size());
  std::vector<std::size_t> first_line(raw.size(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    long long v = raw[i] - base;
    if (v < 0 || v >= n) {
      throw ParseError(raw_lines[i], "permutation entry " +
                                         std::to_string(raw[i]) +
                                         " out of range");
    }
    if (first_line[v] != 0) {
      throw ParseError(raw_lines[i], "permutation entry " +
                                         std::to_string(raw[i]) +
                                         " repeated (first on line " +
                                         std::to_string(first_line[v]) + ")");
    }
    first_line[v] = raw_lines[i];
    forward[i] = static_cast<Index>(v);
  }
  return Permutation::from_forward(std::move(forward));
}

Permutation parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_permutation(in);
}

Permutation read_permutation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_permutation(in);
}

void write_permutation(std::ostream& out, const Permutation& perm, int base) {
  out << "# base " << base << '\n';
  for (Index v : perm.forward()) out << v + base << '\n';
}

SymmetricPattern apply_symmetric_permutation(const SymmetricPattern& a,
                                             const Permutation& perm) {
  if (perm.size() != a.n) {
    throw StructureError("permutation size " + std::to_string(perm.size()) +
                         " does not match matrix dimension " +
                         std::to_string(a.n));
  }
  SymmetricPattern out;
  out.n = a.n;
  out.col_ptr.assign(a.n + 1, 0);
  // Count entries per new column.
  for (Index j = 0; j < a.n; ++j) {
    for (Index i : a.column(j)) {
      Index ni = perm.new_of(i), nj = perm.new_of(j);
      ++out.col_ptr[std::min(ni, nj) + 1];
    }
  }
  for (Index j = 0; j < a.n; ++j) out.col_ptr[j + 1] += out.col_ptr[j];
  out.row_idx.resize(a.row_idx.size());
  if (a.has_values()) out.values.resize(a.values.size());
  std::vector<Index> next(out.col_ptr.begin(), out.col_ptr.end() - 1);
  for (Index j = 0; j < a.n; ++j) {
    for (Index k = a.col_ptr[j]; k < a.col_ptr[j + 1]; ++k) {
      Index ni = perm.new_of(a.row_idx[k]), nj = perm.new_of(j);
      Index c = std::min(ni, nj);
      Index pos = next[c]++;
      out.row_idx[pos] = std::max(ni, nj);
      if (a.has_values()) out.values[pos] = a.values[k];
    }
  }
  // Sort each column, carrying values along.
  std::vector<std::pair<Index, double>> scratch;
  for (Index j = 0; j < a.n; ++j) {
    const Index b = out.col_ptr[j], e = out.col_ptr[j + 1];
    scratch.clear();
    for (Index k = b; k < e; ++k) {
      scratch.emplace_back(out.row_idx[k],
                           a.has_values() ? out.values[k] : 0.0);
    }
    std::sort(scratch.begin(), scratch.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (Index k = b; k < e; ++k) {
      out.row_idx[k] = scratch[k - b].first;
      if (a.has_values()) out.values[k] = scratch[k - b].second;
    }
  }
  return out;
}

}  // namespace snr
