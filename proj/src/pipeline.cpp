#include "snreorder/pipeline.hpp"

#include <cmath>

#include "snreorder/matrixio.hpp"

namespace snr {

Analysis analyze(const SymmetricPattern& a, const Permutation& fill,
                 double cap) {
  if (fill.size() != a.n) {
    throw StructureError("fill ordering size does not match the matrix");
  }
  Analysis an;
  SymmetricPattern filled = apply_symmetric_permutation(a, fill);

  // Postorder first so fundamental supernodes are contiguous.
  EliminationStructure es0 = symbolic_factorization(filled);
  const Permutation post = Permutation::from_inverse(es0.postorder);
  SymmetricPattern posted = apply_symmetric_permutation(filled, post);
  EliminationStructure es1 = symbolic_factorization(posted);

  SupernodePartition fundamental = fundamental_supernodes(es1);
  an.fundamental_count = fundamental.count();
  SupernodalTree ftree = supernodal_etree(fundamental, es1);
  an.merge = amalgamate(fundamental, ftree, es1, cap);

  an.ordering = fill.then(post).then(an.merge.relabel);
  if (an.merge.relabel.is_identity()) {
    an.matrix = std::move(posted);
    an.es = std::move(es1);
  } else {
    an.matrix = apply_symmetric_permutation(posted, an.merge.relabel);
    an.es = symbolic_factorization(an.matrix);
  }
  an.partition = an.merge.partition;
  an.hadj = higher_adjacency(an.partition, an.es);
  an.tree = supernodal_etree(an.partition, an.es);
  return an;
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "none") return Method::none;
  if (name == "pr") return Method::pr;
  if (name == "tsp") return Method::tsp;
  return std::nullopt;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::none: return "none";
    case Method::pr: return "pr";
    case Method::tsp: return "tsp";
  }
  return "?";
}

std::string MethodSpec::label() const {
  switch (method) {
    case Method::none: return "none";
    case Method::pr: return "PR-" + std::string(to_string(strategy));
    case Method::tsp: {
      std::string head = rule == InsertionRule::arbitrary ? "ARB"
                         : rule == InsertionRule::nearest ? "NEAR"
                                                          : "FAR";
      return head + (weighted ? "wts" : "none");
    }
  }
  return "?";
}

std::optional<MethodSpec> MethodSpec::from_label(std::string_view label,
                                                 std::uint64_t seed) {
  MethodSpec spec;
  spec.seed = seed;
  if (label == "none") return spec;
  if (label.starts_with("PR-")) {
    auto s = parse_strategy(label.substr(3));
    if (!s) return std::nullopt;
    spec.method = Method::pr;
    spec.strategy = *s;
    return spec;
  }
  spec.method = Method::tsp;
  std::string_view rest = label;
  if (rest.starts_with("ARB")) {
    spec.rule = InsertionRule::arbitrary;
    rest.remove_prefix(3);
  } else if (rest.starts_with("NEAR")) {
    spec.rule = InsertionRule::nearest;
    rest.remove_prefix(4);
  } else if (rest.starts_with("FAR")) {
    spec.rule = InsertionRule::farthest;
    rest.remove_prefix(3);
  } else {
    return std::nullopt;
  }
  if (rest == "wts") {
    spec.weighted = true;
  } else if (rest != "none") {
    return std::nullopt;
  }
  return spec;
}

std::vector<MethodSpec> standard_methods(std::uint64_t seed) {
  std::vector<MethodSpec> out;
  for (auto label : {"none", "ARBnone", "ARBwts", "NEARnone", "NEARwts",
                     "FARnone", "FARwts", "PR-natural", "PR-ndesc",
                     "PR-work"}) {
    out.push_back(*MethodSpec::from_label(label, seed));
  }
  return out;
}

Permutation reorder(const Analysis& an, const MethodSpec& spec) {
  switch (spec.method) {
    case Method::none:
      return Permutation::identity(an.partition.n());
    case Method::pr:
      return pr_reorder(an.partition, an.tree, an.hadj, spec.strategy);
    case Method::tsp:
      return tsp_reorder(an.partition, an.tree, an.hadj, spec.rule,
                         spec.weighted, spec.seed);
  }
  throw Error("unknown reorder method");
}

Count reordered_nnz(const Analysis& an, const Permutation& within) {
  check_boundary_preserving(an.partition, within);
  SymmetricPattern permuted = apply_symmetric_permutation(an.matrix, within);
  EliminationStructure es = symbolic_factorization(permuted);
  return supernodal_nnz(an.partition, higher_adjacency(an.partition, es));
}

Factorization factor(const Analysis& an, const Permutation& within,
                     const kernels::KernelSet& k) {
  check_boundary_preserving(an.partition, within);
  Factorization f;
  f.matrix = apply_symmetric_permutation(an.matrix, within);
  if (!f.matrix.has_values()) f.matrix = with_synthesized_values(f.matrix);
  const HigherAdjacency hadj = permute_hadj(an.hadj, within);
  const BlockList blocks = block_list(an.partition, an.hadj, within);
  f.storage = assemble(f.matrix, an.partition, hadj);
  f.trace = rlb_factor(f.storage, blocks, k);
  return f;
}

double relative_residual(const SymmetricPattern& a, std::span<const double> x,
                         std::span<const double> b) {
  std::vector<double> r(b.begin(), b.end());
  for (Index j = 0; j < a.n; ++j) {
    auto rows = a.column(j);
    auto vals = a.column_values(j);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Index i = rows[k];
      const double v = a.has_values() ? vals[k] : 1.0;
      r[i] -= v * x[j];
      if (i != j) r[j] -= v * x[i];
    }
  }
  double rn = 0.0, bn = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    rn += r[i] * r[i];
    bn += b[i] * b[i];
  }
  return bn == 0.0 ? std::sqrt(rn) : std::sqrt(rn / bn);
}

}  // namespace snr
