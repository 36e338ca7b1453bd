#ifndef SNREORDER_PIPELINE_HPP_
#define SNREORDER_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snreorder/amalgamate.hpp"
#include "snreorder/blockmetrics.hpp"
#include "snreorder/pr_reorder.hpp"
#include "snreorder/rlb.hpp"
#include "snreorder/symbolic.hpp"
#include "snreorder/tsp_reorder.hpp"

namespace snr {

// Everything the reordering methods need, in analysis labels: the input
// permuted by the fill-reducing order, relabeled by elimination-tree
// postorder, then relabeled again so merged supernodes are contiguous.
struct Analysis {
  SymmetricPattern matrix;
  Permutation ordering;  // input labels -> analysis labels
  EliminationStructure es;
  Index fundamental_count = 0;
  Amalgamation merge;
  SupernodePartition partition;
  HigherAdjacency hadj;
  SupernodalTree tree;

  Count nnz_a() const { return matrix.nnz(); }
  // Stored entries of the merged supernodal factor.
  Count nnz_l() const { return supernodal_nnz(partition, hadj); }
  Count flops() const { return supernodal_flops(partition, hadj); }
};

Analysis analyze(const SymmetricPattern& a, const Permutation& fill,
                 double cap);

enum class Method { none, pr, tsp };
std::optional<Method> parse_method(std::string_view name);
std::string_view to_string(Method m);

struct MethodSpec {
  Method method = Method::none;
  Strategy strategy = Strategy::work;
  InsertionRule rule = InsertionRule::farthest;
  bool weighted = false;
  std::uint64_t seed = 0;

  // Short label, e.g. FARwts, ARBnone, PR-work, none.
  std::string label() const;
  // Looks a label up; nullopt when unknown.
  static std::optional<MethodSpec> from_label(std::string_view label,
                                              std::uint64_t seed = 0);
};

// The named variants in comparison order.
std::vector<MethodSpec> standard_methods(std::uint64_t seed);

// Within-supernode reordering in analysis labels.
Permutation reorder(const Analysis& an, const MethodSpec& spec);

// Supernodal factor storage recomputed from scratch after applying `within`:
// symbolic factorization of the permuted matrix, structures unioned over
// each supernode.
Count reordered_nnz(const Analysis& an, const Permutation& within);

struct Factorization {
  FactorStorage storage;
  KernelTrace trace;
  SymmetricPattern matrix;  // the factored matrix, values included
};

// Assembles and factors the analysis matrix under `within`, synthesizing
// values for pattern-only input.
Factorization factor(const Analysis& an, const Permutation& within,
                     const kernels::KernelSet& k = kernels::active_kernels());

// ||A x - b||_2 / ||b||_2 for the lower-stored symmetric A.
double relative_residual(const SymmetricPattern& a, std::span<const double> x,
                         std::span<const double> b);

}  // namespace snr

#endif  // SNREORDER_PIPELINE_HPP_
