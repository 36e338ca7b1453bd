#ifndef SNREORDER_RLB_HPP_
#define SNREORDER_RLB_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "snreorder/blockmetrics.hpp"
#include "snreorder/kernels.hpp"
#include "snreorder/pattern.hpp"
#include "snreorder/symbolic.hpp"
#include "snreorder/workspace.hpp"

namespace snr {

// Supernodal factor storage: one dense column-major panel per supernode with
// the diagonal block stacked above the off-block rows. Panel s has
// rows(s).size() rows and width(s) columns.
class FactorStorage {
 public:
  Index n() const { return part_.n(); }
  const SupernodePartition& partition() const { return part_; }
  std::span<const Index> rows(Index s) const {
    return {row_idx_.data() + row_ptr_[s],
            static_cast<std::size_t>(row_ptr_[s + 1] - row_ptr_[s])};
  }
  Index ld(Index s) const { return row_ptr_[s + 1] - row_ptr_[s]; }
  double* panel(Index s) { return values_.data() + val_ptr_[s]; }
  const double* panel(Index s) const { return values_.data() + val_ptr_[s]; }

  // Lower-trapezoid entries, i.e. nnz of the supernodal factor.
  Count stored_entries() const;
  // Doubles held by the panels (includes the unused upper diagonal blocks).
  std::size_t allocated_values() const { return values_.size(); }
  bool factored() const { return factored_; }

  // L(i, j) for i >= j in factor labels; 0 outside the structure.
  double entry(Index i, Index j) const;
  // Dense column-major lower factor.
  std::vector<double> to_dense() const;

 private:
  friend FactorStorage assemble(const SymmetricPattern&,
                                const SupernodePartition&,
                                const HigherAdjacency&);
  friend class RlbFactorizer;

  SupernodePartition part_;
  std::vector<Index> row_ptr_{0};
  std::vector<Index> row_idx_;
  std::vector<Index> val_ptr_{0};
  mem::vector<double> values_;
  bool factored_ = false;
};

// Places the entries of `a` (already in factor labels) into supernodal
// panels; fill positions start at zero. Pattern-only matrices get
// synthesized diagonally dominant values. `hadj` must be in factor labels.
// Throws StructureError if an entry of `a` falls outside the structure.
FactorStorage assemble(const SymmetricPattern& a, const SupernodePartition& part,
                       const HigherAdjacency& hadj);

enum class KernelKind { cdiv_factor, cdiv_solve, syrk, gemm };
std::string_view to_string(KernelKind k);

// One kernel invocation with BLAS-style operand sizes (m, n, k).
struct KernelCall {
  KernelKind kind;
  Index source;
  Index target;
  Index m;
  Index n;
  Index k;
};

struct KernelTrace {
  std::vector<KernelCall> calls;

  Count count(KernelKind kind) const;
  Count count(KernelKind kind, Index source, Index target) const;
};

// Right-looking blocked Cholesky, in place. After cdiv(J) every block B of J
// lying in an ancestor P updates L_{B,B} (syrk) and, for each maximal block
// B' extending below B, L_{B',B} (gemm); the part of B' at or above B is
// skipped. No floating-point scratch is used.
// Throws NotPositiveDefinite naming the factor column.
KernelTrace rlb_factor(FactorStorage& fs, const BlockList& blocks,
                       const kernels::KernelSet& k = kernels::active_kernels());

// Solves L L^T x = b in factor labels. Throws Error if not factored.
std::vector<double> solve(const FactorStorage& fs, std::span<const double> b);

// Textbook dense lower Cholesky of a column-major n x n SPD matrix, n <= 512.
std::vector<double> dense_cholesky_oracle(std::span<const double> a, Index n);

}  // namespace snr

#endif  // SNREORDER_RLB_HPP_
