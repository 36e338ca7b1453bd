#ifndef SNREORDER_ORDERING_HPP_
#define SNREORDER_ORDERING_HPP_

#include "snreorder/pattern.hpp"

namespace snr {

// Fill-reducing fallback when no external ordering is supplied. Deterministic;
// the quality is whatever multiple minimum degree gives.
Permutation minimum_degree(const SymmetricPattern& a);

}  // namespace snr

#endif  // SNREORDER_ORDERING_HPP_
