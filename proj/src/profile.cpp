#include "snreorder/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snreorder/types.hpp"

namespace snr {

double median(std::vector<double> v) {
  if (v.empty()) throw Error("median of an empty sample");
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double hi = v[mid];
  return (*std::max_element(v.begin(), v.begin() + mid) + hi) / 2.0;
}

std::vector<ProfilePoint> performance_profile(
    const std::vector<std::string>& methods,
    const std::vector<std::vector<double>>& measures) {
  if (measures.empty()) throw Error("performance profile needs problems");
  const std::size_t M = methods.size();
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> ratio(measures.size(),
                                         std::vector<double>(M, inf));
  std::vector<double> taus{1.0};
  for (std::size_t p = 0; p < measures.size(); ++p) {
    if (measures[p].size() != M) throw Error("ragged measure table");
    const double best = *std::min_element(measures[p].begin(),
                                          measures[p].end());
    for (std::size_t m = 0; m < M; ++m) {
      const double v = measures[p][m];
      if (v == best) {
        ratio[p][m] = 1.0;
      } else if (best > 0.0 && std::isfinite(v)) {
        ratio[p][m] = v / best;
      }
      if (std::isfinite(ratio[p][m])) taus.push_back(ratio[p][m]);
    }
  }
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  std::vector<ProfilePoint> out;
  out.reserve(M * taus.size());
  const double P = static_cast<double>(measures.size());
  for (std::size_t m = 0; m < M; ++m) {
    for (double tau : taus) {
      std::size_t hits = 0;
      for (const auto& row : ratio) hits += row[m] <= tau;
      out.push_back({methods[m], tau, static_cast<double>(hits) / P});
    }
  }
  return out;
}

}  // namespace snr
