#ifndef SNREORDER_PROFILE_HPP_
#define SNREORDER_PROFILE_HPP_

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

namespace snr {

// Median wall-clock seconds over `reps` calls of `f` (reps is made odd).
template <class F>
double median_seconds(int reps, F&& f) {
  if (reps < 1) reps = 1;
  if (reps % 2 == 0) ++reps;
  std::vector<double> t;
  t.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    f();
    t.push_back(std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count());
  }
  std::nth_element(t.begin(), t.begin() + reps / 2, t.end());
  return t[reps / 2];
}

double median(std::vector<double> v);

struct ProfilePoint {
  std::string method;
  double tau;
  double fraction;
};

// Empirical performance profile. measures[p][m] is method m's cost on
// problem p (lower is better). For each method and every observed ratio
// tau (1 included) the fraction of problems with cost <= tau * best.
// A zero best makes every nonzero cost on that problem an unbounded ratio.
std::vector<ProfilePoint> performance_profile(
    const std::vector<std::string>& methods,
    const std::vector<std::vector<double>>& measures);

}  // namespace snr

#endif  // SNREORDER_PROFILE_HPP_
