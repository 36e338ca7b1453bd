#ifndef SNREORDER_WORKSPACE_HPP_
#define SNREORDER_WORKSPACE_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

namespace snr::mem {

// Tracks live and peak bytes of working storage allocated through
// CountingAllocator while the meter is installed.
class Meter {
 public:
  void allocated(std::size_t bytes) {
    current_ += bytes;
    peak_ = std::max(peak_, current_);
    ++allocations_;
  }
  void released(std::size_t bytes) { current_ -= bytes; }

  std::size_t current() const { return current_; }
  std::size_t peak() const { return peak_; }
  std::size_t allocations() const { return allocations_; }

 private:
  std::size_t current_ = 0;
  std::size_t peak_ = 0;
  std::size_t allocations_ = 0;
};

namespace detail {
inline thread_local Meter* active = nullptr;
}

inline Meter* active_meter() { return detail::active; }

// Installs a meter for the current thread for the lifetime of the scope.
class MeterScope {
 public:
  explicit MeterScope(Meter& m) : previous_(detail::active) {
    detail::active = &m;
  }
  ~MeterScope() { detail::active = previous_; }
  MeterScope(const MeterScope&) = delete;
  MeterScope& operator=(const MeterScope&) = delete;

 private:
  Meter* previous_;
};

// Binds to the meter active when the allocator (and so its container) is
// created; frees are charged back to the same meter.
template <class T>
class CountingAllocator {
 public:
  using value_type = T;

  CountingAllocator() noexcept : meter_(active_meter()) {}
  template <class U>
  CountingAllocator(const CountingAllocator<U>& other) noexcept
      : meter_(other.meter()) {}

  T* allocate(std::size_t count) {
    T* p = std::allocator<T>{}.allocate(count);
    if (meter_) meter_->allocated(count * sizeof(T));
    return p;
  }
  void deallocate(T* p, std::size_t count) noexcept {
    if (meter_) meter_->released(count * sizeof(T));
    std::allocator<T>{}.deallocate(p, count);
  }

  Meter* meter() const noexcept { return meter_; }

  template <class U>
  friend bool operator==(const CountingAllocator& a,
                         const CountingAllocator<U>& b) noexcept {
    return a.meter() == b.meter();
  }

 private:
  Meter* meter_;
};

template <class T>
using vector = std::vector<T, CountingAllocator<T>>;

}  // namespace snr::mem

#endif  // SNREORDER_WORKSPACE_HPP_
