#pragma once

#include <cmath>
#include <cstdint>

namespace e2m {

// Counter-based PRNG: output i of stream `key` is mix(key, i), so streams can
// be split and replayed without shared state. The integer stream is
// bit-reproducible everywhere; gauss() additionally goes through libm
// (sqrt/log/cos), which pins results per platform but not across libms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : key_(seed) {}

  uint64_t next_u64() {
    // splitmix64 finalizer over (key, counter)
    uint64_t z = key_ + 0x9e3779b97f4a7c15ULL * ++ctr_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n)
  int64_t uniform_int(int64_t n) {
    return static_cast<int64_t>(next_u64() % static_cast<uint64_t>(n));
  }

  // standard normal via Box-Muller, one cached spare
  double gauss() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  uint64_t key() const { return key_; }
  uint64_t counter() const { return ctr_; }
  void restore(uint64_t key, uint64_t counter) {
    key_ = key;
    ctr_ = counter;
    has_spare_ = false;
  }

 private:
  uint64_t key_ = 0;
  uint64_t ctr_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace e2m
