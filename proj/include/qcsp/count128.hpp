#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qcsp {

// Checked unsigned 128-bit counter. Gate counts for the largest instances
// exceed 2^64 (walk totals reach ~6e20, with headroom required to 1e24), so
// 64-bit arithmetic is a hard error waiting to happen. Every overflow throws
// instead of wrapping.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by design

  static Count from_parts(std::uint64_t hi, std::uint64_t lo) {
    Count c;
    c.v_ = (static_cast<unsigned __int128>(hi) << 64) | lo;
    return c;
  }

  // Nearest-integer conversion; rejects negatives, non-finite, and values
  // beyond 2^127 (doubles are exact only to 2^53, callers accept that).
  static Count from_double(double v) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::overflow_error("Count::from_double: out of range");
    }
    long double r = std::round(static_cast<long double>(v));
    if (r >= std::ldexp(1.0L, 127)) {
      throw std::overflow_error("Count::from_double: exceeds 128-bit range");
    }
    Count c;
    c.v_ = static_cast<unsigned __int128>(r);
    return c;
  }

  Count operator+(Count o) const {
    Count r;
    r.v_ = v_ + o.v_;
    if (r.v_ < v_) throw std::overflow_error("Count: addition overflow");
    return r;
  }

  Count operator-(Count o) const {
    if (o.v_ > v_) throw std::overflow_error("Count: subtraction underflow");
    Count r;
    r.v_ = v_ - o.v_;
    return r;
  }

  Count operator*(Count o) const {
    if (v_ == 0 || o.v_ == 0) return Count{};
    Count r;
    r.v_ = v_ * o.v_;
    if (r.v_ / v_ != o.v_) throw std::overflow_error("Count: multiply overflow");
    return r;
  }

  Count& operator+=(Count o) { return *this = *this + o; }
  Count& operator*=(Count o) { return *this = *this * o; }

  friend bool operator==(Count a, Count b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Count a, Count b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const {
    return static_cast<double>(static_cast<long double>(v_));
  }

  std::uint64_t to_u64() const {
    if (v_ > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("Count: does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(v_);
  }

  std::string str() const {
    if (v_ == 0) return "0";
    std::string s;
    unsigned __int128 x = v_;
    while (x > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    }
    return s;
  }

  unsigned __int128 raw() const { return v_; }

 private:
  unsigned __int128 v_ = 0;
};

inline Count max(Count a, Count b) { return a < b ? b : a; }

}  // namespace qcsp
