#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace campaign {

/// Non-negative integer cost with a saturating +infinity.
/// Infinity compares greater than every finite value; addition saturates.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr Cost(std::int64_t v) : v_(v) {
    if (v < 0) throw std::invalid_argument("Cost: negative value");
  }

  static constexpr Cost infinite() {
    Cost c;
    c.v_ = kInf;
    return c;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }

  /// Finite value; throws on infinity.
  constexpr std::int64_t value() const {
    if (is_infinite()) throw std::logic_error("Cost: value() on infinity");
    return v_;
  }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    Cost c;
    c.v_ = a.v_ + b.v_;
    return c;
  }
  Cost& operator+=(Cost o) { return *this = *this + o; }

  friend constexpr bool operator==(Cost a, Cost b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Cost a, Cost b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Cost a, Cost b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Cost a, Cost b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Cost a, Cost b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Cost a, Cost b) { return a.v_ >= b.v_; }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t v_ = 0;
};

}  // namespace campaign
