#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hallmatch {

/// Exact non-negative-denominator fraction in lowest terms. Comparisons
/// cross-multiply, so operands must stay well inside int64 range (all
/// values here are vertex counts).
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }

  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Always "p/q", including integral values.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

/// "p" for integral values, "p/q" otherwise.
inline std::string to_compact_string(const Rational& r) {
  if (r.den() == 1) return std::to_string(r.num());
  return to_string(r);
}

}  // namespace hallmatch
