#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace siegel {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Decimal string of an arbitrary-precision integer.
std::string to_string(const BigInt& x);
/// Always "p/q" with q > 0, even when q = 1.
std::string to_string(const ExactRational& x);

BigInt ipow(const BigInt& base, unsigned exponent);

/// Element of Z ∪ {−∞, +∞}, used for truncation thresholds.
class Threshold {
public:
  enum class Kind : int { NegInf = 0, Finite = 1, PosInf = 2 };

  constexpr Threshold() = default;
  static constexpr Threshold finite(Int v) { return Threshold(Kind::Finite, v); }
  static constexpr Threshold neg_inf() { return Threshold(Kind::NegInf, 0); }
  static constexpr Threshold pos_inf() { return Threshold(Kind::PosInf, 0); }

  /// Parses "inf", "+inf", "-inf" or a decimal integer.
  static Threshold parse(const std::string& token);

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  Int value() const;

  /// x < *this
  constexpr bool above(Int x) const {
    switch (kind_) {
      case Kind::NegInf: return false;
      case Kind::PosInf: return true;
      default: return x < value_;
    }
  }
  /// x >= *this
  constexpr bool at_most(Int x) const { return !above(x); }

  Threshold operator-() const;
  Threshold operator+(Int shift) const;

  std::string to_string() const;

  friend constexpr bool operator==(const Threshold&, const Threshold&) = default;
  friend constexpr std::strong_ordering operator<=>(const Threshold& a, const Threshold& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.value_ <=> b.value_;
  }

private:
  constexpr Threshold(Kind k, Int v) : kind_(k), value_(v) {}
  Kind kind_ = Kind::Finite;
  Int value_ = 0;
};

/// Euler's totient.
Int euler_phi(Int n);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

/// Parses a comma separated list of integers ("1,-2,3").
std::vector<Int> parse_int_list(const std::string& text);

}  // namespace siegel
