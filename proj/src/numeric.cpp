#include "siegel/numeric.hpp"

#include "siegel/errors.hpp"

#include <charconv>
#include <sstream>

namespace siegel {

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const ExactRational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

Int Threshold::value() const {
  if (!is_finite()) throw ValidationError("infinite threshold has no integer value");
  return value_;
}

Threshold Threshold::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return finite(-value_);
  }
}

Threshold Threshold::operator+(Int shift) const {
  return is_finite() ? finite(value_ + shift) : *this;
}

std::string Threshold::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return std::to_string(value_);
  }
}

namespace {

Int parse_int(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw ValidationError("not an integer: '" + std::string(token) + "'");
  return value;
}

}  // namespace

Threshold Threshold::parse(const std::string& token) {
  if (token == "inf" || token == "+inf") return pos_inf();
  if (token == "-inf") return neg_inf();
  return finite(parse_int(token));
}

Int euler_phi(Int n) {
  if (n < 1) throw ValidationError("euler_phi needs n >= 1");
  Int result = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    result = result / p * (p - 1);
  }
  return result;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n < 1) throw ValidationError("factorize needs n >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw ValidationError("empty integer list");
  return out;
}

}  // namespace siegel
