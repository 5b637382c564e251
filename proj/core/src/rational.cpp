#include "trisat/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "trisat/error.hpp"

namespace trisat {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string Rational::compact() const {
  return den_ == 1 ? std::to_string(num_) : str();
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

Rational operator+(const Rational& x, const Rational& y) {
  const std::int64_t l = std::lcm(x.den_, y.den_);
  return Rational(x.num_ * (l / x.den_) + y.num_ * (l / y.den_), l);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  const std::int64_t g1 = std::gcd(x.num_, y.den_);
  const std::int64_t g2 = std::gcd(y.num_, x.den_);
  return Rational((x.num_ / g1) * (y.num_ / g2), (x.den_ / g2) * (y.den_ / g1));
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
  const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trisat
