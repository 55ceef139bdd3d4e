#include "altgame/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace altgame {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(x);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  if (s.empty()) throw std::invalid_argument("empty integer");
  if (s.front() == '+') throw std::invalid_argument("unexpected '+'");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Wide n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return make(-Wide(num_), den_); }

Rational operator+(const Rational& x, const Rational& y) {
  return make(Wide(x.num_) * y.den_ + Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  return make(Wide(x.num_) * y.den_ - Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return make(Wide(x.num_) * y.num_, Wide(x.den_) * y.den_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  Wide lhs = Wide(x.num_) * y.den_;
  Wide rhs = Wide(y.num_) * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace altgame
