#include "qconv/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "qconv/error.hpp"

namespace qconv {
namespace {

using wide = __int128;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgumentError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgumentError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw InvalidArgumentError("rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits(num) || !fits(den)) throw RationalOverflowError();
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw RationalOverflowError();
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    *this = from_wide(static_cast<wide>(num_) + o.num_, den_);
  } else {
    *this = from_wide(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                      static_cast<wide>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    *this = from_wide(static_cast<wide>(num_) - o.num_, den_);
  } else {
    *this = from_wide(static_cast<wide>(num_) * o.den_ - static_cast<wide>(o.num_) * den_,
                      static_cast<wide>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InvalidArgumentError("rational division by zero");
  *this = from_wide(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  wide l = static_cast<wide>(a.num_) * b.den_;
  wide r = static_cast<wide>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  wide l = static_cast<wide>(a) / std::gcd(a, b) * b;
  if (l < 0) l = -l;
  if (!fits(l)) throw RationalOverflowError();
  return static_cast<std::int64_t>(l);
}

}  // namespace qconv
