#include "finstoch/rational.hpp"

#include <cctype>

namespace finstoch {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
  } else {
    BigInt g = big_gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text), 1);
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division of rationals by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

Rational rat(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }
Rational rat(BigInt p, BigInt q) { return Rational(std::move(p), std::move(q)); }

Rational pow2(long exponent) {
  BigInt one = 1;
  if (exponent >= 0) return Rational(one << exponent, 1);
  return Rational(1, one << (-exponent));
}

Rational average(const Rational& a, const Rational& b) {
  if (!a.in_unit_interval() || !b.in_unit_interval())
    throw std::domain_error("average: operands must lie in [0,1]");
  return (a + b) * rat(1, 2);
}

BigInt ceil_of(const Rational& r) {
  if (r.num() < 0) throw std::domain_error("ceil_of expects a nonnegative rational");
  return (r.num() + r.den() - 1) / r.den();
}

Dyadic::Dyadic(BigInt k, unsigned n) : k_(std::move(k)), n_(n) {
  if (k_ < 0) throw std::invalid_argument("dyadic numerator must be nonnegative");
  if (k_ > (BigInt(1) << n_)) throw std::invalid_argument("dyadic exceeds the unit interval");
  while (n_ > 0 && k_ % 2 == 0) {
    if (k_ == 0) {
      n_ = 0;
      break;
    }
    k_ >>= 1;
    --n_;
  }
}

Dyadic Dyadic::from_bits(std::string_view bits) {
  BigInt k = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may contain only 0 and 1");
    k = (k << 1) + (c == '1' ? 1 : 0);
  }
  return Dyadic(k, static_cast<unsigned>(bits.size()));
}

Dyadic Dyadic::parse(std::string_view text) {
  auto pos = text.find("/2^");
  if (pos == std::string_view::npos) throw std::invalid_argument("dyadic literal must look like k/2^n");
  BigInt k = parse_bigint(text.substr(0, pos));
  BigInt n = parse_bigint(text.substr(pos + 3));
  if (n < 0 || n > 1000000) throw std::invalid_argument("dyadic exponent out of range");
  return Dyadic(k, static_cast<unsigned>(n));
}

Rational Dyadic::to_rational() const {
  return Rational(k_, BigInt(1) << n_);
}

std::string Dyadic::str() const {
  return k_.str() + "/2^" + std::to_string(n_);
}

Dyadic dyadic_value(std::string_view bits) { return Dyadic::from_bits(bits); }

}  // namespace finstoch
