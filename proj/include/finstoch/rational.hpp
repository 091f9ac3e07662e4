#pragma once
// Exact rational scalars in canonical form (gcd-reduced, positive
// denominator) over arbitrary-precision integers, plus the dyadic
// fragment k/2^n of the unit interval. Equality is structural:
// equal values have bit-identical representations.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finstoch {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt num, BigInt den);

  // Parses "p/q" or a bare integer "p". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool in_unit_interval() const { return num_ >= 0 && num_ <= den_; }

  std::string str() const;  // always "p/q", q in canonical form

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  // Canonical form makes value equality structural.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  BigInt num_;
  BigInt den_;  // > 0, gcd(|num|, den) == 1
};

// Constructs p/q in canonical form; rejects q == 0.
Rational rat(long long p, long long q);
Rational rat(BigInt p, BigInt q);

// Exact power 2^-n and 2^n as rationals.
Rational pow2(long exponent);

// Midpoint of the unit interval: (a+b)/2, operands must lie in [0,1].
Rational average(const Rational& a, const Rational& b);

// ceil(r) for r >= 0, exact.
BigInt ceil_of(const Rational& r);

// Dyadic k/2^n with 0 <= k <= 2^n; canonical form has k odd or n == 0.
class Dyadic {
public:
  Dyadic() : k_(0), n_(0) {}
  Dyadic(BigInt k, unsigned n);

  // Value of the binary expansion 0.b1 b2 ... bm (empty string is 0).
  static Dyadic from_bits(std::string_view bits);
  static Dyadic parse(std::string_view text);  // "k/2^n"

  const BigInt& numerator() const { return k_; }
  unsigned exponent() const { return n_; }

  Rational to_rational() const;
  std::string str() const;  // "k/2^n"

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.k_ == b.k_ && a.n_ == b.n_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

private:
  BigInt k_;
  unsigned n_;
};

// Value of a finite binary expansion as a canonical dyadic.
Dyadic dyadic_value(std::string_view bits);

}  // namespace finstoch
