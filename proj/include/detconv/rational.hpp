#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

namespace detconv {

using BigInt = mpz_class;

// Exact fraction over arbitrary-precision integers. Always canonical: the
// denominator is positive and coprime to the numerator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const BigInt& v) : value_(v) {}          // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  // Accepts "n", "-n", "n/d" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  // "n" for integers, "n/d" otherwise.
  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

BigInt factorial(unsigned n);
// Zero when k < 0 or k > n.
BigInt binomial(long n, long k);
// n! / (n-k)!, zero when k > n.
BigInt falling_factorial(unsigned n, unsigned k);

}  // namespace detconv
