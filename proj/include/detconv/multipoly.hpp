#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "detconv/rational.hpp"

namespace detconv {

// Exponent vector alpha of a monomial x^alpha; arity is fixed by the owning
// polynomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity) : e_(arity, 0) {}
  ExponentVector(std::initializer_list<unsigned> e) : e_(e) {}
  explicit ExponentVector(std::vector<unsigned> e) : e_(std::move(e)) {}

  std::size_t arity() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  std::span<const unsigned> values() const { return e_; }

  unsigned total_degree() const;
  // alpha! = prod alpha_i!
  BigInt factorial() const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<unsigned> e_;
};

// Graded lexicographic: total degree first, then lexicographic on the
// exponents.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored, so equality is equality of term maps.
class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexLess>;

  explicit MultiPoly(std::size_t arity = 1);
  MultiPoly(std::size_t arity, const Rational& constant);

  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly monomial(ExponentVector exponents, const Rational& coeff);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (valid for any polynomial).
  Rational constant_term() const;

  // Largest total degree of a stored term; 0 for the zero polynomial.
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous(unsigned degree) const;

  Rational coefficient(const ExponentVector& alpha) const;
  void add_term(const ExponentVector& alpha, const Rational& coeff);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // (d/dx_var)^order.
  MultiPoly derivative(std::size_t var, unsigned order = 1) const;

  // Composition: variable i is replaced by values[i]; all values share one
  // target arity.
  MultiPoly substitute(std::span<const MultiPoly> values) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Re-embed into a larger arity: variable i becomes variable placement[i].
  MultiPoly embed(std::size_t new_arity, std::span<const std::size_t> placement) const;

  // Highest grlex term first, e.g. "2*x1^2 + 10*x1*x2 + 12*x2^2".
  std::string str(std::span<const std::string> names = {}) const;

 private:
  std::size_t arity_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

// Free-function spellings of the core operations.
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
Rational coefficient_of(const MultiPoly& p, const ExponentVector& alpha);
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var, unsigned order);
MultiPoly poly_substitute(const MultiPoly& p, std::span<const MultiPoly> values);

// Default variable names: "x" for arity 1, otherwise x1..xk.
std::vector<std::string> default_names(std::size_t arity);

}  // namespace detconv
