#include "detconv/univariate.hpp"

#include <cctype>
#include <string>

#include "detconv/error.hpp"
#include "detconv/poly_matrix.hpp"

namespace detconv {

namespace {

class ShorthandParser {
 public:
  explicit ShorthandParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly result(1);
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term() * Rational(sign);
      skip_space();
    }
    return result;
  }

 private:
  MultiPoly term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_coeff) fail("expected a coefficient or 'x'");
      return MultiPoly(1, coeff);
    }
    ++pos_;
    skip_space();
    unsigned exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected an exponent after '^'");
      exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }
    return MultiPoly::monomial(ExponentVector{exponent}, coeff);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial '" + std::string(text_) + "': " + what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_univariate(std::string_view text) { return ShorthandParser(text).parse(); }

std::vector<Rational> univariate_coefficients(const MultiPoly& p) {
  if (p.arity() != 1) throw InputError("expected a univariate polynomial");
  std::vector<Rational> c(p.total_degree() + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return c;
}

MultiPoly univariate_from_coefficients(const std::vector<Rational>& c) {
  MultiPoly p(1);
  for (unsigned i = 0; i < c.size(); ++i) p.add_term(ExponentVector{i}, c[i]);
  return p;
}

bool is_monic(const MultiPoly& p) {
  if (p.arity() != 1 || p.is_zero()) return false;
  return p.terms().rbegin()->second == Rational(1);
}

RationalMatrix companion_of(const MultiPoly& p) {
  if (!is_monic(p)) throw InputError("companion matrix needs a monic univariate polynomial");
  auto c = univariate_coefficients(p);
  c.pop_back();
  return companion_matrix(c);
}

MultiPoly characteristic_polynomial(const RationalMatrix& a) {
  if (!a.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  PolyMatrix m(n, n, 1);
  const MultiPoly x = MultiPoly::variable(1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly e(1, -a(i, j));
      if (i == j) e += x;
      m.set(i, j, std::move(e));
    }
  return determinant(m);
}

}  // namespace detconv
