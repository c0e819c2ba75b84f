#include "detconv/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "detconv/error.hpp"

namespace detconv {

unsigned ExponentVector::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0U);
}

BigInt ExponentVector::factorial() const {
  BigInt r = 1;
  for (unsigned v : e_) r *= detconv::factorial(v);
  return r;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

namespace {

void require_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": arity mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

}  // namespace

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {}

MultiPoly::MultiPoly(std::size_t arity, const Rational& constant) : arity_(arity) {
  if (!constant.is_zero()) terms_.emplace(ExponentVector(arity), constant);
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InputError("variable index out of range");
  ExponentVector e(arity);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(ExponentVector exponents, const Rational& coeff) {
  MultiPoly p(exponents.arity());
  p.add_term(exponents, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(ExponentVector(arity_)); }

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MultiPoly::is_homogeneous(unsigned degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& t) { return t.first.total_degree() == degree; });
}

Rational MultiPoly::coefficient(const ExponentVector& alpha) const {
  require_arity(arity_, alpha.arity(), "coefficient");
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const ExponentVector& alpha, const Rational& coeff) {
  require_arity(arity_, alpha.arity(), "add_term");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_arity(arity_, o.arity_, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_arity(arity_, o.arity_, "subtract");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_arity(a.arity_, b.arity_, "poly_mul");
  MultiPoly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var, unsigned order) const {
  if (var >= arity_) throw InputError("derivative: variable index out of range");
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < order) continue;
    ExponentVector d = e;
    d[var] -= order;
    r.add_term(d, c * Rational(falling_factorial(e[var], order)));
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> values) const {
  if (values.size() != arity_) throw InputError("substitute: expected one value per variable");
  const std::size_t target = values.empty() ? 1 : values[0].arity();
  for (const auto& v : values) require_arity(target, v.arity(), "substitute");

  // Cache powers per variable; determinantal polynomials reuse them heavily.
  std::vector<std::vector<MultiPoly>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    powers[i].emplace_back(target, Rational(1));
    const unsigned deg = degree_in(i);
    for (unsigned k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * values[i]);
  }
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term(target, c);
    for (std::size_t i = 0; i < arity_ && !term.is_zero(); ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    r += term;
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw InputError("evaluate: point has wrong arity");
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] != 0) term *= pow(point[i], e[i]);
    }
    r += term;
  }
  return r;
}

MultiPoly MultiPoly::embed(std::size_t new_arity, std::span<const std::size_t> placement) const {
  if (placement.size() != arity_) throw InputError("embed: placement size mismatch");
  MultiPoly r(new_arity);
  for (const auto& [e, c] : terms_) {
    ExponentVector f(new_arity);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (placement[i] >= new_arity) throw InputError("embed: placement out of range");
      f[placement[i]] += e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

std::string MultiPoly::str(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.size() != arity_) {
    fallback = default_names(arity_);
    names = fallback;
  }
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out << '-';
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e.total_degree() == 0;
    bool need_star = false;
    if (constant || mag != Rational(1)) {
      out << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << names[i];
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly r(base.arity(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

Rational coefficient_of(const MultiPoly& p, const ExponentVector& alpha) {
  return p.coefficient(alpha);
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var, unsigned order) {
  return p.derivative(var, order);
}

MultiPoly poly_substitute(const MultiPoly& p, std::span<const MultiPoly> values) {
  return p.substitute(values);
}

std::vector<std::string> default_names(std::size_t arity) {
  if (arity == 1) return {"x"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace detconv
