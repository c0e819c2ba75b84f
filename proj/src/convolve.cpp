#include "detconv/convolve.hpp"

#include <string>

#include "detconv/ensembles.hpp"
#include "detconv/error.hpp"
#include "detconv/parallel.hpp"
#include "detconv/univariate.hpp"

namespace detconv {

namespace {

Rational inverse_group_order(std::uint64_t count) { return Rational(BigInt(1), BigInt(std::to_string(count))); }

// Replace every variable but `keep` by a constant and project to arity 1.
MultiPoly specialize_to_x(const MultiPoly& p, std::size_t keep, const std::vector<Rational>& constants) {
  std::vector<MultiPoly> values;
  values.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    values.push_back(i == keep ? MultiPoly::variable(1, 0) : MultiPoly(1, constants[i]));
  }
  return p.substitute(values);
}

void require_square(const RationalMatrix& m, std::size_t d, const char* what) {
  if (m.rows() != d || m.cols() != d) throw InputError(std::string(what) + ": expected a " + std::to_string(d) +
                                                       "x" + std::to_string(d) + " matrix");
}

unsigned univariate_degree(const MultiPoly& p, const char* what) {
  if (p.arity() != 1) throw InputError(std::string(what) + ": expected a univariate polynomial");
  if (!is_monic(p)) throw InputError(std::string(what) + ": polynomial must be monic");
  return p.total_degree();
}

RationalMatrix realize(const MultiPoly& p, const std::optional<RationalMatrix>& m, const char* what) {
  if (!m) return companion_of(p);
  if (characteristic_polynomial(*m) != p) {
    throw InputError(std::string(what) + ": realization matrix does not have the given characteristic polynomial");
  }
  return *m;
}

}  // namespace

MultiPoly star_convolve(const MultiPoly& p, const MultiPoly& q, unsigned degree) {
  if (p.arity() != q.arity()) throw InputError("star_convolve: arity mismatch");
  if (!p.is_homogeneous(degree) || !q.is_homogeneous(degree)) {
    throw InputError("star_convolve: both polynomials must be homogeneous of degree " + std::to_string(degree));
  }
  MultiPoly r(p.arity());
  const Rational scale(BigInt(1), factorial(degree));
  const auto& smaller = p.term_count() <= q.term_count() ? p : q;
  const auto& larger = p.term_count() <= q.term_count() ? q : p;
  for (const auto& [alpha, c] : smaller.terms()) {
    const Rational other = larger.coefficient(alpha);
    if (other.is_zero()) continue;
    r.add_term(alpha, c * other * Rational(alpha.factorial()) * scale);
  }
  return r;
}

Rational l_coefficient(unsigned m, unsigned i, unsigned j) {
  if (i + j > m) return Rational(0);
  return Rational(factorial(m - i) * factorial(m - j), factorial(m) * factorial(m - i - j));
}

MultiPoly l_operator(const MultiPoly& p, unsigned m, std::size_t x_index, std::size_t y_index) {
  if (x_index >= p.arity() || y_index >= p.arity() || x_index == y_index) {
    throw InputError("l_operator: invalid variable pair");
  }
  MultiPoly r(p.arity());
  for (const auto& [e, c] : p.terms()) {
    const Rational f = l_coefficient(m, e[x_index], e[y_index]);
    if (!f.is_zero()) r.add_term(e, c * f);
  }
  return r;
}

MultiPoly det_pencil(std::span<const RationalMatrix> ms) {
  if (ms.empty()) throw InputError("det_pencil: need at least one matrix");
  const std::size_t d = ms[0].rows();
  const std::size_t k = ms.size();
  PolyMatrix m(d, d, k);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      MultiPoly e(k);
      for (std::size_t i = 0; i < k; ++i) {
        require_square(ms[i], d, "det_pencil");
        const Rational& v = ms[i](r, c);
        if (!v.is_zero()) {
          ExponentVector alpha(k);
          alpha[i] = 1;
          e.add_term(alpha, v);
        }
      }
      m.set(r, c, std::move(e));
    }
  return determinant(m);
}

RationalMatrix conjugate(const SignedPermutation& q, const RationalMatrix& m) {
  return q.transpose().right_apply(q.left_apply(m));
}

// --- local theorem ---------------------------------------------------------

void validate(const LocalInstance& inst) {
  const std::size_t d = inst.d;
  const std::size_t m = inst.m;
  auto shape = [](const PolyMatrix& a, std::size_t r, std::size_t c, const char* name) {
    if (a.rows() != r || a.cols() != c) {
      throw InputError(std::string("local instance: ") + name + " must be " + std::to_string(r) + "x" +
                       std::to_string(c));
    }
  };
  shape(inst.u, d, d, "U");
  shape(inst.a1, d, m, "A1");
  shape(inst.a2, d, m, "A2");
  shape(inst.b1, m, d, "B1");
  shape(inst.b2, m, d, "B2");
  const std::size_t arity = inst.u.arity();
  for (const PolyMatrix* a : {&inst.a1, &inst.a2, &inst.b1, &inst.b2}) {
    if (a->arity() != arity) throw InputError("local instance: matrices must share one arity");
  }
  if (inst.x_index >= arity || inst.y_index >= arity || inst.x_index == inst.y_index) {
    throw InputError("local instance: x and y must be distinct variables of the shared arity");
  }
  for (const PolyMatrix* a : {&inst.u, &inst.a1, &inst.a2, &inst.b1, &inst.b2}) {
    for (std::size_t i = 0; i < a->rows(); ++i)
      for (std::size_t j = 0; j < a->cols(); ++j) {
        const MultiPoly& e = (*a)(i, j);
        if (e.degree_in(inst.x_index) != 0 || e.degree_in(inst.y_index) != 0) {
          throw InputError("local instance: matrix entries must not contain x or y");
        }
      }
  }
}

MultiPoly local_convolution(const LocalInstance& inst) {
  validate(inst);
  const std::size_t arity = inst.u.arity();
  const MultiPoly x = MultiPoly::variable(arity, inst.x_index);
  const MultiPoly y = MultiPoly::variable(arity, inst.y_index);
  const PolyMatrix sum = inst.u + x * (inst.a1 * inst.b1) + y * (inst.a2 * inst.b2);
  return l_operator(determinant(sum), static_cast<unsigned>(inst.m), inst.x_index, inst.y_index);
}

MultiPoly local_expectation_oracle(const LocalInstance& inst, const OracleBudget& budget) {
  validate(inst);
  const std::size_t arity = inst.u.arity();
  const MultiPoly x = MultiPoly::variable(arity, inst.x_index);
  const MultiPoly y = MultiPoly::variable(arity, inst.y_index);
  const PolyMatrix xa1 = x * inst.a1;
  return exhaustive_expectation(inst.m, budget.cap, budget.workers, [&](const SignedPermutation& r) {
    const PolyMatrix left = xa1 + y * r.right_apply(inst.a2);
    const PolyMatrix right = inst.b1 + r.transpose().left_apply(inst.b2);
    return determinant(inst.u + left * right);
  });
}

// --- global theorem --------------------------------------------------------

void validate(const GlobalInstance& inst) {
  if (inst.a.empty() || inst.a.size() != inst.b.size()) {
    throw InputError("global instance: need equally many A and B matrices (at least one)");
  }
  const std::size_t d = inst.a[0].rows();
  if (d == 0) throw InputError("global instance: matrices must be non-empty");
  for (const auto& m : inst.a) require_square(m, d, "global instance");
  for (const auto& m : inst.b) require_square(m, d, "global instance");
}

MultiPoly global_convolution(const GlobalInstance& inst) {
  validate(inst);
  const auto d = static_cast<unsigned>(inst.a[0].rows());
  return star_convolve(det_pencil(inst.a), det_pencil(inst.b), d);
}

MultiPoly global_expectation_oracle(const GlobalInstance& inst, const OracleBudget& budget) {
  validate(inst);
  const std::size_t d = inst.a[0].rows();
  return exhaustive_expectation(d, budget.cap, budget.workers, [&](const SignedPermutation& q) {
    std::vector<RationalMatrix> terms;
    terms.reserve(inst.a.size());
    for (std::size_t i = 0; i < inst.a.size(); ++i) terms.push_back(inst.a[i] * conjugate(q, inst.b[i]));
    return det_pencil(terms);
  });
}

MixedDiscriminantCheck mixed_discriminant_identity_check(std::span<const RationalMatrix> a,
                                                         std::span<const RationalMatrix> b,
                                                         const OracleBudget& budget) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw InputError("mixed discriminant check: need n matrices on each side");
  for (const auto& m : a) require_square(m, n, "mixed discriminant check");
  for (const auto& m : b) require_square(m, n, "mixed discriminant check");
  require_within_cap(n, budget.cap);

  const std::uint64_t count = signed_permutation_count(n);
  Rational sum = parallel_sum(count, budget.workers, Rational(0), [&](std::uint64_t i) {
    const SignedPermutation q = signed_permutation_at(n, i);
    std::vector<RationalMatrix> args;
    args.reserve(n);
    for (std::size_t j = 0; j < n; ++j) args.push_back(a[j] * conjugate(q, b[j]));
    return mixed_discriminant(std::span<const RationalMatrix>(args));
  });
  MixedDiscriminantCheck out;
  out.lhs = sum * inverse_group_order(count);
  out.rhs = mixed_discriminant(a) * mixed_discriminant(b) / Rational(factorial(static_cast<unsigned>(n)));
  if (!out.rhs.is_zero()) out.ratio = out.lhs / out.rhs;
  out.pass = out.lhs == out.rhs;
  return out;
}

std::pair<Rational, Rational> local_binomial_identity(unsigned m, unsigned a, unsigned b) {
  if (a + b > m) throw InputError("binomial identity requires a + b <= m");
  Rational lhs(0);
  for (unsigned j = 0; j <= std::min(a, b); ++j) {
    Rational term(factorial(m - j) * falling_factorial(a, j) * falling_factorial(b, j),
                  factorial(m) * factorial(j));
    if (j % 2 == 1) term = -term;
    lhs += term;
  }
  const Rational rhs(factorial(m - a) * factorial(m - b), factorial(m) * factorial(m - a - b));
  return {lhs, rhs};
}

// --- univariate convolutions ------------------------------------------------

MultiPoly boxplus(const MultiPoly& p, const MultiPoly& q, const std::optional<RationalMatrix>& a,
                  const std::optional<RationalMatrix>& b) {
  const unsigned d = univariate_degree(p, "boxplus");
  if (univariate_degree(q, "boxplus") != d) throw InputError("boxplus: degree mismatch");
  const RationalMatrix ma = realize(p, a, "boxplus");
  const RationalMatrix mb = realize(q, b, "boxplus");
  const RationalMatrix id = RationalMatrix::identity(d);
  const std::vector<RationalMatrix> left{id, ma, id};   // x I + y A + z I
  const std::vector<RationalMatrix> right{id, id, mb};  // x I + y I + z B
  const MultiPoly s = star_convolve(det_pencil(left), det_pencil(right), d);
  return specialize_to_x(s, 0, {Rational(0), Rational(-1), Rational(-1)});
}

MultiPoly boxplus_oracle(const RationalMatrix& a, const RationalMatrix& b, const OracleBudget& budget) {
  const std::size_t d = a.rows();
  require_square(a, d, "boxplus oracle");
  require_square(b, d, "boxplus oracle");
  return exhaustive_expectation(d, budget.cap, budget.workers, [&](const SignedPermutation& q) {
    return characteristic_polynomial(a + conjugate(q, b));
  });
}

MultiPoly boxtimes(const MultiPoly& p, const MultiPoly& q, const std::optional<RationalMatrix>& a,
                   const std::optional<RationalMatrix>& b) {
  const unsigned d = univariate_degree(p, "boxtimes");
  if (univariate_degree(q, "boxtimes") != d) throw InputError("boxtimes: degree mismatch");
  const RationalMatrix ma = realize(p, a, "boxtimes");
  const RationalMatrix mb = realize(q, b, "boxtimes");
  const RationalMatrix id = RationalMatrix::identity(d);
  const std::vector<RationalMatrix> left{id, ma};   // x I + y A
  const std::vector<RationalMatrix> right{id, mb};  // x I + y B
  const MultiPoly s = star_convolve(det_pencil(left), det_pencil(right), d);
  return specialize_to_x(s, 0, {Rational(0), Rational(-1)});
}

MultiPoly boxtimes_oracle(const RationalMatrix& a, const RationalMatrix& b, const OracleBudget& budget) {
  const std::size_t d = a.rows();
  require_square(a, d, "boxtimes oracle");
  require_square(b, d, "boxtimes oracle");
  return exhaustive_expectation(d, budget.cap, budget.workers, [&](const SignedPermutation& q) {
    return characteristic_polynomial(a * conjugate(q, b));
  });
}

MultiPoly rect_boxplus(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("rect_boxplus: shape mismatch");
  if (a.cols() < a.rows()) throw InputError("rect_boxplus: matrices must be d x (n + d)");
  const std::size_t d = a.rows();
  const auto m = static_cast<unsigned>(a.cols());
  const RationalMatrix id = RationalMatrix::identity(d);
  const RationalMatrix gram_a = a * a.transpose();
  const RationalMatrix gram_b = b * b.transpose();
  // Variables (w, y, z): E_Q det(w I + y A A^T + z Q B B^T Q^T) by the global
  // theorem, then L_m^{y,z} for the average over R, then y = z = -1.
  const std::vector<RationalMatrix> left{id, gram_a, id};
  const std::vector<RationalMatrix> right{id, id, gram_b};
  const MultiPoly s = star_convolve(det_pencil(left), det_pencil(right), static_cast<unsigned>(d));
  const MultiPoly averaged = l_operator(s, m, 1, 2);
  return specialize_to_x(averaged, 0, {Rational(0), Rational(-1), Rational(-1)});
}

MultiPoly rect_boxplus_oracle(const RationalMatrix& a, const RationalMatrix& b, const OracleBudget& budget) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("rect_boxplus oracle: shape mismatch");
  const std::size_t d = a.rows();
  const std::size_t m = a.cols();
  const std::uint64_t nq = signed_permutation_count(d);
  const std::uint64_t nr = signed_permutation_count(m);
  const std::uint64_t total = saturating_mul(nq, nr);
  if (total > budget.cap) {
    throw CapExceeded("rectangular oracle needs " + std::to_string(total) + " (Q, R) pairs, above the cap of " +
                      std::to_string(budget.cap));
  }
  MultiPoly sum = parallel_sum(total, budget.workers, MultiPoly(1), [&](std::uint64_t i) {
    const SignedPermutation q = signed_permutation_at(d, i / nr);
    const SignedPermutation r = signed_permutation_at(m, i % nr);
    const RationalMatrix c = a + r.right_apply(q.left_apply(b));
    return characteristic_polynomial(c * c.transpose());
  });
  sum *= inverse_group_order(total);
  return sum;
}

// --- non-Hermitian multiplicative -------------------------------------------

MultiPoly nonhermitian_mult(const RationalMatrix& h1, const RationalMatrix& k1, const RationalMatrix& h2,
                            const RationalMatrix& k2) {
  const std::size_t d = h1.rows();
  for (const auto* m : {&h1, &k1, &h2, &k2}) require_square(*m, d, "nonhermitian_mult");
  const RationalMatrix id = RationalMatrix::identity(d);
  // Variables (x, a, b, c, e) pair H1.H2, H1.K2, K1.H2, K1.K2 after the star.
  const std::vector<RationalMatrix> left{id, h1, h1, k1, k1};
  const std::vector<RationalMatrix> right{id, h2, k2, h2, k2};
  const MultiPoly s = star_convolve(det_pencil(left), det_pencil(right), static_cast<unsigned>(d));
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  const MultiPoly z = MultiPoly::variable(3, 2);
  const std::vector<MultiPoly> values{x, y, z, z, -y};
  return s.substitute(values);
}

MultiPoly nonhermitian_oracle(const RationalMatrix& h1, const RationalMatrix& k1, const RationalMatrix& h2,
                              const RationalMatrix& k2, const OracleBudget& budget) {
  const std::size_t d = h1.rows();
  for (const auto* m : {&h1, &k1, &h2, &k2}) require_square(*m, d, "nonhermitian oracle");
  const RationalMatrix id = RationalMatrix::identity(d);
  return exhaustive_expectation(d, budget.cap, budget.workers, [&](const SignedPermutation& q) {
    const RationalMatrix qh2 = conjugate(q, h2);
    const RationalMatrix qk2 = conjugate(q, k2);
    const std::vector<RationalMatrix> pencil{id, h1 * qh2 - k1 * qk2, h1 * qk2 + k1 * qh2};
    return det_pencil(pencil);
  });
}

}  // namespace detconv
