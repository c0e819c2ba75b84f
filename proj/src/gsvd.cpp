#include "detconv/gsvd.hpp"

#include <string>

#include "detconv/error.hpp"
#include "detconv/parallel.hpp"
#include "detconv/poly_matrix.hpp"
#include "detconv/signed_permutation.hpp"
#include "detconv/univariate.hpp"

namespace detconv {

namespace {

unsigned u(std::size_t v) { return static_cast<unsigned>(v); }

Rational scale_of(std::size_t m, std::size_t s, std::size_t t) {
  return Rational(BigInt(factorial(u(m)) * factorial(u(s)) * factorial(u(t))));
}

// (m-j-k)! (s-j)! (t-k)!
Rational bookkeeping(std::size_t m, std::size_t s, std::size_t t, std::size_t j, std::size_t k) {
  return Rational(BigInt(factorial(u(m - j - k)) * factorial(u(s - j)) * factorial(u(t - k))));
}

void require_same_dims(const GsvcpCoeffs& p, const GsvcpCoeffs& q, const char* what) {
  if (p.m != q.m || p.s != q.s || p.t != q.t) throw InputError(std::string(what) + ": dimension mismatch");
}

void check_grid(const GsvcpCoeffs& c, const char* what) {
  if (c.grid.size() != c.s + 1) throw InputError(std::string(what) + ": grid must have s+1 rows");
  for (std::size_t j = 0; j <= c.s; ++j) {
    if (c.grid[j].size() != c.t + 1) throw InputError(std::string(what) + ": grid rows must have t+1 entries");
    for (std::size_t k = 0; k <= c.t; ++k) {
      if (!c.admissible(j, k) && !c.grid[j][k].is_zero()) {
        throw InputError(std::string(what) + ": nonzero grid entry outside j + k <= m");
      }
    }
  }
}

}  // namespace

GsvcpInstance make_gsvcp_instance(RationalMatrix a1, RationalMatrix a2) {
  GsvcpInstance inst;
  inst.m = a1.cols();
  inst.s = a1.rows();
  inst.t = a2.rows();
  inst.a1 = std::move(a1);
  inst.a2 = std::move(a2);
  validate(inst);
  return inst;
}

void validate(const GsvcpInstance& inst) {
  if (inst.m == 0) throw InputError("gsvcp instance: m must be positive");
  if (inst.a1.rows() != inst.s || inst.a1.cols() != inst.m) {
    throw InputError("gsvcp instance: A1 must be " + std::to_string(inst.s) + "x" + std::to_string(inst.m));
  }
  if (inst.a2.rows() != inst.t || inst.a2.cols() != inst.m) {
    throw InputError("gsvcp instance: A2 must be " + std::to_string(inst.t) + "x" + std::to_string(inst.m));
  }
}

GsvcpCoeffs GsvcpCoeffs::zeros(std::size_t m, std::size_t s, std::size_t t) {
  GsvcpCoeffs c;
  c.m = m;
  c.s = s;
  c.t = t;
  c.grid.assign(s + 1, std::vector<Rational>(t + 1, Rational(0)));
  return c;
}

MultiPoly gsvcp(const GsvcpInstance& inst) {
  validate(inst);
  const std::vector<RationalMatrix> pencil{RationalMatrix::identity(inst.m), inst.a1.transpose() * inst.a1,
                                           inst.a2.transpose() * inst.a2};
  return det_pencil(pencil);
}

GsvcpCoeffs extract_gsvcp_coeffs(const MultiPoly& p, std::size_t m, std::size_t s, std::size_t t) {
  if (p.arity() != 3) throw InputError("extract_gsvcp_coeffs: expected a polynomial in (x, y, z)");
  GsvcpCoeffs c = GsvcpCoeffs::zeros(m, s, t);
  for (const auto& [e, coeff] : p.terms()) {
    const std::size_t i = e[0], j = e[1], k = e[2];
    if (i + j + k != m || !c.admissible(j, k)) {
      throw InputError("extract_gsvcp_coeffs: term x^" + std::to_string(i) + " y^" + std::to_string(j) + " z^" +
                       std::to_string(k) + " is outside the admissible support");
    }
    c.grid[j][k] = coeff * bookkeeping(m, s, t, j, k);
  }
  return c;
}

MultiPoly reconstruct_gsvcp(const GsvcpCoeffs& c) {
  check_grid(c, "reconstruct_gsvcp");
  MultiPoly p(3);
  for (std::size_t j = 0; j <= c.s; ++j)
    for (std::size_t k = 0; k <= c.t; ++k) {
      if (!c.admissible(j, k) || c.grid[j][k].is_zero()) continue;
      p.add_term(ExponentVector{u(c.m - j - k), u(j), u(k)}, c.grid[j][k] / bookkeeping(c.m, c.s, c.t, j, k));
    }
  return p;
}

GsvcpCoeffs gsvd_convolve(const GsvcpCoeffs& p, const GsvcpCoeffs& q) {
  require_same_dims(p, q, "gsvd_convolve");
  check_grid(p, "gsvd_convolve");
  check_grid(q, "gsvd_convolve");
  GsvcpCoeffs r = GsvcpCoeffs::zeros(p.m, p.s, p.t);
  const Rational inv = Rational(1) / scale_of(p.m, p.s, p.t);
  for (std::size_t j = 0; j <= p.s; ++j)
    for (std::size_t k = 0; k <= p.t; ++k) {
      if (!r.admissible(j, k)) continue;
      Rational acc(0);
      for (std::size_t b = 0; b <= j; ++b)
        for (std::size_t d = 0; d <= k; ++d) acc += p.grid[b][d] * q.grid[j - b][k - d];
      r.grid[j][k] = acc * inv;
    }
  return r;
}

GsvcpCoeffs gsvd_expectation_oracle(const GsvcpInstance& mi, const GsvcpInstance& ni, const OracleBudget& budget) {
  validate(mi);
  validate(ni);
  if (mi.m != ni.m || mi.s != ni.s || mi.t != ni.t) throw InputError("gsvd oracle: M and N shapes differ");
  const std::uint64_t c1 = signed_permutation_count(mi.s);
  const std::uint64_t c2 = signed_permutation_count(mi.t);
  const std::uint64_t cq = signed_permutation_count(mi.m);
  const std::uint64_t total = saturating_mul(saturating_mul(c1, c2), cq);
  if (total > budget.cap) {
    throw CapExceeded("gsvd oracle needs " + std::to_string(total) + " (R1, R2, Q) triples, above the cap of " +
                      std::to_string(budget.cap));
  }
  const MultiPoly sum = parallel_sum(total, budget.workers, MultiPoly(3), [&](std::uint64_t i) {
    const SignedPermutation q = signed_permutation_at(mi.m, i % cq);
    const SignedPermutation r2 = signed_permutation_at(mi.t, (i / cq) % c2);
    const SignedPermutation r1 = signed_permutation_at(mi.s, i / (cq * c2));
    GsvcpInstance w;
    w.m = mi.m;
    w.s = mi.s;
    w.t = mi.t;
    w.a1 = mi.a1 + r1.left_apply(q.right_apply(ni.a1));
    w.a2 = mi.a2 + r2.left_apply(q.right_apply(ni.a2));
    return gsvcp(w);
  });
  return extract_gsvcp_coeffs(sum * Rational(BigInt(1), BigInt(std::to_string(total))), mi.m, mi.s, mi.t);
}

MultiPoly reciprocal_form(const GsvcpCoeffs& c) {
  check_grid(c, "reciprocal_form");
  MultiPoly p(3);
  for (std::size_t j = 0; j <= c.s; ++j)
    for (std::size_t k = 0; k <= c.t; ++k) {
      if (!c.admissible(j, k) || c.grid[j][k].is_zero()) continue;
      p.add_term(ExponentVector{u(c.m - j - k), u(c.s - j), u(c.t - k)},
                 c.grid[j][k] / bookkeeping(c.m, c.s, c.t, j, k));
    }
  return p;
}

MultiPoly gsvcp_operator_form(const GsvcpCoeffs& c) {
  check_grid(c, "gsvcp_operator_form");
  const Rational inv = Rational(1) / scale_of(c.m, c.s, c.t);
  MultiPoly op(2);
  for (std::size_t j = 0; j <= c.s; ++j)
    for (std::size_t k = 0; k <= c.t; ++k) {
      if (c.admissible(j, k) && !c.grid[j][k].is_zero()) op.add_term(ExponentVector{u(j), u(k)}, c.grid[j][k] * inv);
    }
  return op;
}

MultiPoly apply_gsvcp_operator(const MultiPoly& op, std::size_t m, std::size_t s, std::size_t t) {
  if (op.arity() != 2) throw InputError("apply_gsvcp_operator: operator must be bivariate");
  const MultiPoly base = MultiPoly::monomial(ExponentVector{u(m), u(s), u(t)}, Rational(1));
  MultiPoly out(3);
  for (const auto& [e, c] : op.terms()) {
    MultiPoly f = partial_derivative(base, 0, e[0] + e[1]);
    f = partial_derivative(f, 1, e[0]);
    f = partial_derivative(f, 2, e[1]);
    out += c * f;
  }
  return out;
}

PolyIdentityCheck gsvd_operator_check(const GsvcpCoeffs& p, const GsvcpCoeffs& q) {
  require_same_dims(p, q, "gsvd_operator_check");
  PolyIdentityCheck out;
  out.lhs = apply_gsvcp_operator(gsvcp_operator_form(p) * gsvcp_operator_form(q), p.m, p.s, p.t);
  out.rhs = reciprocal_form(gsvd_convolve(p, q));
  out.pass = out.lhs == out.rhs;
  return out;
}

PolyIdentityCheck gsvd_charpoly_identity_check(const RationalMatrix& w1, const RationalMatrix& w2) {
  const std::size_t m = w1.rows();
  if (!w1.is_square() || w2.rows() != m || w2.cols() != m) {
    throw InputError("gsvd charpoly check: W1 and W2 must be square of one size");
  }
  const RationalMatrix sum = w1 + w2;
  const RationalMatrix inv = inverse(sum);  // DegenerateInput when singular
  PolyIdentityCheck out;
  out.lhs = characteristic_polynomial(inv * w1);
  // det(x (W1 + W2) - W1) = det((x-1) W1 + x W2)
  const std::vector<RationalMatrix> pencil{sum, Rational(-1) * w1};
  const MultiPoly two = det_pencil(pencil);
  const std::vector<MultiPoly> at{MultiPoly::variable(1, 0), MultiPoly(1, Rational(1))};
  out.rhs = determinant(inv) * two.substitute(at);
  out.pass = out.lhs == out.rhs;
  return out;
}

PolyIdentityCheck block_determinant_identity_check(const GsvcpInstance& inst) {
  validate(inst);
  const std::size_t m = inst.m, s = inst.s, t = inst.t;
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  const MultiPoly z = MultiPoly::variable(3, 2);
  PolyMatrix block(m + s + t, m + s + t, 3);
  for (std::size_t i = 0; i < m; ++i) block.set(i, i, x);
  for (std::size_t i = 0; i < s; ++i) block.set(m + i, m + i, y);
  for (std::size_t i = 0; i < t; ++i) block.set(m + s + i, m + s + i, z);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      const MultiPoly v(3, inst.a1(r, c));
      block.set(m + r, c, v);
      block.set(c, m + r, v);
    }
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      const MultiPoly v(3, inst.a2(r, c));
      block.set(m + s + r, c, v);
      block.set(c, m + s + r, v);
    }
  const RationalMatrix g1 = inst.a1.transpose() * inst.a1;
  const RationalMatrix g2 = inst.a2.transpose() * inst.a2;
  const MultiPoly xyz = x * y * z;
  PolyMatrix inner(m, m, 3);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      MultiPoly e = Rational(-1) * (g1(r, c) * z + g2(r, c) * y);
      if (r == c) e += xyz;
      inner.set(r, c, std::move(e));
    }
  PolyIdentityCheck out;
  out.lhs = determinant(block) * pow(y, u(m)) * pow(z, u(m));
  out.rhs = pow(y, u(s)) * pow(z, u(t)) * determinant(inner);
  out.pass = out.lhs == out.rhs;
  return out;
}

}  // namespace detconv
