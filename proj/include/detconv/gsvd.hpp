#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detconv/convolve.hpp"
#include "detconv/multipoly.hpp"
#include "detconv/rational_matrix.hpp"

namespace detconv {

// A stacked over B = [A1; A2] with A1 of shape s x m and A2 of shape t x m.
struct GsvcpInstance {
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  RationalMatrix a1;
  RationalMatrix a2;
};

GsvcpInstance make_gsvcp_instance(RationalMatrix a1, RationalMatrix a2);
void validate(const GsvcpInstance& inst);

// grid[j][k] for 0 <= j <= s, 0 <= k <= t; entries with j + k > m are zero.
struct GsvcpCoeffs {
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<std::vector<Rational>> grid;

  static GsvcpCoeffs zeros(std::size_t m, std::size_t s, std::size_t t);
  bool admissible(std::size_t j, std::size_t k) const { return j <= s && k <= t && j + k <= m; }
  friend bool operator==(const GsvcpCoeffs&, const GsvcpCoeffs&) = default;
};

// det(x I + y A1^T A1 + z A2^T A2)
MultiPoly gsvcp(const GsvcpInstance& inst);

// grid[j,k] = coeff(x^{m-j-k} y^j z^k) (m-j-k)! (s-j)! (t-k)!
GsvcpCoeffs extract_gsvcp_coeffs(const MultiPoly& p, std::size_t m, std::size_t s, std::size_t t);
MultiPoly reconstruct_gsvcp(const GsvcpCoeffs& c);

// r_jk = (1/(m! s! t!)) sum_{beta <= j, delta <= k} p_{beta,delta} q_{j-beta,k-delta}
GsvcpCoeffs gsvd_convolve(const GsvcpCoeffs& p, const GsvcpCoeffs& q);

// Exact E over all (R1, R2, Q) of the coefficients of W = [M1 + R1 N1 Q; M2 + R2 N2 Q].
GsvcpCoeffs gsvd_expectation_oracle(const GsvcpInstance& m, const GsvcpInstance& n, const OracleBudget& budget = {});

// q(x, y, z) = y^s z^t p(x, 1/y, 1/z), built from the grid.
MultiPoly reciprocal_form(const GsvcpCoeffs& c);

// P(u, v) with P(d_x d_y, d_x d_z){x^m y^s z^t} = reciprocal_form(c).
MultiPoly gsvcp_operator_form(const GsvcpCoeffs& c);
// op(d_x d_y, d_x d_z) applied to x^m y^s z^t.
MultiPoly apply_gsvcp_operator(const MultiPoly& op, std::size_t m, std::size_t s, std::size_t t);

struct PolyIdentityCheck {
  MultiPoly lhs;
  MultiPoly rhs;
  bool pass = false;
};

// P(u,v) Q(u,v) applied to x^m y^s z^t against reciprocal_form(gsvd_convolve(p, q)).
PolyIdentityCheck gsvd_operator_check(const GsvcpCoeffs& p, const GsvcpCoeffs& q);

// det(xI - (W1+W2)^{-1} W1) against det((W1+W2)^{-1}) det((x-1) W1 + x W2).
// Throws DegenerateInput when W1 + W2 is singular.
PolyIdentityCheck gsvd_charpoly_identity_check(const RationalMatrix& w1, const RationalMatrix& w2);

// det [[xI, A1^T, A2^T], [A1, yI, 0], [A2, 0, zI]] * y^m z^m against
// y^s z^t det(xyz I - z A1^T A1 - y A2^T A2).
PolyIdentityCheck block_determinant_identity_check(const GsvcpInstance& inst);

}  // namespace detconv
