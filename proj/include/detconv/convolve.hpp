#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "detconv/multipoly.hpp"
#include "detconv/poly_matrix.hpp"
#include "detconv/rational_matrix.hpp"
#include "detconv/signed_permutation.hpp"

namespace detconv {

// Limits shared by every brute-force expectation.
struct OracleBudget {
  std::uint64_t cap = kDefaultExhaustiveCap;
  unsigned workers = 1;
};

// (1/n!) sum_alpha p_alpha q_alpha alpha! x^alpha for p, q homogeneous of
// degree n and equal arity.
MultiPoly star_convolve(const MultiPoly& p, const MultiPoly& q, unsigned degree);

// x^i y^j -> (m-i)!(m-j)! / (m!(m-i-j)!) x^i y^j when i + j <= m, else 0;
// other variables pass through.
MultiPoly l_operator(const MultiPoly& p, unsigned m, std::size_t x_index, std::size_t y_index);

// The scalar factor l_operator applies to x^i y^j.
Rational l_coefficient(unsigned m, unsigned i, unsigned j);

// det(sum_i v_i M_i) over variables v_0..v_{k-1}, one per matrix.
MultiPoly det_pencil(std::span<const RationalMatrix> ms);

// Averaging over a local dimension m.
struct LocalInstance {
  std::size_t d = 0;
  std::size_t m = 0;
  PolyMatrix u{0, 0, 1};   // d x d
  PolyMatrix a1{0, 0, 1};  // d x m
  PolyMatrix a2{0, 0, 1};  // d x m
  PolyMatrix b1{0, 0, 1};  // m x d
  PolyMatrix b2{0, 0, 1};  // m x d
  std::size_t x_index = 0;
  std::size_t y_index = 1;
};

// Shapes, shared arity, and that no entry mentions x or y.
void validate(const LocalInstance& inst);
// L_m^{x,y} det(U + x A1 B1 + y A2 B2)
MultiPoly local_convolution(const LocalInstance& inst);
// E_R det(U + (x A1 + y A2 R)(B1 + R^T B2)), R over all m x m signed
// permutations.
MultiPoly local_expectation_oracle(const LocalInstance& inst, const OracleBudget& budget = {});

// Averaging over a global dimension d.
struct GlobalInstance {
  std::vector<RationalMatrix> a;  // n matrices, d x d
  std::vector<RationalMatrix> b;
};

void validate(const GlobalInstance& inst);
// [det(sum x_i A_i) * det(sum x_i B_i)]
MultiPoly global_convolution(const GlobalInstance& inst);
// E_Q det(sum_i x_i A_i Q B_i Q^T)
MultiPoly global_expectation_oracle(const GlobalInstance& inst, const OracleBudget& budget = {});

struct MixedDiscriminantCheck {
  Rational lhs;  // E_Q D(A_1 Q B_1 Q^T, ..., A_n Q B_n Q^T)
  Rational rhs;  // D(A) D(B) / n!
  // lhs / rhs when rhs != 0, so a convention mismatch shows up as a factor.
  std::optional<Rational> ratio;
  bool pass = false;
};

MixedDiscriminantCheck mixed_discriminant_identity_check(std::span<const RationalMatrix> a,
                                                         std::span<const RationalMatrix> b,
                                                         const OracleBudget& budget = {});

// Both sides of the generalized binomial identity behind the local theorem:
//   sum_j (-1)^j (m-j)!/(m! j!) a!/(a-j)! b!/(b-j)!  and  (m-a)!(m-b)!/(m!(m-a-b)!)
std::pair<Rational, Rational> local_binomial_identity(unsigned m, unsigned a, unsigned b);

// E_Q det(xI - A - Q B Q^T). Without realizations the companion matrices of p
// and q are used; supplied realizations must have characteristic polynomials
// p and q.
MultiPoly boxplus(const MultiPoly& p, const MultiPoly& q, const std::optional<RationalMatrix>& a = std::nullopt,
                  const std::optional<RationalMatrix>& b = std::nullopt);
MultiPoly boxplus_oracle(const RationalMatrix& a, const RationalMatrix& b, const OracleBudget& budget = {});

// E_Q det(xI - A Q B Q^T)
MultiPoly boxtimes(const MultiPoly& p, const MultiPoly& q, const std::optional<RationalMatrix>& a = std::nullopt,
                   const std::optional<RationalMatrix>& b = std::nullopt);
MultiPoly boxtimes_oracle(const RationalMatrix& a, const RationalMatrix& b, const OracleBudget& budget = {});

// E_{Q,R} det(xI - (A + Q B R)(A + Q B R)^T) for A, B of shape d x (n+d):
// local theorem in R, then the additive reduction in Q.
MultiPoly rect_boxplus(const RationalMatrix& a, const RationalMatrix& b);
MultiPoly rect_boxplus_oracle(const RationalMatrix& a, const RationalMatrix& b, const OracleBudget& budget = {});

// r(x, y, z) = E_Q det(xI + y(H1 Q H2 Q^T - K1 Q K2 Q^T) + z(H1 Q K2 Q^T + K1 Q H2 Q^T))
// via the five-variable star product.
MultiPoly nonhermitian_mult(const RationalMatrix& h1, const RationalMatrix& k1, const RationalMatrix& h2,
                            const RationalMatrix& k2);
MultiPoly nonhermitian_oracle(const RationalMatrix& h1, const RationalMatrix& k1, const RationalMatrix& h2,
                              const RationalMatrix& k2, const OracleBudget& budget = {});

// Q M Q^T
RationalMatrix conjugate(const SignedPermutation& q, const RationalMatrix& m);

}  // namespace detconv
