#pragma once

#include "orbitstar/lie.hpp"
#include "orbitstar/linalg.hpp"
#include "orbitstar/poly.hpp"

#include <vector>

namespace orbitstar {

// Moyal product on polynomials in xi_1..xi_n with {xi_a, xi_b} = eta_ab:
// sum_r (h/2)^r / r! eta^{a1 b1}...eta^{ar br} d_a1..d_ar f d_b1..d_br g.
Poly moyal_star(const Poly& f, const Poly& g, const DenseMatrix& eta);

// sp: symmetric part of L_i * L_j minus L_i L_j under L_ab = xi_a xi_b.
Poly moyal_psi(const LieSpec& sp, int i, int j);
// L_i * L_j computed in the Weyl algebra and rewritten in the L coordinates.
Poly moyal_generator_product(const LieSpec& sp, int i, int j);

// f * g = f g with x_N^2 -> rho + h. Inputs are first reduced classically
// (x_N^2 -> rho). Throws when rho has degree >= 2 in x_N.
Poly cone_star(const Poly& f, const Poly& g, const Poly& rho, const Variable& xN);

// P_0 .. P_nmax in t, h and |a|, from
// (n+1) P_{n+1} = (2n+1) t P_n - n (q + (1 - n^2) h^2 / 4) |a|^2 P_{n-1}.
std::vector<Poly> legendre_star(const Poly& q, int nmax);

struct FiniteQuotientReport {
  Rational l;
  int order = 0;              // 2l + 1
  bool factorizes = false;    // P_{2l+1} = scalar * prod_m (t - m h |a|)
  Rational scalar;
  std::vector<int> checked;   // n with P_{2l+1} | P_n
  bool divides = false;
  bool pass() const { return factorizes && divides; }
};

// q = l(l+1) h^2; checks the factorization of P_{2l+1} and its divisibility
// into P_n for 2l+1 < n <= 2l+4.
FiniteQuotientReport finite_quotient_check(const Rational& l);

}  // namespace orbitstar
