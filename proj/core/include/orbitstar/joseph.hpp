#pragma once

#include "orbitstar/exceptional.hpp"
#include "orbitstar/star.hpp"

#include <string>
#include <vector>

namespace orbitstar {

struct IdealGenerator {
  std::string name;
  Poly lhs;  // star-expanded, in normal form
  Poly rhs;
  bool verified = false;
};

// sl: U_a^b*U_c^d - U_a^d*U_c^b against the closed form, all index tuples.
// so: the contracted trace relation and the cyclic relation.
std::vector<IdealGenerator> ideal_generators(const StarProduct& product);
// Casimir value K^{ij} x_i * x_j = k D in the abstract model.
std::vector<IdealGenerator> ideal_generators(const ExceptionalSpec& spec, const StarSolution& sol);

struct AbelianSpectrum {
  int n = 0;
  Rational k, kp;
  Rational repeated;  // multiplicity n - 1
  Rational singleton;
  bool satisfies_relations = false;  // diag(spectrum) solves the h = 0 relations
};

AbelianSpectrum abelian_spectrum(int n, const Rational& k);

struct RepCheckReport {
  int n = 0, N = 0, dim = 0;
  bool commutation = false;       // [U~, U~] = h U~
  bool identity = false;          // quadratic identity on all index tuples
  bool parameters = false;        // k, kp of the representation satisfy the residual
  bool ideal_degree2 = false;     // S(g) - psi(g) acts as zero
  bool ideal_degree3 = false;     // S(g x_k) - omega(g phi_k) acts as zero
  Rational k_over_h, kp_over_h2;  // parameters used
  bool pass() const { return commutation && identity && parameters && ideal_degree2 && ideal_degree3; }
};

inline constexpr int kRepCheckMaxDim = 500;

// U~_a^b = h (x_a d/dx_b - (N/n) delta_ab) on homogeneous polynomials of
// degree N in n variables; h is set to 1 since every identity checked is
// homogeneous in h. The ideal is built with k(1+2/n) = k_sign h (1+2N/n).
RepCheckReport rep_check_sl(int n, int N, int k_sign = 1);
// k(1+2/n) = s h (1+2N/n), k'(1+1/n) = h^2 (N/n)(N/n+1) with N symbolic,
// substituted into the sl residual; true when it vanishes for sign s.
bool rep_parameters_satisfy_residual(int n, int sign);

}  // namespace orbitstar
