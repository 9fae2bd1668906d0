#pragma once

#include "orbitstar/orbit.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace orbitstar {

// Equivariant tensors psi_ij (symmetric part of x_i * x_j) and phi_ijk
// (symmetric part of x_i * x_j * x_k) for a classical family, written with
// the free parameters as symbols: k, kp in psi and phi_1.. in phi.
//
// The tensors are polarizations of trace invariants of a matrix A in the
// algebra, u = (AU) being the generic linear coordinate:
//   sl:     psi = k (AAU) + kp (AA)
//           phi = phi_1 (AAU)u + phi_2 (AAAU) + phi_3 (AA)u + phi_4 (AAA)
//   so, sp: psi = -k tr(A eta A eta)
//           phi = phi_1 tr(A eta A eta A L) + phi_2 tr(A eta A eta) u
// The sign of psi makes S(L_ab * L_cd) - L_ab L_cd = (k/2)(eta_ac eta_bd -+ eta_ad eta_bc).
struct Ansatz {
  AlgebraFamily family = AlgebraFamily::SL;
  int n = 0;
  std::vector<Variable> psi_params;
  std::vector<Variable> phi_params;
  std::vector<std::vector<Poly>> psi;  // psi[i][j], basis indices

  const Poly& phi(int i, int j, int k) const;

  // psi(f, x_j) for f linear (plus constant, which is ignored) in the basis.
  Poly psi_linear(const Poly& f, int j) const;
  // Replaces each quadratic monomial x_i x_j of f by psi_ij and each cubic
  // monomial by phi_ijk; other terms are dropped.
  Poly apply_psi(const Poly& f) const;
  Poly apply_phi(const Poly& f) const;

  // Returns a copy with the given parameter values substituted.
  Ansatz substituted(const std::map<Variable, Poly>& values) const;

  std::map<std::array<int, 3>, Poly> phi_table;  // sorted index triples
  std::map<Variable, int> index;                 // coordinate -> basis index
};

// Sign in front of the (AAAL) trace for so and sp.
inline constexpr int kAAALSign = 1;

Ansatz make_ansatz(const OrbitSpec& spec);

// {x_m, T(x_i, ...)} = sum_slots T(..., {x_m, x_s}, ...) for psi, and for phi
// when check_phi is set.
bool ansatz_is_equivariant(const OrbitSpec& spec, const Ansatz& ansatz, bool check_phi);

}  // namespace orbitstar
