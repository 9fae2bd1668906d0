#pragma once

#include "orbitstar/lie.hpp"
#include "orbitstar/star.hpp"

#include <string>
#include <vector>

namespace orbitstar {

// Abstract model of the exceptional constraint problem: vectors in the
// cyclic space spanned by X, L X, L^2 X, with (L-1)(L-l2)(L-l3) = 0,
// kappa(L^j X) = 2 and Y = c^{-1} (L-l2)(L-l3) X, kappa(Y) = D.
struct ExceptionalModel {
  ExceptionalSpec spec;
  Rational c;  // (2/D)(1-l2)(1-l3)

  explicit ExceptionalModel(const ExceptionalSpec& s);
  using Vec = std::array<Poly, 3>;  // coefficients of X, LX, L^2 X
  Vec apply_L(const Vec& v) const;
  Poly kappa(const Vec& v) const;
  Vec X() const;
  Vec Y() const;
  // (k'/3)(X + Y) - k Y - (h^2/12) L X
  Vec rhs() const;
  // kappa(rhs) and the three coefficients of (L - l3) rhs, in k, kp, h.
  std::vector<Poly> equations() const;
};

struct ExceptionalResult {
  StarSolution solution;
  std::vector<Poly> equations;
  std::string offending;  // first equation contradicting the others, if any
  bool unique = false;
};

// Solves the four equations by elimination over the columns (k, kp, h^2).
// With h_zero the equations are taken at h = 0.
ExceptionalResult solve_exceptional(const ExceptionalSpec& spec, bool h_zero = false);

}  // namespace orbitstar
