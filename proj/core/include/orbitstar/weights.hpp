#pragma once

#include "orbitstar/star.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace orbitstar {

// Formal highest weight vector v: raising letters kill v, Cartan letters act
// by given values, lowering letters span a PBW basis. States are maps from
// non-decreasing lists of lowering letters to coefficients.
class HighestWeightModel {
 public:
  enum class Kind { Lowering, Cartan, Raising };
  using State = std::map<std::vector<int>, Poly>;

  HighestWeightModel(const LieSpec& spec, std::vector<Kind> kinds, std::map<int, Poly> cartan);
  // x_{w[0]} x_{w[1]} ... v
  State apply(const std::vector<int>& word) const;
  State apply_letter(int x, const State& s) const;
  Kind kind(int i) const { return kinds_[i]; }

 private:
  State apply_to_basis(int x, const std::vector<int>& ells) const;
  const LieSpec* spec_;
  std::vector<Kind> kinds_;
  std::map<int, Poly> cartan_;
};

struct WeightVector {
  std::string family;
  int n = 0;
  std::string label;           // which branch of the solution
  std::vector<Poly> lambda;    // sl: eigenvalues of U_a^a; so: in units of h
  std::vector<Rational> rho;
  bool verified = false;       // satisfies every weight equation
  bool solved = false;         // among the exact solutions at the sample point
};

// Scalar equations on the weight obtained by applying the generators of the
// deformed ideal (and raising words of length <= 2 after them) to v. The
// weight enters through the variables lambda_1, lambda_2, ...
std::vector<Poly> weight_equations(const StarProduct& product);
// Same with an arbitrary (possibly unsolved) ansatz.
std::vector<Poly> weight_equations(const OrbitSpec& spec, const Ansatz& ansatz);

// All rational roots of a univariate polynomial in v.
std::vector<Rational> rational_roots(const Poly& p, const Variable& v);
// All rational points of a zero-dimensional system in vars, found by
// branching on univariate equations and eliminating linear variables.
// Throws std::runtime_error when the system leaves a free direction.
std::vector<std::map<Variable, Rational>> rational_solutions(const std::vector<Poly>& eqs,
                                                             const std::vector<Variable>& vars);

// The closed-form families, each checked against the weight equations, plus
// the exact rational solutions of those equations at h = 1 (k = 1 for sl).
// A solution outside the families is appended with label "unlisted".
std::vector<WeightVector> highest_weights(const StarProduct& product);

// Conditions on the parameters (k, kp, h) of an unsolved ansatz for the
// weight w to satisfy every weight equation; empty when none remain.
std::vector<Poly> existence_conditions(const OrbitSpec& spec, const Ansatz& ansatz,
                                       const WeightVector& w);

std::vector<Rational> weyl_vector(AlgebraFamily family, int n);

}  // namespace orbitstar
