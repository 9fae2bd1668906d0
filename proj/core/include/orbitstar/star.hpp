#pragma once

#include "orbitstar/ansatz.hpp"
#include "orbitstar/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orbitstar {

// Symmetric-ordering symbols for the enveloping algebra with
// x_i x_j - x_j x_i = h {x_i, x_j}. The symbol of an element is the
// commutative polynomial whose monomials stand for symmetrized words.
class WeylSymbol {
 public:
  explicit WeylSymbol(const LieSpec& spec) : spec_(&spec) {}
  // Symbol of the word x_{w[0]} x_{w[1]} ... (basis indices).
  const Poly& of_word(const std::vector<int>& w);
  // Symbol of the product of the elements with symbols f and g.
  Poly product(const Poly& f, const Poly& g);
  // Words (with weights) whose sum is the symmetrized element of symbol f.
  std::vector<std::pair<std::vector<int>, Poly>> words(const Poly& f) const;

 private:
  const LieSpec* spec_;
  std::map<std::vector<int>, Poly> memo_;
};

// Linear equations in the unknowns with coefficients polynomial in the
// remaining parameters (k, kp, h).
struct ConstraintSystem {
  std::string name;
  std::vector<Variable> unknowns;
  std::vector<Poly> equations;  // each = 0, distinct and nonzero
  std::size_t relations = 0;    // number of contracted relation tensors

  // Columns: unknowns first, then parameter monomials.
  SparseRow row(const Poly& eq) const;
  const RowEchelon& echelon() const;
  // True when eq = 0 is a linear consequence of the system.
  bool implies(const Poly& eq) const;

  std::map<Monomial, int> columns;  // parameter monomial -> column
  std::vector<Monomial> column_monomials;
  mutable std::shared_ptr<RowEchelon> echelon_cache;
};

// Contracts the third-order correspondence identity with every relation
// tensor and every coordinate, reduces modulo the orbit ideal and collects
// one equation per normal-form coefficient. The unknowns are the phi
// parameters plus those listed in extra_unknowns (e.g. k for so and sp).
ConstraintSystem build_constraint_system(const OrbitSpec& spec, const Ansatz& ansatz,
                                         const std::vector<Variable>& extra_unknowns = {});

// [x_k, S(g) - psi(g)] lies in the span of the S(g') - psi(g'), i.e. the two
// contractions (left and right) of the identity agree.
bool symmetric_consistency_holds(const OrbitSpec& spec, const Ansatz& ansatz);

struct StarSolution {
  std::string name;  // e.g. "sl(3)", "E8"
  std::string family;
  int n = 0;
  std::map<Variable, Poly> values;
  std::vector<Poly> residual;  // relations among the free parameters, each = 0
  bool consistent = false;
  std::vector<Variable> free_parameters;
  // Unknowns left free by the system and set to zero (they drop out of
  // every constraint).
  std::vector<Variable> gauge_fixed;
};

// Solves the system for its unknowns. Residual rows that are linear in one
// of the variables in `secondary` (with rational coefficient) are used to
// eliminate that variable; what remains is reported as residual.
StarSolution solve_system(const ConstraintSystem& sys, const std::vector<Variable>& secondary);

// Substitutes the solved values into every equation of the system.
bool verify_solution(const ConstraintSystem& sys, const StarSolution& sol);

struct SolvedFamily {
  OrbitSpec spec;
  Ansatz ansatz;
  ConstraintSystem system;
  StarSolution solution;
};

// Families sl, so, sp. For sp the solution is cross-checked against the
// Moyal product of the quadratic embedding.
SolvedFamily solve_family(const std::string& family, int n);
StarSolution solve_star(const std::string& family, int n);

// Sets h = 0 in the system and solves again with the psi parameters as
// unknowns where they enter linearly.
StarSolution abelian_limit(const ConstraintSystem& sys, const std::vector<Variable>& secondary);

// The star product of the orbit defined by a solved ansatz, through total
// coordinate degree 3.
class StarProduct {
 public:
  StarProduct(const OrbitSpec& spec, const Ansatz& ansatz, const StarSolution& solution);
  explicit StarProduct(const SolvedFamily& f) : StarProduct(f.spec, f.ansatz, f.solution) {}

  // Requires deg f + deg g <= 3 in the coordinates.
  Poly star(const Poly& f, const Poly& g) const;
  Poly normal_form(const Poly& f) const;
  const OrbitSpec& spec() const { return *spec_; }
  const Ansatz& ansatz() const { return ansatz_; }
  const StarSolution& solution() const { return solution_; }
  Poly gen(int i) const { return spec_->algebra->gen(i); }
  // Symmetric part of x_i * x_j minus x_i x_j.
  const Poly& psi(int i, int j) const { return ansatz_.psi[i][j]; }

 private:
  Poly symbol_of(const Poly& f) const;
  Poly from_symbol(const Poly& s) const;
  std::shared_ptr<OrbitSpec> spec_;
  Ansatz ansatz_;
  StarSolution solution_;
  std::shared_ptr<IdealReducer> reducer_;
  std::shared_ptr<WeylSymbol> weyl_;
};

}  // namespace orbitstar
