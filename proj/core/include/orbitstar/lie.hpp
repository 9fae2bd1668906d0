#pragma once

#include "orbitstar/linalg.hpp"
#include "orbitstar/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

enum class AlgebraFamily { SL, SO, SP, SO3, SO21 };

AlgebraFamily parse_family(const std::string& tag);
std::string family_tag(AlgebraFamily f);

// Concrete Lie algebra given by structure constants on coordinate variables:
// {x_i, x_j} = eps_ij^m x_m.
struct LieSpec {
  AlgebraFamily family = AlgebraFamily::SO3;
  int n = 3;  // matrix size; for sp this is the even size 2m
  std::string name;
  std::vector<Variable> basis;
  std::map<Variable, int> index;
  std::vector<std::vector<SparseRow>> eps;  // eps[i][j] : m -> eps_ij^m
  std::optional<DenseMatrix> eta;           // bilinear form (so, sp), 0-based
  // Coordinates that are not independent, expressed in the basis. Used by
  // sl(n) for U_n^n = -(U_1^1 + ... + U_{n-1}^{n-1}).
  std::map<Variable, Poly> eliminations;

  int dim() const { return static_cast<int>(basis.size()); }
  Poly gen(int i) const { return Poly(basis[i]); }
  Poly bracket(int i, int j) const;
  // Substitutes eliminated coordinates; the result uses basis variables only.
  Poly normalize(const Poly& f) const;
  // Coordinate symbol for any index pair, with the family's symmetry
  // (L_ba = -L_ab for so, L_ba = L_ab for sp, U_n^n eliminated for sl).
  Poly coord(int a, int b) const;
  Rational eta_at(int a, int b) const { return (*eta)[a - 1][b - 1]; }
};

LieSpec make_algebra(const std::string& family, int n);
LieSpec make_algebra(AlgebraFamily family, int n);

struct KillingForm {
  DenseMatrix K;
  std::optional<DenseMatrix> inverse;
};

// K_ij = -tr(ad x_i ad x_j).
KillingForm killing(const LieSpec& spec);

// Poisson bracket extended from the coordinates by the Leibniz rule.
// Throws std::invalid_argument for coordinate variables outside the spec.
Poly poisson(const LieSpec& spec, const Poly& f, const Poly& g);
// ad action of basis element i: {x_i, f}.
Poly ad(const LieSpec& spec, int i, const Poly& f);

struct ExceptionalSpec {
  std::string name;
  Rational l3;
  Rational D;
  // l2 + l3 = -1/6 unless overridden (used to probe inconsistent input)
  std::optional<Rational> l2_override;
  Rational l2() const { return l2_override ? *l2_override : Rational(-1, 6) - l3; }
};

// Rows of the eigenvalue table. G2 is returned once with D = 27 as listed;
// callers wanting the adjoint dimension override D.
ExceptionalSpec exceptional_spec(const std::string& name);
std::vector<ExceptionalSpec> exceptional_table();
bool is_exceptional(const std::string& tag);

}  // namespace orbitstar
