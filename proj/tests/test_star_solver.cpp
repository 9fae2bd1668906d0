#include "orbitstar/exceptional.hpp"
#include "orbitstar/special.hpp"
#include "orbitstar/star.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitstar;

namespace {

Poly k() { return Poly(Variable::k()); }
Poly kp() { return Poly(Variable::kp()); }
Poly phi(int i) { return Poly(Variable::phi(i)); }
Poly h() { return Poly::h(); }
Poly h2() { return Poly::h().pow(2); }
Rational q(long a, long b = 1) { return Rational(a, b); }

const SolvedFamily& solved(const std::string& fam, int n) {
  static std::map<std::pair<std::string, int>, SolvedFamily> cache;
  auto key = std::make_pair(fam, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, solve_family(fam, n)).first;
  return it->second;
}

// The five eliminated sl(n) equations, the first in the form its own
// index-swap table produces (coefficient 1 + 4/n on phi_1).
std::vector<Poly> sl_eliminated(int n) {
  Rational a(n + 2, n), b(n + 3, n), c(n + 1, n), d(n + 4, n);
  return {phi(1) * d / q(3) - k() * a,
          phi(2) * b * q(2) - k() * k() * a * q(3) + h2(),
          phi(2) - phi(3) * q(2) - h2(),
          phi(3) * c - kp() * c * q(3) - phi(2) * q(3, n * n) + k() * k() * a * q(3, n),
          phi(4) * a - k() * kp() * a};
}

// Substitutes the generic solution (free unknowns kept symbolic); leftover
// conditions must only fix the free unknowns, consistently.
bool holds_up_to_gauge(const ConstraintSystem& sys, const std::vector<Poly>& eqs) {
  StarSolution gen = solve_system(sys, {Variable::kp()});
  std::map<Variable, Poly> gauge;
  for (auto& e : eqs) {
    Poly r = e.substitute(gen.values).substitute(gauge);
    if (r.is_zero()) continue;
    bool fixed = false;
    for (auto& v : gen.free_parameters) {
      if (v.family != Family::Phi || r.degree_in(v) != 1) continue;
      Poly lead = r.derivative(v);
      if (!lead.is_constant()) continue;
      gauge[v] = -(r - lead * Poly(v)) / lead.constant_term();
      fixed = true;
      break;
    }
    if (!fixed) return false;
  }
  for (auto& e : eqs)
    if (!e.substitute(gen.values).substitute(gauge).is_zero()) return false;
  return true;
}

int associativity_failures(const StarProduct& P, int limit_i) {
  int N = P.spec().algebra->dim(), bad = 0;
  for (int i = 0; i < N && i < limit_i; ++i)
    for (int j = 0; j < N; ++j) {
      Poly ij = P.star(P.gen(i), P.gen(j));
      for (int l = 0; l < N; ++l)
        if (P.star(ij, P.gen(l)) != P.star(P.gen(i), P.star(P.gen(j), P.gen(l)))) ++bad;
    }
  return bad;
}

Poly random_poly(const std::vector<Variable>& vars, std::mt19937_64& rng, int maxdeg, int terms) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1), deg(0, maxdeg),
      c(-5, 5);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int e = deg(rng); e > 0; --e) m = m * Monomial(vars[pick(rng)]);
    p.add_term(m, Rational(c(rng)));
  }
  return p;
}

}  // namespace

TEST(Ansatz, EquivariantShapes) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{{"sl", 3}, {"sl", 4}, {"so", 5}, {"sp", 4}}) {
    OrbitSpec s = minimal_orbit(fam, n);
    Ansatz a = make_ansatz(s);
    EXPECT_TRUE(ansatz_is_equivariant(s, a, true)) << s.name;
  }
}

TEST(Ansatz, ParameterShapes) {
  Ansatz sl = make_ansatz(minimal_orbit("sl", 3));
  EXPECT_EQ(sl.psi_params, (std::vector<Variable>{Variable::k(), Variable::kp()}));
  EXPECT_EQ(sl.phi_params.size(), 4u);
  // U_1^2 U_2^1 picks up both the linear and the constant invariant
  int i = sl.index.at(Variable::U(1, 2)), j = sl.index.at(Variable::U(2, 1));
  EXPECT_NE(sl.psi[i][j].degree_in(Variable::k()), 0u);
  EXPECT_NE(sl.psi[i][j].degree_in(Variable::kp()), 0u);
  Ansatz so = make_ansatz(minimal_orbit("so", 5));
  EXPECT_EQ(so.psi_params, std::vector<Variable>{Variable::k()});
  EXPECT_EQ(so.phi_params.size(), 2u);
}

TEST(Ansatz, SoPsiMatchesScalarShape) {
  OrbitSpec s = minimal_orbit("so", 6);
  Ansatz a = make_ansatz(s);
  const LieSpec& L = *s.algebra;
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) {
      int A = L.basis[i].idx[0], B = L.basis[i].idx[1], C = L.basis[j].idx[0], D = L.basis[j].idx[1];
      Poly expect = k() / q(2) * (L.eta_at(A, C) * L.eta_at(B, D) - L.eta_at(A, D) * L.eta_at(B, C));
      EXPECT_EQ(a.psi[i][j], expect);
    }
}

TEST(ConstraintSystem, MismatchedAnsatzThrows) {
  OrbitSpec s = minimal_orbit("sl", 3);
  Ansatz a = make_ansatz(minimal_orbit("sl", 4));
  EXPECT_THROW(build_constraint_system(s, a), std::invalid_argument);
}

TEST(ConstraintSystem, SymmetricConsistency) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{{"sl", 3}, {"so", 5}, {"sp", 4}}) {
    OrbitSpec s = minimal_orbit(fam, n);
    EXPECT_TRUE(symmetric_consistency_holds(s, make_ansatz(s))) << s.name;
  }
}

TEST(SlSolver, ResidualRelation) {
  for (int n : {3, 4, 5}) {
    const SolvedFamily& f = solved("sl", n);
    ASSERT_TRUE(f.solution.consistent);
    Rational a(n + 1, n), b(n + 2, n);
    // 4 k'(1 + 1/n) = k^2 (1 + 2/n)^2 - h^2
    Poly rel = kp() * a * q(4) - k() * k() * b * b + h2();
    EXPECT_TRUE(rel.substitute(f.solution.values).is_zero()) << n;
    EXPECT_TRUE(f.system.implies(rel)) << n;
    EXPECT_TRUE(verify_solution(f.system, f.solution)) << n;
  }
  EXPECT_EQ(solved("sl", 3).solution.values.at(Variable::kp()),
            k() * k() * q(25, 48) - h2() * q(3, 16));
}

TEST(SlSolver, EliminatedEquations) {
  for (int n : {4, 5})
    for (auto& e : sl_eliminated(n)) EXPECT_TRUE(solved("sl", n).system.implies(e)) << n << ": " << e;
  // n = 3: tr(A^3 U) = tr(A^2) tr(A U) / 2 merges two shapes, so phi_3 is a gauge
  EXPECT_TRUE(holds_up_to_gauge(solved("sl", 3).system, sl_eliminated(3)));
  EXPECT_EQ(solved("sl", 3).solution.gauge_fixed, std::vector<Variable>{Variable::phi(3)});
}

TEST(SlSolver, FirstEquationCoefficient) {
  for (int n : {3, 4, 5}) {
    Rational a(n + 2, n);
    Poly two_over_n = phi(1) * a / q(3) - k() * a;
    EXPECT_FALSE(solved("sl", n).system.implies(two_over_n)) << n;
    EXPECT_EQ(solved("sl", n).solution.values.at(Variable::phi(1)), k() * Rational(3 * (n + 2), n + 4));
  }
}

TEST(SlSolver, ClosedFormValues) {
  for (int n : {4, 5}) {
    auto& v = solved("sl", n).solution.values;
    Rational a(n + 2, n), b(n + 3, n);
    EXPECT_EQ(v.at(Variable::phi(2)), (k() * k() * a * q(3) - h2()) / (b * q(2)));
    EXPECT_EQ(v.at(Variable::phi(4)), k() * v.at(Variable::kp()));
  }
}

TEST(SoSolver, Values) {
  for (int n : {4, 5, 6, 7, 8}) {
    const SolvedFamily& f = solved("so", n);
    ASSERT_TRUE(f.solution.consistent) << n;
    auto& v = f.solution.values;
    EXPECT_EQ(v.at(Variable::k()), h2() * q(n - 4, n - 1)) << n;
    EXPECT_EQ(v.at(Variable::phi(1)), h2() * q(2 * (n - 8), n + 1)) << n;
    EXPECT_EQ(v.at(Variable::phi(2)), h2() * q(-3 * (n - 2), n + 1)) << n;
    EXPECT_TRUE(f.solution.residual.empty());
    EXPECT_TRUE(verify_solution(f.system, f.solution));
  }
  EXPECT_EQ(solved("so", 6).solution.values.at(Variable::phi(1)), h2() * q(-4, 7));
  EXPECT_TRUE(solved("so", 4).solution.values.at(Variable::k()).is_zero());
}

TEST(SoSolver, EliminatedEquations) {
  for (int n : {5, 6, 7, 8}) {
    const ConstraintSystem& s = solved("so", n).system;
    Poly first = phi(1) * q(n - 1, 24) - phi(2) / q(6) - h2() * q(n - 4, 12);
    Poly second = -phi(1) / q(6) + phi(2) * q(n - 1, 6) + k() * q(n - 1, 2) + h2() / q(3);
    Poly third = phi(1) / q(12) + phi(2) / q(6) + h2() / q(3);
    EXPECT_TRUE(s.implies(first)) << n;
    EXPECT_TRUE(s.implies(second)) << n;
    EXPECT_TRUE(s.implies(third)) << n;
    // the k term only fits with a plus sign
    Poly flipped = second - k() * q(n - 1);
    EXPECT_FALSE(s.implies(flipped)) << n;
  }
}

TEST(SpSolver, MatchesMoyal) {
  const SolvedFamily& f = solved("sp", 4);
  const LieSpec& L = *f.spec.algebra;
  Ansatz a = f.ansatz.substituted(f.solution.values);
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) EXPECT_EQ(moyal_psi(L, i, j), a.psi[i][j]);
  EXPECT_EQ(f.solution.values.at(Variable::k()), h2() / q(2));
}

TEST(SolveStar, RejectsOtherFamilies) {
  EXPECT_THROW(solve_star("so3", 3), std::invalid_argument);
  EXPECT_THROW(solve_star("E8", 0), std::invalid_argument);
}

TEST(Exceptional, TableSolutions) {
  auto table = exceptional_table();
  ExceptionalSpec g2 = exceptional_spec("G2");
  g2.D = Rational(14);
  table.push_back(g2);
  for (auto& s : table) {
    ExceptionalResult r = solve_exceptional(s);
    ASSERT_TRUE(r.unique) << s.name;
    EXPECT_TRUE(r.offending.empty());
    Poly kk = r.solution.values.at(Variable::k()), kkp = r.solution.values.at(Variable::kp());
    EXPECT_EQ(kkp, h2() * s.l2() / q(4)) << s.name;
    EXPECT_EQ(kk - kkp / q(3), h2() * (s.l2() - Rational(1)) / (Rational(6) * s.D)) << s.name;
    // trivial projection
    Poly trivial = kkp / q(3) * (s.D + Rational(2)) - kk * s.D - h2() / q(6);
    EXPECT_TRUE(trivial.is_zero()) << s.name;
    for (auto& e : r.equations) EXPECT_TRUE(e.substitute(r.solution.values).is_zero());
  }
}

TEST(Exceptional, E8SpotValues) {
  ExceptionalResult r = solve_exceptional(exceptional_spec("E8"));
  EXPECT_EQ(r.solution.values.at(Variable::k()), h2() * q(-13, 744));
  EXPECT_EQ(r.solution.values.at(Variable::kp()), h2() * q(-1, 20));
  EXPECT_EQ(exceptional_spec("F4").l2(), q(-5, 18));
}

TEST(Exceptional, ClosedFormsForAnyEigenvalue) {
  for (auto l3 : {q(1, 7), q(2, 5), q(-3, 11)})
    for (auto D : {Rational(10), q(7, 3)}) {
      ExceptionalResult r = solve_exceptional(ExceptionalSpec{"probe", l3, D, {}});
      ASSERT_TRUE(r.unique);
      EXPECT_EQ(r.solution.values.at(Variable::kp()), h2() * (q(-1, 6) - l3) / q(4));
    }
}

// kappa(p(L) X) = 2 p(1) vanishes on the l3 eigenvector (L - 1)(L - l2) X, so
// the trivial projection is implied and the system always has rank 2.
TEST(Exceptional, RankTwoForDistinctEigenvalues) {
  ExceptionalSpec odd = exceptional_spec("E8");
  odd.l2_override = q(-1, 4);
  ExceptionalResult r = solve_exceptional(odd);
  EXPECT_TRUE(r.unique);
  EXPECT_EQ(r.solution.values.at(Variable::kp()), h2() * q(-1, 16));
  ExceptionalSpec degenerate = exceptional_spec("E8");
  degenerate.l2_override = degenerate.l3;
  EXPECT_THROW(solve_exceptional(degenerate), std::invalid_argument);
}

TEST(AbelianLimit, OnlySlDeforms) {
  for (int n : {3, 4, 5}) {
    StarSolution s = abelian_limit(solved("sl", n).system, {Variable::kp()});
    ASSERT_TRUE(s.consistent);
    Rational a(n + 1, n), b(n + 2, n);
    EXPECT_EQ(s.values.at(Variable::kp()), k() * k() * b * b / (a * q(4))) << n;
    EXPECT_FALSE(s.values.count(Variable::k()));  // one free parameter remains
  }
  for (int n : {5, 6, 7, 8}) {
    StarSolution s = abelian_limit(solved("so", n).system, {});
    ASSERT_TRUE(s.consistent);
    EXPECT_TRUE(s.values.at(Variable::k()).is_zero()) << n;
  }
  for (auto& e : exceptional_table()) {
    ExceptionalResult r = solve_exceptional(e, true);
    ASSERT_TRUE(r.unique);
    EXPECT_TRUE(r.solution.values.at(Variable::k()).is_zero());
    EXPECT_TRUE(r.solution.values.at(Variable::kp()).is_zero());
  }
}

TEST(StarProduct, GeneratorTableSl3) {
  StarProduct P(solved("sl", 3));
  const LieSpec& L = *P.spec().algebra;
  auto d = [](int a, int b) { return Rational(a == b ? 1 : 0); };
  auto U = [&](int a, int b) { return L.coord(a, b); };
  Poly kk = P.solution().values.count(Variable::k()) ? P.solution().values.at(Variable::k()) : k();
  Poly kkp = P.solution().values.at(Variable::kp());
  int n = 3;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int e = 1; e <= n; ++e) {
          Poly expect = U(a, b) * U(c, e) + h() / q(2) * (d(c, b) * U(a, e) - d(a, e) * U(c, b)) +
                        kk / q(2) *
                            (d(c, b) * U(a, e) + d(a, e) * U(c, b) -
                             q(2, n) * (d(c, e) * U(a, b) + d(a, b) * U(c, e))) +
                        kkp * (d(a, e) * d(c, b) - q(1, n) * d(a, b) * d(c, e));
          EXPECT_EQ(P.star(U(a, b), U(c, e)), P.normal_form(expect)) << a << b << c << e;
        }
}

TEST(StarProduct, SoGeneratorTable) {
  StarProduct P(solved("so", 6));
  const LieSpec& L = *P.spec().algebra;
  Poly kk = P.solution().values.at(Variable::k());
  auto Lc = [&](int a, int b) { return L.coord(a, b); };
  auto e = [&](int a, int b) { return L.eta_at(a, b); };
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c)
        for (int d = c + 1; d <= 6; ++d) {
          Poly expect = Lc(a, b) * Lc(c, d) + h() / q(2) * poisson(L, Lc(a, b), Lc(c, d)) +
                        kk / q(2) * (e(a, c) * e(b, d) - e(a, d) * e(b, c));
          EXPECT_EQ(P.star(Lc(a, b), Lc(c, d)), P.normal_form(expect));
        }
}

TEST(StarProduct, CommutatorAndSymmetricPart) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{{"sl", 4}, {"so", 7}, {"sp", 4}}) {
    StarProduct P(solved(fam, n));
    const LieSpec& L = *P.spec().algebra;
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j) {
        Poly ij = P.star(P.gen(i), P.gen(j)), ji = P.star(P.gen(j), P.gen(i));
        EXPECT_EQ(ij - ji, P.normal_form(h() * L.bracket(i, j)));
        EXPECT_EQ((ij + ji) / q(2), P.normal_form(P.gen(i) * P.gen(j) + P.psi(i, j)));
      }
  }
}

TEST(StarProduct, UnitAndDegreeCap) {
  StarProduct P(solved("sl", 3));
  Poly f = P.gen(0) * P.gen(1) + P.gen(2) * q(3);
  EXPECT_EQ(P.star(f, Poly(1)), P.normal_form(f));
  EXPECT_EQ(P.star(Poly(1), f), P.normal_form(f));
  EXPECT_THROW(P.star(f, f), std::domain_error);
}

TEST(StarProduct, AssociativeOnLinearTriples) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{{"sl", 3}, {"so", 5}, {"sp", 4}}) {
    StarProduct P(solved(fam, n));
    EXPECT_EQ(associativity_failures(P, 1000), 0) << fam << n;
  }
}

TEST(StarProduct, AssociativityDetectsWrongPhi) {
  const SolvedFamily& f = solved("sl", 4);
  StarSolution wrong = f.solution;
  wrong.values[Variable::phi(1)] = k() * q(3);  // coefficient 1 + 2/n on phi_1
  StarProduct P(f.spec, f.ansatz, wrong);
  EXPECT_GT(associativity_failures(P, 3), 0);
  StarSolution wrong_so = solved("so", 5).solution;
  wrong_so.values[Variable::k()] = h2();
  StarProduct Q(solved("so", 5).spec, solved("so", 5).ansatz, wrong_so);
  EXPECT_GT(associativity_failures(Q, 3), 0);
}

TEST(StarProduct, Equivariance) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{{"sl", 3}, {"so", 5}}) {
    StarProduct P(solved(fam, n));
    const LieSpec& L = *P.spec().algebra;
    for (int m = 0; m < L.dim(); ++m)
      for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) {
          Poly lhs = P.normal_form(ad(L, m, P.star(P.gen(i), P.gen(j))));
          Poly rhs = P.star(L.bracket(m, i), P.gen(j)) + P.star(P.gen(i), L.bracket(m, j));
          EXPECT_EQ(lhs, rhs);
        }
  }
}

TEST(Moyal, FirstOrder) {
  LieSpec sp = make_algebra("sp", 4);
  Poly a(Variable::xi(1)), b(Variable::xi(3));
  EXPECT_EQ(moyal_star(a, b, *sp.eta), a * b + h() / q(2) * sp.eta_at(1, 3));
  EXPECT_EQ(moyal_star(a, b, *sp.eta) - moyal_star(b, a, *sp.eta), h() * sp.eta_at(1, 3));
}

TEST(Moyal, AssociativeOnRandomCubics) {
  LieSpec sp = make_algebra("sp", 4);
  std::vector<Variable> xs;
  for (int a = 1; a <= 4; ++a) xs.push_back(Variable::xi(a));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Poly f = random_poly(xs, rng, 3, 3), g = random_poly(xs, rng, 3, 3), e = random_poly(xs, rng, 3, 3);
    EXPECT_EQ(moyal_star(moyal_star(f, g, *sp.eta), e, *sp.eta),
              moyal_star(f, moyal_star(g, e, *sp.eta), *sp.eta));
  }
}

TEST(Moyal, GeneratorClosure) {
  LieSpec sp = make_algebra("sp", 4);
  auto e = [&](int a, int b) { return sp.eta_at(a, b); };
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j) {
      int a = sp.basis[i].idx[0], b = sp.basis[i].idx[1], c = sp.basis[j].idx[0], d = sp.basis[j].idx[1];
      Poly first = h() / q(2) *
                   (e(b, c) * sp.coord(a, d) + e(a, c) * sp.coord(b, d) + e(b, d) * sp.coord(a, c) +
                    e(a, d) * sp.coord(b, c));
      Poly second = h2() / q(4) * (e(a, c) * e(b, d) + e(a, d) * e(b, c));
      EXPECT_EQ(moyal_generator_product(sp, i, j), sp.gen(i) * sp.gen(j) + first + second);
    }
}

TEST(ConeStar, DefiningSubstitution) {
  OrbitSpec cone = simple_cone(4);
  Variable xN = Variable::x(4);
  Poly rho = cone.cone_rho;
  EXPECT_EQ(cone_star(Poly(xN), Poly(xN), rho, xN), rho + h());
  EXPECT_THROW(cone_star(x(1), x(2), Poly(xN) * Poly(xN), xN), std::invalid_argument);
}

TEST(ConeStar, AssociativeAndAbelian) {
  OrbitSpec cone = simple_cone(4);
  Variable xN = Variable::x(4);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Poly f = random_poly(cone.coords, rng, 3, 3), g = random_poly(cone.coords, rng, 3, 3),
         e = random_poly(cone.coords, rng, 3, 3);
    EXPECT_EQ(cone_star(f, g, cone.cone_rho, xN), cone_star(g, f, cone.cone_rho, xN));
    EXPECT_EQ(cone_star(cone_star(f, g, cone.cone_rho, xN), e, cone.cone_rho, xN),
              cone_star(f, cone_star(g, e, cone.cone_rho, xN), cone.cone_rho, xN));
  }
}

TEST(Legendre, LowOrders) {
  Poly qq(Variable::x(9));  // stands for the Casimir value
  auto P = legendre_star(qq, 3);
  Poly t(Variable::t()), a2 = Poly(Variable::abs_a()).pow(2);
  EXPECT_EQ(P[0], Poly(1));
  EXPECT_EQ(P[1], t);
  EXPECT_EQ(P[2], (t * t * q(3) - qq * a2) / q(2));
  EXPECT_THROW(legendre_star(qq, 0), std::invalid_argument);
}

TEST(Legendre, FiniteQuotients) {
  for (int two_l = 1; two_l <= 8; ++two_l) {
    FiniteQuotientReport r = finite_quotient_check(q(two_l, 2));
    EXPECT_TRUE(r.factorizes) << two_l;
    EXPECT_TRUE(r.divides) << two_l;
    EXPECT_EQ(r.checked.size(), 3u);
  }
  Poly t(Variable::t()), ha = h() * Poly(Variable::abs_a());
  auto P = legendre_star(h2() * q(2), 4);
  Poly p3 = P[3];
  EXPECT_EQ(p3, t * (t - ha) * (t + ha) * p3.coeff(Monomial(Variable::t(), 3)));
  EXPECT_THROW(finite_quotient_check(q(9, 2)), std::invalid_argument);
  EXPECT_THROW(finite_quotient_check(q(1, 3)), std::invalid_argument);
}
