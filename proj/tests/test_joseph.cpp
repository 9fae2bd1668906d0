#include "orbitstar/joseph.hpp"
#include "orbitstar/weights.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitstar;

namespace {

Poly h() { return Poly::h(); }
Poly h2() { return Poly::h().pow(2); }
Poly lam(int a) { return Poly(Variable::lambda(a)); }
Rational q(long a, long b = 1) { return Rational(a, b); }

const SolvedFamily& solved(const std::string& fam, int n) {
  static std::map<std::pair<std::string, int>, SolvedFamily> cache;
  auto key = std::make_pair(fam, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, solve_family(fam, n)).first;
  return it->second;
}

bool all_verified(const std::vector<IdealGenerator>& g) {
  for (auto& x : g)
    if (!x.verified) return false;
  return !g.empty();
}

// True when target lies in the rational span of eqs (monomials as coordinates).
bool in_span(const std::vector<Poly>& eqs, const Poly& target) {
  std::map<Monomial, int> col;
  auto row = [&](const Poly& p) {
    SparseRow r;
    for (auto& [m, c] : p.terms()) {
      auto it = col.emplace(m, static_cast<int>(col.size())).first;
      r[it->second] = c;
    }
    return r;
  };
  RowEchelon ech;
  for (auto& e : eqs) ech.add(row(e));
  return ech.contains(row(target));
}

}  // namespace

TEST(IdealGenerators, Sl) {
  for (int n : {3, 4}) {
    StarProduct P(solved("sl", n));
    auto g = ideal_generators(P);
    EXPECT_TRUE(all_verified(g)) << n;
    EXPECT_EQ(g.size(), static_cast<std::size_t>(n * n * n * (n - 1)));
  }
}

TEST(IdealGenerators, SoTraceValue) {
  StarProduct P(solved("so", 6));
  auto g = ideal_generators(P);
  EXPECT_TRUE(all_verified(g));
  const LieSpec& L = *P.spec().algebra;
  bool found = false;
  for (auto& x : g)
    if (x.name == "S(eta^bc L_1b*L_c6)") {
      found = true;
      EXPECT_EQ(x.lhs, -h2() * L.eta_at(1, 6));
    }
  EXPECT_TRUE(found);
}

TEST(IdealGenerators, SoCyclicSignMatters) {
  StarProduct P(solved("so", 5));
  const LieSpec& L = *P.spec().algebra;
  // with +h eta_ad L_bc the cyclic sum does not vanish
  int a = 1, b = 2, c = 4, d = 5;
  int t[3] = {a, b, c};
  Poly plus, minus;
  for (int r = 0; r < 3; ++r) {
    int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
    Poly s = P.star(L.coord(x, y), L.coord(z, d));
    minus += s - h() * L.eta_at(x, d) * L.coord(y, z);
    plus += s + h() * L.eta_at(x, d) * L.coord(y, z);
  }
  EXPECT_TRUE(P.normal_form(minus).is_zero());
  EXPECT_FALSE(P.normal_form(plus).is_zero());
}

TEST(IdealGenerators, Exceptional) {
  for (auto& s : exceptional_table()) {
    ExceptionalResult r = solve_exceptional(s);
    EXPECT_TRUE(all_verified(ideal_generators(s, r.solution))) << s.name;
  }
}

TEST(IdealGenerators, InconsistentSolutionRejected) {
  const SolvedFamily& f = solved("so", 5);
  StarSolution bad = f.solution;
  bad.consistent = false;
  EXPECT_THROW(ideal_generators(StarProduct(f.spec, f.ansatz, bad)), std::invalid_argument);
}

TEST(HighestWeightModel, RewritesAgainstVacuum) {
  LieSpec sl3 = make_algebra("sl", 3);
  using K = HighestWeightModel::Kind;
  std::vector<K> kinds;
  std::map<int, Poly> cartan;
  for (int i = 0; i < sl3.dim(); ++i) {
    int a = sl3.basis[i].idx[0], b = sl3.basis[i].idx[1];
    kinds.push_back(a < b ? K::Raising : a == b ? K::Cartan : K::Lowering);
    if (a == b) cartan[i] = lam(a);
  }
  HighestWeightModel M(sl3, kinds, cartan);
  int u12 = sl3.index.at(Variable::U(1, 2)), u21 = sl3.index.at(Variable::U(2, 1));
  int u11 = sl3.index.at(Variable::U(1, 1));
  EXPECT_TRUE(M.apply({u12}).empty());
  EXPECT_EQ(M.apply({u11}).at({}), lam(1));
  // U_1^2 U_2^1 v = h (U_1^1 - U_2^2) v
  auto s = M.apply({u12, u21});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.at({}), h() * (lam(1) - lam(2)));
  auto low = M.apply({u21});
  EXPECT_EQ(low.begin()->first, std::vector<int>{u21});
}

TEST(HighestWeights, SlFamilies) {
  for (int n : {3, 4}) {
    StarProduct P(solved("sl", n));
    auto ws = highest_weights(P);
    ASSERT_EQ(ws.size(), static_cast<std::size_t>(n));
    Poly gamma = Poly(Variable::k()) * q(n + 2, 2 * n);
    for (int m = 1; m <= n; ++m) {
      const WeightVector& w = ws[m - 1];
      EXPECT_TRUE(w.verified) << w.label;
      EXPECT_TRUE(w.solved) << w.label;
      Poly sum;
      for (auto& l : w.lambda) sum += l;
      EXPECT_TRUE(sum.is_zero());
      if (m < n) EXPECT_EQ(w.lambda[n - 1], h() / q(2) - gamma);
      if (m > 1) EXPECT_EQ(w.lambda[0], -h() / q(2) - gamma);
    }
    EXPECT_EQ(ws[0].rho.front(), q(n - 1, 2));
  }
}

TEST(HighestWeights, SlExistenceNeedsResidual) {
  const SolvedFamily& f = solved("sl", 4);
  StarProduct P(f);
  auto ws = highest_weights(P);
  std::map<Variable, Poly> kp_value{{Variable::kp(), f.solution.values.at(Variable::kp())}};
  for (auto& w : ws) {
    auto conds = existence_conditions(f.spec, f.ansatz, w);
    EXPECT_FALSE(conds.empty());  // kp free: no module
    for (auto& c : conds) EXPECT_TRUE(c.substitute(kp_value).is_zero()) << c;
  }
}

TEST(HighestWeights, GammaRelationMatchesResidual) {
  for (int n : {3, 4, 5, 9}) {
    Poly k(Variable::k()), kp(Variable::kp());
    Poly gamma = k * q(n + 2, 2 * n), gp = kp * q(n + 1, n);
    Poly from_weights = gp - gamma * gamma + h2() / q(4);
    Poly residual = kp * q(4 * (n + 1), n) - k * k * q(n + 2, n).pow(2) + h2();
    EXPECT_EQ(from_weights * q(4), residual);
  }
}

TEST(HighestWeights, SoFamilies) {
  for (int n : {5, 6, 7, 8}) {
    StarProduct P(solved("so", n));
    auto ws = highest_weights(P);
    int l = n / 2;
    for (int j = 1; j <= l; ++j) {
      const WeightVector& w = ws[j - 1];
      EXPECT_TRUE(w.verified && w.solved) << n << " " << w.label;
      ASSERT_EQ(w.lambda.size(), static_cast<std::size_t>(l));
      EXPECT_EQ(w.lambda[j - 1], Poly(q(2 * j + 2 - n, 2)));
    }
    // odd n: exactly the listed families; even n: one mirror image
    std::size_t extra = ws.size() - static_cast<std::size_t>(l);
    EXPECT_EQ(extra, n % 2 == 0 ? 1u : 0u) << n;
    if (extra) EXPECT_EQ(ws.back().label, "j=" + std::to_string(l) + " mirrored");
  }
}

TEST(HighestWeights, So5Values) {
  StarProduct P(solved("so", 5));
  auto ws = highest_weights(P);
  EXPECT_EQ(ws[0].lambda, (std::vector<Poly>{Poly(q(-1, 2)), Poly()}));
  EXPECT_EQ(ws[1].lambda, (std::vector<Poly>{Poly(-1), Poly(q(1, 2))}));
  EXPECT_EQ(ws[0].rho, (std::vector<Rational>{q(3, 2), q(1, 2)}));
  auto eqs = weight_equations(P);
  std::map<Variable, Poly> sub{{Variable::lambda(1), Poly(-1)}, {Variable::lambda(2), Poly(q(-1, 2))}};
  bool all_zero = true;
  for (auto& e : eqs) all_zero &= e.substitute(sub).is_zero();
  EXPECT_FALSE(all_zero);
}

TEST(HighestWeights, SoRootEquation) {
  for (int n : {5, 6, 7, 8}) {
    StarProduct P(solved("so", n));
    Poly root = (lam(1) + Poly(1)) * (lam(1) + Poly(q(n - 4, 2))) * h2();
    EXPECT_TRUE(in_span(weight_equations(P), root)) << n;
  }
}

TEST(HighestWeights, SoExistenceFixesK) {
  for (int n : {5, 6, 7}) {
    const SolvedFamily& f = solved("so", n);
    StarProduct P(f);
    for (auto& w : highest_weights(P)) {
      auto conds = existence_conditions(f.spec, f.ansatz, w);
      ASSERT_FALSE(conds.empty());
      std::vector<Poly> at_h1;
      for (auto& c : conds) at_h1.push_back(c.substitute({{Variable::h(), Poly(1)}}));
      auto ks = rational_solutions(at_h1, {Variable::k()});
      ASSERT_EQ(ks.size(), 1u) << n << " " << w.label;
      EXPECT_EQ(ks[0].at(Variable::k()), q(n - 4, n - 1));
    }
  }
}

TEST(RationalSolutions, RootsAndElimination) {
  Variable t = Variable::lambda(1), u = Variable::lambda(2);
  Poly T(t), Uu(u);
  EXPECT_EQ(rational_roots(T * T * q(6) - T - Poly(1), t), (std::vector<Rational>{q(-1, 3), q(1, 2)}));
  auto sols = rational_solutions({T * Uu - Poly(2), T + Uu - Poly(3)}, {t, u});
  EXPECT_EQ(sols.size(), 2u);
  EXPECT_THROW(rational_solutions({T - Uu}, {t, u}), std::runtime_error);
}

TEST(AbelianSpectrum, Examples) {
  AbelianSpectrum z = abelian_spectrum(4, Rational(0));
  EXPECT_TRUE(z.repeated.is_zero() && z.singleton.is_zero());
  AbelianSpectrum s = abelian_spectrum(3, Rational(2));
  EXPECT_EQ(s.repeated, q(-5, 3));
  EXPECT_EQ(s.singleton, q(10, 3));
  EXPECT_TRUE(s.satisfies_relations);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    Rational k(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
    AbelianSpectrum a = abelian_spectrum(n, k);
    EXPECT_TRUE((a.repeated * Rational(n - 1) + a.singleton).is_zero());
    EXPECT_TRUE(a.satisfies_relations);
    Rational lhs = a.kp * q(4 * (n + 1), n), rhs = k * k * q(n + 2, n).pow(2);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(RepCheck, Grid) {
  for (int n : {3, 4})
    for (int N : {0, 1, 2, 3}) {
      RepCheckReport r = rep_check_sl(n, N);
      EXPECT_TRUE(r.pass()) << n << " " << N;
      EXPECT_EQ(Rational(r.dim), binomial(N + n - 1, n - 1));
    }
  RepCheckReport r = rep_check_sl(3, 2);
  EXPECT_EQ(r.kp_over_h2, q(5, 6));
  EXPECT_EQ(r.k_over_h, q(7, 5));
}

TEST(RepCheck, NegativeKSignFailsIdeal) {
  RepCheckReport r = rep_check_sl(3, 1, -1);
  EXPECT_TRUE(r.commutation && r.identity && r.parameters);
  EXPECT_FALSE(r.ideal_degree2);
}

TEST(RepCheck, ParametersAndGuard) {
  for (int n : {2, 3, 4, 7}) {
    EXPECT_TRUE(rep_parameters_satisfy_residual(n, 1));
    EXPECT_TRUE(rep_parameters_satisfy_residual(n, -1));
  }
  EXPECT_THROW(rep_check_sl(4, 20), std::invalid_argument);
  EXPECT_THROW(rep_check_sl(1, 2), std::invalid_argument);
}
