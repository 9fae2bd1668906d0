#include "orbitstar/bgs.hpp"
#include "orbitstar/orbit.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitstar;

namespace {

Poly U(int a, int b) { return Poly(Variable::U(a, b)); }

bool in_sector(const Chain& c, unsigned k) { return perm_act(garsia(c.arity(), k), c) == c; }

Poly random_coordinate_poly(const OrbitSpec& s, std::mt19937_64& rng, unsigned maxdeg, int terms) {
  std::uniform_int_distribution<int> var(0, s.N() - 1), deg(0, static_cast<int>(maxdeg)), c(-4, 4);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m = m * Monomial(s.coords[var(rng)]);
    p.add_term(m, Rational(c(rng)));
  }
  return p;
}

}  // namespace

TEST(MinimalOrbit, RelationCounts) {
  // dim S^2(g) minus the dimension of the Cartan square of the adjoint.
  EXPECT_EQ(minimal_orbit("sl", 3).relations.size(), 36u - 27u);
  EXPECT_EQ(minimal_orbit("so", 5).relations.size(), 55u - 35u);
  EXPECT_EQ(minimal_orbit("sp", 4).relations.size(), 55u - 35u);
  EXPECT_EQ(minimal_orbit("so21", 3).relations.front(), x(3) * x(3) - x(1) * x(1) - x(2) * x(2));
  EXPECT_THROW(minimal_orbit("E8", 0), std::invalid_argument);
}

TEST(MinimalOrbit, EmbeddingSoundness) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{
           {"sl", 3}, {"sl", 4}, {"sl", 5}, {"so", 5}, {"so", 6}, {"so", 8}, {"sp", 4}, {"sp", 6}}) {
    OrbitSpec s = minimal_orbit(fam, n);
    OrbitOracle oracle(s);
    for (auto& g : s.relations) ASSERT_TRUE(oracle.vanishes(g)) << s.name << ": " << g;
    std::mt19937_64 rng(2);
    for (int it = 0; it < 3; ++it) {
      if (s.kind == OrbitKind::SP) break;
      auto par = random_parameter_point(s, rng);
      for (auto& c : s.constraints) ASSERT_TRUE(c.evaluate(par).is_zero()) << s.name;
    }
  }
}

TEST(VanishesOnOrbit, Examples) {
  OrbitSpec sl3 = minimal_orbit("sl", 3);
  EXPECT_TRUE(vanishes_on_orbit(sl3, U(1, 2) * U(3, 1) - U(1, 1) * U(3, 2)));
  EXPECT_FALSE(vanishes_on_orbit(sl3, U(1, 1)));
  OrbitSpec so5 = minimal_orbit("so", 5);
  Poly f;
  for (int b = 1; b <= 5; ++b) f += so5.algebra->coord(1, b) * so5.algebra->coord(6 - b, 2);
  EXPECT_TRUE(vanishes_on_orbit(so5, f));
  EXPECT_FALSE(vanishes_on_orbit(so5, so5.algebra->coord(1, 2) * so5.algebra->coord(4, 5)));
}

TEST(VanishesOnOrbit, PoissonPreservesIdeal) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{
           {"sl", 3}, {"sl", 4}, {"so", 5}, {"so", 6}, {"sp", 4}, {"so3", 3}, {"so21", 3}}) {
    OrbitSpec s = minimal_orbit(fam, n);
    OrbitOracle oracle(s);
    for (int i = 0; i < s.N(); ++i)
      for (auto& g : s.relations) ASSERT_TRUE(oracle.vanishes(poisson(*s.algebra, s.algebra->gen(i), g)));
  }
}

TEST(VanishesOnOrbit, SymbolicAndRandomAgree) {
  std::mt19937_64 rng(99);
  for (auto s : {minimal_orbit("sl", 3), simple_cone(4), minimal_orbit("sp", 4)}) {
    IdealReducer red(s, 3);
    int disagreements = 0, members = 0;
    for (int it = 0; it < 200; ++it) {
      Poly f;
      if (it % 2 == 0) {
        // Ideal member: random combination of relations times random polys.
        for (std::size_t a = 0; a < s.relations.size(); a += 2)
          f += s.relations[a] * random_coordinate_poly(s, rng, 1, 2);
      } else {
        f = random_coordinate_poly(s, rng, 3, 4);
      }
      bool sym = vanishes_on_orbit(s, f);
      bool rnd = vanishes_on_orbit(s, f, {static_cast<std::uint64_t>(it), true});
      members += sym;
      if (sym != rnd) ++disagreements;
      if (s.kind != OrbitKind::Cone) EXPECT_EQ(sym, red.contains(f));
    }
    EXPECT_EQ(disagreements, 0) << s.name;
    EXPECT_GE(members, 100) << s.name;
  }
}

TEST(ClosedChains, ConeSectors) {
  OrbitSpec cone = simple_cone(3);
  ChainSpace cs = closed_linear_chains(cone, 3);
  EXPECT_TRUE(cs.sectors[0].basis.empty());                        // (3,1)
  EXPECT_EQ(cs.sectors[1].basis.size(), static_cast<std::size_t>(cone.N()));  // (3,2)
  EXPECT_EQ(cs.sectors[2].basis.size(), 1u);                       // (3,3): x1^x2^x3
  std::size_t total = 0;
  for (auto& s : cs.sectors) total += s.basis.size();
  EXPECT_EQ(total, cs.kernel_dim);
  for (int k = 0; k < cone.N(); ++k) {
    Chain z = cone_basis_chain(cone, 1, {k});
    EXPECT_TRUE(in_sector(z, 2));
    EXPECT_TRUE(chain_is_closed(cone, z));
  }
}

TEST(ClosedChains, ArityTwoContainsExpectedChains) {
  OrbitSpec sl3 = minimal_orbit("sl", 3);
  ChainSpace cs = closed_linear_chains(sl3, 2);
  EXPECT_EQ(cs.sectors[0].basis.size(), sl3.relations.size());
  EXPECT_EQ(cs.sectors[1].basis.size(), static_cast<std::size_t>(sl3.N() * (sl3.N() - 1) / 2));
  EXPECT_THROW(closed_linear_chains(sl3, 4), std::invalid_argument);
}

TEST(ClosedChains, ConeBasisUpToArityFour) {
  OrbitSpec cone = simple_cone(3);
  int N = cone.N();
  for (unsigned k = 0; k <= 2; ++k)
    for (unsigned l = 0; 2 * k + l <= 4; ++l) {
      if (2 * k + l == 0) continue;
      std::vector<int> free(l);
      for (int t = 0; t < 6; ++t) {
        for (unsigned f = 0; f < l; ++f) free[f] = (t + 2 * f) % N;
        Chain z = cone_basis_chain(cone, k, free);
        if (z.is_zero()) continue;
        EXPECT_TRUE(chain_is_closed(cone, z)) << k << "," << l;
        EXPECT_TRUE(in_sector(z, k + l)) << k << "," << l;
      }
    }
  // The listed three-term form of Z_{4,2} is half the shuffle sum.
  Chain z42 = cone_basis_chain(cone, 2, {});
  DenseMatrix g = cone.relation_tensor(0);
  Chain listed(4);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      Rational w = g[i][i] * g[k][k];
      if (w.is_zero()) continue;
      listed.add({x(i + 1), x(k + 1), x(k + 1), x(i + 1)}, w);
      listed.add({x(i + 1), x(k + 1), x(i + 1), x(k + 1)}, -w);
      listed.add({x(i + 1), x(i + 1), x(k + 1), x(k + 1)}, w);
    }
  EXPECT_EQ(z42, Rational(2) * listed);
}

TEST(ClosedChains, NoLinearChainIsExact) {
  // d preserves total degree and an arity-(p+1) chain over A_+ has degree at
  // least p+1, so the d-image of arity-(p+1) chains in degree p is empty.
  OrbitSpec cone = simple_cone(3);
  auto nf = [&](const Poly& f) { return cone_normal_form(cone, f); };
  for (unsigned p = 1; p <= 3; ++p) {
    Chain c(p + 1);
    std::vector<Poly> f(p + 1, x(1) + x(3));
    c.add(f);
    Chain dc = chain_diff(c, nf);
    for (auto& [key, a] : dc.terms()) {
      unsigned deg = 0;
      for (auto& m : key) deg += m.degree();
      EXPECT_GT(deg, p);
    }
  }
}

TEST(ClosedChains, Sl3ExampleChain) {
  OrbitSpec sl3 = minimal_orbit("sl", 3);
  const LieSpec& g = *sl3.algebra;
  auto ex = [&](int a, int b, int c, int f, int gg, int h) {
    Chain ch(3);
    ch.add({g.coord(a, b), g.coord(c, f), g.coord(gg, h)});
    ch.add({g.coord(c, b), g.coord(a, f), g.coord(gg, h)}, Rational(-1));
    ch.add({g.coord(a, b), g.coord(c, h), g.coord(gg, f)}, Rational(-1));
    ch.add({g.coord(c, b), g.coord(a, h), g.coord(gg, f)});
    return ch;
  };
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int f = 1; f <= 3; ++f)
          for (int gg = 1; gg <= 3; ++gg)
            for (int h = 1; h <= 3; ++h) ASSERT_TRUE(chain_is_closed(sl3, ex(a, b, c, f, gg, h)));
}

TEST(ConjectureChain, ClosedAndVanishingOnCone) {
  OrbitSpec sl3 = minimal_orbit("sl", 3);
  for (std::size_t a = 0; a < sl3.relations.size(); a += 3)
    for (std::size_t b = 0; b < sl3.relations.size(); b += 4) {
      Chain c = conjecture_chain(sl3, a, b);
      EXPECT_TRUE(chain_is_closed(sl3, c));
      EXPECT_TRUE(in_sector(c, 1));
    }
  OrbitSpec so21 = minimal_orbit("so21", 3);
  EXPECT_TRUE(conjecture_chain(so21, 0, 0).is_zero());
}
