#include "orbitstar/lie.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitstar;

namespace {

void expect_jacobi(const LieSpec& s) {
  int N = s.dim();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      EXPECT_EQ(s.bracket(i, j), -s.bracket(j, i));
      for (int k = j + 1; k < N; ++k) {
        Poly cyc = poisson(s, s.bracket(i, j), s.gen(k)) + poisson(s, s.bracket(j, k), s.gen(i)) +
                   poisson(s, s.bracket(k, i), s.gen(j));
        ASSERT_TRUE(cyc.is_zero()) << s.name << " " << i << j << k;
      }
    }
}

void expect_ad_invariant(const LieSpec& s, const DenseMatrix& K) {
  int N = s.dim();
  for (int m = 0; m < N; ++m)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Rational v;
        for (auto& [t, c] : s.eps[m][i]) v += c * K[t][j];
        for (auto& [t, c] : s.eps[m][j]) v += c * K[i][t];
        ASSERT_TRUE(v.is_zero()) << s.name;
      }
}

}  // namespace

TEST(MakeAlgebra, So3Brackets) {
  LieSpec s = make_algebra("so3", 3);
  EXPECT_EQ(poisson(s, x(1), x(2)), x(3));
  EXPECT_EQ(poisson(s, x(2), x(3)), x(1));
  EXPECT_EQ(poisson(s, x(3), x(1)), x(2));
}

TEST(MakeAlgebra, SoBracketFormula) {
  for (int n : {5, 6}) {
    LieSpec s = make_algebra("so", n);
    auto eta = [&](int a, int b) { return Rational(a + b == n + 1 ? 1 : 0); };
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            Poly want = eta(b, c) * s.coord(a, d) - eta(a, c) * s.coord(b, d) -
                        eta(b, d) * s.coord(a, c) + eta(a, d) * s.coord(b, c);
            ASSERT_EQ(poisson(s, s.coord(a, b), s.coord(c, d)), want);
          }
  }
}

TEST(MakeAlgebra, SlBracketFormula) {
  LieSpec s = make_algebra("sl", 3);
  EXPECT_EQ(s.dim(), 8);
  auto d = [](int a, int b) { return Rational(a == b ? 1 : 0); };
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int e = 1; e <= 3; ++e)
          EXPECT_EQ(poisson(s, s.coord(a, b), s.coord(c, e)),
                    d(c, b) * s.coord(a, e) - d(a, e) * s.coord(c, b));
}

TEST(MakeAlgebra, JacobiIdentity) {
  for (int n = 2; n <= 5; ++n) expect_jacobi(make_algebra("sl", n));
  for (int n = 3; n <= 8; ++n) expect_jacobi(make_algebra("so", n));
  for (int n : {2, 4, 6}) expect_jacobi(make_algebra("sp", n));
  expect_jacobi(make_algebra("so3", 3));
  expect_jacobi(make_algebra("so21", 3));
}

TEST(MakeAlgebra, InvalidRanks) {
  EXPECT_THROW(make_algebra("sl", 1), std::invalid_argument);
  EXPECT_THROW(make_algebra("so", 2), std::invalid_argument);
  EXPECT_THROW(make_algebra("sp", 3), std::invalid_argument);
  EXPECT_THROW(make_algebra("e9", 3), std::invalid_argument);
}

TEST(Killing, So21Signature) {
  LieSpec s = make_algebra("so21", 3);
  KillingForm k = killing(s);
  ASSERT_TRUE(k.inverse.has_value());
  // K^{ij} x_i x_j proportional to -x1^2 - x2^2 + x3^2.
  Poly cas;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cas += (*k.inverse)[i][j] * x(i + 1) * x(j + 1);
  Poly want = -x(1) * x(1) - x(2) * x(2) + x(3) * x(3);
  EXPECT_EQ(cas * Rational(2), want);
}

TEST(Killing, Sl2IsMinusFourTimesTraceForm) {
  LieSpec s = make_algebra("sl", 2);
  KillingForm k = killing(s);
  // Traceless representatives E_ab - delta_ab I/2 of the basis U_a^b.
  auto rep = [](const Variable& v) {
    DenseMatrix m(2, std::vector<Rational>(2, Rational(0)));
    m[v.idx[0] - 1][v.idx[1] - 1] = Rational(1);
    if (v.idx[0] == v.idx[1])
      for (int a = 0; a < 2; ++a) m[a][a] -= Rational(1, 2);
    return m;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      DenseMatrix p = matmul(rep(s.basis[i]), rep(s.basis[j]));
      EXPECT_EQ(k.K[i][j], Rational(-4) * (p[0][0] + p[1][1]));
    }
}

TEST(Killing, AdInvariance) {
  for (auto [fam, n] : std::vector<std::pair<std::string, int>>{{"sl", 3}, {"so", 5}, {"sp", 4}, {"so3", 3}}) {
    LieSpec s = make_algebra(fam, n);
    KillingForm k = killing(s);
    expect_ad_invariant(s, k.K);
    ASSERT_TRUE(k.inverse.has_value());
    EXPECT_EQ(matmul(k.K, *k.inverse), *inverse(*inverse(matmul(k.K, *k.inverse))));
  }
}

TEST(Poisson, AntisymmetryLeibnizJacobi) {
  LieSpec s = make_algebra("sl", 3);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, s.dim() - 1), coef(-4, 4);
  auto rnd_linear = [&] {
    Poly p;
    for (int t = 0; t < 3; ++t) p += Rational(coef(rng)) * s.gen(pick(rng));
    return p;
  };
  for (int it = 0; it < 20; ++it) {
    Poly f = rnd_linear() * rnd_linear() + rnd_linear(), a = rnd_linear(), b = rnd_linear(),
         c = rnd_linear();
    EXPECT_TRUE(poisson(s, f, f).is_zero());
    EXPECT_EQ(poisson(s, a, b * c), poisson(s, a, b) * c + b * poisson(s, a, c));
    Poly jac = poisson(s, a, poisson(s, b, c)) + poisson(s, b, poisson(s, c, a)) +
               poisson(s, c, poisson(s, a, b));
    EXPECT_TRUE(jac.is_zero());
  }
  EXPECT_THROW(poisson(s, Poly(Variable::L(1, 2)), s.gen(0)), std::invalid_argument);
  EXPECT_EQ(poisson(s, Poly::h() * s.gen(1), s.gen(2)), Poly::h() * poisson(s, s.gen(1), s.gen(2)));
}

TEST(Exceptional, Table) {
  ExceptionalSpec f4 = exceptional_spec("F4");
  EXPECT_EQ(f4.l2(), Rational(-5, 18));
  for (auto& e : exceptional_table()) EXPECT_EQ(e.l2() + e.l3, Rational(-1, 6));
  EXPECT_EQ(exceptional_spec("E8").D, Rational(248));
  EXPECT_THROW(exceptional_spec("E9"), std::invalid_argument);
}
