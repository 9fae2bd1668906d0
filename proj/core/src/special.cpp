#include "orbitstar/special.hpp"

#include <stdexcept>

namespace orbitstar {

Poly moyal_star(const Poly& f, const Poly& g, const DenseMatrix& eta) {
  int n = static_cast<int>(eta.size());
  Poly result;
  std::vector<std::pair<Poly, Poly>> level{{f, g}};
  Poly half_h = Poly::h() / Rational(2);
  Poly weight(1);
  for (int r = 0; !level.empty(); ++r) {
    if (r > 0) weight = weight * half_h / Rational(r);
    Poly sum;
    for (auto& [F, G] : level) sum += F * G;
    result += weight * sum;
    std::vector<std::pair<Poly, Poly>> next;
    for (auto& [F, G] : level)
      for (int a = 0; a < n; ++a) {
        Poly dF = F.derivative(Variable::xi(a + 1));
        if (dF.is_zero()) continue;
        for (int b = 0; b < n; ++b) {
          if (eta[a][b].is_zero()) continue;
          Poly dG = G.derivative(Variable::xi(b + 1));
          if (!dG.is_zero()) next.emplace_back(dF * eta[a][b], dG);
        }
      }
    level = std::move(next);
  }
  return result;
}

namespace {

Poly embed(const LieSpec& sp, int i) {
  const Variable& v = sp.basis[i];
  return Poly(Variable::xi(v.idx[0])) * Poly(Variable::xi(v.idx[1]));
}

// Rewrites a polynomial of degree <= 2 in xi in the L coordinates.
Poly to_coordinates(const Poly& f) {
  Poly r;
  for (auto& [m, c] : f.terms()) {
    auto [xim, rest] = m.split([](const Variable& v) { return v.family != Family::Xi; });
    std::vector<int> ix;
    for (auto& [v, e] : xim.factors())
      for (unsigned t = 0; t < e; ++t) ix.push_back(v.idx[0]);
    if (ix.empty()) {
      r.add_term(rest, c);
    } else if (ix.size() == 2) {
      r += Poly(Variable::L(ix[0], ix[1])) * Poly(rest, c);
    } else {
      throw std::invalid_argument("to_coordinates: odd or high degree in xi");
    }
  }
  return r;
}

}  // namespace

Poly moyal_psi(const LieSpec& sp, int i, int j) {
  Poly a = embed(sp, i), b = embed(sp, j);
  Poly s = (moyal_star(a, b, *sp.eta) + moyal_star(b, a, *sp.eta)) / Rational(2) - a * b;
  return to_coordinates(s);
}

Poly moyal_generator_product(const LieSpec& sp, int i, int j) {
  Poly a = embed(sp, i), b = embed(sp, j);
  return sp.gen(i) * sp.gen(j) + to_coordinates(moyal_star(a, b, *sp.eta) - a * b);
}

Poly cone_star(const Poly& f, const Poly& g, const Poly& rho, const Variable& xN) {
  if (rho.degree_in(xN) >= 2) throw std::invalid_argument("cone_star: rho has degree >= 2 in " + xN.name());
  auto reduce = [&](Poly p, const Poly& value) {
    while (p.degree_in(xN) >= 2) {
      Poly r;
      for (auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(xN);
        if (e < 2) {
          r.add_term(m, c);
        } else {
          Monomial rest = m.without(xN);
          r += Poly(rest, c) * Poly(Monomial(xN, e - 2)) * value;
        }
      }
      p = std::move(r);
    }
    return p;
  };
  Poly a = reduce(f, rho), b = reduce(g, rho);
  return reduce(a * b, rho + Poly::h());
}

std::vector<Poly> legendre_star(const Poly& q, int nmax) {
  if (nmax < 1) throw std::invalid_argument("legendre_star: nmax must be >= 1");
  Poly t(Variable::t()), a2 = Poly(Variable::abs_a()).pow(2), h2 = Poly::h().pow(2);
  std::vector<Poly> P{Poly(1), t};
  for (int n = 1; n < nmax; ++n) {
    Poly coef = (q + h2 * Rational(1 - n * n, 4)) * a2 * Rational(n);
    P.push_back((t * P[n] * Rational(2 * n + 1) - coef * P[n - 1]) / Rational(n + 1));
  }
  return P;
}

FiniteQuotientReport finite_quotient_check(const Rational& l) {
  Rational two_l = l * Rational(2);
  if (two_l.den() != 1 || two_l.num() < 1 || two_l.num() > 8)
    throw std::invalid_argument("finite_quotient_check: 2l must be an integer in 1..8");
  FiniteQuotientReport rep;
  rep.l = l;
  int order = static_cast<int>(two_l.num().get_si()) + 1;
  rep.order = order;
  Poly q = Poly::h().pow(2) * (l * (l + Rational(1)));
  auto P = legendre_star(q, order + 3);
  Poly t(Variable::t()), ha = Poly::h() * Poly(Variable::abs_a());
  Poly prod(1);
  for (Rational m = -l; m <= l; m += Rational(1)) prod = prod * (t - ha * m);
  const Poly& Pk = P[order];
  rep.scalar = Pk.coeff(Monomial(Variable::t(), order));
  rep.factorizes = !rep.scalar.is_zero() && Pk == prod * rep.scalar;
  rep.divides = true;
  for (int n = order + 1; n <= order + 3; ++n) {
    auto [quo, rem] = divide_univariate(P[n], Pk, Variable::t());
    rep.checked.push_back(n);
    if (!rem.is_zero()) rep.divides = false;
  }
  return rep;
}

}  // namespace orbitstar
