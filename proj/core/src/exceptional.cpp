#include "orbitstar/exceptional.hpp"

#include <stdexcept>

namespace orbitstar {

ExceptionalModel::ExceptionalModel(const ExceptionalSpec& s) : spec(s) {
  Rational l2 = s.l2(), l3 = s.l3;
  if (s.D.is_zero() || l2 == Rational(1) || l3 == Rational(1) || l2 == l3)
    throw std::invalid_argument("exceptional model: degenerate eigenvalues or dimension");
  c = Rational(2) / s.D * (Rational(1) - l2) * (Rational(1) - l3);
}

ExceptionalModel::Vec ExceptionalModel::apply_L(const Vec& v) const {
  Rational l2 = spec.l2(), l3 = spec.l3;
  // L^3 = s1 L^2 - s2 L + s3
  Rational s1 = Rational(1) + l2 + l3, s2 = l2 + l3 + l2 * l3, s3 = l2 * l3;
  return {v[2] * s3, v[0] - v[2] * s2, v[1] + v[2] * s1};
}

Poly ExceptionalModel::kappa(const Vec& v) const { return (v[0] + v[1] + v[2]) * Rational(2); }

ExceptionalModel::Vec ExceptionalModel::X() const { return {Poly(1), Poly(), Poly()}; }

ExceptionalModel::Vec ExceptionalModel::Y() const {
  Rational l2 = spec.l2(), l3 = spec.l3, ci = c.inverse();
  return {Poly(l2 * l3 * ci), Poly(-(l2 + l3) * ci), Poly(ci)};
}

ExceptionalModel::Vec ExceptionalModel::rhs() const {
  Poly k(Variable::k()), kp(Variable::kp()), h2 = Poly::h().pow(2);
  Vec x = X(), y = Y(), lx = apply_L(X());
  Vec v;
  for (int i = 0; i < 3; ++i) v[i] = kp / Rational(3) * (x[i] + y[i]) - k * y[i] - h2 / Rational(12) * lx[i];
  return v;
}

std::vector<Poly> ExceptionalModel::equations() const {
  Vec v = rhs();
  Vec lv = apply_L(v);
  std::vector<Poly> eqs{kappa(v)};
  for (int i = 0; i < 3; ++i) eqs.push_back(lv[i] - v[i] * spec.l3);
  return eqs;
}

ExceptionalResult solve_exceptional(const ExceptionalSpec& spec, bool h_zero) {
  ExceptionalModel model(spec);
  ExceptionalResult res;
  res.equations = model.equations();
  if (h_zero)
    for (auto& e : res.equations) e = e.substitute({{Variable::h(), Poly()}});
  Monomial mk(Variable::k()), mkp(Variable::kp()), mh2(Variable::h(), 2);
  RowEchelon ech;
  static const char* names[] = {"trivial projection", "(L - l3) component X", "(L - l3) component LX",
                                "(L - l3) component L^2 X"};
  for (std::size_t i = 0; i < res.equations.size(); ++i) {
    const Poly& e = res.equations[i];
    SparseRow r;
    for (auto& [m, c] : e.terms()) {
      int col = m == mk ? 0 : m == mkp ? 1 : m == mh2 ? 2 : -1;
      if (col < 0) throw std::logic_error("exceptional equation has an unexpected term");
      r[col] = c;
    }
    ech.add(r);
    // A pivot in the h^2 column means h^2 = 0 is forced.
    if (ech.is_pivot(2) && res.offending.empty()) res.offending = names[i];
  }
  res.unique = ech.is_pivot(0) && ech.is_pivot(1) && !ech.is_pivot(2);
  StarSolution& s = res.solution;
  s.name = spec.name;
  s.family = spec.name;
  if (res.unique) {
    for (int col = 0; col < 2; ++col) {
      const SparseRow& row = ech.rows().at(col);
      Rational rh = row.count(2) ? row.at(2) : Rational(0);
      s.values[col == 0 ? Variable::k() : Variable::kp()] = Poly(mh2, -rh);
    }
    if (h_zero)
      for (auto& [v, p] : s.values) p = Poly();
  }
  s.consistent = res.unique;
  return res;
}

}  // namespace orbitstar
