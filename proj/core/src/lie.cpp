#include "orbitstar/lie.hpp"

#include <stdexcept>

namespace orbitstar {

AlgebraFamily parse_family(const std::string& tag) {
  if (tag == "sl") return AlgebraFamily::SL;
  if (tag == "so") return AlgebraFamily::SO;
  if (tag == "sp") return AlgebraFamily::SP;
  if (tag == "so3") return AlgebraFamily::SO3;
  if (tag == "so21") return AlgebraFamily::SO21;
  throw std::invalid_argument("unknown algebra family '" + tag + "'");
}

std::string family_tag(AlgebraFamily f) {
  switch (f) {
    case AlgebraFamily::SL: return "sl";
    case AlgebraFamily::SO: return "so";
    case AlgebraFamily::SP: return "sp";
    case AlgebraFamily::SO3: return "so3";
    case AlgebraFamily::SO21: return "so21";
  }
  return "?";
}

Poly LieSpec::bracket(int i, int j) const {
  Poly r;
  for (auto& [m, c] : eps[i][j]) r.add_term(Monomial(basis[m]), c);
  return r;
}

Poly LieSpec::normalize(const Poly& f) const {
  if (eliminations.empty()) return f;
  return f.substitute(eliminations);
}

Poly LieSpec::coord(int a, int b) const {
  switch (family) {
    case AlgebraFamily::SL: {
      Variable v = Variable::U(a, b);
      auto it = eliminations.find(v);
      return it == eliminations.end() ? Poly(v) : it->second;
    }
    case AlgebraFamily::SO:
      if (a == b) return Poly();
      return a < b ? Poly(Variable::L(a, b)) : -Poly(Variable::L(b, a));
    case AlgebraFamily::SP:
      return a <= b ? Poly(Variable::L(a, b)) : Poly(Variable::L(b, a));
    default:
      throw std::invalid_argument("coord: family has no matrix indices");
  }
}

namespace {

Rational delta(int a, int b) { return Rational(a == b ? 1 : 0); }

// Converts a bracket expressed as a Poly in basis variables to eps entries.
void fill_eps(LieSpec& s, const std::function<Poly(int, int)>& br) {
  int N = s.dim();
  s.eps.assign(N, std::vector<SparseRow>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Poly b = s.normalize(br(i, j));
      for (auto& [m, c] : b.terms()) {
        if (m.total_degree() != 1) throw std::logic_error("bracket is not linear");
        s.eps[i][j][s.index.at(m.factors()[0].first)] = c;
      }
    }
}

void index_basis(LieSpec& s) {
  for (int i = 0; i < s.dim(); ++i) s.index[s.basis[i]] = i;
}

}  // namespace

LieSpec make_algebra(const std::string& family, int n) { return make_algebra(parse_family(family), n); }

LieSpec make_algebra(AlgebraFamily family, int n) {
  LieSpec s;
  s.family = family;
  switch (family) {
    case AlgebraFamily::SL: {
      if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
      s.n = n;
      s.name = "sl(" + std::to_string(n) + ")";
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (!(a == n && b == n)) s.basis.push_back(Variable::U(a, b));
      index_basis(s);
      Poly trace;
      for (int a = 1; a < n; ++a) trace -= Poly(Variable::U(a, a));
      s.eliminations[Variable::U(n, n)] = trace;
      std::vector<std::pair<int, int>> ab;
      for (auto& v : s.basis) ab.emplace_back(v.idx[0], v.idx[1]);
      fill_eps(s, [&](int i, int j) {
        auto [a, b] = ab[i];
        auto [c, d] = ab[j];
        return delta(c, b) * s.coord(a, d) - delta(a, d) * s.coord(c, b);
      });
      break;
    }
    case AlgebraFamily::SO: {
      if (n < 3) throw std::invalid_argument("so(n) needs n >= 3");
      s.n = n;
      s.name = "so(" + std::to_string(n) + ")";
      s.eta = DenseMatrix(n, std::vector<Rational>(n, Rational(0)));
      for (int a = 0; a < n; ++a) (*s.eta)[a][n - 1 - a] = Rational(1);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) s.basis.push_back(Variable::L(a, b));
      index_basis(s);
      fill_eps(s, [&](int i, int j) {
        int a = s.basis[i].idx[0], b = s.basis[i].idx[1];
        int c = s.basis[j].idx[0], d = s.basis[j].idx[1];
        auto e = [&](int x, int y) { return s.eta_at(x, y); };
        return e(b, c) * s.coord(a, d) - e(a, c) * s.coord(b, d) - e(b, d) * s.coord(a, c) +
               e(a, d) * s.coord(b, c);
      });
      break;
    }
    case AlgebraFamily::SP: {
      if (n < 2 || n % 2) throw std::invalid_argument("sp(n) needs an even n >= 2");
      s.n = n;
      s.name = "sp(" + std::to_string(n) + ")";
      int m = n / 2;
      s.eta = DenseMatrix(n, std::vector<Rational>(n, Rational(0)));
      for (int a = 0; a < m; ++a) {
        (*s.eta)[a][a + m] = Rational(1);
        (*s.eta)[a + m][a] = Rational(-1);
      }
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) s.basis.push_back(Variable::L(a, b));
      index_basis(s);
      fill_eps(s, [&](int i, int j) {
        int a = s.basis[i].idx[0], b = s.basis[i].idx[1];
        int c = s.basis[j].idx[0], d = s.basis[j].idx[1];
        auto e = [&](int x, int y) { return s.eta_at(x, y); };
        return e(a, c) * s.coord(b, d) + e(a, d) * s.coord(b, c) + e(b, c) * s.coord(a, d) +
               e(b, d) * s.coord(a, c);
      });
      break;
    }
    case AlgebraFamily::SO3:
    case AlgebraFamily::SO21: {
      s.n = 3;
      s.name = family == AlgebraFamily::SO3 ? "so(3)" : "so(2,1)";
      for (int i = 1; i <= 3; ++i) s.basis.push_back(Variable::x(i));
      index_basis(s);
      // so(3): {x_i, x_j} = eps_ijk x_k. so(2,1): {x1,x2} = -x3, {x2,x3} = x1,
      // {x3,x1} = x2, whose Killing form is proportional to -x1^2 - x2^2 + x3^2.
      Rational s12 = family == AlgebraFamily::SO3 ? Rational(1) : Rational(-1);
      s.eps.assign(3, std::vector<SparseRow>(3));
      auto set = [&](int i, int j, int m, const Rational& c) {
        s.eps[i][j][m] = c;
        s.eps[j][i][m] = -c;
      };
      set(0, 1, 2, s12);
      set(1, 2, 0, Rational(1));
      set(2, 0, 1, Rational(1));
      break;
    }
  }
  return s;
}

KillingForm killing(const LieSpec& spec) {
  int N = spec.dim();
  KillingForm kf;
  kf.K.assign(N, std::vector<Rational>(N, Rational(0)));
  // tr(ad_i ad_j) = sum_{m,n} eps_im^n eps_jn^m
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      Rational t;
      for (int m = 0; m < N; ++m)
        for (auto& [nn, c] : spec.eps[i][m]) {
          auto it = spec.eps[j][nn].find(m);
          if (it != spec.eps[j][nn].end()) t += c * it->second;
        }
      kf.K[i][j] = kf.K[j][i] = -t;
    }
  kf.inverse = inverse(kf.K);
  return kf;
}

Poly poisson(const LieSpec& spec, const Poly& f0, const Poly& g0) {
  Poly f = spec.normalize(f0), g = spec.normalize(g0);
  auto check = [&](const Poly& p) {
    for (auto& v : p.variables())
      if (v.is_coordinate() && !spec.index.count(v))
        throw std::invalid_argument("poisson: variable " + v.name() + " is not a coordinate of " +
                                    spec.name);
  };
  check(f);
  check(g);
  std::vector<std::pair<int, Poly>> df, dg;
  for (auto& v : f.variables())
    if (v.is_coordinate()) df.emplace_back(spec.index.at(v), f.derivative(v));
  for (auto& v : g.variables())
    if (v.is_coordinate()) dg.emplace_back(spec.index.at(v), g.derivative(v));
  Poly r;
  for (auto& [i, fi] : df)
    for (auto& [j, gj] : dg) {
      if (spec.eps[i][j].empty()) continue;
      r += fi * gj * spec.bracket(i, j);
    }
  return r;
}

Poly ad(const LieSpec& spec, int i, const Poly& f) { return poisson(spec, spec.gen(i), f); }

std::vector<ExceptionalSpec> exceptional_table() {
  return {{"G2", Rational(1, 4), Rational(27), {}},
          {"F4", Rational(1, 9), Rational(52), {}},
          {"E6", Rational(1, 12), Rational(78), {}},
          {"E7", Rational(1, 18), Rational(133), {}},
          {"E8", Rational(1, 30), Rational(248), {}}};
}

bool is_exceptional(const std::string& tag) {
  for (auto& e : exceptional_table())
    if (e.name == tag) return true;
  return false;
}

ExceptionalSpec exceptional_spec(const std::string& name) {
  for (auto& e : exceptional_table())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown exceptional algebra '" + name + "'");
}

}  // namespace orbitstar
