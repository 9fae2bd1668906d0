#include "orbitstar/joseph.hpp"

#include <functional>
#include <stdexcept>

namespace orbitstar {

namespace {

Rational delta(int a, int b) { return Rational(a == b ? 1 : 0); }

// x_i * x_j for every pair of basis elements, extended bilinearly to linear
// combinations of coordinates.
class GeneratorTable {
 public:
  explicit GeneratorTable(const StarProduct& p) : p_(&p) {
    int N = p.spec().algebra->dim();
    t_.assign(N, std::vector<Poly>(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) t_[i][j] = p.star(p.gen(i), p.gen(j));
  }
  Poly star(const Poly& f, const Poly& g) const {
    const auto& index = p_->spec().algebra->index;
    Poly r;
    for (auto& [mf, cf] : f.terms())
      for (auto& [mg, cg] : g.terms()) {
        if (mf.degree() != 1 || mg.degree() != 1)
          throw std::domain_error("generator table: arguments must be linear in the coordinates");
        auto [vf, rf] = mf.split([](const Variable& v) { return !v.is_coordinate(); });
        auto [vg, rg] = mg.split([](const Variable& v) { return !v.is_coordinate(); });
        int i = index.at(vf.factors().front().first), j = index.at(vg.factors().front().first);
        r += t_[i][j] * Poly(rf * rg, cf * cg);
      }
    return r;
  }

 private:
  const StarProduct* p_;
  std::vector<std::vector<Poly>> t_;
};

std::string idx(std::initializer_list<int> v) {
  std::string s;
  for (int a : v) s += std::to_string(a);
  return s;
}

}  // namespace

std::vector<IdealGenerator> ideal_generators(const StarProduct& product) {
  const LieSpec& L = *product.spec().algebra;
  if (!product.solution().consistent)
    throw std::invalid_argument("ideal_generators: solution is not consistent");
  GeneratorTable T(product);
  const auto& vals = product.solution().values;
  Poly h = Poly::h();
  int n = L.n;
  std::vector<IdealGenerator> out;
  auto finish = [&](IdealGenerator g) {
    g.lhs = product.normal_form(g.lhs);
    g.rhs = product.normal_form(g.rhs);
    g.verified = g.lhs == g.rhs;
    out.push_back(std::move(g));
  };
  if (L.family == AlgebraFamily::SL) {
    Poly k = vals.count(Variable::k()) ? vals.at(Variable::k()) : Poly(Variable::k());
    Poly kp = vals.count(Variable::kp()) ? vals.at(Variable::kp()) : Poly(Variable::kp());
    Poly gamma = k * Rational(n + 2, 2 * n), gp = kp * Rational(n + 1, n);
    auto U = [&](int a, int b) { return L.coord(a, b); };
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            if (b == d) continue;  // identically zero
            IdealGenerator g;
            g.name = "U_" + idx({a}) + "^" + idx({b}) + "*U_" + idx({c}) + "^" + idx({d}) + " - U_" +
                     idx({a}) + "^" + idx({d}) + "*U_" + idx({c}) + "^" + idx({b});
            g.lhs = T.star(U(a, b), U(c, d)) - T.star(U(a, d), U(c, b));
            g.rhs = h / Rational(2) *
                        (delta(c, b) * U(a, d) - delta(a, d) * U(c, b) - delta(c, d) * U(a, b) +
                         delta(a, b) * U(c, d)) +
                    gamma * (delta(a, d) * U(c, b) + delta(c, b) * U(a, d) - delta(a, b) * U(c, d) -
                             delta(c, d) * U(a, b)) +
                    gp * (delta(a, d) * delta(c, b) - delta(a, b) * delta(c, d));
            finish(std::move(g));
          }
    return out;
  }
  if (L.family != AlgebraFamily::SO)
    throw std::invalid_argument("ideal_generators: family " + family_tag(L.family) + " not supported");
  auto Lc = [&](int a, int b) { return L.coord(a, b); };
  // eta is its own inverse in the antidiagonal basis
  for (int a = 1; a <= n; ++a)
    for (int d = a; d <= n; ++d) {
      IdealGenerator g;
      g.name = "S(eta^bc L_" + idx({a}) + "b*L_c" + idx({d}) + ")";
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c) {
          Rational e = L.eta_at(b, c);
          if (e.is_zero()) continue;
          g.lhs += (T.star(Lc(a, b), Lc(c, d)) + T.star(Lc(c, d), Lc(a, b))) * (e / Rational(2));
        }
      g.rhs = -h * h * Rational(n - 4, 2) * L.eta_at(a, d);
      finish(std::move(g));
    }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          IdealGenerator g;
          g.name = "cyc(" + idx({a, b, c}) + ") L_ab*L_c" + idx({d});
          int t[3] = {a, b, c};
          for (int r = 0; r < 3; ++r) {
            int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
            g.lhs += T.star(Lc(x, y), Lc(z, d)) - h * L.eta_at(x, d) * Lc(y, z);
          }
          finish(std::move(g));
        }
  return out;
}

std::vector<IdealGenerator> ideal_generators(const ExceptionalSpec& spec, const StarSolution& sol) {
  if (!sol.consistent) throw std::invalid_argument("ideal_generators: solution is not consistent");
  ExceptionalModel model(spec);
  static const char* names[] = {"K^ij (x_i*x_j - k K_ij) projected on the trivial representation",
                                "(L_s - l3)(x_i*x_j - k K_ij), component X",
                                "(L_s - l3)(x_i*x_j - k K_ij), component L X",
                                "(L_s - l3)(x_i*x_j - k K_ij), component L^2 X"};
  std::vector<IdealGenerator> out;
  auto eqs = model.equations();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    IdealGenerator g;
    g.name = names[i];
    g.lhs = eqs[i].substitute(sol.values);
    g.verified = g.lhs.is_zero();
    out.push_back(std::move(g));
  }
  IdealGenerator cas;
  cas.name = "K^ij x_i*x_j = k D";
  Poly k = sol.values.at(Variable::k());
  // K^ij x_i x_j vanishes on the orbit and K^ij psi_ij = k K^ij K_ij = k D
  cas.lhs = k * spec.D;
  cas.rhs = sol.values.at(Variable::kp()) / Rational(3) * (spec.D + Rational(2)) -
            Poly::h().pow(2) / Rational(6);
  cas.verified = cas.lhs == cas.rhs;
  out.push_back(std::move(cas));
  return out;
}

AbelianSpectrum abelian_spectrum(int n, const Rational& k) {
  if (n < 2) throw std::invalid_argument("abelian_spectrum: n >= 2 required");
  AbelianSpectrum s;
  s.n = n;
  s.k = k;
  Rational gamma = k / Rational(2) * Rational(n + 2, n);
  s.kp = gamma * gamma / Rational(n + 1, n);
  s.repeated = -gamma;
  s.singleton = gamma * Rational(n - 1);
  // diag(spectrum) against the h = 0 relations
  std::vector<Rational> mu(n, s.repeated);
  mu[n - 1] = s.singleton;
  auto M = [&](int a, int b) { return a == b ? mu[a - 1] : Rational(0); };
  Rational gp = s.kp * Rational(n + 1, n);
  s.satisfies_relations = true;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          Rational lhs = M(a, b) * M(c, d) - M(a, d) * M(c, b);
          Rational rhs = gamma * (delta(a, d) * M(c, b) + delta(c, b) * M(a, d) -
                                  delta(a, b) * M(c, d) - delta(c, d) * M(a, b)) +
                         gp * (delta(a, d) * delta(c, b) - delta(a, b) * delta(c, d));
          if (lhs != rhs) s.satisfies_relations = false;
        }
  return s;
}

namespace {

// Square sparse matrix: rows[i] maps column -> entry.
struct SparseMatrix {
  int dim = 0;
  std::vector<SparseRow> rows;
  explicit SparseMatrix(int d = 0) : dim(d), rows(d) {}
  static SparseMatrix identity(int d) {
    SparseMatrix m(d);
    for (int i = 0; i < d; ++i) m.rows[i][i] = Rational(1);
    return m;
  }
  SparseMatrix operator*(const SparseMatrix& o) const {
    SparseMatrix r(dim);
    for (int i = 0; i < dim; ++i)
      for (auto& [k, a] : rows[i]) axpy(r.rows[i], a, o.rows[k]);
    return r;
  }
  void add(const SparseMatrix& o, const Rational& c) {
    for (int i = 0; i < dim; ++i) axpy(rows[i], c, o.rows[i]);
  }
  bool is_zero() const {
    for (auto& r : rows)
      if (!r.empty()) return false;
    return true;
  }
};

}  // namespace

RepCheckReport rep_check_sl(int n, int N, int k_sign) {
  if (n < 2 || N < 0) throw std::invalid_argument("rep_check_sl: n >= 2 and N >= 0 required");
  Rational dimq = binomial(static_cast<unsigned>(N + n - 1), static_cast<unsigned>(n - 1));
  if (dimq > Rational(kRepCheckMaxDim))
    throw std::invalid_argument("rep_check_sl: dim V_N = " + dimq.str() + " exceeds " +
                                std::to_string(kRepCheckMaxDim));
  RepCheckReport rep;
  rep.n = n;
  rep.N = N;

  // monomial basis of V_N as exponent vectors
  std::vector<std::vector<int>> mons;
  std::function<void(std::vector<int>&, int, int)> build = [&](std::vector<int>& e, int i, int left) {
    if (i == n - 1) {
      e.push_back(left);
      mons.push_back(e);
      e.pop_back();
      return;
    }
    for (int t = left; t >= 0; --t) {
      e.push_back(t);
      build(e, i + 1, left - t);
      e.pop_back();
    }
  };
  std::vector<int> scratch;
  build(scratch, 0, N);
  std::map<std::vector<int>, int> where;
  for (std::size_t i = 0; i < mons.size(); ++i) where[mons[i]] = static_cast<int>(i);
  int dim = static_cast<int>(mons.size());
  rep.dim = dim;

  Rational shift(N, n);
  // U~_a^b at h = 1, acting on column vectors
  auto op = [&](int a, int b) {
    SparseMatrix m(dim);
    for (int col = 0; col < dim; ++col) {
      auto e = mons[col];
      if (e[b - 1] > 0) {
        Rational c(e[b - 1]);
        e[b - 1]--;
        e[a - 1]++;
        m.rows[where.at(e)][col] += c;
      }
      if (a == b) {
        m.rows[col][col] -= shift;
        if (m.rows[col][col].is_zero()) m.rows[col].erase(col);
      }
    }
    return m;
  };
  std::vector<std::vector<SparseMatrix>> U(n + 1, std::vector<SparseMatrix>(n + 1));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) U[a][b] = op(a, b);
  SparseMatrix I = SparseMatrix::identity(dim);

  rep.commutation = rep.identity = true;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          SparseMatrix m = U[a][b] * U[c][d];
          m.add(U[c][d] * U[a][b], Rational(-1));
          m.add(U[a][d], -delta(c, b));
          m.add(U[c][b], delta(a, d));
          if (!m.is_zero()) rep.commutation = false;

          SparseMatrix q = U[a][b] * U[c][d];
          q.add(U[a][d] * U[c][b], Rational(-1));
          auto half = [&](int bb, int dd, const Rational& s) {
            q.add(U[a][dd], -s * delta(c, bb));
            q.add(U[c][dd], s * shift * delta(a, bb));
            q.add(U[a][bb], s * shift * delta(c, dd));
            q.add(I, s * shift * (shift + Rational(1)) * delta(a, bb) * delta(c, dd));
          };
          half(b, d, Rational(1));
          half(d, b, Rational(-1));
          if (!q.is_zero()) rep.identity = false;
        }

  // parameters realized by the representation
  rep.k_over_h = Rational(k_sign) * (Rational(1) + Rational(2 * N, n)) / (Rational(1) + Rational(2, n));
  rep.kp_over_h2 = shift * (shift + Rational(1)) / (Rational(1) + Rational(1, n));
  rep.parameters = rep_parameters_satisfy_residual(n, k_sign);

  // the deformed ideal acts as zero, with the solved phi
  SolvedFamily fam = solve_family("sl", n);
  std::map<Variable, Poly> at{{Variable::h(), Poly(1)}, {Variable::k(), Poly(rep.k_over_h)}};
  std::map<Variable, Poly> values;
  for (auto& [v, p] : fam.solution.values) values[v] = p.substitute(at);
  values[Variable::h()] = Poly(1);
  values[Variable::k()] = Poly(rep.k_over_h);
  values[Variable::kp()] = Poly(rep.kp_over_h2);
  Ansatz a = fam.ansatz.substituted(values);
  const LieSpec& L = *fam.spec.algebra;
  std::vector<SparseMatrix> rho;
  for (auto& v : L.basis) rho.push_back(U[v.idx[0]][v.idx[1]]);
  WeylSymbol W(L);
  auto rho_sym = [&](const Poly& f) {
    SparseMatrix r(dim);
    for (auto& [w, c] : W.words(f)) {
      if (!c.is_constant()) throw std::logic_error("rep_check_sl: symbolic coefficient left");
      SparseMatrix m = I;
      for (int i : w) m = m * rho[i];
      r.add(m, c.constant_term());
    }
    return r;
  };
  auto rho_omega = [&](const Poly& f) { return rho_sym(f - a.apply_psi(f)); };
  rep.ideal_degree2 = rep.ideal_degree3 = true;
  for (std::size_t al = 0; al < fam.spec.relations.size(); ++al) {
    const Poly& g = fam.spec.relations[al];
    if (!rho_omega(g).is_zero()) rep.ideal_degree2 = false;
    for (int k = 0; k < L.dim(); ++k) {
      SparseMatrix lhs = rho_sym(g * L.gen(k));
      lhs.add(rho_omega(a.apply_phi(g * L.gen(k))), Rational(-1));
      if (!lhs.is_zero()) rep.ideal_degree3 = false;
    }
  }
  return rep;
}

bool rep_parameters_satisfy_residual(int n, int sign) {
  Poly h = Poly::h(), N(Variable::deg_N());
  Poly s = N / Rational(n);
  Poly k = h * (Poly(1) + N * Rational(2, n)) * Rational(sign) / (Rational(1) + Rational(2, n));
  Poly kp = h * h * s * (s + Poly(1)) / (Rational(1) + Rational(1, n));
  // 4 k'(1 + 1/n) = k^2 (1 + 2/n)^2 - h^2
  Rational a = Rational(1) + Rational(1, n), b = Rational(1) + Rational(2, n);
  Poly residual = kp * (Rational(4) * a) - k * k * (b * b) + h * h;
  return residual.is_zero();
}

}  // namespace orbitstar
