#include "orbitstar/orbit.hpp"

#include "orbitstar/bgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitstar {

namespace {

bool is_coord(const Variable& v) { return v.is_coordinate(); }

// All monomials of degree d in the given variables, in increasing order.
std::vector<Monomial> monomials_of_degree(const std::vector<Variable>& vars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<std::size_t> pick(d, 0);
  if (d == 0) return {Monomial()};
  if (vars.empty()) return {};
  while (true) {
    Monomial m;
    for (auto i : pick) m = m * Monomial(vars[i]);
    out.push_back(m);
    std::size_t pos = d;
    while (pos > 0 && pick[pos - 1] == vars.size() - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t j = pos; j < d; ++j) pick[j] = pick[pos - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Keeps the relations that are linearly independent, in input order.
std::vector<Poly> independent(const std::vector<Poly>& raw) {
  std::map<Monomial, int> col;
  RowEchelon ech;
  std::vector<Poly> out;
  for (auto& g : raw) {
    if (g.is_zero()) continue;
    SparseRow row;
    for (auto& [m, c] : g.terms()) {
      auto it = col.try_emplace(m, static_cast<int>(col.size())).first;
      row[it->second] = c;
    }
    if (ech.add(row)) out.push_back(g);
  }
  return out;
}

Poly sum_of_squares(int upto) {
  Poly r;
  for (int i = 1; i <= upto; ++i) r += x(i) * x(i);
  return r;
}

}  // namespace

DenseMatrix OrbitSpec::relation_tensor(std::size_t a) const {
  DenseMatrix g(N(), std::vector<Rational>(N(), Rational(0)));
  std::map<Variable, int> idx;
  for (int i = 0; i < N(); ++i) idx[coords[i]] = i;
  for (auto& [m, c] : relations.at(a).terms()) {
    auto& f = m.factors();
    if (f.size() == 1) {
      int i = idx.at(f[0].first);
      g[i][i] = c;
    } else {
      int i = idx.at(f[0].first), j = idx.at(f[1].first);
      g[i][j] = g[j][i] = c / Rational(2);
    }
  }
  return g;
}

OrbitSpec simple_cone(int N) {
  if (N < 2) throw std::invalid_argument("simple_cone needs N >= 2");
  OrbitSpec s;
  s.kind = OrbitKind::Cone;
  s.name = "cone(" + std::to_string(N) + ")";
  for (int i = 1; i <= N; ++i) s.coords.push_back(Variable::x(i));
  s.cone_var = Variable::x(N);
  s.cone_rho = sum_of_squares(N - 1);
  s.relations = {x(N) * x(N) - s.cone_rho};
  return s;
}

OrbitSpec minimal_orbit(const std::string& family, int n) {
  if (is_exceptional(family))
    throw std::invalid_argument(family +
                                " has no concrete orbit model; use the exceptional solver");
  AlgebraFamily fam = parse_family(family);
  OrbitSpec s;
  if (fam == AlgebraFamily::SO3 || fam == AlgebraFamily::SO21) {
    s = simple_cone(3);
    s.algebra = make_algebra(fam, 3);
    s.name = s.algebra->name + " cone";
    if (fam == AlgebraFamily::SO3) {
      // x1^2 + x2^2 + x3^2: the Killing form is definite.
      s.cone_rho = -sum_of_squares(2);
      s.relations = {x(3) * x(3) - s.cone_rho};
    }
    return s;
  }
  if (fam == AlgebraFamily::SO && n < 4)
    throw std::invalid_argument("so(n) minimal orbit model needs n >= 4; use so3/so21 for n = 3");
  s.algebra = make_algebra(fam, n);
  const LieSpec& g = *s.algebra;
  s.coords = g.basis;
  s.name = g.name + " minimal orbit";
  std::vector<Poly> raw;
  switch (fam) {
    case AlgebraFamily::SL: {
      s.kind = OrbitKind::SL;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 1; d <= n; ++d)
              raw.push_back(g.coord(a, b) * g.coord(c, d) - g.coord(a, d) * g.coord(c, b));
      for (auto& v : g.basis)
        s.embedding[v] = Poly(Variable::p(v.idx[0])) * Poly(Variable::q(v.idx[1]));
      Poly qp;
      for (int a = 1; a <= n; ++a) qp += Poly(Variable::q(a)) * Poly(Variable::p(a));
      s.constraints = {qp};
      break;
    }
    case AlgebraFamily::SO: {
      s.kind = OrbitKind::SO;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 1; d <= n; ++d)
              raw.push_back(g.coord(a, b) * g.coord(c, d) + g.coord(b, c) * g.coord(a, d) +
                            g.coord(c, a) * g.coord(b, d));
      for (int a = 1; a <= n; ++a)
        for (int d = a; d <= n; ++d) {
          Poly r;
          for (int b = 1; b <= n; ++b) r += g.coord(a, b) * g.coord(n + 1 - b, d);
          raw.push_back(r);
        }
      for (auto& v : g.basis) {
        int a = v.idx[0], c = v.idx[1];
        s.embedding[v] = Poly(Variable::q(a)) * Poly(Variable::p(c)) -
                         Poly(Variable::q(c)) * Poly(Variable::p(a));
      }
      Poly pp, qq, qp;
      for (int a = 1; a <= n; ++a) {
        pp += Poly(Variable::p(a)) * Poly(Variable::p(n + 1 - a));
        qq += Poly(Variable::q(a)) * Poly(Variable::q(n + 1 - a));
        qp += Poly(Variable::q(a)) * Poly(Variable::p(n + 1 - a));
      }
      s.constraints = {pp, qq, qp};
      break;
    }
    case AlgebraFamily::SP: {
      s.kind = OrbitKind::SP;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 1; d <= n; ++d)
              raw.push_back(g.coord(a, b) * g.coord(c, d) - g.coord(a, d) * g.coord(c, b));
      for (auto& v : g.basis)
        s.embedding[v] = Poly(Variable::xi(v.idx[0])) * Poly(Variable::xi(v.idx[1]));
      break;
    }
    default:
      break;
  }
  s.relations = independent(raw);
  return s;
}

Poly cone_normal_form(const OrbitSpec& spec, const Poly& f, const Poly& shift) {
  if (!spec.cone_var) throw std::invalid_argument("cone_normal_form: not a cone");
  const Variable v = *spec.cone_var;
  Poly sub = spec.cone_rho + shift;
  std::vector<Poly> powers{Poly(1)};
  Poly r;
  for (auto& [m, c] : f.terms()) {
    unsigned e = m.exponent(v);
    while (powers.size() <= e / 2) powers.push_back(powers.back() * sub);
    Poly t = powers[e / 2] * Poly(m.without(v) * Monomial(v, e % 2), c);
    r += t;
  }
  return r;
}

IdealReducer::IdealReducer(const OrbitSpec& spec, unsigned max_degree)
    : spec_(&spec), max_degree_(max_degree) {
  if (spec.kind == OrbitKind::Cone) return;
  graded_.resize(max_degree + 1);
  for (unsigned d = 2; d <= max_degree; ++d) {
    auto gr = std::make_unique<Graded>();
    gr->mono = monomials_of_degree(spec.coords, d);
    for (std::size_t i = 0; i < gr->mono.size(); ++i) gr->col[gr->mono[i]] = static_cast<int>(i);
    for (auto& m : monomials_of_degree(spec.coords, d - 2))
      for (auto& g : spec.relations) {
        SparseRow row;
        for (auto& [gm, c] : g.terms()) row[gr->col.at(gm * m)] = c;
        gr->ech.add(std::move(row));
      }
    graded_[d] = std::move(gr);
  }
}

Poly IdealReducer::reduce_coordinate_part(const Poly& f) const {
  std::map<unsigned, SparseRow> rows;
  Poly out;
  for (auto& [m, c] : f.terms()) {
    unsigned d = m.total_degree();
    if (d < 2) {
      out.add_term(m, c);
      continue;
    }
    if (d > max_degree_ || !graded_[d])
      throw std::domain_error("IdealReducer: degree " + std::to_string(d) + " exceeds the bound");
    rows[d][graded_[d]->col.at(m)] += c;
  }
  for (auto& [d, row] : rows) {
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : ++it;
    for (auto& [col, c] : graded_[d]->ech.reduce(std::move(row))) out.add_term(graded_[d]->mono[col], c);
  }
  return out;
}

Poly IdealReducer::normal_form(const Poly& f0) const {
  Poly f = spec_->normalize(f0);
  if (spec_->kind == OrbitKind::Cone) return cone_normal_form(*spec_, f);
  Poly out;
  for (auto& [param, coord_part] : f.collect([](const Variable& v) { return !is_coord(v); }))
    out += reduce_coordinate_part(coord_part) * Poly(param);
  return out;
}

Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  return Rational(num(rng), den(rng));
}

namespace {

Rational nonzero_rational(std::mt19937_64& rng) {
  Rational r;
  while (r.is_zero()) r = random_rational(rng);
  return r;
}

bool cone_rho_is_sum_of_squares(const OrbitSpec& s) {
  return s.kind == OrbitKind::Cone && s.cone_rho == sum_of_squares(s.N() - 1) &&
         *s.cone_var == Variable::x(s.N());
}

}  // namespace

bool has_symbolic_oracle(const OrbitSpec& spec) { return spec.kind != OrbitKind::SO; }

bool has_random_oracle(const OrbitSpec& spec) {
  return spec.kind != OrbitKind::Cone || cone_rho_is_sum_of_squares(spec);
}

std::map<Variable, Rational> random_parameter_point(const OrbitSpec& spec, std::mt19937_64& rng) {
  std::map<Variable, Rational> pt;
  int n = spec.algebra ? spec.algebra->n : 0;
  switch (spec.kind) {
    case OrbitKind::SL: {
      Rational s;
      for (int a = 1; a <= n; ++a) pt[Variable::p(a)] = a == n ? nonzero_rational(rng) : random_rational(rng);
      for (int a = 1; a < n; ++a) {
        pt[Variable::q(a)] = random_rational(rng);
        s += pt[Variable::q(a)] * pt[Variable::p(a)];
      }
      pt[Variable::q(n)] = -s / pt[Variable::p(n)];
      break;
    }
    case OrbitKind::SO: {
      // Isotropic orthogonal pair g e_1, g e_2 with g = (1 - S)^{-1}(1 + S)
      // the Cayley transform of S = eta W, W antisymmetric.
      while (true) {
        DenseMatrix W(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            W[i][j] = random_rational(rng, 3, 3);
            W[j][i] = -W[i][j];
          }
        DenseMatrix S = matmul(*spec.algebra->eta, W);
        DenseMatrix A = S, B = S;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            A[i][j] = (i == j ? Rational(1) : Rational(0)) - S[i][j];
            B[i][j] = (i == j ? Rational(1) : Rational(0)) + S[i][j];
          }
        auto Ainv = inverse(A);
        if (!Ainv) continue;
        DenseMatrix G = matmul(*Ainv, B);
        Rational sp = nonzero_rational(rng), sq = nonzero_rational(rng), mix = random_rational(rng);
        for (int a = 1; a <= n; ++a) {
          pt[Variable::p(a)] = sp * G[a - 1][0];
          pt[Variable::q(a)] = sq * G[a - 1][1] + mix * G[a - 1][0];
        }
        break;
      }
      break;
    }
    case OrbitKind::SP:
      for (int a = 1; a <= n; ++a) pt[Variable::xi(a)] = random_rational(rng);
      break;
    case OrbitKind::Cone:
      throw std::invalid_argument("random_parameter_point: cones have no parameters");
  }
  return pt;
}

std::map<Variable, Rational> random_orbit_point(const OrbitSpec& spec, std::mt19937_64& rng) {
  std::map<Variable, Rational> pt;
  if (spec.kind == OrbitKind::Cone) {
    if (!cone_rho_is_sum_of_squares(spec))
      throw std::invalid_argument("random_orbit_point: cone has no rational points model");
    // Stereographic projection onto the unit sphere in N-1 dimensions.
    int m = spec.N() - 1;
    std::vector<Rational> u(m - 1);
    Rational s;
    for (auto& ui : u) {
      ui = random_rational(rng);
      s += ui * ui;
    }
    Rational r = nonzero_rational(rng), den = Rational(1) + s;
    for (int i = 0; i < m - 1; ++i) pt[Variable::x(i + 1)] = r * Rational(2) * u[i] / den;
    pt[Variable::x(m)] = r * (Rational(1) - s) / den;
    pt[Variable::x(m + 1)] = r;
    return pt;
  }
  auto par = random_parameter_point(spec, rng);
  for (auto& v : spec.coords) {
    Poly val = spec.embedding.at(v).evaluate(par);
    pt[v] = val.constant_term();
  }
  return pt;
}

namespace {

bool symbolic_vanishes(const OrbitSpec& spec, const Poly& f) {
  switch (spec.kind) {
    case OrbitKind::Cone:
      return cone_normal_form(spec, f).is_zero();
    case OrbitKind::SP:
      return f.substitute(spec.embedding).is_zero();
    case OrbitKind::SL: {
      // Clear p_n and eliminate q^n = -(sum_{a<n} q^a p_a) / p_n.
      int n = spec.algebra->n;
      Poly g = f.substitute(spec.embedding);
      Variable qn = Variable::q(n);
      unsigned d = g.degree_in(qn);
      Poly s;
      for (int a = 1; a < n; ++a) s += Poly(Variable::q(a)) * Poly(Variable::p(a));
      Poly pn(Variable::p(n));
      Poly r;
      for (auto& [mono, coef] : g.collect([&](const Variable& v) { return v == qn; })) {
        unsigned j = mono.exponent(qn);
        r += coef * (-s).pow(j) * pn.pow(d - j);
      }
      return r.is_zero();
    }
    case OrbitKind::SO:
      break;
  }
  throw std::logic_error("no symbolic oracle");
}

}  // namespace

OrbitOracle::OrbitOracle(const OrbitSpec& spec, OracleOptions opt) : spec_(&spec), opt_(opt) {
  std::set<Variable> pv;
  for (auto& [v, e] : spec.embedding)
    for (auto& w : e.variables()) pv.insert(w);
  params_ = spec.kind == OrbitKind::Cone ? spec.coords.size() : pv.size();
  for (std::uint64_t round = 0; round < 2; ++round)
    rng_[round].seed(opt.seed * 0x9E3779B97F4A7C15ULL + round + 1);
}

bool OrbitOracle::random_vanishes(const Poly& f) {
  unsigned deg = f.degree_if(is_coord);
  std::size_t need = (deg + 1) * params_;
  for (std::size_t round = 0; round < 2; ++round) {
    auto& pts = points_[round];
    while (pts.size() < need) pts.push_back(random_orbit_point(*spec_, rng_[round]));
    for (std::size_t i = 0; i < need; ++i)
      if (!f.evaluate(pts[i]).is_zero()) return false;
  }
  return true;
}

bool OrbitOracle::vanishes(const Poly& f0) {
  Poly f = spec_->normalize(f0);
  if (f.is_zero()) return true;
  if (has_symbolic_oracle(*spec_) && !(opt_.force_random && has_random_oracle(*spec_)))
    return symbolic_vanishes(*spec_, f);
  return random_vanishes(f);
}

bool vanishes_on_orbit(const OrbitSpec& spec, const Poly& f, const OracleOptions& opt) {
  return OrbitOracle(spec, opt).vanishes(f);
}

std::vector<Poly> closure_defects(const Chain& c) {
  unsigned p = c.arity();
  std::map<std::pair<unsigned, Chain::Key>, Poly> groups;
  for (auto& [key, a] : c.terms()) {
    for (unsigned s = 0; s + 1 < p; ++s) {
      Chain::Key rest;
      for (unsigned j = 0; j < p; ++j)
        if (j != s && j != s + 1) rest.push_back(key[j]);
      groups[{s, rest}].add_term(key[s] * key[s + 1], s % 2 == 0 ? a : -a);
    }
  }
  std::vector<Poly> out;
  for (auto& [k, poly] : groups)
    if (!poly.is_zero()) out.push_back(poly);
  return out;
}

bool chain_is_closed(const OrbitSpec& spec, const Chain& c, const OracleOptions& opt) {
  if (!c.is_linear()) throw std::invalid_argument("chain_is_closed: chain is not linear");
  OrbitOracle oracle(spec, opt);
  for (auto& g : closure_defects(c))
    if (!oracle.vanishes(g)) return false;
  return true;
}

namespace {

Chain row_to_chain(const SparseRow& v, const std::vector<Variable>& coords, unsigned p) {
  int N = static_cast<int>(coords.size());
  Chain c(p);
  Chain::Key key(p);
  for (auto& [u, a] : v) {
    int rem = u;
    for (int s = static_cast<int>(p) - 1; s >= 0; --s) {
      key[s] = Monomial(coords[rem % N]);
      rem /= N;
    }
    c.add(key, a);
  }
  return c;
}

SparseRow act_on_row(const PermAlgElem& e, const SparseRow& v, int N, unsigned p) {
  SparseRow out;
  std::vector<int> ix(p), jx(p);
  for (auto& [u, a] : v) {
    int rem = u;
    for (int s = static_cast<int>(p) - 1; s >= 0; --s) {
      ix[s] = rem % N;
      rem /= N;
    }
    for (auto& [sig, c] : e.terms()) {
      for (unsigned s = 0; s < p; ++s) jx[sig(s)] = ix[s];
      int w = 0;
      for (unsigned s = 0; s < p; ++s) w = w * N + jx[s];
      out[w] += a * c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : ++it;
  return out;
}

}  // namespace

ChainSpace closed_linear_chains(const OrbitSpec& spec, unsigned p) {
  if (p != 2 && p != 3) throw std::invalid_argument("closed_linear_chains supports p = 2 or 3");
  int N = spec.N();
  IdealReducer red(spec, 2);
  // Normal forms of x_i x_j as sparse rows over quotient monomials.
  std::map<Monomial, int> qcol;
  std::vector<std::vector<SparseRow>> nf(N, std::vector<SparseRow>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Poly r = red.normal_form(Poly(spec.coords[i]) * Poly(spec.coords[j]));
      for (auto& [m, c] : r.terms()) {
        int col = qcol.try_emplace(m, static_cast<int>(qcol.size())).first->second;
        nf[i][j][col] = c;
      }
    }
  int total = 1;
  for (unsigned s = 0; s < p; ++s) total *= N;
  RowEchelon ech;
  int others = total / (N * N);
  for (unsigned s = 0; s + 1 < p; ++s) {
    for (int o = 0; o < others; ++o) {
      // Split o into the p-2 remaining slot indices.
      std::vector<int> rest(p - 2);
      int rem = o;
      for (int t = static_cast<int>(p) - 3; t >= 0; --t) {
        rest[t] = rem % N;
        rem /= N;
      }
      std::map<int, SparseRow> eqs;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          std::vector<int> full;
          for (unsigned t = 0, r = 0; t < p; ++t) {
            if (t == s) full.push_back(i);
            else if (t == s + 1) full.push_back(j);
            else full.push_back(rest[r++]);
          }
          int u = 0;
          for (int v : full) u = u * N + v;
          for (auto& [col, c] : nf[i][j]) eqs[col][u] += c;
        }
      for (auto& [col, row] : eqs) {
        for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : ++it;
        if (!row.empty()) ech.add(std::move(row));
      }
    }
  }
  auto kernel = ech.kernel(total);
  ChainSpace cs;
  cs.p = p;
  cs.kernel_dim = kernel.size();
  for (unsigned k = 1; k <= p; ++k) {
    RowEchelon img;
    ChainSector sec{k, {}};
    for (auto& v : kernel) {
      SparseRow w = act_on_row(garsia(p, k), v, N, p);
      if (img.add(w)) {}
    }
    for (auto& [piv, row] : img.rows()) sec.basis.push_back(row_to_chain(row, spec.coords, p));
    cs.sectors.push_back(std::move(sec));
  }
  return cs;
}

Chain conjecture_chain(const OrbitSpec& spec, std::size_t alpha, std::size_t beta) {
  if (!spec.algebra) throw std::invalid_argument("conjecture_chain needs a Poisson structure");
  const LieSpec& g = *spec.algebra;
  DenseMatrix ga = spec.relation_tensor(alpha), gb = spec.relation_tensor(beta);
  int N = spec.N();
  Chain c(3);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (ga[i][j].is_zero()) continue;
      for (int k = 0; k < N; ++k) {
        Poly br = g.bracket(j, k);
        if (br.is_zero()) continue;
        for (int l = 0; l < N; ++l) {
          if (gb[k][l].is_zero()) continue;
          c.add({g.gen(i), br, g.gen(l)}, ga[i][j] * gb[k][l]);
        }
      }
    }
  return perm_act(garsia(3, 1), c);
}

Chain cone_basis_chain(const OrbitSpec& spec, unsigned k, const std::vector<int>& free_indices) {
  unsigned l = static_cast<unsigned>(free_indices.size());
  unsigned len = 2 * k + l;
  if (len == 0) throw std::invalid_argument("cone_basis_chain: empty chain");
  int N = spec.N();
  DenseMatrix g = spec.relation_tensor(0);
  Chain out(len);
  // Object t in reference order: pairs (2r, 2r+1) then the free slots.
  auto perms = Permutation::all(len);
  std::vector<int> label(len);
  std::function<void(unsigned, Rational)> over_pairs = [&](unsigned r, Rational w) {
    if (r == k) {
      for (unsigned f = 0; f < l; ++f) label[2 * k + f] = free_indices[f];
      for (auto& pos : perms) {
        bool ok = true;
        for (unsigned q = 0; q < k && ok; ++q) ok = pos(2 * q) < pos(2 * q + 1);
        if (!ok) continue;
        std::vector<Poly> f(len);
        for (unsigned t = 0; t < len; ++t) f[pos(t)] = Poly(spec.coords[label[t]]);
        out.add(f, w * Rational(pos.sign()));
      }
      return;
    }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (g[i][j].is_zero()) continue;
        label[2 * r] = i;
        label[2 * r + 1] = j;
        over_pairs(r + 1, w * g[i][j]);
      }
  };
  over_pairs(0, Rational(1));
  return out;
}

}  // namespace orbitstar
