#include "orbitstar/star.hpp"

#include "orbitstar/special.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbitstar {

namespace {

bool is_coord(const Variable& v) { return v.is_coordinate(); }

Poly coordinate_degree_part(const Poly& f, unsigned d) {
  Poly r;
  for (auto& [m, c] : f.terms())
    if (m.degree_if(is_coord) == d) r.add_term(m, c);
  return r;
}

// Scales p so that its first coefficient is 1.
Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.terms().begin()->second;
}

// Scales a relation among parameters so that h^2 has coefficient 1 when it
// occurs, else the first coefficient.
Poly normalize_relation(const Poly& p) {
  Rational c = p.coeff(Monomial(Variable::h(), 2));
  if (!c.is_zero()) return p / c;
  return monic(p);
}

}  // namespace

// ---------------------------------------------------------------- WeylSymbol

const Poly& WeylSymbol::of_word(const std::vector<int>& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  Monomial m;
  for (int i : w) m = m * Monomial(spec_->basis[i]);
  Poly r(m);
  std::size_t p = w.size();
  if (p >= 2) {
    // w = S(w) + (1/p!) sum_sigma (w - w_sigma); each w - w_sigma is a sum of
    // commutators collected while sorting w_sigma back into w.
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    Poly corr;
    long count = 0;
    do {
      ++count;
      std::vector<int> cur = perm;
      for (std::size_t pass = 0; pass < p; ++pass)
        for (std::size_t t = 0; t + 1 < p; ++t) {
          if (cur[t] < cur[t + 1]) continue;
          int y = w[cur[t]], x = w[cur[t + 1]];
          for (auto& [mm, c] : spec_->eps[y][x]) {
            std::vector<int> shorter;
            for (std::size_t s = 0; s < t; ++s) shorter.push_back(w[cur[s]]);
            shorter.push_back(mm);
            for (std::size_t s = t + 2; s < p; ++s) shorter.push_back(w[cur[s]]);
            Poly sub = of_word(shorter);
            corr.add_scaled(sub, -c);
          }
          std::swap(cur[t], cur[t + 1]);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    r += corr * Poly::h() / Rational(count);
  }
  return memo_.emplace(w, std::move(r)).first->second;
}

std::vector<std::pair<std::vector<int>, Poly>> WeylSymbol::words(const Poly& f) const {
  std::vector<std::pair<std::vector<int>, Poly>> out;
  for (auto& [m, c] : f.terms()) {
    auto [coordm, rest] = m.split([](const Variable& v) { return !v.is_coordinate(); });
    std::vector<int> letters;
    for (auto& [v, e] : coordm.factors())
      for (unsigned t = 0; t < e; ++t) letters.push_back(spec_->index.at(v));
    std::sort(letters.begin(), letters.end());
    std::vector<std::vector<int>> arr;
    do arr.push_back(letters);
    while (std::next_permutation(letters.begin(), letters.end()));
    Poly coef(rest, c / Rational(static_cast<long>(arr.size())));
    for (auto& a : arr) out.emplace_back(a, coef);
  }
  return out;
}

Poly WeylSymbol::product(const Poly& f, const Poly& g) {
  auto wf = words(f), wg = words(g);
  Poly r;
  for (auto& [a, ca] : wf)
    for (auto& [b, cb] : wg) {
      std::vector<int> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      Poly s = of_word(ab);
      r += s * (ca * cb);
    }
  return r;
}

// ---------------------------------------------------------- ConstraintSystem

SparseRow ConstraintSystem::row(const Poly& eq) const {
  SparseRow r;
  int U = static_cast<int>(unknowns.size());
  for (auto& [m, c] : eq.terms()) {
    int col = -1;
    for (int u = 0; u < U; ++u)
      if (m.exponent(unknowns[u]) > 0) {
        if (m != Monomial(unknowns[u]))
          throw std::invalid_argument("constraint system: unknown " + unknowns[u].name() +
                                      " does not enter linearly");
        col = u;
      }
    if (col < 0) col = U + columns.at(m);
    r[col] += c;
    if (r[col].is_zero()) r.erase(col);
  }
  return r;
}

const RowEchelon& ConstraintSystem::echelon() const {
  if (!echelon_cache) {
    echelon_cache = std::make_shared<RowEchelon>();
    for (auto& e : equations) echelon_cache->add(row(e));
  }
  return *echelon_cache;
}

bool ConstraintSystem::implies(const Poly& eq) const {
  SparseRow r;
  try {
    r = row(eq);
  } catch (const std::out_of_range&) {
    return false;
  }
  return echelon().contains(r);
}

namespace {

void finish_columns(ConstraintSystem& sys, const std::set<Poly>& eqs) {
  std::set<Monomial> params;
  std::set<Variable> unk(sys.unknowns.begin(), sys.unknowns.end());
  for (auto& e : eqs)
    for (auto& [m, c] : e.terms()) {
      bool has_unknown = false;
      for (auto& [v, ex] : m.factors()) has_unknown |= unk.count(v) != 0;
      if (!has_unknown) params.insert(m);
    }
  for (auto& m : params) {
    sys.columns[m] = static_cast<int>(sys.column_monomials.size());
    sys.column_monomials.push_back(m);
  }
  sys.equations.assign(eqs.begin(), eqs.end());
}

}  // namespace

ConstraintSystem build_constraint_system(const OrbitSpec& spec, const Ansatz& ansatz,
                                         const std::vector<Variable>& extra_unknowns) {
  if (!spec.algebra || spec.algebra->family != ansatz.family || spec.algebra->n != ansatz.n)
    throw std::invalid_argument("build_constraint_system: ansatz does not match " + spec.name);
  const LieSpec& L = *spec.algebra;
  int N = L.dim();
  IdealReducer reducer(spec, 2);
  WeylSymbol weyl(L);

  ConstraintSystem sys;
  sys.name = spec.name;
  sys.unknowns = ansatz.phi_params;
  sys.unknowns.insert(sys.unknowns.end(), extra_unknowns.begin(), extra_unknowns.end());
  sys.relations = spec.relations.size();

  // R(i,j,k): symbol of the Jordan product of S(x_i x_j) with x_k, minus x_i x_j x_k.
  auto jordan_defect = [&](int i, int j, int k) {
    Poly s = weyl.of_word({i, j, k}) + weyl.of_word({j, i, k}) + weyl.of_word({k, i, j}) +
             weyl.of_word({k, j, i});
    return s / Rational(4) - L.gen(i) * L.gen(j) * L.gen(k);
  };

  std::set<Poly> eqs;
  for (std::size_t a = 0; a < spec.relations.size(); ++a) {
    DenseMatrix G = spec.relation_tensor(a);
    std::vector<std::tuple<int, int, Rational>> supp;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (!G[i][j].is_zero()) supp.emplace_back(i, j, G[i][j]);
    Poly Psi;
    for (auto& [i, j, c] : supp) Psi.add_scaled(ansatz.psi[i][j], c);
    for (int k = 0; k < N; ++k) {
      Poly expr = Psi * L.gen(k) + ansatz.psi_linear(Psi, k);
      for (auto& [i, j, c] : supp) {
        expr.add_scaled(ansatz.phi(i, j, k), -c);
        expr.add_scaled(jordan_defect(i, j, k), -c);
      }
      Poly nf = reducer.normal_form(expr);
      for (auto& [m, cof] : nf.collect(is_coord)) eqs.insert(monic(cof));
    }
  }
  finish_columns(sys, eqs);
  return sys;
}

bool symmetric_consistency_holds(const OrbitSpec& spec, const Ansatz& ansatz) {
  const LieSpec& L = *spec.algebra;
  IdealReducer reducer(spec, 2);
  for (std::size_t a = 0; a < spec.relations.size(); ++a) {
    DenseMatrix G = spec.relation_tensor(a);
    Poly Psi;
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j)
        if (!G[i][j].is_zero()) Psi.add_scaled(ansatz.psi[i][j], G[i][j]);
    for (int k = 0; k < L.dim(); ++k) {
      Poly d = ad(L, k, spec.relations[a]) - ad(L, k, Psi);
      if (!reducer.normal_form(d + ansatz.apply_psi(d)).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- solving

StarSolution solve_system(const ConstraintSystem& sys, const std::vector<Variable>& secondary) {
  StarSolution sol;
  sol.name = sys.name;
  const RowEchelon& ech = sys.echelon();
  int U = static_cast<int>(sys.unknowns.size());
  // Unknowns without a pivot stay free; their columns enter the values.
  auto to_poly = [&](const SparseRow& r, int skip) {
    Poly p;
    for (auto& [col, c] : r) {
      if (col == skip) continue;
      if (col < U)
        p.add_term(Monomial(sys.unknowns[col]), c);
      else
        p.add_term(sys.column_monomials[col - U], c);
    }
    return p;
  };
  for (int u = 0; u < U; ++u) {
    if (!ech.is_pivot(u)) {
      sol.free_parameters.push_back(sys.unknowns[u]);
      continue;
    }
    sol.values[sys.unknowns[u]] = -to_poly(ech.rows().at(u), u);
  }
  std::vector<Poly> residual;
  for (auto& [piv, r] : ech.rows())
    if (piv >= U) residual.push_back(to_poly(r, -1));

  for (auto& v : secondary) {
    for (std::size_t i = 0; i < residual.size(); ++i) {
      Poly& R = residual[i];
      if (R.degree_in(v) != 1) continue;
      Poly c = R.derivative(v);
      if (!c.is_constant() || c.is_zero()) continue;
      Poly val = -(R - c * Poly(v)) / c.constant_term();
      sol.residual.push_back(normalize_relation(R));
      std::map<Variable, Poly> sub{{v, val}};
      for (auto& [w, p] : sol.values) p = p.substitute(sub);
      sol.values[v] = val;
      residual.erase(residual.begin() + static_cast<long>(i));
      for (auto& q : residual) q = q.substitute(sub);
      break;
    }
  }
  bool clean = true;
  for (auto& q : residual)
    if (!q.is_zero()) {
      sol.residual.push_back(normalize_relation(q));
      clean = false;
    }
  std::set<Variable> vars;
  for (auto& m : sys.column_monomials)
    for (auto& [v, e] : m.factors())
      if (v.family != Family::H) vars.insert(v);
  for (auto& v : vars)
    if (!sol.values.count(v)) sol.free_parameters.push_back(v);
  sol.consistent = clean;
  return sol;
}

bool verify_solution(const ConstraintSystem& sys, const StarSolution& sol) {
  for (auto& e : sys.equations)
    if (!e.substitute(sol.values).is_zero()) return false;
  return true;
}

SolvedFamily solve_family(const std::string& family, int n) {
  AlgebraFamily fam = parse_family(family);
  if (fam != AlgebraFamily::SL && fam != AlgebraFamily::SO && fam != AlgebraFamily::SP)
    throw std::invalid_argument("solve_star: family must be sl, so or sp");
  SolvedFamily f{minimal_orbit(family, n), {}, {}, {}};
  f.ansatz = make_ansatz(f.spec);
  bool sl = fam == AlgebraFamily::SL;
  f.system = build_constraint_system(f.spec, f.ansatz,
                                     sl ? std::vector<Variable>{} : std::vector<Variable>{Variable::k()});
  f.solution = solve_system(f.system, sl ? std::vector<Variable>{Variable::kp()} : std::vector<Variable>{});
  f.solution.name = f.spec.name;
  f.solution.family = family;
  f.solution.n = n;
  f.solution.consistent = f.solution.consistent && verify_solution(f.system, f.solution);
  std::set<Variable> unknown(f.system.unknowns.begin(), f.system.unknowns.end());
  std::vector<Variable> still_free;
  for (auto& v : f.solution.free_parameters) {
    if (!unknown.count(v)) {
      still_free.push_back(v);
      continue;
    }
    std::map<Variable, Poly> zero{{v, Poly()}};
    for (auto& [w, p] : f.solution.values) p = p.substitute(zero);
    f.solution.values[v] = Poly();
    f.solution.gauge_fixed.push_back(v);
  }
  f.solution.free_parameters = still_free;
  if (fam == AlgebraFamily::SP) {
    // The quadratic embedding into the Weyl algebra must induce the same psi.
    Ansatz solved = f.ansatz.substituted(f.solution.values);
    const LieSpec& L = *f.spec.algebra;
    for (int i = 0; i < L.dim() && f.solution.consistent; ++i)
      for (int j = i; j < L.dim(); ++j)
        if (moyal_psi(L, i, j) != solved.psi[i][j]) {
          f.solution.consistent = false;
          break;
        }
  }
  if (!f.solution.consistent) throw std::runtime_error("solve_star: no consistent solution for " + f.spec.name);
  return f;
}

StarSolution solve_star(const std::string& family, int n) { return solve_family(family, n).solution; }

StarSolution abelian_limit(const ConstraintSystem& sys, const std::vector<Variable>& secondary) {
  ConstraintSystem z;
  z.name = sys.name + " at h = 0";
  z.unknowns = sys.unknowns;
  z.relations = sys.relations;
  std::set<Poly> eqs;
  std::map<Variable, Poly> h0{{Variable::h(), Poly()}};
  for (auto& e : sys.equations) {
    Poly p = e.substitute(h0);
    if (!p.is_zero()) eqs.insert(monic(p));
  }
  finish_columns(z, eqs);
  StarSolution s = solve_system(z, secondary);
  s.consistent = s.consistent && verify_solution(z, s);
  return s;
}

// ---------------------------------------------------------------- StarProduct

StarProduct::StarProduct(const OrbitSpec& spec, const Ansatz& ansatz, const StarSolution& solution)
    : spec_(std::make_shared<OrbitSpec>(spec)),
      ansatz_(ansatz.substituted(solution.values)),
      solution_(solution) {
  reducer_ = std::make_shared<IdealReducer>(*spec_, 3);
  weyl_ = std::make_shared<WeylSymbol>(*spec_->algebra);
}

Poly StarProduct::normal_form(const Poly& f) const { return reducer_->normal_form(spec_->normalize(f)); }

Poly StarProduct::symbol_of(const Poly& f) const {
  Poly ph = ansatz_.apply_phi(f);
  return f - ph + ansatz_.apply_psi(coordinate_degree_part(ph, 2)) - ansatz_.apply_psi(f);
}

Poly StarProduct::from_symbol(const Poly& s) const {
  return s + ansatz_.apply_phi(s) + ansatz_.apply_psi(s);
}

Poly StarProduct::star(const Poly& f0, const Poly& g0) const {
  Poly f = spec_->normalize(f0), g = spec_->normalize(g0);
  if (f.degree_if(is_coord) + g.degree_if(is_coord) > 3)
    throw std::domain_error(
        "star: total coordinate degree above 3 is not supported; the product is only determined "
        "through (degree 2) * (degree 1)");
  f = normal_form(f);
  g = normal_form(g);
  Poly s = weyl_->product(symbol_of(f), symbol_of(g));
  return normal_form(from_symbol(s));
}

}  // namespace orbitstar
