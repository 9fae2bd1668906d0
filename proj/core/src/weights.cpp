#include "orbitstar/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbitstar {

namespace {

void accumulate(HighestWeightModel::State& into, const HighestWeightModel::State& s,
                const Poly& c) {
  for (auto& [w, p] : s) {
    Poly& slot = into[w];
    slot += p * c;
    if (slot.is_zero()) into.erase(w);
  }
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p, const Variable& v) {
  std::map<unsigned, Rational> c;
  for (auto& [m, a] : p.terms()) {
    if (m.without(v) != Monomial()) throw std::invalid_argument("rational_roots: not univariate");
    c[m.exponent(v)] = a;
  }
  if (c.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  unsigned low = c.begin()->first;
  if (low > 0) roots.push_back(Rational(0));
  mpz_class lcm = 1;
  for (auto& [e, a] : c) lcm = ::lcm(lcm, a.den());
  mpz_class a0 = (c.begin()->second * Rational(lcm)).num();
  mpz_class an = (c.rbegin()->second * Rational(lcm)).num();
  auto divisors = [](mpz_class z) {
    z = ::abs(z);
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= z; ++i)
      if (z % i == 0) {
        d.push_back(i);
        if (i * i != z) d.push_back(z / i);
      }
    return d;
  };
  for (auto& num : divisors(a0))
    for (auto& den : divisors(an))
      for (int s : {1, -1}) {
        Rational r(mpq_class(num * s, den));
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (p.evaluate({{v, r}}).is_zero()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

using Assignment = std::map<Variable, Poly>;

void solve_rec(std::vector<Poly> eqs, const std::vector<Variable>& vars, Assignment fixed,
               std::vector<std::map<Variable, Rational>>& out) {
  std::vector<Poly> live;
  for (auto& e : eqs) {
    Poly r = e.substitute(fixed);
    if (r.is_zero()) continue;
    if (r.is_constant()) return;
    live.push_back(std::move(r));
  }
  std::vector<Variable> open;
  for (auto& v : vars)
    if (!fixed.count(v)) open.push_back(v);
  if (open.empty()) {
    std::map<Variable, Rational> sol;
    for (auto& v : vars) {
      // fixed values may refer to variables fixed later
      Poly p = fixed.at(v);
      for (int pass = 0; pass < static_cast<int>(vars.size()) && !p.is_constant(); ++pass)
        p = p.substitute(fixed);
      sol[v] = p.constant_term();
    }
    out.push_back(std::move(sol));
    return;
  }
  for (auto& e : live) {
    auto vs = e.variables();
    if (vs.size() != 1) continue;
    Variable v = *vs.begin();
    for (auto& r : rational_roots(e, v)) {
      Assignment next = fixed;
      next[v] = Poly(r);
      solve_rec(live, vars, next, out);
    }
    return;
  }
  for (auto& e : live)
    for (auto& v : e.variables()) {
      if (e.degree_in(v) != 1) continue;
      Poly lead = e.derivative(v);
      if (!lead.is_constant()) continue;
      Poly rest = e - lead * Poly(v);
      Assignment next = fixed;
      for (auto& [w, p] : next) p = p.substitute({{v, -rest / lead.constant_term()}});
      next[v] = -rest / lead.constant_term();
      solve_rec(live, vars, next, out);
      return;
    }
  // Macaulay step: multiply by monomials of growing degree and eliminate every
  // monomial that involves a variable other than the last open one.
  Variable last = open.back();
  auto univariate_only = [&](const Monomial& m) { return m.without(last).is_one(); };
  for (unsigned D = 0; D <= 3; ++D) {
    std::vector<Monomial> mults{Monomial()};
    for (unsigned d = 0; d < D; ++d) {
      std::vector<Monomial> next;
      for (auto& m : mults)
        for (auto& v : open) next.push_back(m * Monomial(v));
      mults.insert(mults.end(), next.begin(), next.end());
    }
    std::sort(mults.begin(), mults.end());
    mults.erase(std::unique(mults.begin(), mults.end()), mults.end());
    std::vector<Poly> rows;
    std::set<Monomial> monos;
    for (auto& e : live)
      for (auto& m : mults) {
        Poly r = e * Poly(m);
        for (auto& [mm, c] : r.terms()) monos.insert(mm);
        rows.push_back(std::move(r));
      }
    // columns: mixed monomials first (eliminated), then powers of last, high to low
    std::vector<Monomial> order;
    for (auto& m : monos)
      if (!univariate_only(m)) order.push_back(m);
    std::vector<Monomial> uni;
    for (auto& m : monos)
      if (univariate_only(m)) uni.push_back(m);
    std::sort(uni.begin(), uni.end(),
              [&](const Monomial& a, const Monomial& b) { return a.exponent(last) > b.exponent(last); });
    std::size_t split = order.size();
    order.insert(order.end(), uni.begin(), uni.end());
    std::map<Monomial, int> col;
    for (std::size_t i = 0; i < order.size(); ++i) col[order[i]] = static_cast<int>(i);
    RowEchelon ech;
    for (auto& r : rows) {
      SparseRow sr;
      for (auto& [m, c] : r.terms()) sr[col.at(m)] = c;
      ech.add(sr);
    }
    for (auto& [pivot, row] : ech.rows()) {
      if (pivot < static_cast<int>(split)) continue;
      Poly u;
      for (auto& [c, a] : row) u.add_term(order[c], a);
      if (u.is_constant()) return;  // inconsistent
      for (auto& r : rational_roots(u, last)) {
        Assignment next = fixed;
        next[last] = Poly(r);
        solve_rec(live, vars, next, out);
      }
      return;
    }
  }
  // free direction: the system does not determine the weight
  throw std::runtime_error("weight equations: solution set is not finite");
}

}  // namespace

std::vector<std::map<Variable, Rational>> rational_solutions(const std::vector<Poly>& eqs,
                                                             const std::vector<Variable>& vars) {
  std::vector<std::map<Variable, Rational>> out;
  solve_rec(eqs, vars, {}, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HighestWeightModel::HighestWeightModel(const LieSpec& spec, std::vector<Kind> kinds,
                                       std::map<int, Poly> cartan)
    : spec_(&spec), kinds_(std::move(kinds)), cartan_(std::move(cartan)) {
  if (static_cast<int>(kinds_.size()) != spec.dim())
    throw std::invalid_argument("HighestWeightModel: one kind per basis element required");
}

HighestWeightModel::State HighestWeightModel::apply_to_basis(int x,
                                                             const std::vector<int>& ells) const {
  State out;
  if (kinds_[x] == Kind::Lowering && (ells.empty() || x <= ells.front())) {
    std::vector<int> w{x};
    w.insert(w.end(), ells.begin(), ells.end());
    out[w] = Poly(1);
    return out;
  }
  if (ells.empty()) {
    if (kinds_[x] == Kind::Cartan) out[{}] = cartan_.at(x);
    return out;
  }
  // x l rest = l (x rest) + h {x, l} rest
  int l = ells.front();
  std::vector<int> rest(ells.begin() + 1, ells.end());
  State xr = apply_to_basis(x, rest);
  accumulate(out, apply_letter(l, xr), Poly(1));
  State r{{rest, Poly(1)}};
  for (auto& [m, c] : spec_->eps[x][l]) accumulate(out, apply_letter(m, r), Poly::h() * c);
  return out;
}

HighestWeightModel::State HighestWeightModel::apply_letter(int x, const State& s) const {
  State out;
  for (auto& [w, c] : s) accumulate(out, apply_to_basis(x, w), c);
  return out;
}

HighestWeightModel::State HighestWeightModel::apply(const std::vector<int>& word) const {
  State s{{{}, Poly(1)}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = apply_letter(*it, s);
  return s;
}

namespace {

struct Layout {
  std::vector<HighestWeightModel::Kind> kinds;
  std::map<int, Poly> cartan;
  std::vector<int> raising;
};

// sl: U_a^b has weight e_a - e_b and U_a^a v = lambda_a v.
// so: L_ab has weight eps(a) + eps(b), eps(a) = e_a for a <= l and -e_{a'}
// for a' = n + 1 - a <= l; L_{aa'} v = h lambda_a v.
Layout layout(const LieSpec& spec) {
  using K = HighestWeightModel::Kind;
  Layout L;
  int n = spec.n;
  for (int i = 0; i < spec.dim(); ++i) {
    int a = spec.basis[i].idx[0], b = spec.basis[i].idx[1];
    K kind;
    if (spec.family == AlgebraFamily::SL) {
      kind = a < b ? K::Raising : (a == b ? K::Cartan : K::Lowering);
      if (kind == K::Cartan) L.cartan[i] = Poly(Variable::lambda(a));
    } else if (spec.family == AlgebraFamily::SO) {
      kind = a + b < n + 1 ? K::Raising : (a + b == n + 1 ? K::Cartan : K::Lowering);
      if (kind == K::Cartan) L.cartan[i] = Poly::h() * Poly(Variable::lambda(a));
    } else {
      throw std::invalid_argument("highest weights: family " + family_tag(spec.family) +
                                  " not supported");
    }
    L.kinds.push_back(kind);
    if (kind == K::Raising) L.raising.push_back(i);
  }
  return L;
}

}  // namespace

std::vector<Poly> weight_equations(const OrbitSpec& spec, const Ansatz& ansatz) {
  const LieSpec& lie = *spec.algebra;
  Layout L = layout(lie);
  HighestWeightModel model(lie, L.kinds, L.cartan);
  WeylSymbol weyl(lie);

  std::vector<std::vector<int>> prefixes{{}};
  for (int r : L.raising) prefixes.push_back({r});
  for (int r : L.raising)
    for (int s : L.raising) prefixes.push_back({r, s});

  std::set<Poly> eqs;
  for (const Poly& g : spec.relations) {
    Poly psi = ansatz.apply_psi(g);
    auto words = weyl.words(g);
    for (auto& [w, c] : weyl.words(-psi)) words.emplace_back(w, c);
    for (auto& pre : prefixes) {
      Poly scalar;
      for (auto& [w, c] : words) {
        std::vector<int> full = pre;
        full.insert(full.end(), w.begin(), w.end());
        auto s = model.apply(full);
        if (auto it = s.find({}); it != s.end()) scalar += it->second * c;
      }
      if (!scalar.is_zero()) eqs.insert(scalar / scalar.terms().begin()->second);
    }
  }
  return {eqs.begin(), eqs.end()};
}

std::vector<Poly> weight_equations(const StarProduct& product) {
  return weight_equations(product.spec(), product.ansatz());
}

std::vector<Poly> existence_conditions(const OrbitSpec& spec, const Ansatz& ansatz,
                                       const WeightVector& w) {
  int free = spec.algebra->family == AlgebraFamily::SL ? spec.algebra->n - 1 : spec.algebra->n / 2;
  std::map<Variable, Poly> sub;
  for (int a = 1; a <= free; ++a) sub[Variable::lambda(a)] = w.lambda[a - 1];
  std::set<Poly> out;
  for (auto& e : weight_equations(spec, ansatz)) {
    Poly r = e.substitute(sub);
    if (!r.is_zero()) out.insert(r / r.terms().begin()->second);
  }
  return {out.begin(), out.end()};
}

std::vector<Rational> weyl_vector(AlgebraFamily family, int n) {
  std::vector<Rational> rho;
  switch (family) {
    case AlgebraFamily::SL:
      for (int a = 1; a <= n; ++a) rho.push_back(Rational(n + 1 - 2 * a, 2));
      break;
    case AlgebraFamily::SO:
      // so(2l+1): (l - 1/2, ..., 1/2); so(2l): (l - 1, ..., 0)
      for (int a = 1; a <= n / 2; ++a) rho.push_back(Rational(n - 2 * a, 2));
      break;
    default:
      throw std::invalid_argument("weyl_vector: unsupported family");
  }
  return rho;
}

std::vector<WeightVector> highest_weights(const StarProduct& product) {
  const LieSpec& lie = *product.spec().algebra;
  int n = lie.n;
  bool sl = lie.family == AlgebraFamily::SL;
  int free = sl ? n - 1 : n / 2;
  std::vector<Variable> lambdas;
  for (int a = 1; a <= free; ++a) lambdas.push_back(Variable::lambda(a));
  auto eqs = weight_equations(product);

  // exact solve at h = 1 (and k = 1 for sl, where k stays free)
  std::map<Variable, Poly> sample{{Variable::h(), Poly(1)}, {Variable::k(), Poly(1)}};
  std::vector<Poly> numeric;
  for (auto& e : eqs) numeric.push_back(e.substitute(sample));
  auto roots = rational_solutions(numeric, lambdas);
  std::vector<bool> matched(roots.size(), false);

  std::vector<WeightVector> out;
  auto check = [&](WeightVector& w) {
    std::map<Variable, Poly> sub;
    for (int a = 1; a <= free; ++a) sub[Variable::lambda(a)] = w.lambda[a - 1];
    w.verified = true;
    for (auto& e : eqs)
      if (!product.normal_form(e.substitute(sub)).is_zero()) w.verified = false;
    std::map<Variable, Rational> at;
    for (int a = 1; a <= free; ++a) at[Variable::lambda(a)] = w.lambda[a - 1].substitute(sample).constant_term();
    for (std::size_t r = 0; r < roots.size(); ++r)
      if (roots[r] == at) w.solved = matched[r] = true;
  };
  if (sl) {
    Poly k = product.solution().values.count(Variable::k())
                 ? product.solution().values.at(Variable::k())
                 : Poly(Variable::k());
    Poly gamma = k * Rational(n + 2, 2 * n);
    Poly half = Poly::h() / Rational(2);
    for (int m = 1; m <= n; ++m) {
      WeightVector w{"sl", n, "m=" + std::to_string(m), {}, weyl_vector(AlgebraFamily::SL, n)};
      Poly sum;
      for (int a = 1; a <= n; ++a) {
        Poly l = a < m ? -half - gamma : half - gamma;
        w.lambda.push_back(l);
        if (a != m) sum += l;
      }
      w.lambda[m - 1] = -sum;
      check(w);
      out.push_back(std::move(w));
    }
  } else {
    int l = n / 2;
    for (int j = 1; j <= l; ++j) {
      WeightVector w{"so", n, "j=" + std::to_string(j), {}, weyl_vector(AlgebraFamily::SO, n)};
      for (int a = 1; a <= l; ++a)
        w.lambda.push_back(a < j ? Poly(-1) : (a == j ? Poly(Rational(2 * j + 2 - n, 2)) : Poly()));
      check(w);
      out.push_back(std::move(w));
    }
  }
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (matched[r]) continue;
    WeightVector w{sl ? "sl" : "so", n, "unlisted", {}, weyl_vector(lie.family, n)};
    for (auto& v : lambdas) w.lambda.push_back(Poly(roots[r].at(v)));
    // so(2l): the diagram automorphism flips the sign of the last entry
    if (!sl && n % 2 == 0)
      for (auto& f : out) {
        auto flipped = f.lambda;
        flipped.back() = -flipped.back();
        if (flipped == w.lambda && !f.lambda.back().is_zero()) w.label = f.label + " mirrored";
      }
    if (sl) {
      Poly sum;
      for (auto& l : w.lambda) sum -= l;
      w.lambda.push_back(sum);
    }
    w.verified = w.solved = true;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace orbitstar
