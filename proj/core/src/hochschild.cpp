#include "orbitstar/hochschild.hpp"

#include <stdexcept>

namespace orbitstar {

Cochain linear_table_cochain(unsigned arity, const std::vector<Variable>& coords,
                             std::function<Poly(const std::vector<int>&)> table) {
  std::map<Variable, int> idx;
  for (std::size_t i = 0; i < coords.size(); ++i) idx[coords[i]] = static_cast<int>(i);
  return {arity, [idx, table = std::move(table)](const std::vector<Poly>& args) {
            std::vector<int> ix;
            Rational scale(1);
            for (auto& a : args) {
              if (a.size() != 1 || a.terms().begin()->first.total_degree() != 1)
                throw std::domain_error("table cochain evaluated on a non-linear argument");
              auto& [m, c] = *a.terms().begin();
              ix.push_back(idx.at(m.factors()[0].first));
              scale *= c;
            }
            return table(ix) * scale;
          }};
}

Poly evaluate(const Cochain& C, const Chain& c) {
  if (c.is_zero()) return Poly();
  if (C.arity != c.arity()) throw std::invalid_argument("evaluate: arity mismatch");
  Poly r;
  std::vector<Poly> args;
  for (auto& [key, a] : c.terms()) {
    args.assign(key.begin(), key.end());
    r.add_scaled(C.eval(args), a);
  }
  return r;
}

Poly cochain_diff(const Cochain& C, const Chain& c, const FactorMap& reduce) {
  unsigned p = C.arity;
  if (c.arity() != p + 1) throw std::invalid_argument("cochain_diff: arity mismatch");
  auto red = [&](const Poly& f) { return reduce ? reduce(f) : f; };
  Poly r;
  std::vector<Poly> args;
  for (auto& [key, a] : c.terms()) {
    args.assign(key.begin() + 1, key.end());
    r.add_scaled(red(Poly(key.front()) * C.eval(args)), a);
    args.assign(key.begin(), key.end() - 1);
    Rational s = (p + 1) % 2 == 0 ? a : -a;
    r.add_scaled(red(C.eval(args) * Poly(key.back())), s);
  }
  r -= evaluate(C, chain_diff(c, reduce));
  return red(r);
}

Cochain cochain_diff(const Cochain& C, const FactorMap& reduce) {
  return {C.arity + 1, [C, reduce](const std::vector<Poly>& args) {
            return cochain_diff(C, Chain::tensor(args), reduce);
          }};
}

Cochain perm_act(const PermAlgElem& e, const Cochain& C) {
  if (e.n() != C.arity) throw std::invalid_argument("perm_act: arity mismatch");
  return {C.arity, [e, C](const std::vector<Poly>& args) {
            return evaluate(C, perm_act(e, Chain::tensor(args)));
          }};
}

Poly associativity_defect(const std::vector<Bilinear>& cochains, unsigned k, const Poly& f,
                          const Poly& g, const Poly& h) {
  auto C = [&](unsigned n, const Poly& a, const Poly& b) -> Poly {
    if (n == 0) return a * b;
    if (n > cochains.size()) return Poly();
    return cochains[n - 1](a, b);
  };
  Poly r;
  for (unsigned m = 0; m <= k; ++m) {
    unsigned n = k - m;
    r += C(m, f, C(n, g, h));
    r -= C(m, C(n, f, g), h);
  }
  return r;
}

Poly evaluate(const Bilinear& C, const Chain& c) {
  if (c.is_zero()) return Poly();
  if (c.arity() != 2) throw std::invalid_argument("evaluate: bilinear map needs a 2-chain");
  Poly r;
  for (auto& [key, a] : c.terms()) r.add_scaled(C(Poly(key[0]), Poly(key[1])), a);
  return r;
}

}  // namespace orbitstar
