#include "orbitstar/bgs.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace orbitstar {

unsigned descents(const Permutation& s) {
  unsigned d = 0;
  for (unsigned i = 0; i + 1 < s.size(); ++i)
    if (s(i) > s(i + 1)) ++d;
  return d;
}

namespace {

std::vector<PermAlgElem> compute_idempotents(unsigned n) {
  std::vector<PermAlgElem> e(n, PermAlgElem(n));
  Rational inv_fact = factorial(n).inverse();
  Variable xv = Variable::t();
  for (const auto& s : Permutation::all(n)) {
    long d = descents(s);
    Poly g(1);
    for (unsigned j = 0; j < n; ++j) g *= Poly(xv) + Poly(Rational(static_cast<long>(j) - d));
    Rational w = inv_fact * Rational(s.sign());
    for (unsigned k = 1; k <= n; ++k) e[k - 1].add(s, w * g.coeff(Monomial(xv, k)));
  }
  return e;
}

}  // namespace

const std::vector<PermAlgElem>& garsia_idempotents(unsigned n) {
  if (n < 1 || n > 7) throw std::out_of_range("garsia_idempotents: n must be in [1, 7]");
  static std::array<std::vector<PermAlgElem>, 8> cache;
  static std::array<std::once_flag, 8> once;
  std::call_once(once[n], [n] { cache[n] = compute_idempotents(n); });
  return cache[n];
}

const PermAlgElem& garsia(unsigned n, unsigned k) {
  const auto& e = garsia_idempotents(n);
  if (k < 1 || k > n) throw std::out_of_range("garsia: k must be in [1, n]");
  return e[k - 1];
}

Chain chain_diff(const Chain& c, const FactorMap& reduce) {
  unsigned p = c.arity();
  if (p < 2) return Chain(0);
  Chain r(p - 1);
  std::map<Monomial, Poly> cache;
  for (auto& [key, a] : c.terms()) {
    for (unsigned i = 0; i + 1 < p; ++i) {
      Monomial prod = key[i] * key[i + 1];
      Rational sign = (i % 2 == 0) ? a : -a;
      if (!reduce) {
        Chain::Key k2;
        k2.reserve(p - 1);
        for (unsigned j = 0; j < p; ++j) {
          if (j == i) k2.push_back(prod);
          else if (j != i + 1) k2.push_back(key[j]);
        }
        r.add(k2, sign);
        continue;
      }
      auto it = cache.find(prod);
      if (it == cache.end()) it = cache.emplace(prod, reduce(Poly(prod))).first;
      std::vector<Poly> f;
      f.reserve(p - 1);
      for (unsigned j = 0; j < p; ++j) {
        if (j == i) f.push_back(it->second);
        else if (j != i + 1) f.emplace_back(key[j]);
      }
      r.add(f, sign);
    }
  }
  return r;
}

}  // namespace orbitstar
