#include "orbitstar/chain.hpp"

#include <stdexcept>

namespace orbitstar {

namespace {

void expand(const std::vector<Poly>& f, std::size_t i, Chain::Key& key, const Rational& c,
            Chain& out) {
  if (i == f.size()) {
    out.add(key, c);
    return;
  }
  for (auto& [m, a] : f[i].terms()) {
    key[i] = m;
    expand(f, i + 1, key, c * a, out);
  }
}

}  // namespace

Chain Chain::tensor(const std::vector<Poly>& factors, const Rational& c) {
  Chain r(static_cast<unsigned>(factors.size()));
  r.add(factors, c);
  return r;
}

bool Chain::is_linear() const {
  for (auto& [k, c] : t_)
    for (auto& m : k)
      if (m.degree() != 1) return false;
  return true;
}

Rational Chain::coeff(const Key& k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Rational(0) : it->second;
}

void Chain::add(const Key& k, const Rational& c) {
  if (k.size() != p_) throw std::invalid_argument("Chain: arity mismatch");
  if (c.is_zero()) return;
  auto [it, ins] = t_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void Chain::add(const std::vector<Poly>& factors, const Rational& c) {
  if (factors.size() != p_) throw std::invalid_argument("Chain: arity mismatch");
  Key key(p_);
  expand(factors, 0, key, c, *this);
}

Chain& Chain::operator+=(const Chain& o) {
  for (auto& [k, c] : o.t_) add(k, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  for (auto& [k, c] : o.t_) add(k, -c);
  return *this;
}

Chain& Chain::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, a] : t_) a *= c;
  return *this;
}

Chain Chain::map_factors(const std::function<Poly(const Poly&)>& f) const {
  Chain r(p_);
  std::map<Monomial, Poly> cache;
  auto image = [&](const Monomial& m) -> const Poly& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, f(Poly(m))).first;
    return it->second;
  };
  for (auto& [k, c] : t_) {
    std::vector<Poly> fs;
    fs.reserve(p_);
    for (auto& m : k) fs.push_back(image(m));
    r.add(fs, c);
  }
  return r;
}

std::string Chain::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto& [k, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "(x)" : "") + k[i].str();
  }
  return s;
}

Chain perm_act(const Permutation& s, const Chain& c) {
  if (s.size() != c.arity()) throw std::invalid_argument("perm_act: arity mismatch");
  Chain r(c.arity());
  Chain::Key out(c.arity());
  for (auto& [k, a] : c.terms()) {
    for (unsigned i = 0; i < k.size(); ++i) out[s(i)] = k[i];
    r.add(out, a);
  }
  return r;
}

Chain perm_act(const PermAlgElem& e, const Chain& c) {
  if (e.n() != c.arity()) throw std::invalid_argument("perm_act: arity mismatch");
  Chain r(c.arity());
  for (auto& [s, a] : e.terms()) {
    Chain t = perm_act(s, c);
    t *= a;
    r += t;
  }
  return r;
}

}  // namespace orbitstar
