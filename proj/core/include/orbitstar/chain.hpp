#pragma once

#include "orbitstar/perm.hpp"
#include "orbitstar/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace orbitstar {

// Rational combination of p-fold tensor products. Factors are expanded
// multilinearly so every key is a tuple of monomials; that is the canonical
// form used for equality.
class Chain {
 public:
  using Key = std::vector<Monomial>;

  explicit Chain(unsigned arity = 1) : p_(arity) {}
  static Chain tensor(const std::vector<Poly>& factors, const Rational& c = Rational(1));

  unsigned arity() const { return p_; }
  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_linear() const;
  Rational coeff(const Key& k) const;

  void add(const Key& k, const Rational& c);
  void add(const std::vector<Poly>& factors, const Rational& c = Rational(1));
  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Rational& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& c, Chain a) { return a *= c; }

  // Applies f to every tensor factor and re-expands.
  Chain map_factors(const std::function<Poly(const Poly&)>& f) const;

  std::string str() const;
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  unsigned p_;
  std::map<Key, Rational> t_;
};

// Place action: sigma sends the factor in slot i to slot sigma(i).
Chain perm_act(const Permutation& s, const Chain& c);
Chain perm_act(const PermAlgElem& e, const Chain& c);

}  // namespace orbitstar
