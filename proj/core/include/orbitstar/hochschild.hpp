#pragma once

#include "orbitstar/bgs.hpp"
#include "orbitstar/chain.hpp"

#include <functional>
#include <vector>

namespace orbitstar {

// p-cochain A^{(x)p} -> A, evaluated on tuples of monomials and extended
// multilinearly over chains.
struct Cochain {
  unsigned arity = 1;
  std::function<Poly(const std::vector<Poly>&)> eval;
};

// Cochain given by a table on linear generators; cochain(idx...) receives
// 0-based coordinate indices. Non-linear arguments throw std::domain_error.
Cochain linear_table_cochain(unsigned arity, const std::vector<Variable>& coords,
                             std::function<Poly(const std::vector<int>&)> table);

// Sum of coefficient * C(term) over the chain.
Poly evaluate(const Cochain& C, const Chain& c);

// (dC)(a_1..a_{p+1}) = a_1 C(a_2..) - C(d a) + (-1)^{p+1} C(a_1..a_p) a_{p+1},
// with every product passed through reduce.
Poly cochain_diff(const Cochain& C, const Chain& c, const FactorMap& reduce = {});
Cochain cochain_diff(const Cochain& C, const FactorMap& reduce = {});

// (e.C)(a) = C(e.a), with the place action on the argument.
Cochain perm_act(const PermAlgElem& e, const Cochain& C);

using Bilinear = std::function<Poly(const Poly&, const Poly&)>;

// Order-k coefficient of (f*g)*h - f*(g*h) for f*g = fg + sum_n h^n C_n(f, g):
// sum_{m+n=k} C_m(f, C_n(g, h)) - C_m(C_n(f, g), h), with C_0 the product.
// Cochains beyond the supplied list count as zero.
Poly associativity_defect(const std::vector<Bilinear>& cochains, unsigned k, const Poly& f,
                          const Poly& g, const Poly& h);

// Evaluates a bilinear map on a 2-chain.
Poly evaluate(const Bilinear& C, const Chain& c);

}  // namespace orbitstar
