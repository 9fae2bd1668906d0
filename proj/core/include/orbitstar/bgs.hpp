#pragma once

#include "orbitstar/chain.hpp"
#include "orbitstar/perm.hpp"

#include <functional>
#include <vector>

namespace orbitstar {

// Number of positions i with sigma(i) > sigma(i+1).
unsigned descents(const Permutation& s);

// e_n(1), ..., e_n(n) for 1 <= n <= 7, from the Garsia generating function
// (1/n!) sum_sigma (x - d)(x - d + 1)...(x - d + n - 1) sgn(sigma) sigma.
// Computed once per n.
const std::vector<PermAlgElem>& garsia_idempotents(unsigned n);
const PermAlgElem& garsia(unsigned n, unsigned k);

using FactorMap = std::function<Poly(const Poly&)>;

// Bar differential without end terms:
// d(a_1 (x) ... (x) a_p) = sum_{i=1}^{p-1} (-1)^{i+1} a_1 (x) ... (x) a_i a_{i+1} (x) ... .
// Products are passed through reduce (e.g. an orbit normal form). Arity 1
// yields the empty chain of arity 0.
Chain chain_diff(const Chain& c, const FactorMap& reduce = {});

}  // namespace orbitstar
