#pragma once

#include "orbitstar/chain.hpp"
#include "orbitstar/lie.hpp"
#include "orbitstar/linalg.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace orbitstar {

enum class OrbitKind { SL, SO, SP, Cone };

struct OrbitSpec {
  OrbitKind kind = OrbitKind::Cone;
  std::string name;
  std::optional<LieSpec> algebra;    // absent for a bare simple cone
  std::vector<Variable> coords;      // coordinate variables, in basis order
  std::vector<Poly> relations;       // linearly independent quadrics g_a(x, x)
  std::map<Variable, Poly> embedding;
  std::vector<Poly> constraints;     // vanish on the parameter variety
  // Cone data: the relation is cone_var^2 - cone_rho.
  std::optional<Variable> cone_var;
  Poly cone_rho;

  int N() const { return static_cast<int>(coords.size()); }
  // Symmetric coefficient matrix g_a^{ij} of relation a.
  DenseMatrix relation_tensor(std::size_t a) const;
  Poly normalize(const Poly& f) const { return algebra ? algebra->normalize(f) : f; }
};

// Families: "sl", "so", "sp", "so3", "so21". Exceptional tags throw, since
// they are handled by the abstract solver.
OrbitSpec minimal_orbit(const std::string& family, int n);
// g = x_N^2 - (x_1^2 + ... + x_{N-1}^2) in N variables.
OrbitSpec simple_cone(int N);

// Reduction x_N^2 -> rho (+ shift) until x_N has degree <= 1.
Poly cone_normal_form(const OrbitSpec& spec, const Poly& f, const Poly& shift = Poly());

// Canonical normal form modulo the orbit ideal for coordinate degree <= 3
// (any degree on a cone). Parameters (h, k, ...) are carried as coefficients.
class IdealReducer {
 public:
  explicit IdealReducer(const OrbitSpec& spec, unsigned max_degree = 3);
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  const OrbitSpec& spec() const { return *spec_; }

 private:
  struct Graded {
    std::map<Monomial, int> col;
    std::vector<Monomial> mono;
    RowEchelon ech;
  };
  Poly reduce_coordinate_part(const Poly& f) const;
  const OrbitSpec* spec_;
  unsigned max_degree_;
  std::vector<std::unique_ptr<Graded>> graded_;  // index = degree
};

struct OracleOptions {
  std::uint64_t seed = 1;
  bool force_random = false;  // skip the symbolic route when one exists
};

// Ideal membership through the parametrized embedding: symbolic where the
// constraint can be solved, random rational points otherwise.
bool vanishes_on_orbit(const OrbitSpec& spec, const Poly& f, const OracleOptions& opt = {});
bool has_symbolic_oracle(const OrbitSpec& spec);

// Same answers as vanishes_on_orbit, but random sample points are drawn once
// per seed and reused across queries.
class OrbitOracle {
 public:
  explicit OrbitOracle(const OrbitSpec& spec, OracleOptions opt = {});
  bool vanishes(const Poly& f);

 private:
  bool random_vanishes(const Poly& f);
  const OrbitSpec* spec_;
  OracleOptions opt_;
  std::size_t params_ = 0;
  std::array<std::mt19937_64, 2> rng_;
  std::array<std::vector<std::map<Variable, Rational>>, 2> points_;
};
bool has_random_oracle(const OrbitSpec& spec);

// A rational point of the orbit (values of the coordinate variables).
std::map<Variable, Rational> random_orbit_point(const OrbitSpec& spec, std::mt19937_64& rng);
// A rational point of the parameter variety (values of p, q or xi).
std::map<Variable, Rational> random_parameter_point(const OrbitSpec& spec, std::mt19937_64& rng);
Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 5);

// Polynomials that must vanish on the orbit for d(c) = 0 in A^{(x)(p-1)},
// for chains whose tensor factors are monomials of degree one.
std::vector<Poly> closure_defects(const Chain& linear_chain);
bool chain_is_closed(const OrbitSpec& spec, const Chain& linear_chain, const OracleOptions& opt = {});

struct ChainSector {
  unsigned k;                 // BGS sector (p, k)
  std::vector<Chain> basis;
};

struct ChainSpace {
  unsigned p;
  std::size_t kernel_dim;
  std::vector<ChainSector> sectors;
};

ChainSpace closed_linear_chains(const OrbitSpec& spec, unsigned p);

// e_3(1) applied to g_a^{ij} g_b^{kl} x_i (x) {x_j, x_k} (x) x_l.
Chain conjecture_chain(const OrbitSpec& spec, std::size_t alpha, std::size_t beta);

// Closed chains of the simple cone: g^{i1 j1} ... g^{ik jk} summed over the
// order-preserving shuffles of the k pairs with the l free slots (given by
// free_indices), each weighted by the sign of the shuffle.
Chain cone_basis_chain(const OrbitSpec& spec, unsigned k, const std::vector<int>& free_indices);

}  // namespace orbitstar
