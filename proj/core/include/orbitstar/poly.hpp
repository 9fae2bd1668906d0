#pragma once

#include "orbitstar/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitstar {

// Order of the enumerators is the canonical monomial order.
enum class Family : std::uint8_t {
  X,       // x_i, generic orbit coordinate
  U,       // U_a^b, sl(n) coordinate
  L,       // L_ab, so(n) / sp(2n) coordinate
  P,       // p_a
  Q,       // q^a
  Xi,      // xi_a
  T,       // t, abstract variable
  AbsA,    // |a|
  N,       // representation degree N
  K,       // k
  Kp,      // k'
  Phi,     // phi_i
  Lambda,  // lambda_a
  H,       // h
};

struct Variable {
  Family family = Family::X;
  std::uint8_t arity = 0;
  std::array<std::int16_t, 2> idx{0, 0};

  static Variable x(int i) { return {Family::X, 1, {static_cast<std::int16_t>(i), 0}}; }
  static Variable U(int a, int b) {
    return {Family::U, 2, {static_cast<std::int16_t>(a), static_cast<std::int16_t>(b)}};
  }
  static Variable L(int a, int b) {
    return {Family::L, 2, {static_cast<std::int16_t>(a), static_cast<std::int16_t>(b)}};
  }
  static Variable p(int a) { return {Family::P, 1, {static_cast<std::int16_t>(a), 0}}; }
  static Variable q(int a) { return {Family::Q, 1, {static_cast<std::int16_t>(a), 0}}; }
  static Variable xi(int a) { return {Family::Xi, 1, {static_cast<std::int16_t>(a), 0}}; }
  static Variable phi(int i) { return {Family::Phi, 1, {static_cast<std::int16_t>(i), 0}}; }
  static Variable lambda(int a) { return {Family::Lambda, 1, {static_cast<std::int16_t>(a), 0}}; }
  static Variable h() { return {Family::H, 0, {0, 0}}; }
  static Variable t() { return {Family::T, 0, {0, 0}}; }
  static Variable k() { return {Family::K, 0, {0, 0}}; }
  static Variable kp() { return {Family::Kp, 0, {0, 0}}; }
  static Variable abs_a() { return {Family::AbsA, 0, {0, 0}}; }
  static Variable deg_N() { return {Family::N, 0, {0, 0}}; }

  // Orbit coordinates are the variables the star product acts on.
  bool is_coordinate() const {
    return family == Family::X || family == Family::U || family == Family::L ||
           family == Family::Xi;
  }

  std::string name() const;
  static Variable parse(const std::string& name);

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    if (auto c = a.idx[0] <=> b.idx[0]; c != 0) return c;
    return a.idx[1] <=> b.idx[1];
  }
};

// Sorted list of (variable, exponent) with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Variable& v, unsigned e = 1);

  const std::vector<std::pair<Variable, unsigned>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  unsigned degree() const;  // ignores h
  unsigned total_degree() const;
  unsigned degree_if(const std::function<bool(const Variable&)>& pred) const;
  unsigned exponent(const Variable& v) const;

  Monomial operator*(const Monomial& o) const;
  // Remove all variables for which pred holds, returning (kept, removed).
  std::pair<Monomial, Monomial> split(const std::function<bool(const Variable&)>& pred) const;
  Monomial without(const Variable& v) const;

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.f_ <=> b.f_;
  }

 private:
  std::vector<std::pair<Variable, unsigned>> f_;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  Poly(const Variable& v);  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Rational& c = Rational(1));

  static Poly h() { return Poly(Variable::h()); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  std::size_t size() const { return t_.size(); }

  // Total degree ignoring h.
  unsigned degree() const;
  unsigned h_degree() const;
  unsigned degree_if(const std::function<bool(const Variable&)>& pred) const;
  unsigned degree_in(const Variable& v) const;
  std::set<Variable> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a *= c.inverse(); }

  // Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);
  void add_scaled(const Poly& o, const Rational& c);

  Poly pow(unsigned e) const;

  // Ring homomorphism. Variables missing from the map stay unchanged when
  // identity_default is set, otherwise std::out_of_range is thrown.
  Poly substitute(const std::map<Variable, Poly>& map, bool identity_default = true) const;
  Poly substitute(const std::function<std::optional<Poly>(const Variable&)>& f) const;
  Poly evaluate(const std::map<Variable, Rational>& values) const;
  Poly derivative(const Variable& v) const;

  // Groups terms by the part of the monomial made of variables satisfying
  // pred; the values are the cofactors.
  std::map<Monomial, Poly> collect(const std::function<bool(const Variable&)>& pred) const;
  // Terms of the given h-degree, with h removed.
  Poly h_part(unsigned e) const;

  std::string str() const;
  std::string json() const;
  static Poly from_json(const std::string& text);

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly& a, const Poly& b) { return a.t_ <=> b.t_; }

 private:
  Terms t_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

inline Poly var(const Variable& v) { return Poly(v); }
inline Poly x(int i) { return Poly(Variable::x(i)); }

// Polynomial division in a single variable v: returns (quotient, remainder)
// with coefficients in the remaining variables. Requires the leading
// coefficient of b in v to be a nonzero rational.
std::pair<Poly, Poly> divide_univariate(const Poly& a, const Poly& b, const Variable& v);

}  // namespace orbitstar
