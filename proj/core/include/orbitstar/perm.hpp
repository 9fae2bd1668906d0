#pragma once

#include "orbitstar/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orbitstar {

// Bijection of {0..n-1}; images()[i] is sigma(i). Printed 1-based as a word.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(unsigned n);
  // Parses a 1-based one-line word such as "3142".
  static Permutation parse(const std::string& word);
  static std::vector<Permutation> all(unsigned n);

  unsigned size() const { return static_cast<unsigned>(p_.size()); }
  unsigned operator()(unsigned i) const { return p_[i]; }
  const std::vector<std::uint8_t>& images() const { return p_; }

  // Composition: (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  int sign() const;
  std::string word() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> p_;
};

// Element of the group algebra Q[S_n].
class PermAlgElem {
 public:
  explicit PermAlgElem(unsigned n = 0) : n_(n) {}
  static PermAlgElem identity(unsigned n);
  static PermAlgElem of(const Permutation& s, const Rational& c = Rational(1));

  unsigned n() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const Permutation& s) const;

  void add(const Permutation& s, const Rational& c);
  PermAlgElem& operator+=(const PermAlgElem& o);
  PermAlgElem& operator-=(const PermAlgElem& o);
  friend PermAlgElem operator+(PermAlgElem a, const PermAlgElem& b) { return a += b; }
  friend PermAlgElem operator-(PermAlgElem a, const PermAlgElem& b) { return a -= b; }
  friend PermAlgElem operator*(const PermAlgElem& a, const PermAlgElem& b);
  friend PermAlgElem operator*(const Rational& c, const PermAlgElem& a);

  std::string str() const;
  friend bool operator==(const PermAlgElem&, const PermAlgElem&) = default;

 private:
  unsigned n_;
  std::map<Permutation, Rational> t_;
};

}  // namespace orbitstar
