#include "orbitstar/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbitstar {

Permutation::Permutation(std::vector<std::uint8_t> images) : p_(std::move(images)) {
  std::vector<bool> seen(p_.size(), false);
  for (auto v : p_) {
    if (v >= p_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& word) {
  std::vector<std::uint8_t> v;
  for (char c : word) {
    if (c < '1' || c > '9') throw std::invalid_argument("Permutation: bad word '" + word + "'");
    v.push_back(static_cast<std::uint8_t>(c - '1'));
  }
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(unsigned n) {
  std::vector<Permutation> out;
  auto p = identity(n).p_;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<std::uint8_t> r(size());
  for (unsigned i = 0; i < size(); ++i) r[i] = p_[o.p_[i]];
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> r(size());
  for (unsigned i = 0; i < size(); ++i) r[p_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(r));
}

int Permutation::sign() const {
  int s = 1;
  for (unsigned i = 0; i < size(); ++i)
    for (unsigned j = i + 1; j < size(); ++j)
      if (p_[i] > p_[j]) s = -s;
  return s;
}

std::string Permutation::word() const {
  std::string s;
  for (auto v : p_) s += static_cast<char>('1' + v);
  return s;
}

PermAlgElem PermAlgElem::identity(unsigned n) { return of(Permutation::identity(n)); }

PermAlgElem PermAlgElem::of(const Permutation& s, const Rational& c) {
  PermAlgElem e(s.size());
  e.add(s, c);
  return e;
}

Rational PermAlgElem::coeff(const Permutation& s) const {
  auto it = t_.find(s);
  return it == t_.end() ? Rational(0) : it->second;
}

void PermAlgElem::add(const Permutation& s, const Rational& c) {
  if (s.size() != n_) throw std::invalid_argument("PermAlgElem: degree mismatch");
  if (c.is_zero()) return;
  auto [it, ins] = t_.try_emplace(s, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PermAlgElem& PermAlgElem::operator+=(const PermAlgElem& o) {
  for (auto& [s, c] : o.t_) add(s, c);
  return *this;
}

PermAlgElem& PermAlgElem::operator-=(const PermAlgElem& o) {
  for (auto& [s, c] : o.t_) add(s, -c);
  return *this;
}

PermAlgElem operator*(const PermAlgElem& a, const PermAlgElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("PermAlgElem: degree mismatch");
  PermAlgElem r(a.n_);
  for (auto& [s, c] : a.t_)
    for (auto& [t, d] : b.t_) r.add(s * t, c * d);
  return r;
}

PermAlgElem operator*(const Rational& c, const PermAlgElem& a) {
  PermAlgElem r(a.n_);
  for (auto& [s, d] : a.t_) r.add(s, c * d);
  return r;
}

std::string PermAlgElem::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto& [p, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + p.word();
  }
  return s;
}

}  // namespace orbitstar
