#include "orbitstar/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace orbitstar {

namespace {

const char* family_prefix(Family f) {
  switch (f) {
    case Family::X: return "x";
    case Family::U: return "U";
    case Family::L: return "L";
    case Family::P: return "p";
    case Family::Q: return "q";
    case Family::Xi: return "xi";
    case Family::T: return "t";
    case Family::AbsA: return "absa";
    case Family::N: return "N";
    case Family::K: return "k";
    case Family::Kp: return "kp";
    case Family::Phi: return "phi";
    case Family::Lambda: return "lambda";
    case Family::H: return "h";
  }
  return "?";
}

}  // namespace

std::string Variable::name() const {
  std::string s = family_prefix(family);
  for (int i = 0; i < arity; ++i) s += "_" + std::to_string(idx[i]);
  return s;
}

Variable Variable::parse(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, '_')) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty variable name");
  static const Family all[] = {Family::X,    Family::U, Family::L,  Family::P,   Family::Q,
                               Family::Xi,   Family::T, Family::AbsA, Family::N, Family::K,
                               Family::Kp,   Family::Phi, Family::Lambda, Family::H};
  for (Family f : all) {
    if (parts[0] != family_prefix(f)) continue;
    Variable v{f, static_cast<std::uint8_t>(parts.size() - 1), {0, 0}};
    if (v.arity > 2) break;
    for (int i = 0; i < v.arity; ++i) v.idx[i] = static_cast<std::int16_t>(std::stoi(parts[i + 1]));
    return v;
  }
  throw std::invalid_argument("unknown variable name '" + name + "'");
}

Monomial::Monomial(const Variable& v, unsigned e) {
  if (e > 0) f_.emplace_back(v, e);
}

unsigned Monomial::degree() const {
  return degree_if([](const Variable& v) { return v.family != Family::H; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto& [v, e] : f_) d += e;
  return d;
}

unsigned Monomial::degree_if(const std::function<bool(const Variable&)>& pred) const {
  unsigned d = 0;
  for (auto& [v, e] : f_)
    if (pred(v)) d += e;
  return d;
}

unsigned Monomial::exponent(const Variable& v) const {
  for (auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->first < b->first) {
      r.f_.push_back(*a++);
    } else if (b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.f_.insert(r.f_.end(), a, f_.end());
  r.f_.insert(r.f_.end(), b, o.f_.end());
  return r;
}

std::pair<Monomial, Monomial> Monomial::split(
    const std::function<bool(const Variable&)>& pred) const {
  Monomial kept, removed;
  for (auto& f : f_) (pred(f.first) ? removed : kept).f_.push_back(f);
  return {kept, removed};
}

Monomial Monomial::without(const Variable& v) const {
  Monomial r;
  for (auto& f : f_)
    if (f.first != v) r.f_.push_back(f);
  return r;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (auto& [v, e] : f_) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) t_.emplace(Monomial(), c);
}

Poly::Poly(const Variable& v) { t_.emplace(Monomial(v), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) t_.emplace(m, c);
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rational Poly::constant_term() const { return coeff(Monomial()); }

Rational Poly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

unsigned Poly::h_degree() const { return degree_in(Variable::h()); }

unsigned Poly::degree_if(const std::function<bool(const Variable&)>& pred) const {
  unsigned d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.degree_if(pred));
  return d;
}

unsigned Poly::degree_in(const Variable& v) const {
  unsigned d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<Variable> Poly::variables() const {
  std::set<Variable> s;
  for (auto& [m, c] : t_)
    for (auto& [v, e] : m.factors()) s.insert(v);
  return s;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void Poly::add_scaled(const Poly& o, const Rational& c) {
  if (c.is_zero()) return;
  for (auto& [m, a] : o.t_) add_term(m, a * c);
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, a] : t_) a *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, a] : r.t_) a = -a;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

Poly Poly::substitute(const std::map<Variable, Poly>& map, bool identity_default) const {
  return substitute([&](const Variable& v) -> std::optional<Poly> {
    auto it = map.find(v);
    if (it != map.end()) return it->second;
    if (identity_default) return std::nullopt;
    throw std::out_of_range("substitute: no image for variable " + v.name());
  });
}

Poly Poly::substitute(const std::function<std::optional<Poly>(const Variable&)>& f) const {
  std::map<Variable, std::optional<Poly>> images;
  std::map<std::pair<Variable, unsigned>, Poly> powers;
  auto power = [&](const Variable& v, unsigned e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto im = images.find(v);
    if (im == images.end()) im = images.emplace(v, f(v)).first;
    Poly base = im->second ? *im->second : Poly(v);
    return powers.emplace(key, base.pow(e)).first->second;
  };
  Poly r;
  for (auto& [m, c] : t_) {
    Poly term(c);
    for (auto& [v, e] : m.factors()) {
      term = term * power(v, e);
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

Poly Poly::evaluate(const std::map<Variable, Rational>& values) const {
  std::map<std::pair<Variable, unsigned>, Rational> powers;
  Poly r;
  for (auto& [m, c] : t_) {
    Rational coef = c;
    Monomial rest;
    for (auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest = rest * Monomial(v, e);
        continue;
      }
      auto pw = powers.find({v, e});
      if (pw == powers.end()) pw = powers.emplace(std::make_pair(v, e), it->second.pow(e)).first;
      coef *= pw->second;
      if (coef.is_zero()) break;
    }
    r.add_term(rest, coef);
  }
  return r;
}

Poly Poly::derivative(const Variable& v) const {
  Poly r;
  for (auto& [m, c] : t_) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.without(v) * Monomial(v, e - 1), c * Rational(static_cast<long>(e)));
  }
  return r;
}

std::map<Monomial, Poly> Poly::collect(const std::function<bool(const Variable&)>& pred) const {
  std::map<Monomial, Poly> out;
  for (auto& [m, c] : t_) {
    auto [rest, key] = m.split(pred);
    out[key].add_term(rest, c);
  }
  return out;
}

Poly Poly::h_part(unsigned e) const {
  Poly r;
  for (auto& [m, c] : t_)
    if (m.exponent(Variable::h()) == e) r.add_term(m.without(Variable::h()), c);
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (!first) {
      s += a.sign() < 0 ? " - " : " + ";
      a = a.abs();
    } else if (a.sign() < 0 && !m.is_one()) {
      s += "-";
      a = a.abs();
    }
    first = false;
    if (m.is_one()) {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + "*";
      s += m.str();
    }
  }
  return s;
}

std::string Poly::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [m, c] : t_) {
    nlohmann::json mono = nlohmann::json::object();
    for (auto& [v, e] : m.factors()) mono[v.name()] = e;
    arr.push_back({{"coeff", c.json_str()}, {"monomial", mono}});
  }
  return arr.dump();
}

Poly Poly::from_json(const std::string& text) {
  auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("Poly json must be an array");
  Poly r;
  for (auto& term : arr) {
    Monomial m;
    for (auto& [name, e] : term.at("monomial").items())
      m = m * Monomial(Variable::parse(name), e.get<unsigned>());
    r.add_term(m, Rational::parse(term.at("coeff").get<std::string>()));
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::pair<Poly, Poly> divide_univariate(const Poly& a, const Poly& b, const Variable& v) {
  unsigned db = b.degree_in(v);
  auto bc = b.collect([&](const Variable& w) { return w == v; });
  const Poly& lead = bc[Monomial(v, db)];
  if (!lead.is_constant() || lead.is_zero())
    throw std::invalid_argument("divide_univariate: leading coefficient must be a nonzero rational");
  Rational lc = lead.constant_term();
  Poly q, r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    unsigned dr = r.degree_in(v);
    Poly lr = r.collect([&](const Variable& w) { return w == v; })[Monomial(v, dr)];
    Poly t = lr * Poly(Monomial(v, dr - db), lc.inverse());
    q += t;
    r -= t * b;
  }
  return {q, r};
}

}  // namespace orbitstar
