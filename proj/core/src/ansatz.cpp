#include "orbitstar/ansatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitstar {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

DenseMatrix zero(int n) { return DenseMatrix(n, std::vector<Rational>(n, Rational(0))); }

// tr(M P) for a rational M and polynomial P.
Poly trace_with(const DenseMatrix& m, const PolyMatrix& p) {
  Poly r;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (!m[a][b].is_zero() && !p[b][a].is_zero()) r.add_scaled(p[b][a], m[a][b]);
  return r;
}

Rational trace(const DenseMatrix& m) {
  Rational t;
  for (std::size_t a = 0; a < m.size(); ++a) t += m[a][a];
  return t;
}

Poly param(const Variable& v) { return Poly(v); }

struct Shapes {
  int n = 0;
  std::vector<DenseMatrix> dual;  // dual[i]: matrix A with u(A) = x_i
  PolyMatrix coord;               // matrix of coordinates
  std::optional<DenseMatrix> eta;
};

Shapes make_shapes(const LieSpec& L) {
  Shapes s;
  int n = L.n;
  s.n = n;
  s.coord.assign(n, std::vector<Poly>(n));
  for (auto& v : L.basis) {
    int a = v.idx[0], b = v.idx[1];
    DenseMatrix m = zero(n);
    switch (L.family) {
      case AlgebraFamily::SL:
        if (a != b) {
          m[a - 1][b - 1] = Rational(1);
        } else {
          for (int c = 0; c < n; ++c) m[c][c] = Rational(-1, n);
          m[a - 1][a - 1] += Rational(1);
        }
        break;
      case AlgebraFamily::SO:
        m[a - 1][b - 1] = Rational(1, 2);
        m[b - 1][a - 1] = Rational(-1, 2);
        break;
      case AlgebraFamily::SP:
        if (a == b) {
          m[a - 1][a - 1] = Rational(1);
        } else {
          m[a - 1][b - 1] = Rational(1, 2);
          m[b - 1][a - 1] = Rational(1, 2);
        }
        break;
      default:
        throw std::invalid_argument("ansatz: family has no matrix model");
    }
    s.dual.push_back(m);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (L.family == AlgebraFamily::SL)
        s.coord[b - 1][a - 1] = L.coord(a, b);  // tr(A coord) = A^a_b U_a^b
      else
        s.coord[a - 1][b - 1] = L.coord(a, b);
    }
  s.eta = L.eta;
  return s;
}

}  // namespace

const Poly& Ansatz::phi(int i, int j, int k) const {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  return phi_table.at(t);
}

Poly Ansatz::psi_linear(const Poly& f, int j) const {
  Poly r;
  for (auto& [m, c] : f.terms()) {
    auto [coordm, rest] = m.split([](const Variable& v) { return !v.is_coordinate(); });
    if (coordm.total_degree() != 1) {
      if (coordm.is_one()) continue;
      throw std::invalid_argument("psi_linear: argument is not linear");
    }
    r += psi[index.at(coordm.factors()[0].first)][j] * Poly(rest, c);
  }
  return r;
}

namespace {

Poly apply_tensor(const Ansatz& a, const Poly& f, unsigned degree) {
  Poly r;
  for (auto& [m, c] : f.terms()) {
    auto [coordm, rest] = m.split([](const Variable& v) { return !v.is_coordinate(); });
    if (coordm.total_degree() != degree) continue;
    std::vector<int> ix;
    for (auto& [v, e] : coordm.factors())
      for (unsigned t = 0; t < e; ++t) ix.push_back(a.index.at(v));
    const Poly& val = degree == 2 ? a.psi[ix[0]][ix[1]] : a.phi(ix[0], ix[1], ix[2]);
    r += val * Poly(rest, c);
  }
  return r;
}

}  // namespace

Poly Ansatz::apply_psi(const Poly& f) const { return apply_tensor(*this, f, 2); }
Poly Ansatz::apply_phi(const Poly& f) const { return apply_tensor(*this, f, 3); }

Ansatz Ansatz::substituted(const std::map<Variable, Poly>& values) const {
  Ansatz r = *this;
  for (auto& row : r.psi)
    for (auto& p : row) p = p.substitute(values);
  for (auto& [t, p] : r.phi_table) p = p.substitute(values);
  return r;
}

Ansatz make_ansatz(const OrbitSpec& spec) {
  if (!spec.algebra) throw std::invalid_argument("make_ansatz: orbit has no algebra");
  const LieSpec& L = *spec.algebra;
  if (spec.kind == OrbitKind::Cone)
    throw std::invalid_argument("make_ansatz: no matrix ansatz for " + spec.name);
  Ansatz a;
  a.family = L.family;
  a.n = L.n;
  a.index = L.index;
  Shapes s = make_shapes(L);
  int N = L.dim();
  bool sl = L.family == AlgebraFamily::SL;
  Poly k = param(Variable::k()), kp = param(Variable::kp());
  a.psi_params = sl ? std::vector<Variable>{Variable::k(), Variable::kp()}
                    : std::vector<Variable>{Variable::k()};
  int nphi = sl ? 4 : 2;
  for (int i = 1; i <= nphi; ++i) a.phi_params.push_back(Variable::phi(i));

  // Matrices multiplied by eta once, so that (A eta B eta) is a plain product.
  std::vector<DenseMatrix> de(N);
  for (int i = 0; i < N; ++i) de[i] = sl ? s.dual[i] : matmul(s.dual[i], *s.eta);

  a.psi.assign(N, std::vector<Poly>(N));
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      Poly p;
      if (sl) {
        DenseMatrix ij = matmul(s.dual[i], s.dual[j]), ji = matmul(s.dual[j], s.dual[i]);
        p = k * (trace_with(ij, s.coord) + trace_with(ji, s.coord)) / Rational(2) + kp * Poly(trace(ij));
      } else {
        p = -(k * Poly(trace(matmul(de[i], de[j]))));
      }
      a.psi[i][j] = a.psi[j][i] = p;
    }

  std::vector<Poly> phi(nphi);
  for (int i = 0; i < nphi; ++i) phi[i] = param(a.phi_params[i]);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      for (int l = j; l < N; ++l) {
        std::array<int, 3> t{i, j, l};
        Poly sum;
        std::array<int, 3> p = t;
        do {
          DenseMatrix AB = matmul(de[p[0]], de[p[1]]);
          if (sl) {
            DenseMatrix ABC = matmul(AB, s.dual[p[2]]);
            Poly xC = Poly(L.basis[p[2]]);
            sum += phi[0] * trace_with(AB, s.coord) * xC;
            sum += phi[1] * trace_with(ABC, s.coord);
            sum += phi[2] * Poly(trace(AB)) * xC;
            sum += phi[3] * Poly(trace(ABC));
          } else {
            DenseMatrix ABC = matmul(AB, s.dual[p[2]]);
            sum += phi[0] * trace_with(ABC, s.coord) * Rational(kAAALSign);
            sum += phi[1] * Poly(trace(AB)) * Poly(L.basis[p[2]]);
          }
        } while (std::next_permutation(p.begin(), p.end()));
        // next_permutation visits distinct arrangements only; rescale to the
        // average over all six orderings.
        int distinct = (i == j && j == l) ? 1 : (i == j || j == l) ? 3 : 6;
        a.phi_table[t] = sum / Rational(distinct);
      }
    }
  return a;
}

bool ansatz_is_equivariant(const OrbitSpec& spec, const Ansatz& a, bool check_phi) {
  const LieSpec& L = *spec.algebra;
  int N = L.dim();
  // Linear extension of psi / phi in one slot.
  auto psi_lin = [&](const Poly& f, int j) { return a.psi_linear(f, j); };
  for (int m = 0; m < N; ++m)
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j) {
        Poly lhs = ad(L, m, a.psi[i][j]);
        Poly rhs = psi_lin(L.bracket(m, i), j) + psi_lin(L.bracket(m, j), i);
        if (!(lhs - rhs).is_zero()) return false;
      }
  if (!check_phi) return true;
  auto phi_lin = [&](const Poly& f, int j, int l) {
    Poly r;
    for (auto& [mm, c] : f.terms()) r.add_scaled(a.phi(L.index.at(mm.factors()[0].first), j, l), c);
    return r;
  };
  for (int m = 0; m < N; ++m)
    for (auto& [t, p] : a.phi_table) {
      auto [i, j, l] = t;
      Poly lhs = ad(L, m, p);
      Poly rhs = phi_lin(L.bracket(m, i), j, l) + phi_lin(L.bracket(m, j), i, l) +
                 phi_lin(L.bracket(m, l), i, j);
      if (!(lhs - rhs).is_zero()) return false;
    }
  return true;
}

}  // namespace orbitstar
