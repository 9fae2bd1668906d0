#include "orbitstar/linalg.hpp"

#include <stdexcept>

namespace orbitstar {

void axpy(SparseRow& y, const Rational& a, const SparseRow& x) {
  if (a.is_zero()) return;
  for (auto& [c, v] : x) {
    auto [it, ins] = y.try_emplace(c, a * v);
    if (!ins) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SparseRow RowEchelon::reduce(SparseRow row) const {
  // Pivot rows are mutually reduced, so one sweep in column order suffices.
  for (auto it = row.begin(); it != row.end();) {
    auto p = rows_.find(it->first);
    if (p == rows_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    Rational f = -it->second;
    axpy(row, f, p->second);
    it = row.upper_bound(col);
  }
  return row;
}

bool RowEchelon::add(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  int piv = row.begin()->first;
  Rational inv = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= inv;
  for (auto& [pc, r] : rows_) {
    auto it = r.find(piv);
    if (it != r.end()) axpy(r, -Rational(it->second), row);
  }
  rows_.emplace(piv, std::move(row));
  return true;
}

std::vector<SparseRow> RowEchelon::kernel(int ncols) const {
  std::vector<SparseRow> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot(f)) continue;
    SparseRow v;
    v[f] = Rational(1);
    for (auto& [pc, r] : rows_) {
      auto it = r.find(f);
      if (it != r.end()) v[pc] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<DenseMatrix> inverse(DenseMatrix m) {
  std::size_t n = m.size();
  DenseMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational f = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational g = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= g * m[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("matmul: shape mismatch");
  DenseMatrix r(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace orbitstar
