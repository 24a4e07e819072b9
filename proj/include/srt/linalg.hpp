#pragma once

// Exact dense and sparse linear algebra over fields (Rational, CycNumber,
// prime fields). Everything here is deterministic: pivots are chosen by
// column order, never by magnitude.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "srt/numbers.hpp"

namespace srt::linalg {

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const CycNumber& z) { return z.is_zero(); }

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
template <class F>
Matrix<F> nullspace(Matrix<F> m, std::size_t cols) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True iff v lies in the row span of rows.
template <class F>
bool in_row_span(const Matrix<F>& rows, const std::vector<F>& v) {
  Matrix<F> a = rows;
  const std::size_t r0 = rank(a);
  a.push_back(v);
  return rank(std::move(a)) == r0;
}

/// Sparse vector: sorted (column, value) pairs with no explicit zeros.
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, F>>;

/// a += f * b for sparse vectors.
template <class F>
void axpy(SparseVec<F>& a, const F& f, const SparseVec<F>& b) {
  SparseVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      F v = a[i].second + f * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

/// Incrementally built echelon basis of a subspace, rows keyed by their
/// leading (smallest) column. Reduction against the basis leaves a vector
/// supported on non-pivot columns only.
template <class F>
class EchelonBasis {
 public:
  /// Reduces v in place modulo the span.
  void reduce(SparseVec<F>& v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      const F f = -v[pos].second;
      axpy(v, f, it->second);
      // entries before pos are untouched; the pivot entry is now gone
    }
  }

  /// Adds v to the span; returns true iff the dimension grew.
  bool insert(SparseVec<F> v) {
    reduce(v);
    if (v.empty()) return false;
    const F inv = F(1) / v.front().second;
    for (auto& e : v) e.second = e.second * inv;
    rows_.emplace(v.front().first, std::move(v));
    return true;
  }

  bool contains(SparseVec<F> v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t dim() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  const std::map<std::size_t, SparseVec<F>>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVec<F>> rows_;
};

}  // namespace srt::linalg
