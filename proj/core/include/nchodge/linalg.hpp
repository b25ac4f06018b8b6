#ifndef NCHODGE_LINALG_HPP
#define NCHODGE_LINALG_HPP

#include <algorithm>
#include <numeric>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "nchodge/matrix.hpp"
#include "nchodge/rational.hpp"

namespace nchodge {

/// Row echelon form: rows[i] has leading entry 1 in column pivots[i],
/// pivots strictly increasing. When reduced, pivot columns are otherwise zero.
template <class F>
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseVec<F>> rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

template <class F>
void make_monic(SparseVec<F>& v) {
  if (v.front().second.is_one()) return;
  F inv = v.front().second.inv();
  for (auto& e : v) e.second *= inv;
}

// Incremental elimination of one block of rows (a connected component).
template <class F>
void eliminate_block(std::vector<SparseVec<F>> rows, bool reduced, Echelon<F>& out) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front().first < b.front().first;
  });
  std::unordered_map<std::size_t, std::size_t> where;
  std::vector<SparseVec<F>> piv;
  for (auto& v : rows) {
    while (!v.empty()) {
      auto it = where.find(v.front().first);
      if (it == where.end()) {
        make_monic(v);
        where.emplace(v.front().first, piv.size());
        piv.push_back(std::move(v));
        break;
      }
      F s = -v.front().second;
      v = axpy(v, s, piv[it->second]);
    }
  }
  std::vector<std::size_t> order(piv.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return piv[a].front().first < piv[b].front().first; });
  if (reduced) {
    // Back substitution from the last pivot upwards.
    for (std::size_t k = order.size(); k-- > 0;) {
      SparseVec<F>& v = piv[order[k]];
      std::size_t pos = 1;
      while (pos < v.size()) {
        auto it = where.find(v[pos].first);
        if (it == where.end()) {
          ++pos;
          continue;
        }
        F s = -v[pos].second;
        std::size_t col = v[pos].first;
        v = axpy(v, s, piv[it->second]);
        pos = static_cast<std::size_t>(
            std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; }) -
            v.begin());
      }
    }
  }
  for (std::size_t k : order) {
    out.pivots.push_back(piv[k].front().first);
    out.rows.push_back(std::move(piv[k]));
  }
}

}  // namespace detail

/// Sparse elimination that first splits the matrix into connected
/// components of its row/column incidence graph.
template <class F>
Echelon<F> echelon(const Matrix<F>& m, bool reduced = true) {
  Echelon<F> out;
  out.cols = m.cols();
  auto rows = m.row_vectors();
  detail::UnionFind uf(m.cols());
  for (const auto& r : rows) {
    for (std::size_t k = 1; k < r.size(); ++k) uf.unite(r[0].first, r[k].first);
  }
  std::unordered_map<std::size_t, std::vector<SparseVec<F>>> blocks;
  std::vector<std::size_t> roots;
  for (auto& r : rows) {
    if (r.empty()) continue;
    std::size_t root = uf.find(r[0].first);
    auto [it, fresh] = blocks.try_emplace(root);
    if (fresh) roots.push_back(root);
    it->second.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end());
  Echelon<F> part;
  for (std::size_t root : roots) detail::eliminate_block(std::move(blocks[root]), reduced, part);
  // Merge component results into global pivot order.
  std::vector<std::size_t> order(part.pivots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return part.pivots[a] < part.pivots[b]; });
  for (std::size_t k : order) {
    out.pivots.push_back(part.pivots[k]);
    out.rows.push_back(std::move(part.rows[k]));
  }
  return out;
}

/// Fraction-free (Bareiss) rank of a rational matrix, dense.
inline std::size_t bareiss_rank(const Matrix<BigRational>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C, 0));
  auto rows = m.row_vectors();
  for (std::size_t r = 0; r < R; ++r) {
    BigInt l = 1;
    for (const auto& [c, v] : rows[r]) l = lcm(l, v.denominator());
    for (const auto& [c, v] : rows[r]) a[r][c] = v.numerator() * (l / v.denominator());
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t p = rank;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < R; ++r) {
      for (std::size_t k = c + 1; k < C; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Textbook dense Gaussian elimination over Q; used as a cross-check.
inline std::size_t naive_rank(const Matrix<BigRational>& m) {
  auto a = m.to_dense();
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t p = rank;
    while (p < R && a[p][c].is_zero()) ++p;
    if (p == R) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < R; ++r) {
      if (a[r][c].is_zero()) continue;
      BigRational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < C; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline constexpr double kDenseThreshold = 0.25;

template <class F>
std::size_t rank(const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, BigRational>) {
    if (m.density() > kDenseThreshold && m.rows() * m.cols() <= 4096) return bareiss_rank(m);
  }
  return echelon(m, false).rank();
}

/// Kernel basis as columns, read off the reduced echelon form.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  Echelon<F> e = echelon(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> slot(m.cols(), 0);
  std::vector<SparseVec<F>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    slot[c] = cols.size();
    cols.emplace_back();
  }
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    for (const auto& [c, v] : e.rows[i]) {
      if (c != e.pivots[i]) cols[slot[c]].emplace_back(e.pivots[i], -v);
    }
  }
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    auto& col = cols[k++];
    col.emplace_back(c, F(1));
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return Matrix<F>::from_columns(m.cols(), std::move(cols));
}

/// Column-echelon spanning matrix of the column space (canonical).
template <class F>
Matrix<F> image_basis(const Matrix<F>& m) {
  Echelon<F> e = echelon(m.transpose(), true);
  return Matrix<F>::from_columns(m.rows(), std::move(e.rows));
}

template <class F>
struct GaussResult {
  std::size_t rank = 0;
  Matrix<F> kernel_basis;
  Matrix<F> image_basis;
};

template <class F>
GaussResult<F> gaussian(const Matrix<F>& m) {
  GaussResult<F> g;
  g.rank = rank(m);
  g.kernel_basis = kernel_basis(m);
  g.image_basis = image_basis(m);
  return g;
}

/// Indices j such that column j of `extra` is not in span(base, extra[:, <j]).
template <class F>
std::vector<std::size_t> extending_columns(const Matrix<F>& base, const Matrix<F>& extra) {
  Echelon<F> e = echelon(hstack<F>({base, extra}), false);
  std::vector<std::size_t> out;
  for (std::size_t p : e.pivots) {
    if (p >= base.cols()) out.push_back(p - base.cols());
  }
  return out;
}

/// Solves a * x = b (columnwise); throws ShapeError if inconsistent.
template <class F>
Matrix<F> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
  Echelon<F> e = echelon(hstack<F>({a, b}), true);
  const std::size_t n = a.cols();
  std::vector<SparseVec<F>> cols(b.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] >= n) throw ShapeError("solve: system is inconsistent");
    for (const auto& [c, v] : e.rows[i]) {
      if (c >= n) cols[c - n].emplace_back(e.pivots[i], v);
    }
  }
  return Matrix<F>::from_columns(n, std::move(cols));
}

/// True if every column of `sub` lies in the column span of `span`.
template <class F>
bool contains_span(const Matrix<F>& span, const Matrix<F>& sub) {
  return extending_columns(span, sub).empty();
}

/// Column-echelon basis of span(a) ∩ span(b).
template <class F>
Matrix<F> intersect(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw ShapeError("intersect: ambient mismatch");
  Matrix<F> k = kernel_basis(hstack<F>({a, b.scaled(F(-1))}));
  std::vector<std::size_t> top(a.cols());
  std::iota(top.begin(), top.end(), 0);
  return image_basis(a * k.select_rows(top));
}

/// Kronecker product.
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t l = 0; l < b.cols(); ++l) {
      SparseVec<F> col;
      for (const auto& [i, x] : a.column(j)) {
        for (const auto& [k, y] : b.column(l)) col.emplace_back(i * b.rows() + k, x * y);
      }
      out.set_column(j * b.cols() + l, std::move(col));
    }
  }
  return out;
}

}  // namespace nchodge

#endif  // NCHODGE_LINALG_HPP
