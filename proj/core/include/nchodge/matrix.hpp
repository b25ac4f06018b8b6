#ifndef NCHODGE_MATRIX_HPP
#define NCHODGE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nchodge/error.hpp"

namespace nchodge {

/// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, F>>;

/// a + s * b for sorted sparse vectors.
template <class F>
SparseVec<F> axpy(const SparseVec<F>& a, const F& s, const SparseVec<F>& b) {
  SparseVec<F> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, s * ib->second);
      ++ib;
    } else {
      F v = ia->second + s * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

/// Column-sparse matrix over an exact field F (BigRational or ConjElem).
template <class F>
class Matrix {
 public:
  using Column = SparseVec<F>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), data_(cols) {}

  static Matrix identity(std::size_t n, const F& one = F(1)) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, one);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw ShapeError("ragged rows");
      for (std::size_t j = 0; j < c; ++j) {
        if (!rows[i][j].is_zero()) m.data_[j].emplace_back(i, rows[i][j]);
      }
    }
    return m;
  }

  static Matrix from_columns(std::size_t rows, std::vector<Column> cols) {
    Matrix m(rows, 0);
    for (auto& c : cols) {
      for (const auto& e : c) {
        if (e.first >= rows) throw ShapeError("column entry out of range");
      }
    }
    m.data_ = std::move(cols);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return data_.size(); }
  const Column& column(std::size_t c) const { return data_.at(c); }
  const std::vector<Column>& columns() const { return data_; }

  F at(std::size_t r, std::size_t c) const {
    const Column& col = data_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != col.end() && it->first == r) return it->second;
    return F(0);
  }

  void add(std::size_t r, std::size_t c, const F& v) {
    if (r >= rows_ || c >= cols()) throw ShapeError("entry out of range");
    if (v.is_zero()) return;
    Column& col = data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != col.end() && it->first == r) {
      it->second += v;
      if (it->second.is_zero()) col.erase(it);
    } else {
      col.insert(it, {r, v});
    }
  }

  void set(std::size_t r, std::size_t c, const F& v) {
    if (r >= rows_ || c >= cols()) throw ShapeError("entry out of range");
    Column& col = data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    bool present = it != col.end() && it->first == r;
    if (v.is_zero()) {
      if (present) col.erase(it);
    } else if (present) {
      it->second = v;
    } else {
      col.insert(it, {r, v});
    }
  }

  void set_column(std::size_t c, Column col) { data_.at(c) = std::move(col); }
  void append_column(Column col) { data_.push_back(std::move(col)); }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }
  double density() const {
    if (rows_ == 0 || cols() == 0) return 0.0;
    return static_cast<double>(nnz()) / (static_cast<double>(rows_) * static_cast<double>(cols()));
  }
  bool is_zero() const { return nnz() == 0; }

  /// Rows as sparse vectors (index = column).
  std::vector<SparseVec<F>> row_vectors() const {
    std::vector<SparseVec<F>> out(rows_);
    for (std::size_t c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : data_[c]) out[r].emplace_back(c, v);
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols(), rows_);
    t.data_ = row_vectors();
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Column acc;
      for (const auto& [k, v] : b.data_[c]) acc = axpy(acc, v, a.data_[k]);
      out.data_[c] = std::move(acc);
    }
    return out;
  }

  SparseVec<F> apply(const SparseVec<F>& x) const {
    SparseVec<F> acc;
    for (const auto& [k, v] : x) acc = axpy(acc, v, data_.at(k));
    return acc;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return a.combine(b, F(1)); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a.combine(b, F(-1)); }

  Matrix scaled(const F& s) const {
    Matrix out(rows_, cols());
    if (s.is_zero()) return out;
    for (std::size_t c = 0; c < cols(); ++c) {
      out.data_[c].reserve(data_[c].size());
      for (const auto& [r, v] : data_[c]) out.data_[c].emplace_back(r, v * s);
    }
    return out;
  }

  /// Entrywise map (used for conjugation and real/imaginary parts).
  template <class G, class Fn>
  Matrix<G> map(Fn fn) const {
    Matrix<G> out(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c) {
      typename Matrix<G>::Column col;
      for (const auto& [r, v] : data_[c]) {
        G g = fn(v);
        if (!g.is_zero()) col.emplace_back(r, std::move(g));
      }
      out.set_column(c, std::move(col));
    }
    return out;
  }

  Matrix conj() const {
    return map<F>([](const F& v) { return v.conj(); });
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, 0);
    for (std::size_t c : idx) out.data_.push_back(data_.at(c));
    return out;
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    std::vector<std::size_t> pos(rows_, static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < idx.size(); ++k) pos.at(idx[k]) = k;
    Matrix out(idx.size(), cols());
    for (std::size_t c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : data_[c]) {
        if (pos[r] != static_cast<std::size_t>(-1)) out.data_[c].emplace_back(pos[r], v);
      }
      std::sort(out.data_[c].begin(), out.data_[c].end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return out;
  }

  /// Adds `block` with its (0,0) entry at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols()) throw ShapeError("block does not fit");
    for (std::size_t c = 0; c < block.cols(); ++c) {
      if (block.data_[c].empty()) continue;
      Column shifted;
      shifted.reserve(block.data_[c].size());
      for (const auto& [r, v] : block.data_[c]) shifted.emplace_back(r + r0, v);
      data_[c0 + c] = axpy(data_[c0 + c], F(1), shifted);
    }
  }

  std::vector<std::vector<F>> to_dense() const {
    std::vector<std::vector<F>> out(rows_, std::vector<F>(cols(), F(0)));
    for (std::size_t c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : data_[c]) out[r][c] = v;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    auto dense = to_dense();
    for (std::size_t r = 0; r < rows_; ++r) {
      s += r ? "; " : "";
      for (std::size_t c = 0; c < cols(); ++c) s += (c ? ", " : "") + dense[r][c].to_string();
    }
    return s + "]";
  }

 private:
  Matrix combine(const Matrix& b, const F& s) const {
    if (rows_ != b.rows_ || cols() != b.cols()) throw ShapeError("sum shape mismatch");
    Matrix out(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c) out.data_[c] = axpy(data_[c], s, b.data_[c]);
    return out;
  }

  std::size_t rows_ = 0;
  std::vector<Column> data_;
};

template <class F>
Matrix<F> hstack(const std::vector<Matrix<F>>& blocks) {
  if (blocks.empty()) return {};
  Matrix<F> out(blocks[0].rows(), 0);
  for (const auto& b : blocks) {
    if (b.rows() != out.rows()) throw ShapeError("hstack row mismatch");
    for (const auto& c : b.columns()) out.append_column(c);
  }
  return out;
}

template <class F>
Matrix<F> vstack(const std::vector<Matrix<F>>& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = 0, cols = blocks[0].cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack column mismatch");
    rows += b.rows();
  }
  Matrix<F> out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    out.place(r0, 0, b);
    r0 += b.rows();
  }
  return out;
}

/// Block-diagonal sum.
template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() + b.rows(), a.cols() + b.cols());
  out.place(0, 0, a);
  out.place(a.rows(), a.cols(), b);
  return out;
}

}  // namespace nchodge

#endif  // NCHODGE_MATRIX_HPP
