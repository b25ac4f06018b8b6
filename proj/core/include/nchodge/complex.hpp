#ifndef NCHODGE_COMPLEX_HPP
#define NCHODGE_COMPLEX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nchodge/linalg.hpp"

namespace nchodge {

// Cohomological indexing throughout: d_k maps degree k to degree k + 1.
// Homological objects are stored in negated degrees.

template <class F>
class ChainComplex {
 public:
  ChainComplex() = default;

  /// dims for degrees lo..hi; d[k - lo] is the differential from degree k
  /// to k + 1 for k in [lo, hi - 1]. Checks shapes and d^2 = 0.
  ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<Matrix<F>> d, bool check = true)
      : lo_(lo), dims_(std::move(dims)), d_(std::move(d)) {
    if (dims_.empty()) throw ShapeError("complex needs at least one degree");
    if (d_.size() + 1 != dims_.size()) throw ShapeError("need one differential between consecutive degrees");
    for (std::size_t k = 0; k < d_.size(); ++k) {
      if (d_[k].cols() != dims_[k] || d_[k].rows() != dims_[k + 1]) {
        throw ShapeError("differential shape does not match dims at degree " + std::to_string(lo_ + static_cast<int>(k)));
      }
    }
    if (check) check_d_squared();
  }

  /// Complex concentrated in one degree.
  static ChainComplex single(int degree, std::size_t dim) { return ChainComplex(degree, {dim}, {}); }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool in_range(int k) const { return k >= lo() && k <= hi(); }
  std::size_t dim(int k) const { return in_range(k) ? dims_[static_cast<std::size_t>(k - lo_)] : 0; }

  /// Differential out of degree k (zero matrix outside the stored range).
  Matrix<F> d(int k) const {
    if (k >= lo_ && k < hi()) return d_[static_cast<std::size_t>(k - lo_)];
    return Matrix<F>(dim(k + 1), dim(k));
  }

  void check_d_squared() const {
    for (int k = lo_; k + 1 < hi(); ++k) {
      if (!(d(k + 1) * d(k)).is_zero()) {
        throw InvalidInputError("d^2 != 0 starting at degree " + std::to_string(k));
      }
    }
  }

  std::size_t cohomology_dim(int k) const {
    if (!in_range(k)) throw DegreeRangeError("degree " + std::to_string(k) + " outside [" + std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
    return dim(k) - rank(d(k)) - rank(d(k - 1));
  }

  struct Cohomology {
    std::size_t dim = 0;
    Matrix<F> representatives;  // cocycles, one per basis element of H^k
  };

  Cohomology cohomology(int k) const {
    if (!in_range(k)) throw DegreeRangeError("degree " + std::to_string(k) + " outside [" + std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
    Matrix<F> z = kernel_basis(d(k));
    Matrix<F> b = image_basis(d(k - 1));
    Cohomology h;
    h.representatives = z.select_columns(extending_columns(b, z));
    h.dim = h.representatives.cols();
    return h;
  }

  std::map<int, std::size_t> cohomology_dims() const {
    std::map<int, std::size_t> out;
    for (int k = lo(); k <= hi(); ++k) out[k] = cohomology_dim(k);
    return out;
  }

  long euler_characteristic() const {
    long chi = 0;
    for (int k = lo(); k <= hi(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(dim(k));
    return chi;
  }

  /// C[s]^n = C^{n+s}, differential multiplied by (-1)^s.
  ChainComplex shifted(int s) const {
    std::vector<Matrix<F>> d = d_;
    if (s % 2 != 0) {
      for (auto& m : d) m = m.scaled(F(-1));
    }
    return ChainComplex(lo_ - s, dims_, std::move(d), false);
  }

  /// Same complex viewed on a wider degree range (zero padding).
  ChainComplex widened(int lo, int hi) const {
    lo = std::min(lo, lo_);
    hi = std::max(hi, this->hi());
    std::vector<std::size_t> dims;
    std::vector<Matrix<F>> d;
    for (int k = lo; k <= hi; ++k) {
      dims.push_back(dim(k));
      if (k < hi) d.push_back(this->d(k));
    }
    return ChainComplex(lo, std::move(dims), std::move(d), false);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["lo"] = lo();
    j["hi"] = hi();
    j["dims"] = dims_;
    nlohmann::json ds = nlohmann::json::array();
    for (int k = lo(); k < hi(); ++k) {
      nlohmann::json triples = nlohmann::json::array();
      Matrix<F> m = d(k);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c)) triples.push_back({r, c, v.to_string()});
      }
      ds.push_back({{"from", k}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", triples}});
    }
    j["differentials"] = ds;
    return j;
  }

 private:
  int lo_ = 0;
  std::vector<std::size_t> dims_{0};
  std::vector<Matrix<F>> d_;
};

template <class F>
ChainComplex<F> direct_sum(const ChainComplex<F>& a, const ChainComplex<F>& b) {
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> d;
  for (int k = lo; k <= hi; ++k) {
    dims.push_back(a.dim(k) + b.dim(k));
    if (k < hi) d.push_back(direct_sum(a.d(k), b.d(k)));
  }
  return ChainComplex<F>(lo, std::move(dims), std::move(d));
}

/// Chain map f: C -> D; f(k) has shape dim D^k x dim C^k.
template <class F>
struct ChainMap {
  ChainComplex<F> source, target;
  std::map<int, Matrix<F>> components;

  Matrix<F> at(int k) const {
    auto it = components.find(k);
    if (it != components.end()) return it->second;
    return Matrix<F>(target.dim(k), source.dim(k));
  }

  void check() const {
    int lo = std::min(source.lo(), target.lo()), hi = std::max(source.hi(), target.hi());
    for (int k = lo; k <= hi; ++k) {
      Matrix<F> f = at(k);
      if (f.rows() != target.dim(k) || f.cols() != source.dim(k)) {
        throw ShapeError("chain map component has wrong shape at degree " + std::to_string(k));
      }
    }
    for (int k = lo; k < hi; ++k) {
      if (!(target.d(k) * at(k) == at(k + 1) * source.d(k))) {
        throw ChainMapError("map does not commute with differentials at degree " + std::to_string(k));
      }
    }
  }
};

/// cone(f)^n = C^{n+1} (+) D^n with d(c, y) = (-d c, f c + d y).
template <class F>
ChainComplex<F> cone(const ChainMap<F>& f) {
  f.check();
  const auto& C = f.source;
  const auto& D = f.target;
  int lo = std::min(C.lo() - 1, D.lo()), hi = std::max(C.hi() - 1, D.hi());
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> d;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(C.dim(n + 1) + D.dim(n));
    if (n == hi) break;
    Matrix<F> m(C.dim(n + 2) + D.dim(n + 1), C.dim(n + 1) + D.dim(n));
    m.place(0, 0, C.d(n + 1).scaled(F(-1)));
    m.place(C.dim(n + 2), 0, f.at(n + 1));
    m.place(C.dim(n + 2), C.dim(n + 1), D.d(n));
    d.push_back(std::move(m));
  }
  return ChainComplex<F>(lo, std::move(dims), std::move(d));
}

/// Rank of H^n(f): H^n(C) -> H^n(D), from ranks only:
/// rank [[d_C, 0], [f, d_D]] - rank d_C^n - rank d_D^{n-1}.
template <class F>
std::size_t induced_map_rank(const ChainMap<F>& f, int n) {
  const auto& C = f.source;
  const auto& D = f.target;
  Matrix<F> m(C.dim(n + 1) + D.dim(n), C.dim(n) + D.dim(n - 1));
  m.place(0, 0, C.d(n));
  m.place(C.dim(n + 1), 0, f.at(n));
  m.place(C.dim(n + 1), C.dim(n), D.d(n - 1));
  return rank(m) - rank(C.d(n)) - rank(D.d(n - 1));
}

/// Double complex with commuting squares: dh(p, q): V^{p,q} -> V^{p+1,q},
/// dv(p, q): V^{p,q} -> V^{p,q+1}. Totalization multiplies the vertical
/// differential on column p by (-1)^p.
template <class F>
struct Bicomplex {
  std::map<std::pair<int, int>, std::size_t> dims;
  std::map<std::pair<int, int>, Matrix<F>> dh, dv;

  std::size_t dim(int p, int q) const {
    auto it = dims.find({p, q});
    return it == dims.end() ? 0 : it->second;
  }

  /// Placement of the summands of total degree n: (p, q, offset), p increasing.
  std::vector<std::tuple<int, int, std::size_t>> layout(int n) const {
    std::vector<std::tuple<int, int, std::size_t>> out;
    std::size_t off = 0;
    for (const auto& [pq, dm] : dims) {
      if (pq.first + pq.second != n || dm == 0) continue;
      out.emplace_back(pq.first, pq.second, off);
      off += dm;
    }
    return out;
  }
};

template <class F>
ChainComplex<F> total(const Bicomplex<F>& b) {
  if (b.dims.empty()) return ChainComplex<F>::single(0, 0);
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [pq, dm] : b.dims) {
    int n = pq.first + pq.second;
    lo = first ? n : std::min(lo, n);
    hi = first ? n : std::max(hi, n);
    first = false;
  }
  auto check_shape = [&](const Matrix<F>& m, std::size_t rows, std::size_t cols, const char* what, int p, int q) {
    if (m.rows() != rows || m.cols() != cols) {
      throw ShapeError(std::string(what) + " differential has wrong shape at (" + std::to_string(p) + ", " + std::to_string(q) + ")");
    }
  };
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> d;
  for (int n = lo; n <= hi; ++n) {
    auto src = b.layout(n);
    std::size_t size = 0;
    for (const auto& [p, q, off] : src) size += b.dim(p, q);
    dims.push_back(size);
    if (n == hi) break;
    auto dst = b.layout(n + 1);
    std::map<std::pair<int, int>, std::size_t> at;
    std::size_t dsize = 0;
    for (const auto& [p, q, off] : dst) {
      at[{p, q}] = off;
      dsize += b.dim(p, q);
    }
    Matrix<F> m(dsize, size);
    for (const auto& [p, q, off] : src) {
      if (auto it = b.dh.find({p, q}); it != b.dh.end() && it->second.cols() > 0) {
        check_shape(it->second, b.dim(p + 1, q), b.dim(p, q), "horizontal", p, q);
        if (b.dim(p + 1, q) > 0) m.place(at.at({p + 1, q}), off, it->second);
      }
      if (auto it = b.dv.find({p, q}); it != b.dv.end() && it->second.cols() > 0) {
        check_shape(it->second, b.dim(p, q + 1), b.dim(p, q), "vertical", p, q);
        if (b.dim(p, q + 1) > 0) {
          m.place(at.at({p, q + 1}), off, (p % 2 == 0) ? it->second : it->second.scaled(F(-1)));
        }
      }
    }
    d.push_back(std::move(m));
  }
  return ChainComplex<F>(lo, std::move(dims), std::move(d));
}

/// Decreasing filtration by spanning matrices: F^p = everything for
/// p <= pmin, 0 for p > pmax; spans[k - lo][p - pmin] for pmin <= p <= pmax.
template <class F>
struct FilteredComplex {
  ChainComplex<F> complex;
  int pmin = 0, pmax = 0;
  std::vector<std::vector<Matrix<F>>> spans;

  Matrix<F> step(int k, int p) const {
    std::size_t n = complex.dim(k);
    if (!complex.in_range(k) || p > pmax) return Matrix<F>(n, 0);
    if (p <= pmin) return Matrix<F>::identity(n);
    return spans[static_cast<std::size_t>(k - complex.lo())][static_cast<std::size_t>(p - pmin)];
  }

  /// Checks nesting, F^{pmin} = full, and d(F^p) in F^p.
  void validate() const {
    if (spans.size() != static_cast<std::size_t>(complex.hi() - complex.lo() + 1)) {
      throw FiltrationError("filtration must give spans for every degree");
    }
    for (int k = complex.lo(); k <= complex.hi(); ++k) {
      const auto& row = spans[static_cast<std::size_t>(k - complex.lo())];
      if (row.size() != static_cast<std::size_t>(pmax - pmin + 1)) throw FiltrationError("filtration range mismatch");
      for (const auto& s : row) {
        if (s.rows() != complex.dim(k)) throw FiltrationError("filtration span has wrong ambient dimension");
      }
      if (rank(row.front()) != complex.dim(k)) {
        throw FiltrationError("F^pmin must be the whole space in degree " + std::to_string(k));
      }
      for (int p = pmin; p < pmax; ++p) {
        if (!contains_span(step(k, p), step(k, p + 1))) {
          throw FiltrationError("filtration not decreasing at degree " + std::to_string(k) + ", p = " + std::to_string(p + 1));
        }
      }
      if (k < complex.hi()) {
        for (int p = pmin; p <= pmax; ++p) {
          if (!contains_span(step(k + 1, p), complex.d(k) * step(k, p))) {
            throw FiltrationError("differential does not preserve F^" + std::to_string(p) + " at degree " + std::to_string(k));
          }
        }
      }
    }
  }
};

/// dim F^p H^k = rank[F^p | B^k] - rank(d F^p) - rank(B^k), p from pmin to pmax + 1.
template <class F>
std::vector<std::pair<int, std::size_t>> induced_filtration_dims(const FilteredComplex<F>& fc, int k) {
  fc.validate();
  const auto& C = fc.complex;
  if (!C.in_range(k)) throw DegreeRangeError("degree " + std::to_string(k) + " outside the complex");
  Matrix<F> b = C.d(k - 1);
  std::size_t rb = rank(b);
  std::vector<std::pair<int, std::size_t>> out;
  for (int p = fc.pmin; p <= fc.pmax + 1; ++p) {
    Matrix<F> s = fc.step(k, p);
    out.emplace_back(p, rank(hstack<F>({s, b})) - rank(C.d(k) * s) - rb);
  }
  return out;
}

/// Per-degree involution. Linear: v -> J v over the base field (entries
/// must be fixed by conjugation). Semilinear: v -> J conj(v) over K; the
/// invariants are computed after restricting scalars along K/K0.
template <class F>
struct SemilinearInvolution {
  bool semilinear = false;
  std::map<int, Matrix<F>> maps;
};

template <class F>
struct IotaResult {
  ChainComplex<F> complex;             // over K0
  std::map<int, Matrix<F>> bases;      // +1 eigenvectors, in (restricted) coordinates
  std::map<int, std::size_t> minus_dims;  // dims of the -1 eigenspaces
  std::map<int, std::size_t> restricted_dims;
};

/// [[Re, -Im], [Im, Re]]: the K0-matrix of a K-linear map.
template <class F>
Matrix<F> realify_linear(const Matrix<F>& m) {
  Matrix<F> re = m.template map<F>([](const F& v) { return v.real_part(); });
  Matrix<F> im = m.template map<F>([](const F& v) { return v.imag_part(); });
  Matrix<F> out(2 * m.rows(), 2 * m.cols());
  out.place(0, 0, re);
  out.place(0, m.cols(), im.scaled(F(-1)));
  out.place(m.rows(), 0, im);
  out.place(m.rows(), m.cols(), re);
  return out;
}

/// [[Re, Im], [Im, -Re]]: the K0-matrix of v -> J conj(v).
template <class F>
Matrix<F> realify_semilinear(const Matrix<F>& j) {
  Matrix<F> re = j.template map<F>([](const F& v) { return v.real_part(); });
  Matrix<F> im = j.template map<F>([](const F& v) { return v.imag_part(); });
  Matrix<F> out(2 * j.rows(), 2 * j.cols());
  out.place(0, 0, re);
  out.place(0, j.cols(), im);
  out.place(j.rows(), 0, im);
  out.place(j.rows(), j.cols(), re.scaled(F(-1)));
  return out;
}

template <class F>
IotaResult<F> iota_invariants(const ChainComplex<F>& C, const SemilinearInvolution<F>& iota) {
  auto J = [&](int k) {
    auto it = iota.maps.find(k);
    if (it == iota.maps.end()) {
      if (C.dim(k) == 0) return Matrix<F>(0, 0);
      throw InvolutionError("involution missing in degree " + std::to_string(k));
    }
    if (it->second.rows() != C.dim(k) || it->second.cols() != C.dim(k)) {
      throw InvolutionError("involution has wrong shape in degree " + std::to_string(k));
    }
    return it->second;
  };
  for (int k = C.lo(); k <= C.hi(); ++k) {
    Matrix<F> j = J(k);
    std::size_t n = C.dim(k);
    if (iota.semilinear) {
      if (!(j * j.conj() == Matrix<F>::identity(n))) throw InvolutionError("iota^2 != id in degree " + std::to_string(k));
      if (k < C.hi() && !(C.d(k) * j == J(k + 1) * C.d(k).conj())) {
        throw InvolutionError("iota does not commute with d at degree " + std::to_string(k));
      }
    } else {
      if (!(j == j.conj())) throw InvolutionError("linear iota must have real entries");
      if (!(j * j == Matrix<F>::identity(n))) throw InvolutionError("iota^2 != id in degree " + std::to_string(k));
      if (k < C.hi() && !(C.d(k) * j == J(k + 1) * C.d(k))) {
        throw InvolutionError("iota does not commute with d at degree " + std::to_string(k));
      }
    }
  }
  IotaResult<F> res;
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> ds;
  std::map<int, Matrix<F>> rd;
  for (int k = C.lo(); k <= C.hi(); ++k) {
    std::size_t n = C.dim(k);
    Matrix<F> jr = iota.semilinear ? realify_semilinear(J(k)) : J(k);
    std::size_t rn = iota.semilinear ? 2 * n : n;
    Matrix<F> e = kernel_basis(jr - Matrix<F>::identity(rn));
    res.minus_dims[k] = rn - rank(jr + Matrix<F>::identity(rn));
    res.restricted_dims[k] = rn;
    res.bases[k] = e;
    dims.push_back(e.cols());
  }
  for (int k = C.lo(); k < C.hi(); ++k) {
    Matrix<F> dr = iota.semilinear ? realify_linear(C.d(k)) : C.d(k);
    ds.push_back(solve(res.bases[k + 1], dr * res.bases[k]));
  }
  res.complex = ChainComplex<F>(C.lo(), std::move(dims), std::move(ds));
  return res;
}

}  // namespace nchodge

#endif  // NCHODGE_COMPLEX_HPP
