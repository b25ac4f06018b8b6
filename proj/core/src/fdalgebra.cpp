#include "nchodge/fdalgebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace nchodge {

namespace {

QMatrix column_matrix(const QVec& v) {
  QMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

QVec column_vec(const QMatrix& m, std::size_t c) {
  QVec v(m.rows(), BigRational(0));
  for (const auto& [r, x] : m.column(c)) v[r] = x;
  return v;
}

QMatrix columns_of(const std::vector<QVec>& vs, std::size_t dim) {
  QMatrix m(dim, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c) {
    for (std::size_t r = 0; r < dim; ++r) m.set(r, c, vs[c][r]);
  }
  return m;
}

bool is_zero_vec(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const BigRational& x) { return x.is_zero(); });
}

QVec eval_poly(const FDAlgebra& a, const UniPoly& p, const QVec& x) {
  QVec acc(a.dim, BigRational(0));
  for (int k = p.degree(); k >= 0; --k) {
    acc = a.mul(acc, x);
    for (std::size_t i = 0; i < a.dim; ++i) acc[i] += p.coeff(k) * a.unit[i];
  }
  return acc;
}

// Structure constants of the algebra spanned by the columns of `basis`
// (closed under multiplication), unit given in ambient coordinates.
FDAlgebra subalgebra(const FDAlgebra& a, const QMatrix& basis, const QVec& unit, std::string name) {
  std::size_t r = basis.cols();
  std::vector<QVec> cols;
  for (std::size_t c = 0; c < r; ++c) cols.push_back(column_vec(basis, c));
  std::vector<std::vector<QVec>> c(r, std::vector<QVec>(r));
  std::vector<QVec> prods;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) prods.push_back(a.mul(cols[i], cols[j]));
  }
  prods.push_back(unit);
  QMatrix coords = solve(basis, columns_of(prods, a.dim));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) c[i][j] = column_vec(coords, i * r + j);
  }
  return FDAlgebra::from_dense(std::move(name), column_vec(coords, r * r), c);
}

}  // namespace

// ---------------------------------------------------------------- FDAlgebra

FDAlgebra FDAlgebra::from_dense(std::string name, const QVec& unit, const std::vector<std::vector<QVec>>& c,
                                std::vector<std::string> labels) {
  FDAlgebra a;
  a.name = std::move(name);
  a.dim = unit.size();
  a.unit = unit;
  if (c.size() != a.dim) throw InvalidInputError("structure table has wrong size");
  a.table.assign(a.dim, std::vector<SparseVec<BigRational>>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (c[i].size() != a.dim) throw InvalidInputError("structure table has wrong size");
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (c[i][j].size() != a.dim) throw InvalidInputError("structure table has wrong size");
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (!c[i][j][k].is_zero()) a.table[i][j].emplace_back(k, c[i][j][k]);
      }
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < a.dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != a.dim) throw InvalidInputError("label count differs from dimension");
  a.labels = std::move(labels);
  return a;
}

QVec FDAlgebra::mul(const QVec& x, const QVec& y) const {
  QVec out(dim, BigRational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      BigRational s = x[i] * y[j];
      for (const auto& [k, v] : table[i][j]) out[k] += s * v;
    }
  }
  return out;
}

QVec FDAlgebra::basis_vector(std::size_t i) const {
  QVec v(dim, BigRational(0));
  v.at(i) = BigRational(1);
  return v;
}

QMatrix FDAlgebra::left_mult(const QVec& x) const {
  std::vector<QVec> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(mul(x, basis_vector(j)));
  return columns_of(cols, dim);
}

QMatrix FDAlgebra::right_mult(const QVec& x) const {
  std::vector<QVec> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(mul(basis_vector(j), x));
  return columns_of(cols, dim);
}

AlgebraCheck check_algebra(const FDAlgebra& a) {
  AlgebraCheck res;
  if (a.unit.size() != a.dim || a.table.size() != a.dim) {
    res.ok = false;
    res.failure = "shape mismatch";
    return res;
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    QVec ei = a.basis_vector(i);
    if (a.mul(a.unit, ei) != ei || a.mul(ei, a.unit) != ei) {
      res.ok = false;
      res.failure = "unit law fails for " + a.labels[i];
      res.witness = {i, i, i};
      return res;
    }
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    QVec ei = a.basis_vector(i);
    for (std::size_t j = 0; j < a.dim; ++j) {
      QVec eij = a.mul(ei, a.basis_vector(j));
      for (std::size_t k = 0; k < a.dim; ++k) {
        QVec ek = a.basis_vector(k);
        if (a.mul(eij, ek) != a.mul(ei, a.mul(a.basis_vector(j), ek))) {
          res.ok = false;
          res.witness = {i, j, k};
          res.failure = "associativity fails for (" + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + ")";
          return res;
        }
      }
    }
  }
  return res;
}

QMatrix radical(const FDAlgebra& a) {
  // tr L_{e_k} = sum_j c_{kj}^j.
  QVec tr(a.dim, BigRational(0));
  for (std::size_t k = 0; k < a.dim; ++k) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (const auto& [l, v] : a.table[k][j]) {
        if (l == j) tr[k] += v;
      }
    }
  }
  QMatrix form(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      BigRational s(0);
      for (const auto& [k, v] : a.table[i][j]) s += v * tr[k];
      form.set(i, j, s);
    }
  }
  QMatrix rad = kernel_basis(form);

  // Two-sided ideal and nilpotent.
  std::vector<QVec> gens;
  for (std::size_t c = 0; c < rad.cols(); ++c) gens.push_back(column_vec(rad, c));
  std::vector<QVec> closure;
  for (const auto& r : gens) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      closure.push_back(a.mul(a.basis_vector(i), r));
      closure.push_back(a.mul(r, a.basis_vector(i)));
    }
  }
  if (!closure.empty() && !contains_span(rad, columns_of(closure, a.dim))) {
    throw ArithmeticError("trace-form kernel is not an ideal");
  }
  std::vector<QVec> power = gens;
  for (std::size_t step = 0; step <= a.dim && !power.empty(); ++step) {
    std::vector<QVec> next;
    QMatrix basis = image_basis(columns_of(power, a.dim));
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      for (const auto& r : gens) {
        QVec prod = a.mul(column_vec(basis, c), r);
        if (!is_zero_vec(prod)) next.push_back(std::move(prod));
      }
    }
    power = std::move(next);
  }
  if (!power.empty()) throw ArithmeticError("trace-form kernel is not nilpotent");
  return rad;
}

Quotient semisimple_quotient(const FDAlgebra& a) {
  QMatrix rad = radical(a);
  std::vector<std::size_t> keep = extending_columns(rad, QMatrix::identity(a.dim));
  QMatrix basis = hstack<BigRational>({rad, QMatrix::identity(a.dim).select_columns(keep)});
  QMatrix inv = solve(basis, QMatrix::identity(a.dim));
  std::vector<std::size_t> tail;
  for (std::size_t k = 0; k < keep.size(); ++k) tail.push_back(rad.cols() + k);
  Quotient q;
  q.projection = inv.select_rows(tail);
  auto project = [&](const QVec& v) { return column_vec(q.projection * column_matrix(v), 0); };
  std::size_t n = keep.size();
  std::vector<std::vector<QVec>> c(n, std::vector<QVec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c[i][j] = project(a.mul(a.basis_vector(keep[i]), a.basis_vector(keep[j])));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t k : keep) labels.push_back(a.labels[k]);
  q.algebra = FDAlgebra::from_dense(a.name + "^ss", project(a.unit), c, std::move(labels));
  return q;
}

QMatrix center(const FDAlgebra& a) {
  QMatrix m(a.dim * a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (const auto& [k, v] : a.table[i][j]) m.add(j * a.dim + k, i, v);
      for (const auto& [k, v] : a.table[j][i]) m.add(j * a.dim + k, i, -v);
    }
  }
  return kernel_basis(m);
}

UniPoly minimal_polynomial(const FDAlgebra& a, const QVec& x) {
  std::vector<QVec> powers{a.unit};
  while (true) {
    QVec next = a.mul(powers.back(), x);
    QMatrix basis = columns_of(powers, a.dim);
    if (extending_columns(basis, column_matrix(next)).empty()) {
      QMatrix c = solve(basis, column_matrix(next));
      std::vector<BigRational> coeffs(powers.size() + 1, BigRational(0));
      coeffs.back() = BigRational(1);
      for (const auto& [r, v] : c.column(0)) coeffs[r] = -v;
      return UniPoly(coeffs);
    }
    powers.push_back(std::move(next));
  }
}

FDAlgebra corner_algebra(const FDAlgebra& a, const QVec& e) {
  QMatrix basis = image_basis(a.left_mult(e));
  return subalgebra(a, basis, e, a.name + "*e");
}

WedderburnData factor_data(const FDAlgebra& a, std::uint64_t seed) {
  WedderburnData w;
  w.radical = radical(a);
  w.semisimple = semisimple_quotient(a);
  const FDAlgebra& q = w.semisimple.algebra;
  w.center = center(q);
  const std::size_t c = w.center.cols();

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 200;
  bool found = false;
  for (int attempt = 0; attempt < kAttempts && !found; ++attempt) {
    QVec z(q.dim, BigRational(0));
    if (c == 1) {
      z = q.unit;
    } else {
      for (std::size_t k = 0; k < c; ++k) {
        BigRational coef(static_cast<long>(rng() % 7) - 3);
        QVec col = column_vec(w.center, k);
        for (std::size_t i = 0; i < q.dim; ++i) z[i] += coef * col[i];
      }
    }
    UniPoly mp = minimal_polynomial(q, z);
    if (static_cast<std::size_t>(mp.degree()) == c) {
      w.primitive_element = z;
      w.center_minpoly = mp;
      found = true;
    }
  }
  if (!found) {
    throw SearchFailureError("no primitive element of the center found after " + std::to_string(kAttempts) +
                             " attempts; retry with another seed");
  }

  for (const auto& pf : factor_rational_poly(w.center_minpoly)) {
    if (pf.multiplicity != 1) throw ArithmeticError("center minimal polynomial is not squarefree");
    UniPoly cofactor = w.center_minpoly / pf.factor;
    ExtendedGcd eg = extended_gcd(cofactor, pf.factor);
    UniPoly idem = (eg.s * cofactor) % w.center_minpoly;
    WedderburnFactor f;
    f.idempotent = eval_poly(q, idem, w.primitive_element);
    f.center_minpoly = pf.factor;
    f.d = pf.factor.degree();
    f.dim_q = rank(q.left_mult(f.idempotent));
    if (f.dim_q % static_cast<std::size_t>(f.d) != 0) throw ArithmeticError("factor dimension not divisible by [F:Q]");
    f.dim_over_center = f.dim_q / static_cast<std::size_t>(f.d);
    std::size_t root = 0;
    while ((root + 1) * (root + 1) <= f.dim_over_center) ++root;
    if (root * root != f.dim_over_center) throw ArithmeticError("simple factor is not of square dimension over its center");
    Signature sig = signature_from_minpoly(pf.factor);
    f.r1 = sig.r1;
    f.r2 = sig.r2;
    if (f.d == 1) {
      // Largest number of distinct irreducible factors among sampled minimal
      // polynomials: equals the number of orthogonal idempotents reached.
      FDAlgebra corner = corner_algebra(q, f.idempotent);
      std::vector<QVec> samples;
      for (std::size_t i = 0; i < corner.dim; ++i) samples.push_back(corner.basis_vector(i));
      for (int s = 0; s < 40; ++s) {
        QVec x(corner.dim, BigRational(0));
        for (std::size_t i = 0; i < corner.dim; ++i) x[i] = BigRational(static_cast<long>(rng() % 5) - 2);
        samples.push_back(std::move(x));
      }
      int best = 1;
      for (const auto& x : samples) {
        UniPoly mp = minimal_polynomial(corner, x);
        best = std::max(best, static_cast<int>(factor_rational_poly(mp).size()));
      }
      f.m = best;
    }
    w.factors.push_back(std::move(f));
  }
  return w;
}

// ------------------------------------------------------------------ presets

FDAlgebra trivial_algebra() {
  return FDAlgebra::from_dense("Q", {BigRational(1)}, {{{BigRational(1)}}}, {"1"});
}

FDAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& mult, std::string name) {
  std::size_t n = mult.size();
  if (n == 0) throw InvalidInputError("empty group table");
  std::optional<std::size_t> e;
  for (std::size_t g = 0; g < n && !e; ++g) {
    if (mult[g].size() != n) throw InvalidInputError("group table must be square");
    bool ok = true;
    for (std::size_t h = 0; h < n; ++h) ok = ok && mult[g][h] == h && mult[h][g] == h;
    if (ok) e = g;
  }
  if (!e) throw InvalidInputError("group table has no identity");
  std::vector<std::vector<QVec>> c(n, std::vector<QVec>(n, QVec(n, BigRational(0))));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (mult[g][h] >= n) throw InvalidInputError("group table entry out of range");
      c[g][h][mult[g][h]] = BigRational(1);
    }
  }
  QVec unit(n, BigRational(0));
  unit[*e] = BigRational(1);
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  FDAlgebra a = FDAlgebra::from_dense(std::move(name), unit, c, std::move(labels));
  AlgebraCheck chk = check_algebra(a);
  if (!chk.ok) throw InvalidInputError("group table is not associative: " + chk.failure);
  return a;
}

FDAlgebra cyclic_group_algebra(std::size_t n) {
  if (n == 0) throw InvalidInputError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  }
  FDAlgebra alg = group_algebra(mult, "Q[C" + std::to_string(n) + "]");
  for (std::size_t a = 0; a < n; ++a) alg.labels[a] = "g^" + std::to_string(a);
  return alg;
}

FDAlgebra symmetric_group_algebra(std::size_t n) {
  if (n == 0 || n > 4) throw InvalidInputError("symmetric group preset supports 1 <= n <= 4");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> elems;
  do {
    elems.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = k;
  std::vector<std::vector<std::size_t>> mult(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      std::vector<std::size_t> comp(n);
      for (std::size_t x = 0; x < n; ++x) comp[x] = elems[a][elems[b][x]];
      mult[a][b] = index.at(comp);
    }
  }
  FDAlgebra alg = group_algebra(mult, "Q[S" + std::to_string(n) + "]");
  for (std::size_t k = 0; k < elems.size(); ++k) {
    std::string l = "(";
    for (std::size_t x : elems[k]) l += std::to_string(x + 1);
    alg.labels[k] = l + ")";
  }
  return alg;
}

namespace {

FDAlgebra matrix_units(std::size_t n, bool upper, std::string name) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = upper ? i : 0; j < n; ++j) idx.emplace_back(i, j);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  std::size_t d = idx.size();
  std::vector<std::vector<QVec>> c(d, std::vector<QVec>(d, QVec(d, BigRational(0))));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (idx[a].second == idx[b].first) c[a][b][pos.at({idx[a].first, idx[b].second})] = BigRational(1);
    }
  }
  QVec unit(d, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) unit[pos.at({i, i})] = BigRational(1);
  std::vector<std::string> labels;
  for (const auto& [i, j] : idx) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  return FDAlgebra::from_dense(std::move(name), unit, c, std::move(labels));
}

}  // namespace

FDAlgebra upper_triangular(std::size_t n) {
  if (n == 0) throw InvalidInputError("matrix size must be positive");
  return matrix_units(n, true, "T" + std::to_string(n) + "(Q)");
}

FDAlgebra full_matrix(std::size_t n) {
  if (n == 0) throw InvalidInputError("matrix size must be positive");
  return matrix_units(n, false, "M" + std::to_string(n) + "(Q)");
}

FDAlgebra truncated_poly(std::size_t n) {
  if (n == 0) throw InvalidInputError("truncation must be positive");
  std::vector<std::vector<QVec>> c(n, std::vector<QVec>(n, QVec(n, BigRational(0))));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; a + b < n; ++b) c[a][b][a + b] = BigRational(1);
  }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
  QVec unit(n, BigRational(0));
  unit[0] = BigRational(1);
  return FDAlgebra::from_dense("Q[x]/x^" + std::to_string(n), unit, c, std::move(labels));
}

FDAlgebra dual_numbers() {
  FDAlgebra a = truncated_poly(2);
  a.name = "Q[eps]";
  a.labels = {"1", "eps"};
  return a;
}

FDAlgebra quaternion(const BigRational& a, const BigRational& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidInputError("quaternion parameters must be nonzero");
  // Basis 1, i, j, k with i^2 = a, j^2 = b, ij = -ji = k.
  std::vector<std::vector<QVec>> c(4, std::vector<QVec>(4, QVec(4, BigRational(0))));
  auto set = [&](std::size_t x, std::size_t y, std::size_t z, const BigRational& v) { c[x][y][z] = v; };
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, -(a * b));
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(1, 3, 2, a);
  set(3, 1, 2, -a);
  set(2, 3, 1, -b);
  set(3, 2, 1, b);
  FDAlgebra q = FDAlgebra::from_dense("H(" + a.to_short_string() + "," + b.to_short_string() + ")",
                                      {1, 0, 0, 0}, c, {"1", "i", "j", "k"});
  return q;
}

FDAlgebra number_field(const UniPoly& minpoly) {
  if (minpoly.degree() < 1) throw InvalidInputError("number field needs a polynomial of degree >= 1");
  if (!is_irreducible(minpoly)) {
    auto f = factor_rational_poly(minpoly);
    throw InvalidInputError("polynomial is reducible; factor " + f.front().factor.to_string());
  }
  UniPoly p = minpoly.monic();
  std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<std::vector<QVec>> c(n, std::vector<QVec>(n, QVec(n, BigRational(0))));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      UniPoly r = UniPoly::monomial(BigRational(1), static_cast<int>(a + b)) % p;
      for (std::size_t k = 0; k < n; ++k) c[a][b][k] = r.coeff(static_cast<int>(k));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
  QVec unit(n, BigRational(0));
  unit[0] = BigRational(1);
  return FDAlgebra::from_dense("Q[x]/(" + p.to_string() + ")", unit, c, std::move(labels));
}

FDAlgebra product(const std::vector<FDAlgebra>& parts) {
  if (parts.empty()) throw InvalidInputError("product of no algebras");
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim;
  std::vector<std::vector<QVec>> c(n, std::vector<QVec>(n, QVec(n, BigRational(0))));
  QVec unit(n, BigRational(0));
  std::vector<std::string> labels;
  std::string name;
  std::size_t off = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const auto& p = parts[t];
    for (std::size_t i = 0; i < p.dim; ++i) {
      unit[off + i] = p.unit[i];
      labels.push_back(p.labels[i] + "_" + std::to_string(t + 1));
      for (std::size_t j = 0; j < p.dim; ++j) {
        for (const auto& [k, v] : p.table[i][j]) c[off + i][off + j][off + k] = v;
      }
    }
    name += (t ? " x " : "") + p.name;
    off += p.dim;
  }
  return FDAlgebra::from_dense(name, unit, c, std::move(labels));
}

FDAlgebra change_basis(const FDAlgebra& a, const QMatrix& p) {
  if (p.rows() != a.dim || p.cols() != a.dim || rank(p) != a.dim) {
    throw InvalidInputError("basis change must be an invertible dim x dim matrix");
  }
  FDAlgebra out = subalgebra(a, p, a.unit, a.name);
  out.labels.clear();
  for (std::size_t i = 0; i < a.dim; ++i) out.labels.push_back("f" + std::to_string(i));
  return out;
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InvalidInputError("bad " + what + " parameter '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

FDAlgebra preset(const std::string& spec) {
  std::string name = spec, arg;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  if (name == "Q" || name == "trivial") return trivial_algebra();
  if (name == "dual_numbers") return dual_numbers();
  if (name == "truncated_poly") return truncated_poly(parse_count(arg, "truncation"));
  if (name == "upper_triangular") return upper_triangular(parse_count(arg, "size"));
  if (name == "full_matrix") return full_matrix(parse_count(arg, "size"));
  if (name == "group" || name == "group_algebra") {
    if (arg.size() >= 2 && arg[0] == 'C') return cyclic_group_algebra(parse_count(arg.substr(1), "group order"));
    if (arg.size() >= 2 && arg[0] == 'S') return symmetric_group_algebra(parse_count(arg.substr(1), "group degree"));
    throw InvalidInputError("group preset expects Cn or Sn, got '" + arg + "'");
  }
  if (name == "quaternion") {
    auto ab = split(arg, ',');
    if (ab.size() != 2) throw InvalidInputError("quaternion preset expects 'a,b'");
    return quaternion(BigRational::parse(ab[0]), BigRational::parse(ab[1]));
  }
  if (name == "number_field") return number_field(UniPoly::parse(arg));
  if (name == "product") {
    std::vector<FDAlgebra> parts;
    for (const auto& p : split(arg, ';')) parts.push_back(preset(p));
    return product(parts);
  }
  throw InvalidInputError("unknown preset '" + spec + "'");
}

std::vector<std::string> preset_names() {
  return {"Q",
          "dual_numbers",
          "truncated_poly:N",
          "upper_triangular:N",
          "full_matrix:N",
          "group:Cn",
          "group:S3",
          "quaternion:a,b",
          "number_field:<poly in x>",
          "product:<spec>;<spec>;..."};
}

namespace {

BigRational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw InvalidInputError("rationals must be strings \"p/q\" or integers");
}

}  // namespace

FDAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("table")) {
    throw InvalidInputError("algebra spec needs \"dim\", \"unit\" and \"table\"");
  }
  std::size_t n = j.at("dim").get<std::size_t>();
  QVec unit;
  for (const auto& x : j.at("unit")) unit.push_back(rational_from_json(x));
  if (unit.size() != n) throw InvalidInputError("unit has wrong length");
  const auto& t = j.at("table");
  if (!t.is_array() || t.size() != n) throw InvalidInputError("table must be dim x dim x dim");
  std::vector<std::vector<QVec>> c(n, std::vector<QVec>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (!t[a].is_array() || t[a].size() != n) throw InvalidInputError("table must be dim x dim x dim");
    for (std::size_t b = 0; b < n; ++b) {
      if (!t[a][b].is_array() || t[a][b].size() != n) throw InvalidInputError("table must be dim x dim x dim");
      for (const auto& x : t[a][b]) c[a][b].push_back(rational_from_json(x));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FDAlgebra::from_dense(j.value("name", std::string("algebra")), unit, c, labels);
}

nlohmann::json algebra_to_json(const FDAlgebra& a) {
  nlohmann::json j;
  j["name"] = a.name;
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  nlohmann::json unit = nlohmann::json::array();
  for (const auto& x : a.unit) unit.push_back(x.to_string());
  j["unit"] = unit;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t x = 0; x < a.dim; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < a.dim; ++y) {
      QVec v(a.dim, BigRational(0));
      for (const auto& [k, c] : a.table[x][y]) v[k] = c;
      nlohmann::json entry = nlohmann::json::array();
      for (const auto& c : v) entry.push_back(c.to_string());
      row.push_back(entry);
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

}  // namespace nchodge
