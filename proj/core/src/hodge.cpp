#include "nchodge/hodge.hpp"

#include <algorithm>
#include <functional>

namespace nchodge {

namespace {

ConjElem two_pi_i(const FieldPtr& f) { return f->imaginary_unit() * f->gen(0); }

KMatrix zero_cols(std::size_t rows) { return KMatrix(rows, 0); }

bool is_real_matrix(const KMatrix& m) { return m == m.conj(); }

// Differentials of C restricted to subspaces with bases[k] (d-stable).
KComplex restrict_complex(const KComplex& c, const std::map<int, KMatrix>& bases) {
  std::vector<std::size_t> dims;
  std::vector<KMatrix> d;
  for (int k = c.lo(); k <= c.hi(); ++k) {
    dims.push_back(bases.at(k).cols());
    if (k < c.hi()) d.push_back(solve(bases.at(k + 1), c.d(k) * bases.at(k)));
  }
  return KComplex(c.lo(), std::move(dims), std::move(d), false);
}

// Coordinates of the conjugate-linear map v -> J conj(v) on span(basis).
KMatrix semilinear_on(const KMatrix& basis, const KMatrix& j) { return solve(basis, j * basis.conj()); }

KMatrix linear_on(const KMatrix& basis, const KMatrix& j) { return solve(basis, j * basis); }

KMatrix scalar_matrix(std::size_t n, const ConjElem& s) { return KMatrix::identity(n).scaled(s); }

// Which subspaces feed the two columns.
struct Columns {
  std::map<int, KMatrix> real, left, right;
};

HomComplex build_hom(const HodgeComplex& v, const Columns& cols) {
  const KComplex& vr = v.real;
  const KComplex& vc = v.complex.complex;
  int lo = std::min(vr.lo(), vc.lo()), hi = std::max(vr.hi(), vc.hi());
  KComplex R = restrict_complex(vr.widened(lo, hi), cols.real);
  KComplex A = restrict_complex(vc.widened(lo, hi), cols.left);
  KComplex B = restrict_complex(vc.widened(lo, hi), cols.right);

  Bicomplex<ConjElem> bc;
  for (int k = lo; k <= hi; ++k) {
    std::size_t m = R.dim(k), a = A.dim(k), b = B.dim(k);
    bc.dims[{0, k}] = m + 2 * a;
    bc.dims[{1, k}] = 2 * b;
    // (v, w) -> phi v - w, everything in coordinates of the right column.
    KMatrix p = solve(cols.right.at(k), v.phi_at(k) * cols.real.at(k));
    KMatrix inc = solve(cols.right.at(k), cols.left.at(k));
    KMatrix h(2 * b, m + 2 * a);
    std::vector<std::size_t> first(m);
    for (std::size_t c = 0; c < m; ++c) first[c] = c;
    h.place(0, 0, realify_linear(p).select_columns(first));
    h.place(0, m, realify_linear(inc).scaled(ConjElem(-1)));
    bc.dh[{0, k}] = h;
    if (k < hi) {
      bc.dv[{0, k}] = direct_sum(R.d(k), realify_linear(A.d(k)));
      bc.dv[{1, k}] = realify_linear(B.d(k));
    }
  }
  HomComplex out;
  out.raw = total(bc);
  if (!v.iota) return out;

  // The involution on every bicomplex entry, assembled along the total layout.
  std::map<std::pair<int, int>, KMatrix> blocks;
  for (int k = lo; k <= hi; ++k) {
    KMatrix ir = vr.in_range(k) ? linear_on(cols.real.at(k), v.iota->real.at(k)) : KMatrix(0, 0);
    KMatrix jc = vc.in_range(k) ? v.iota->complex.at(k) : KMatrix(0, 0);
    KMatrix ja = vc.in_range(k) ? semilinear_on(cols.left.at(k), jc) : KMatrix(0, 0);
    KMatrix jb = vc.in_range(k) ? semilinear_on(cols.right.at(k), jc) : KMatrix(0, 0);
    blocks[{0, k}] = direct_sum(ir, realify_semilinear(ja));
    blocks[{1, k}] = realify_semilinear(jb);
  }
  SemilinearInvolution<ConjElem> inv;
  inv.semilinear = false;
  for (int n = out.raw.lo(); n <= out.raw.hi(); ++n) {
    KMatrix m(out.raw.dim(n), out.raw.dim(n));
    for (const auto& [p, q, off] : bc.layout(n)) m.place(off, off, blocks.at({p, q}));
    inv.maps[n] = m;
  }
  out.fixed = iota_invariants(out.raw, inv).complex;
  return out;
}

std::map<int, KMatrix> identities(const KComplex& c, int lo, int hi) {
  std::map<int, KMatrix> out;
  for (int k = lo; k <= hi; ++k) out[k] = KMatrix::identity(c.dim(k));
  return out;
}

std::map<int, DimPair> dims_of(const HomComplex& h, int lo, int hi) {
  std::map<int, DimPair> out;
  for (int k = lo; k <= hi; ++k) {
    DimPair d;
    d.raw = h.raw.in_range(k) ? h.raw.cohomology_dim(k) : 0;
    if (h.fixed) d.fixed = h.fixed->in_range(k) ? h.fixed->cohomology_dim(k) : 0;
    out[k] = d;
  }
  return out;
}

// Cohomology structure of the tensor product: offsets of the (a, n - a) blocks.
struct TensorLayout {
  int lo = 0, hi = 0;
  std::map<int, std::vector<std::pair<int, std::size_t>>> blocks;  // n -> (a, offset)
  std::map<int, std::size_t> dims;
};

TensorLayout tensor_layout(const KComplex& x, const KComplex& y) {
  TensorLayout t;
  t.lo = x.lo() + y.lo();
  t.hi = x.hi() + y.hi();
  for (int n = t.lo; n <= t.hi; ++n) {
    std::size_t off = 0;
    t.blocks[n];
    for (int a = x.lo(); a <= x.hi(); ++a) {
      int b = n - a;
      if (!y.in_range(b)) continue;
      t.blocks[n].emplace_back(a, off);
      off += x.dim(a) * y.dim(b);
    }
    t.dims[n] = off;
  }
  return t;
}

KComplex tensor_complex(const KComplex& x, const KComplex& y, const TensorLayout& t) {
  std::vector<std::size_t> dims;
  std::vector<KMatrix> d;
  for (int n = t.lo; n <= t.hi; ++n) {
    dims.push_back(t.dims.at(n));
    if (n == t.hi) break;
    KMatrix m(t.dims.at(n + 1), t.dims.at(n));
    std::map<int, std::size_t> target;
    for (const auto& [a, off] : t.blocks.at(n + 1)) target[a] = off;
    for (const auto& [a, off] : t.blocks.at(n)) {
      int b = n - a;
      if (x.in_range(a + 1) && target.count(a + 1)) {
        m.place(target[a + 1], off, kron(x.d(a), KMatrix::identity(y.dim(b))));
      }
      if (y.in_range(b + 1) && target.count(a)) {
        KMatrix part = kron(KMatrix::identity(x.dim(a)), y.d(b));
        m.place(target[a], off, (a % 2 == 0) ? part : part.scaled(ConjElem(-1)));
      }
    }
    d.push_back(std::move(m));
  }
  return KComplex(t.lo, std::move(dims), std::move(d));
}

// Block-diagonal kron of per-degree maps.
KMatrix tensor_map(const TensorLayout& t, int n, const std::function<KMatrix(int)>& fx,
                   const std::function<KMatrix(int)>& fy) {
  KMatrix m(t.dims.at(n), t.dims.at(n));
  for (const auto& [a, off] : t.blocks.at(n)) m.place(off, off, kron(fx(a), fy(n - a)));
  return m;
}

}  // namespace

// ------------------------------------------------------------- filtrations

KMatrix IncreasingFiltration::step(const KComplex& c, int k, int n) const {
  std::size_t dim = c.dim(k);
  if (!c.in_range(k) || n < nmin) return zero_cols(dim);
  if (n > nmax) return KMatrix::identity(dim);
  return spans.at(static_cast<std::size_t>(k - c.lo())).at(static_cast<std::size_t>(n - nmin));
}

void IncreasingFiltration::validate(const KComplex& c, const char* side) const {
  std::string where = std::string(" (") + side + " weight)";
  if (spans.size() != static_cast<std::size_t>(c.hi() - c.lo() + 1)) {
    throw FiltrationError("weight filtration must give spans for every degree" + where);
  }
  for (int k = c.lo(); k <= c.hi(); ++k) {
    if (spans[static_cast<std::size_t>(k - c.lo())].size() != static_cast<std::size_t>(nmax - nmin + 1)) {
      throw FiltrationError("weight range mismatch" + where);
    }
    if (rank(step(c, k, nmax)) != c.dim(k)) throw FiltrationError("W_nmax must be everything" + where);
    for (int n = nmin; n <= nmax; ++n) {
      if (step(c, k, n).rows() != c.dim(k)) throw FiltrationError("weight span has wrong ambient dimension" + where);
      if (!contains_span(step(c, k, n), step(c, k, n - 1))) {
        throw FiltrationError("weight filtration not increasing at degree " + std::to_string(k) + where);
      }
      if (k < c.hi() && !contains_span(step(c, k + 1, n), c.d(k) * step(c, k, n))) {
        throw FiltrationError("differential does not preserve W_" + std::to_string(n) + where);
      }
    }
  }
}

// ------------------------------------------------------------ HodgeComplex

KMatrix HodgeComplex::phi_at(int k) const {
  auto it = phi.find(k);
  if (it != phi.end()) return it->second;
  return KMatrix(complex.complex.dim(k), real.dim(k));
}

ChainMap<ConjElem> HodgeComplex::phi_map() const {
  ChainMap<ConjElem> f{real, complex.complex, {}};
  for (const auto& [k, m] : phi) f.components[k] = m;
  return f;
}

void HodgeComplex::validate() const {
  if (!field) throw InvalidInputError("Hodge complex without scalar field");
  const KComplex& vc = complex.complex;
  for (int k = real.lo(); k < real.hi(); ++k) {
    if (!is_real_matrix(real.d(k))) throw InvalidInputError("V_R differential must have real entries");
  }
  phi_map().check();
  if (complex.spans.empty()) throw FiltrationMissingError("V_C carries no Hodge filtration");
  complex.validate();
  if (weight) {
    weight->real.validate(real, "real");
    weight->complex.validate(vc, "complex");
    for (int k = real.lo(); k <= real.hi(); ++k) {
      for (int n = weight->real.nmin; n <= weight->real.nmax; ++n) {
        if (!contains_span(weight->complex.step(vc, k, n), phi_at(k) * weight->real.step(real, k, n))) {
          throw FiltrationError("phi does not respect weights at degree " + std::to_string(k));
        }
      }
    }
  }
  if (iota) {
    for (int k = real.lo(); k <= real.hi(); ++k) {
      const KMatrix& ir = iota->real.at(k);
      if (!is_real_matrix(ir) || !(ir * ir == KMatrix::identity(real.dim(k)))) {
        throw InvolutionError("iota_R must be a real involution in degree " + std::to_string(k));
      }
      if (k < real.hi() && !(real.d(k) * ir == iota->real.at(k + 1) * real.d(k))) {
        throw InvolutionError("iota_R does not commute with d at degree " + std::to_string(k));
      }
    }
    for (int k = vc.lo(); k <= vc.hi(); ++k) {
      const KMatrix& jc = iota->complex.at(k);
      if (!(jc * jc.conj() == KMatrix::identity(vc.dim(k)))) {
        throw InvolutionError("iota_C is not an involution in degree " + std::to_string(k));
      }
      if (k < vc.hi() && !(vc.d(k) * jc == iota->complex.at(k + 1) * vc.d(k).conj())) {
        throw InvolutionError("iota_C does not commute with d at degree " + std::to_string(k));
      }
      if (real.in_range(k) && !(jc * phi_at(k).conj() == phi_at(k) * iota->real.at(k))) {
        throw InvolutionError("iota is not compatible with phi in degree " + std::to_string(k));
      }
      for (int p = complex.pmin; p <= complex.pmax; ++p) {
        KMatrix s = complex.step(k, p);
        if (!contains_span(s, jc * s.conj())) {
          throw InvolutionError("iota_C does not preserve F^" + std::to_string(p));
        }
      }
    }
  }
  if (strict && !quasi_iso_audit(*this)) {
    throw InvalidInputError("phi is not a quasi-isomorphism (strict mode)");
  }
}

bool quasi_iso_audit(const HodgeComplex& v) {
  KComplex c = cone(v.phi_map());
  for (int k = c.lo(); k <= c.hi(); ++k) {
    if (c.cohomology_dim(k) != 0) return false;
  }
  return true;
}

// ------------------------------------------------------------ constructors

HodgeComplex make_tate(int j) {
  HodgeComplex v;
  v.field = ConjField::standard();
  v.label = "R(" + std::to_string(j) + ")";
  v.real = KComplex::single(0, 1);
  v.complex.complex = KComplex::single(0, 1);
  v.complex.pmin = v.complex.pmax = -j;
  v.complex.spans = {{KMatrix::identity(1)}};
  v.phi[0] = scalar_matrix(1, pow(two_pi_i(v.field), j));
  IncreasingFiltration w{-2 * j, -2 * j, {{KMatrix::identity(1)}}};
  v.weight = WeightData{w, w};
  v.iota = HodgeIota{{{0, scalar_matrix(1, ConjElem(j % 2 == 0 ? 1 : -1))}}, {{0, KMatrix::identity(1)}}};
  return v;
}

HodgeComplex twist(const HodgeComplex& v, int j) {
  HodgeComplex out = v;
  if (j == 0) return out;
  out.label = v.label + "(" + std::to_string(j) + ")";
  out.complex.pmin -= j;
  out.complex.pmax -= j;
  ConjElem s = pow(two_pi_i(v.field), j);
  for (auto& [k, m] : out.phi) m = m.scaled(s);
  if (out.weight) {
    out.weight->real.nmin -= 2 * j;
    out.weight->real.nmax -= 2 * j;
    out.weight->complex.nmin -= 2 * j;
    out.weight->complex.nmax -= 2 * j;
  }
  if (out.iota && j % 2 != 0) {
    for (auto& [k, m] : out.iota->real) m = m.scaled(ConjElem(-1));
  }
  return out;
}

HodgeComplex spec_field(int r1, int r2) {
  if (r1 < 0 || r2 < 0) throw InvalidInputError("signature entries must be non-negative");
  std::size_t n = static_cast<std::size_t>(r1 + 2 * r2);
  if (n == 0) throw EmptyVarietyError("r1 + 2 r2 = 0: no complex points");
  HodgeComplex v;
  v.field = ConjField::standard();
  v.label = "Spec F(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
  v.real = KComplex::single(0, n);
  v.complex.complex = KComplex::single(0, n);
  v.complex.pmin = v.complex.pmax = 0;
  v.complex.spans = {{KMatrix::identity(n)}};
  v.phi[0] = KMatrix::identity(n);
  IncreasingFiltration w{0, 0, {{KMatrix::identity(n)}}};
  v.weight = WeightData{w, w};
  // Complex conjugation on the embeddings: fixes the real ones, swaps pairs.
  KMatrix perm(n, n);
  for (int a = 0; a < r1; ++a) perm.set(a, a, ConjElem(1));
  for (int s = 0; s < r2; ++s) {
    std::size_t x = static_cast<std::size_t>(r1 + 2 * s);
    perm.set(x, x + 1, ConjElem(1));
    perm.set(x + 1, x, ConjElem(1));
  }
  v.iota = HodgeIota{{{0, perm}}, {{0, perm}}};
  return v;
}

HodgeComplex shift_degrees(const HodgeComplex& v, int s) {
  HodgeComplex out = v;
  out.real = v.real.shifted(-s);
  out.complex.complex = v.complex.complex.shifted(-s);
  auto rekey = [s](const std::map<int, KMatrix>& m) {
    std::map<int, KMatrix> r;
    for (const auto& [k, x] : m) r[k + s] = x;
    return r;
  };
  out.phi = rekey(v.phi);
  if (v.iota) out.iota = HodgeIota{rekey(v.iota->real), rekey(v.iota->complex)};
  return out;
}

HodgeComplex direct_sum(const HodgeComplex& a, const HodgeComplex& b) {
  if (!a.field->same_as(*b.field)) throw FieldMismatchError("direct sum over different fields");
  HodgeComplex out;
  out.field = a.field;
  out.label = a.label + " + " + b.label;
  out.strict = a.strict && b.strict;
  out.real = direct_sum(a.real, b.real);
  const KComplex& ac = a.complex.complex;
  const KComplex& bcx = b.complex.complex;
  KComplex vc = direct_sum(ac, bcx);
  out.complex.complex = vc;
  out.complex.pmin = std::min(a.complex.pmin, b.complex.pmin);
  out.complex.pmax = std::max(a.complex.pmax, b.complex.pmax);
  for (int k = vc.lo(); k <= vc.hi(); ++k) {
    std::vector<KMatrix> row;
    for (int p = out.complex.pmin; p <= out.complex.pmax; ++p) {
      row.push_back(direct_sum(a.complex.step(k, p), b.complex.step(k, p)));
    }
    out.complex.spans.push_back(std::move(row));
  }
  int lo = std::min(a.real.lo(), b.real.lo()), hi = std::max(a.real.hi(), b.real.hi());
  for (int k = lo; k <= hi; ++k) out.phi[k] = direct_sum(a.phi_at(k), b.phi_at(k));
  if (a.weight && b.weight) {
    auto merge = [](const IncreasingFiltration& x, const KComplex& cx, const IncreasingFiltration& y,
                    const KComplex& cy, const KComplex& sum) {
      IncreasingFiltration w;
      w.nmin = std::min(x.nmin, y.nmin);
      w.nmax = std::max(x.nmax, y.nmax);
      for (int k = sum.lo(); k <= sum.hi(); ++k) {
        std::vector<KMatrix> row;
        for (int n = w.nmin; n <= w.nmax; ++n) row.push_back(direct_sum(x.step(cx, k, n), y.step(cy, k, n)));
        w.spans.push_back(std::move(row));
      }
      return w;
    };
    out.weight = WeightData{merge(a.weight->real, a.real, b.weight->real, b.real, out.real),
                            merge(a.weight->complex, ac, b.weight->complex, bcx, vc)};
  }
  if (a.iota && b.iota) {
    HodgeIota io;
    auto at = [](const std::map<int, KMatrix>& m, int k, std::size_t dim) {
      auto it = m.find(k);
      return it == m.end() ? KMatrix(dim, dim) : it->second;
    };
    for (int k = out.real.lo(); k <= out.real.hi(); ++k) {
      io.real[k] = direct_sum(at(a.iota->real, k, a.real.dim(k)), at(b.iota->real, k, b.real.dim(k)));
    }
    for (int k = vc.lo(); k <= vc.hi(); ++k) {
      io.complex[k] = direct_sum(at(a.iota->complex, k, ac.dim(k)), at(b.iota->complex, k, bcx.dim(k)));
    }
    out.iota = io;
  }
  return out;
}

HodgeComplex tensor(const HodgeComplex& a, const HodgeComplex& b) {
  if (!a.field->same_as(*b.field)) throw FieldMismatchError("tensor product over different fields");
  HodgeComplex out;
  out.field = a.field;
  out.label = a.label + " (x) " + b.label;
  out.strict = a.strict && b.strict;
  TensorLayout tr = tensor_layout(a.real, b.real);
  const KComplex& ac = a.complex.complex;
  const KComplex& bcx = b.complex.complex;
  TensorLayout tc = tensor_layout(ac, bcx);
  out.real = tensor_complex(a.real, b.real, tr);
  KComplex vc = tensor_complex(ac, bcx, tc);
  out.complex.complex = vc;
  out.complex.pmin = a.complex.pmin + b.complex.pmin;
  out.complex.pmax = a.complex.pmax + b.complex.pmax;
  for (int n = vc.lo(); n <= vc.hi(); ++n) {
    std::vector<KMatrix> row;
    for (int p = out.complex.pmin; p <= out.complex.pmax; ++p) {
      KMatrix span(vc.dim(n), 0);
      for (const auto& [deg, off] : tc.blocks.at(n)) {
        for (int s = a.complex.pmin; s <= a.complex.pmax; ++s) {
          KMatrix piece = kron(a.complex.step(deg, s), b.complex.step(n - deg, p - s));
          KMatrix placed(vc.dim(n), piece.cols());
          placed.place(off, 0, piece);
          span = hstack<ConjElem>({span, placed});
        }
      }
      row.push_back(image_basis(span));
    }
    out.complex.spans.push_back(std::move(row));
  }
  for (int n = tr.lo; n <= tr.hi; ++n) {
    KMatrix m(tc.dims.count(n) ? tc.dims.at(n) : 0, tr.dims.at(n));
    std::map<int, std::size_t> target;
    if (tc.blocks.count(n)) {
      for (const auto& [deg, off] : tc.blocks.at(n)) target[deg] = off;
    }
    for (const auto& [deg, off] : tr.blocks.at(n)) {
      if (target.count(deg)) m.place(target[deg], off, kron(a.phi_at(deg), b.phi_at(n - deg)));
    }
    out.phi[n] = m;
  }
  if (a.weight && b.weight) {
    auto conv = [](const IncreasingFiltration& x, const KComplex& cx, const IncreasingFiltration& y,
                   const KComplex& cy, const KComplex& prod, const TensorLayout& t) {
      IncreasingFiltration w;
      w.nmin = x.nmin + y.nmin;
      w.nmax = x.nmax + y.nmax;
      for (int n = prod.lo(); n <= prod.hi(); ++n) {
        std::vector<KMatrix> row;
        for (int wt = w.nmin; wt <= w.nmax; ++wt) {
          KMatrix span(prod.dim(n), 0);
          for (const auto& [deg, off] : t.blocks.at(n)) {
            for (int s = x.nmin; s <= x.nmax; ++s) {
              KMatrix piece = kron(x.step(cx, deg, s), y.step(cy, n - deg, wt - s));
              KMatrix placed(prod.dim(n), piece.cols());
              placed.place(off, 0, piece);
              span = hstack<ConjElem>({span, placed});
            }
          }
          row.push_back(image_basis(span));
        }
        w.spans.push_back(std::move(row));
      }
      return w;
    };
    out.weight = WeightData{conv(a.weight->real, a.real, b.weight->real, b.real, out.real, tr),
                            conv(a.weight->complex, ac, b.weight->complex, bcx, vc, tc)};
  }
  if (a.iota && b.iota) {
    HodgeIota io;
    for (int n = tr.lo; n <= tr.hi; ++n) {
      io.real[n] = tensor_map(tr, n, [&](int k) { return a.iota->real.at(k); },
                              [&](int k) { return b.iota->real.at(k); });
    }
    for (int n = tc.lo; n <= tc.hi; ++n) {
      io.complex[n] = tensor_map(tc, n, [&](int k) { return a.iota->complex.at(k); },
                                 [&](int k) { return b.iota->complex.at(k); });
    }
    out.iota = io;
  }
  return out;
}

HodgeComplex projective_space_complex(int n) {
  if (n < 0) throw InvalidInputError("projective space dimension must be >= 0");
  HodgeComplex v = make_tate(0);
  for (int i = 1; i <= n; ++i) v = direct_sum(v, shift_degrees(make_tate(-i), 2 * i));
  v.label = "P^" + std::to_string(n);
  return v;
}

// ------------------------------------------------------------ Hom complexes

HomComplex kato_hom_complex(const HodgeComplex& v) {
  if (v.complex.spans.empty()) throw FiltrationMissingError("kato complex needs the Hodge filtration");
  const KComplex& vc = v.complex.complex;
  int lo = std::min(v.real.lo(), vc.lo()), hi = std::max(v.real.hi(), vc.hi());
  Columns cols;
  cols.real = identities(v.real, lo, hi);
  cols.right = identities(vc, lo, hi);
  for (int k = lo; k <= hi; ++k) cols.left[k] = v.complex.step(k, 0);
  for (int k = lo; k <= hi; ++k) {
    if (!vc.in_range(k)) cols.left[k] = KMatrix(0, 0);
  }
  return build_hom(v, cols);
}

HomComplex beilinson_hom_complex(const HodgeComplex& v) {
  if (!v.weight) throw WeightMissingError("beilinson complex needs a weight filtration");
  if (v.complex.spans.empty()) throw FiltrationMissingError("beilinson complex needs the Hodge filtration");
  const KComplex& vc = v.complex.complex;
  int lo = std::min(v.real.lo(), vc.lo()), hi = std::max(v.real.hi(), vc.hi());
  Columns cols;
  for (int k = lo; k <= hi; ++k) {
    cols.real[k] = v.weight->real.step(v.real, k, 0);
    KMatrix w0 = v.weight->complex.step(vc, k, 0);
    cols.right[k] = w0;
    cols.left[k] = intersect(v.complex.step(k, 0), w0);
    if (!v.real.in_range(k)) cols.real[k] = KMatrix(0, 0);
    if (!vc.in_range(k)) cols.right[k] = cols.left[k] = KMatrix(0, 0);
  }
  return build_hom(v, cols);
}

std::map<int, DimPair> deligne_dims(const HodgeComplex& v, int j, int lo, int hi) {
  return dims_of(kato_hom_complex(twist(v, j)), lo, hi);
}

std::map<int, DimPair> abs_hodge_dims(const HodgeComplex& v, int j, int lo, int hi) {
  return dims_of(beilinson_hom_complex(twist(v, j)), lo, hi);
}

// ---------------------------------------------------------------- purity

PurityReport pure_weight_check(const HodgeComplex& v) {
  if (!v.weight) throw WeightMissingError("purity check needs a weight filtration");
  PurityReport rep;
  const KComplex& vr = v.real;
  const KComplex& vc = v.complex.complex;
  const auto& wr = v.weight->real;
  for (int k = vr.lo(); k <= vr.hi(); ++k) {
    bool ok = true;
    KMatrix reps = vr.cohomology(k).representatives;
    std::size_t h = reps.cols();
    if (h == 0) {
      rep.per_degree[k] = true;
      continue;
    }
    std::vector<std::size_t> top(h);
    for (std::size_t c = 0; c < h; ++c) top[c] = c;
    // Coordinates in the basis of H^k given by the real representatives.
    KMatrix zc = v.phi_at(k) * reps;
    KMatrix bc = image_basis(vc.d(k - 1));
    KMatrix br = image_basis(vr.d(k - 1));
    auto coords_c = [&](const KMatrix& cocycles) {
      return image_basis(solve(hstack<ConjElem>({zc, bc}), cocycles).select_rows(top));
    };
    auto coords_r = [&](const KMatrix& cocycles) {
      return image_basis(solve(hstack<ConjElem>({reps, br}), cocycles).select_rows(top));
    };
    auto cocycles_in = [&](const KComplex& c, const KMatrix& span) {
      return span * kernel_basis(c.d(k) * span);
    };
    auto F = [&](int p) { return coords_c(cocycles_in(vc, v.complex.step(k, p))); };
    auto W = [&](int n) { return coords_r(cocycles_in(vr, wr.step(vr, k, n))); };
    for (int n = wr.nmin; n <= wr.nmax + 1 && ok; ++n) {
      KMatrix wn = W(n), wprev = W(n - 1);
      std::size_t dn = wn.cols(), dp = wprev.cols();
      if (dn == dp) continue;
      int plo = std::min(v.complex.pmin, n - v.complex.pmax);
      int phi_ = std::max(v.complex.pmax + 1, n + 1 - v.complex.pmin);
      for (int p = plo; p <= phi_ && ok; ++p) {
        int q = n + 1 - p;
        KMatrix fp = intersect(F(p), wn);
        KMatrix fq = intersect(F(q), wn).conj();
        std::size_t a = rank(hstack<ConjElem>({fp, wprev})) - dp;
        std::size_t b = rank(hstack<ConjElem>({fq, wprev})) - dp;
        std::size_t all = rank(hstack<ConjElem>({fp, fq, wprev}));
        if (all != dn || a + b != dn - dp) {
          ok = false;
          if (rep.pass) {
            rep.pass = false;
            rep.degree = k;
            rep.weight = n;
            rep.p = p;
            rep.message = "gr^W_" + std::to_string(n) + " H^" + std::to_string(k) + " is not F^" +
                          std::to_string(p) + " (+) conj F^" + std::to_string(q);
          }
        }
      }
    }
    rep.per_degree[k] = ok;
  }
  return rep;
}

}  // namespace nchodge
