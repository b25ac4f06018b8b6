#include "nchodge/cyclic.hpp"

#include <algorithm>
#include <functional>

#include "nchodge/error.hpp"

namespace nchodge {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string key_of(const std::uint16_t* t, std::size_t len) {
  return std::string(reinterpret_cast<const char*>(t), len * sizeof(std::uint16_t));
}

// Sums duplicate indices and drops zeros.
SparseVec<BigRational> collect(std::vector<std::pair<std::size_t, BigRational>>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<BigRational> out;
  for (auto& [i, v] : terms) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(i, std::move(v));
    }
  }
  return out;
}

QMatrix rows_matrix(std::size_t cols, const std::vector<SparseVec<BigRational>>& rows) {
  return QMatrix::from_columns(cols, rows).transpose();
}

// Orthogonal idempotent basis vectors summing to the unit, with every other
// basis vector homogeneous for the Peirce decomposition.
bool peirce_setup(const FDAlgebra& a, std::vector<std::size_t>& idem,
                  std::vector<std::pair<std::size_t, std::size_t>>& piece) {
  idem.clear();
  for (std::size_t i = 0; i < a.dim; ++i) {
    QVec e = a.basis_vector(i);
    if (a.mul(e, e) != e) continue;
    bool orth = true;
    for (std::size_t j : idem) {
      QVec f = a.basis_vector(j);
      QVec zero(a.dim, BigRational(0));
      if (a.mul(e, f) != zero || a.mul(f, e) != zero) orth = false;
    }
    if (orth) idem.push_back(i);
  }
  QVec sum(a.dim, BigRational(0));
  for (std::size_t i : idem) sum[i] += BigRational(1);
  if (idem.empty() || sum != a.unit) return false;
  piece.assign(a.dim, {kNone, kNone});
  for (std::size_t s = 0; s < idem.size(); ++s) piece[idem[s]] = {s, s};
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (piece[i].first != kNone) continue;
    QVec x = a.basis_vector(i);
    for (std::size_t s = 0; s < idem.size(); ++s) {
      for (std::size_t t = 0; t < idem.size(); ++t) {
        QVec y = a.mul(a.mul(a.basis_vector(idem[s]), x), a.basis_vector(idem[t]));
        if (y == x) piece[i] = {s, t};
        else if (y != QVec(a.dim, BigRational(0))) return false;
      }
    }
    if (piece[i].first == kNone) return false;
  }
  return true;
}

}  // namespace

bool MixedComplexTrunc::in_s(std::size_t basis) const {
  return std::find(idempotents.begin(), idempotents.end(), basis) != idempotents.end();
}

std::size_t MixedComplexTrunc::tuple_index(int k, const std::vector<std::uint16_t>& t) const {
  const auto& m = index.at(static_cast<std::size_t>(k));
  auto it = m.find(key_of(t.data(), t.size()));
  return it == m.end() ? kNone : it->second;
}

SparseVec<BigRational> MixedComplexTrunc::to_q(int k, const SparseVec<BigRational>& chain) const {
  if (k < N) return chain;
  return top_projection.apply(chain);
}

MixedComplexTrunc mixed_complex(const FDAlgebra& a, int N, MixedModel model) {
  if (N < 1) throw InvalidInputError("truncation must be at least 1");
  MixedComplexTrunc m;
  m.algebra = a.name;
  m.N = N;
  bool peirce = false;
  if (model == MixedModel::Peirce) peirce = peirce_setup(a, m.idempotents, m.piece);
  if (peirce) {
    m.model = MixedModel::Peirce;
    m.basis_algebra = a;
    m.basis_change = QMatrix::identity(a.dim);
  } else {
    m.model = MixedModel::Normalized;
    QMatrix u = QMatrix::from_columns(a.dim, {});
    SparseVec<BigRational> uc;
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (!a.unit[i].is_zero()) uc.emplace_back(i, a.unit[i]);
    }
    u.append_column(uc);
    auto ext = extending_columns(u, QMatrix::identity(a.dim));
    QMatrix p = u;
    for (std::size_t j : ext) p.append_column(SparseVec<BigRational>{{j, BigRational(1)}});
    m.basis_change = p;
    m.basis_algebra = change_basis(a, p);
    m.idempotents = {0};
    m.piece.assign(a.dim, {0, 0});
  }
  const FDAlgebra& A = m.basis_algebra;
  const std::size_t n = A.dim;
  if (n > 60000) throw InvalidInputError("algebra too large for the chain model");

  std::vector<std::uint16_t> bar;  // basis of Ā
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.in_s(i)) bar.push_back(static_cast<std::uint16_t>(i));
  }
  auto src = [&](std::size_t i) { return m.piece[i].first; };
  auto tgt = [&](std::size_t i) { return m.piece[i].second; };

  // Enumerate composable tuples (a0, a1, ..., ak).
  m.chains.assign(static_cast<std::size_t>(N) + 1, {});
  m.index.assign(static_cast<std::size_t>(N) + 1, {});
  m.chain_dims.assign(static_cast<std::size_t>(N) + 1, 0);
  for (int k = 0; k <= N; ++k) {
    std::vector<std::vector<std::uint16_t>> tails;
    if (k == 0) {
      tails.push_back({});
    } else {
      std::vector<std::uint16_t> cur;
      std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == k) {
          tails.push_back(cur);
          return;
        }
        for (std::uint16_t x : bar) {
          if (!cur.empty() && tgt(cur.back()) != src(x)) continue;
          cur.push_back(x);
          rec();
          cur.pop_back();
        }
      };
      rec();
    }
    auto& flat = m.chains[static_cast<std::size_t>(k)];
    auto& idx = m.index[static_cast<std::size_t>(k)];
    std::uint32_t count = 0;
    for (std::size_t a0 = 0; a0 < n; ++a0) {
      for (const auto& tail : tails) {
        std::size_t in = k == 0 ? src(a0) : tgt(tail.back());
        std::size_t out = k == 0 ? src(a0) : src(tail.front());
        if (src(a0) != in || tgt(a0) != out) continue;
        std::size_t start = flat.size();
        flat.push_back(static_cast<std::uint16_t>(a0));
        flat.insert(flat.end(), tail.begin(), tail.end());
        idx.emplace(key_of(flat.data() + start, static_cast<std::size_t>(k) + 1), count++);
      }
    }
    m.chain_dims[static_cast<std::size_t>(k)] = count;
  }

  auto tuple_at = [&](int k, std::size_t j) {
    const auto& flat = m.chains[static_cast<std::size_t>(k)];
    std::size_t len = static_cast<std::size_t>(k) + 1;
    return std::vector<std::uint16_t>(flat.begin() + static_cast<long>(j * len),
                                      flat.begin() + static_cast<long>((j + 1) * len));
  };
  auto lookup = [&](int k, const std::vector<std::uint16_t>& t) {
    std::size_t j = m.tuple_index(k, t);
    if (j == kNone) throw ChainMapError("mixed complex: non-composable tuple produced");
    return j;
  };

  // Raw b_k: C_k -> C_{k-1} and B_k: C_k -> C_{k+1}.
  std::vector<QMatrix> braw(static_cast<std::size_t>(N) + 1), Braw(static_cast<std::size_t>(N) + 1);
  braw[0] = QMatrix(0, m.chain_dims[0]);
  for (int k = 1; k <= N; ++k) {
    std::vector<SparseVec<BigRational>> cols(m.chain_dims[static_cast<std::size_t>(k)]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto t = tuple_at(k, j);
      std::vector<std::pair<std::size_t, BigRational>> terms;
      // i = 0
      for (const auto& [c, v] : A.table[t[0]][t[1]]) {
        std::vector<std::uint16_t> s{static_cast<std::uint16_t>(c)};
        s.insert(s.end(), t.begin() + 2, t.end());
        terms.emplace_back(lookup(k - 1, s), v);
      }
      for (int i = 1; i < k; ++i) {
        for (const auto& [c, v] : A.table[t[static_cast<std::size_t>(i)]][t[static_cast<std::size_t>(i) + 1]]) {
          if (m.in_s(c)) continue;
          std::vector<std::uint16_t> s(t.begin(), t.begin() + i);
          s.push_back(static_cast<std::uint16_t>(c));
          s.insert(s.end(), t.begin() + i + 2, t.end());
          terms.emplace_back(lookup(k - 1, s), i % 2 ? -v : v);
        }
      }
      for (const auto& [c, v] : A.table[t[static_cast<std::size_t>(k)]][t[0]]) {
        std::vector<std::uint16_t> s{static_cast<std::uint16_t>(c)};
        s.insert(s.end(), t.begin() + 1, t.end() - 1);
        terms.emplace_back(lookup(k - 1, s), k % 2 ? -v : v);
      }
      cols[j] = collect(terms);
    }
    braw[static_cast<std::size_t>(k)] = QMatrix::from_columns(m.chain_dims[static_cast<std::size_t>(k) - 1], std::move(cols));
  }
  for (int k = 0; k < N; ++k) {
    std::vector<SparseVec<BigRational>> cols(m.chain_dims[static_cast<std::size_t>(k)]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto t = tuple_at(k, j);
      if (m.in_s(t[0])) continue;
      std::vector<std::pair<std::size_t, BigRational>> terms;
      const std::size_t len = t.size();
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::uint16_t> s;
        s.push_back(static_cast<std::uint16_t>(m.idempotents[src(t[i])]));
        for (std::size_t l = 0; l < len; ++l) s.push_back(t[(i + l) % len]);
        BigRational sign((i * static_cast<std::size_t>(k)) % 2 ? -1 : 1);
        terms.emplace_back(lookup(k + 1, s), sign);
      }
      cols[j] = collect(terms);
    }
    Braw[static_cast<std::size_t>(k)] = QMatrix::from_columns(m.chain_dims[static_cast<std::size_t>(k) + 1], std::move(cols));
  }

  // Top degree: C_N / ker b_N via the RREF rows of b_N.
  Echelon<BigRational> e = echelon(braw[static_cast<std::size_t>(N)], true);
  m.top_pivots = e.pivots;
  m.top_projection = rows_matrix(m.chain_dims[static_cast<std::size_t>(N)], e.rows);

  m.dims = m.chain_dims;
  m.dims[static_cast<std::size_t>(N)] = e.rank();
  m.b = braw;
  m.B = Braw;
  m.b[static_cast<std::size_t>(N)] = braw[static_cast<std::size_t>(N)].select_columns(e.pivots);
  m.B[static_cast<std::size_t>(N) - 1] = m.top_projection * Braw[static_cast<std::size_t>(N) - 1];
  m.B[static_cast<std::size_t>(N)] = QMatrix(0, e.rank());
  return m;
}

MixedIdentityCheck check_mixed_identities(const MixedComplexTrunc& m) {
  MixedIdentityCheck r;
  for (int k = 2; k <= m.N; ++k) {
    if (!(m.b[static_cast<std::size_t>(k) - 1] * m.b[static_cast<std::size_t>(k)]).is_zero()) r.b_squared = false;
  }
  for (int k = 0; k + 1 <= m.N; ++k) {
    if (!(m.B[static_cast<std::size_t>(k) + 1] * m.B[static_cast<std::size_t>(k)]).is_zero()) r.B_squared = false;
  }
  for (int k = 0; k <= m.N; ++k) {
    // bB + Bb on Q_k, landing in Q_k.
    QMatrix s(m.dims[static_cast<std::size_t>(k)], m.dims[static_cast<std::size_t>(k)]);
    if (k + 1 <= m.N) s = s + m.b[static_cast<std::size_t>(k) + 1] * m.B[static_cast<std::size_t>(k)];
    if (k >= 1) s = s + m.B[static_cast<std::size_t>(k) - 1] * m.b[static_cast<std::size_t>(k)];
    if (!s.is_zero()) r.anticommute = false;
  }
  return r;
}

std::vector<QMatrix> mixed_map(const MixedComplexTrunc& src, const MixedComplexTrunc& tgt, const QMatrix& phi) {
  if (phi.rows() != tgt.basis_change.rows() || phi.cols() != src.basis_change.rows()) {
    throw ShapeError("mixed_map: algebra map has the wrong shape");
  }
  QMatrix w = solve(tgt.basis_change, phi * src.basis_change);  // in working bases
  std::vector<QMatrix> out;
  for (int k = 0; k <= src.N; ++k) {
    std::size_t scols = src.dims[static_cast<std::size_t>(k)];
    if (k > tgt.N) {
      out.emplace_back(0, scols);
      continue;
    }
    const std::size_t len = static_cast<std::size_t>(k) + 1;
    const auto& flat = src.chains[static_cast<std::size_t>(k)];
    std::vector<std::size_t> which;
    if (k == src.N) {
      which = src.top_pivots;
    } else {
      which.resize(src.chain_dims[static_cast<std::size_t>(k)]);
      for (std::size_t j = 0; j < which.size(); ++j) which[j] = j;
    }
    std::vector<SparseVec<BigRational>> cols;
    cols.reserve(which.size());
    for (std::size_t j : which) {
      // Expand phi(a0) ⊗ phi-bar(a1) ⊗ ... term by term.
      std::vector<std::pair<std::vector<std::uint16_t>, BigRational>> partial{{{}, BigRational(1)}};
      for (std::size_t l = 0; l < len; ++l) {
        std::vector<std::pair<std::vector<std::uint16_t>, BigRational>> next;
        for (const auto& [c, v] : w.column(flat[j * len + l])) {
          if (l > 0 && tgt.in_s(c)) continue;
          for (const auto& [t, x] : partial) {
            auto t2 = t;
            t2.push_back(static_cast<std::uint16_t>(c));
            next.emplace_back(std::move(t2), x * v);
          }
        }
        partial = std::move(next);
      }
      std::vector<std::pair<std::size_t, BigRational>> terms;
      for (auto& [t, x] : partial) {
        std::size_t idx = tgt.tuple_index(k, t);
        if (idx == kNone) throw ChainMapError("mixed_map: image is not composable in the target model");
        terms.emplace_back(idx, std::move(x));
      }
      cols.push_back(tgt.to_q(k, collect(terms)));
    }
    out.push_back(QMatrix::from_columns(tgt.dims[static_cast<std::size_t>(k)], std::move(cols)));
  }
  return out;
}

MixedTotal mixed_total(const MixedComplexTrunc& m, int pmin, int pmax, int nlo, int nhi) {
  MixedTotal t;
  t.pmin = pmin;
  t.pmax = pmax;
  t.nlo = nlo;
  t.nhi = nhi;
  std::map<int, std::size_t> size;
  for (int n = nlo; n <= nhi; ++n) {
    std::size_t off = 0;
    auto& bl = t.blocks[n];
    for (int p = pmin; p <= pmax; ++p) {
      int q = n + 2 * p;
      if (q < 0 || q > m.N) continue;
      bl.push_back({static_cast<std::size_t>(p - pmin), static_cast<std::size_t>(q), off});
      off += m.dims[static_cast<std::size_t>(q)];
    }
    size[n] = off;
  }
  auto find_block = [&](int n, std::size_t pi, std::size_t q) -> std::size_t {
    auto it = t.blocks.find(n);
    if (it == t.blocks.end()) return kNone;
    for (const auto& b : it->second) {
      if (b[0] == pi && b[1] == q) return b[2];
    }
    return kNone;
  };
  std::vector<std::size_t> dims;
  std::vector<QMatrix> d;
  for (int k = -nhi; k <= -nlo; ++k) {
    int n = -k;
    dims.push_back(size[n]);
    if (k == -nlo) break;
    QMatrix dm(size[n - 1], size[n]);
    for (const auto& [pi, q, off] : t.blocks[n]) {
      if (q >= 1) {
        std::size_t o = find_block(n - 1, pi, q - 1);
        if (o != kNone) dm.place(o, off, m.b[q]);
      }
      if (q + 1 <= static_cast<std::size_t>(m.N)) {
        std::size_t o = find_block(n - 1, pi + 1, q + 1);
        if (o != kNone) dm.place(o, off, m.B[q]);
      }
    }
    d.push_back(std::move(dm));
  }
  t.complex = ChainComplex<BigRational>(-nhi, std::move(dims), std::move(d), false);
  return t;
}

ChainMap<BigRational> total_map(const std::vector<QMatrix>& f, const MixedTotal& x, const MixedTotal& y,
                                int u_shift) {
  ChainMap<BigRational> out{x.complex, y.complex, {}};
  for (const auto& [n, blocks] : x.blocks) {
    int ny = n - 2 * u_shift;
    auto it = y.blocks.find(ny);
    if (it == y.blocks.end()) continue;
    QMatrix m(y.complex.dim(-ny), x.complex.dim(-n));
    for (const auto& [pi, q, off] : blocks) {
      int p = static_cast<int>(pi) + x.pmin + u_shift;
      for (const auto& [pj, qy, offy] : it->second) {
        if (static_cast<int>(pj) + y.pmin == p && qy == q && q < f.size()) {
          const QMatrix& fq = f[q];
          if (fq.rows() > 0) m.place(offy, off, fq);
        }
      }
    }
    // Degree convention: ChainMap components are indexed by source degree;
    // with a u-shift the target must be re-indexed by the caller.
    out.components[-n] = std::move(m);
  }
  return out;
}

std::size_t HomologyTable::at(int n) const {
  auto it = dims.find(n);
  return it == dims.end() ? 0 : it->second;
}

nlohmann::json HomologyTable::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, d] : dims) rows.push_back({{"degree", n}, {"dim", d}, {"stable", is_stable(n)}});
  j["dims"] = rows;
  return j;
}

std::map<int, std::size_t> tower_image_dims(const ChainMap<BigRational>& tower, int lo, int hi) {
  std::map<int, std::size_t> out;
  for (int n = lo; n <= hi; ++n) out[n] = induced_map_rank(tower, -n);
  return out;
}

namespace {

std::size_t b_rank(const MixedComplexTrunc& m, int k) {
  if (k < 1 || k > m.N) return 0;
  return rank(m.b[static_cast<std::size_t>(k)]);
}

struct Tower {
  std::vector<MixedComplexTrunc> levels;  // N, N-1, N-2 (those >= 1)
  std::vector<std::vector<QMatrix>> maps;  // level i -> level i+1
};

Tower make_tower(const FDAlgebra& a, int N, MixedModel model) {
  Tower t;
  for (int k = N; k >= std::max(1, N - 2); --k) t.levels.push_back(mixed_complex(a, k, model));
  QMatrix id = QMatrix::identity(a.dim);
  for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) t.maps.push_back(mixed_map(t.levels[i], t.levels[i + 1], id));
  return t;
}

// Image ranks for two consecutive tower steps, with column counts cols and cols - 1.
HomologyTable stabilized(const std::string& name, const Tower& t, int N, int cols, bool periodic, int lo, int hi) {
  HomologyTable table;
  table.name = name;
  std::vector<std::map<int, std::size_t>> img;
  for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
    int c = cols - static_cast<int>(i);
    int pmin = periodic ? -c : 0;
    MixedTotal x = mixed_total(t.levels[i], pmin, c, lo - 1, hi + 1);
    MixedTotal y = mixed_total(t.levels[i + 1], pmin, c, lo - 1, hi + 1);
    img.push_back(tower_image_dims(total_map(t.maps[i], x, y), lo, hi));
  }
  for (int n = lo; n <= hi; ++n) {
    table.dims[n] = img.empty() ? 0 : img[0][n];
    if (img.size() >= 2 && img[0][n] == img[1][n] && n <= N - 2) table.stable.insert(n);
  }
  return table;
}

}  // namespace

HomologyTable hh_dims(const FDAlgebra& a, int N, MixedModel model) {
  MixedComplexTrunc m = mixed_complex(a, N, model);
  HomologyTable t;
  t.name = "HH";
  for (int k = 0; k <= N; ++k) {
    t.dims[k] = m.dims[static_cast<std::size_t>(k)] - b_rank(m, k) - b_rank(m, k + 1);
    if (k <= N - 1) t.stable.insert(k);
  }
  return t;
}

CyclicTables hc_hcminus_hp_dims(const FDAlgebra& a, int N, int columns, MixedModel model) {
  if (N < 2) throw InvalidInputError("truncation must be at least 2");
  int cols = columns > 0 ? columns : N + 2;
  CyclicTables out;
  out.hh = hh_dims(a, N, model);
  Tower t = make_tower(a, N, model);
  // HC is exact below the truncation: it only sees Q_{<=n+1}.
  {
    MixedTotal tot = mixed_total(t.levels[0], -cols, 0, -1, N);
    out.hc.name = "HC";
    for (int n = 0; n <= N - 1; ++n) {
      out.hc.dims[n] = tot.complex.cohomology_dim(-n);
      if (cols >= (n + 1) / 2) out.hc.stable.insert(n);
    }
  }
  out.hc_minus = stabilized("HC-", t, N, cols, false, -2, N - 1);
  out.hp = stabilized("HP", t, N, cols, true, -2, N - 1);
  return out;
}

const char* to_string(PeriodicityVerdict::Status s) {
  switch (s) {
    case PeriodicityVerdict::Status::Pass: return "pass";
    case PeriodicityVerdict::Status::Fail: return "fail";
    default: return "inconclusive";
  }
}

PeriodicityVerdict periodicity_check(const FDAlgebra& a, int N, MixedModel model) {
  PeriodicityVerdict v;
  if (N < 3) {
    v.message = "truncation too small for a stable range; raise N";
    return v;
  }
  CyclicTables tables = hc_hcminus_hp_dims(a, N, 0, model);
  const HomologyTable& hp = tables.hp;
  Tower t = make_tower(a, N, model);
  int cols = N + 2;
  const int lo = -2, hi = N - 1;
  MixedTotal x = mixed_total(t.levels[0], -cols, cols, lo - 1, hi + 1);
  MixedTotal y = mixed_total(t.levels[1], -cols, cols, lo - 3, hi - 1);
  // u composed with the tower map: column p -> p + 1, degree n -> n - 2.
  ChainMap<BigRational> u = total_map(t.maps[0], x, y, 1);
  ChainMap<BigRational> f{x.complex, y.complex.shifted(2), {}};
  for (auto& [k, m] : u.components) f.components[k] = m;
  bool any = false, ok = true;
  for (int n = lo; n <= hi; ++n) {
    if (!hp.is_stable(n) || !hp.is_stable(n - 2)) continue;
    any = true;
    std::size_t r = induced_map_rank(f, -n);
    v.u_ranks[n] = r;
    if (r != hp.at(n) || hp.at(n) != hp.at(n - 2)) {
      ok = false;
      if (v.message.empty()) v.message = "u fails to be an isomorphism HP_" + std::to_string(n) + " -> HP_" + std::to_string(n - 2);
    }
  }
  if (!any) {
    v.status = PeriodicityVerdict::Status::Inconclusive;
    v.message = "no pair of stable degrees; raise N";
  } else if (ok) {
    v.status = PeriodicityVerdict::Status::Pass;
    v.message = "u is an isomorphism on the stable range; filtration index shifts by one";
  } else {
    v.status = PeriodicityVerdict::Status::Fail;
  }
  return v;
}

HomologyTable relative_cone_dims(const FDAlgebra& a, int N, int lo) {
  if (N < 2) throw InvalidInputError("truncation must be at least 2");
  HomologyTable table;
  table.name = "HC- relative";
  const int hi = N - 1;
  QMatrix rad = radical(a);
  if (rad.cols() == 0) {
    // A -> A^ss is an isomorphism; the cone is contractible.
    for (int n = lo; n <= hi; ++n) {
      table.dims[n] = 0;
      table.stable.insert(n);
    }
    return table;
  }
  Quotient q = semisimple_quotient(a);
  // Peirce models on both sides when the projection respects the idempotents.
  Tower ta = make_tower(a, N, MixedModel::Peirce);
  Tower tq = make_tower(q.algebra, N, MixedModel::Peirce);
  bool peirce = ta.levels[0].model == MixedModel::Peirce && tq.levels[0].model == MixedModel::Peirce;
  for (std::size_t i : ta.levels[0].idempotents) {
    if (!peirce) break;
    for (const auto& [r, v] : q.projection.column(i)) {
      if (!tq.levels[0].in_s(r)) peirce = false;
    }
  }
  if (!peirce) {
    ta = make_tower(a, N, MixedModel::Normalized);
    tq = make_tower(q.algebra, N, MixedModel::Normalized);
  }
  int cols = N + 2 - std::min(lo, 0);
  std::vector<std::map<int, std::size_t>> img;
  std::vector<ChainComplex<BigRational>> cones;
  std::vector<ChainMap<BigRational>> fa, fq;
  std::vector<MixedTotal> xa, xq;
  for (std::size_t i = 0; i < ta.levels.size(); ++i) {
    xa.push_back(mixed_total(ta.levels[i], 0, cols, lo - 1, hi + 2));
    xq.push_back(mixed_total(tq.levels[i], 0, cols, lo - 1, hi + 2));
    ChainMap<BigRational> g = total_map(mixed_map(ta.levels[i], tq.levels[i], q.projection), xa.back(), xq.back());
    cones.push_back(cone(g));
  }
  for (std::size_t i = 0; i + 1 < ta.levels.size(); ++i) {
    ChainMap<BigRational> ma = total_map(ta.maps[i], xa[i], xa[i + 1]);
    ChainMap<BigRational> mq = total_map(tq.maps[i], xq[i], xq[i + 1]);
    ChainMap<BigRational> c = cone_map(ma, mq, cones[i], cones[i + 1]);
    std::map<int, std::size_t> r;
    // Fiber degree n is cone degree -n - 1.
    for (int n = lo; n <= hi; ++n) r[n] = induced_map_rank(c, -n - 1);
    img.push_back(std::move(r));
  }
  for (int n = lo; n <= hi; ++n) {
    table.dims[n] = img.empty() ? 0 : img[0][n];
    if (img.size() >= 2 && img[0][n] == img[1][n] && n <= N - 2) table.stable.insert(n);
  }
  return table;
}

}  // namespace nchodge
