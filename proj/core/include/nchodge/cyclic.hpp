#ifndef NCHODGE_CYCLIC_HPP
#define NCHODGE_CYCLIC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "nchodge/complex.hpp"
#include "nchodge/fdalgebra.hpp"

namespace nchodge {

/// Normalized: C_k = A ⊗ Ā^{⊗k} with Ā = A / Q·1.
/// Peirce: the same complex taken relative to a split separable subalgebra
/// S = Q e_1 ⊕ ... ⊕ Q e_r spanned by orthogonal idempotent basis vectors
/// (tensor products over S, Ā = A / S). Quasi-isomorphic as mixed complexes,
/// and much smaller for matrix-like algebras. Falls back to Normalized when
/// the basis is not adapted to such idempotents.
enum class MixedModel { Normalized, Peirce };

/// Truncation Q_N of the mixed complex (C, b, B): degrees 0..N-1 as in C,
/// degree N replaced by C_N / ker b_N (coordinates: RREF rows of b_N).
struct MixedComplexTrunc {
  std::string algebra;
  int N = 0;
  MixedModel model = MixedModel::Normalized;
  std::vector<std::size_t> chain_dims;  // dim C_k, k = 0..N
  std::vector<std::size_t> dims;        // dim Q_k, k = 0..N
  std::vector<QMatrix> b;               // b[k]: Q_k -> Q_{k-1} (b[0] has no rows)
  std::vector<QMatrix> B;               // B[k]: Q_k -> Q_{k+1} (B[N] has no rows)

  // Chain-level data, needed for induced maps and explicit cycles.
  FDAlgebra basis_algebra;       // A in the working basis
  QMatrix basis_change;          // working basis in the original coordinates
  std::vector<std::size_t> idempotents;
  std::vector<std::pair<std::size_t, std::size_t>> piece;  // Peirce type of each basis vector
  std::vector<std::vector<std::uint16_t>> chains;          // flattened tuples per degree
  std::vector<std::unordered_map<std::string, std::uint32_t>> index;
  QMatrix top_projection;  // dims[N] x chain_dims[N]
  std::vector<std::size_t> top_pivots;

  bool in_s(std::size_t basis) const;
  std::size_t tuple_index(int k, const std::vector<std::uint16_t>& t) const;  // npos if absent
  /// Coordinates in Q_k of a chain given in C_k coordinates.
  SparseVec<BigRational> to_q(int k, const SparseVec<BigRational>& chain) const;
};

MixedComplexTrunc mixed_complex(const FDAlgebra& a, int N, MixedModel model = MixedModel::Normalized);

struct MixedIdentityCheck {
  bool b_squared = true, B_squared = true, anticommute = true;
  bool ok() const { return b_squared && B_squared && anticommute; }
};
MixedIdentityCheck check_mixed_identities(const MixedComplexTrunc& m);

/// Maps Q_k -> Q'_k (k = 0..src.N) induced by an algebra map phi
/// (tgt dim x src dim, original coordinates). Zero above the target's N.
std::vector<QMatrix> mixed_map(const MixedComplexTrunc& src, const MixedComplexTrunc& tgt, const QMatrix& phi);

/// Total complex of the (b, B) bicomplex: homological degree n collects
/// Q_{n+2p} for p in [pmin, pmax]; d = b + B with B raising p by one.
/// Stored cohomologically: complex degree -n.
struct MixedTotal {
  int pmin = 0, pmax = 0, nlo = 0, nhi = 0;
  std::map<int, std::vector<std::array<std::size_t, 3>>> blocks;  // n -> (p - pmin, q, offset)
  ChainComplex<BigRational> complex;
};

MixedTotal mixed_total(const MixedComplexTrunc& m, int pmin, int pmax, int nlo, int nhi);
/// Chain map of totals induced by componentwise maps f[q]; u_shift moves
/// column p to p + u_shift (and degree n to n - 2 u_shift).
ChainMap<BigRational> total_map(const std::vector<QMatrix>& f, const MixedTotal& x, const MixedTotal& y,
                                int u_shift = 0);

/// Map of cones induced by a commuting square (fx on sources, fy on targets).
template <class F>
ChainMap<F> cone_map(const ChainMap<F>& fx, const ChainMap<F>& fy, const ChainComplex<F>& cx,
                     const ChainComplex<F>& cy) {
  ChainMap<F> out{cx, cy, {}};
  for (int k = cx.lo(); k <= cx.hi(); ++k) {
    if (!cy.in_range(k)) continue;
    out.components[k] = direct_sum(fx.at(k + 1), fy.at(k));
  }
  return out;
}

struct HomologyTable {
  std::string name;
  std::map<int, std::size_t> dims;
  std::set<int> stable;
  bool is_stable(int n) const { return stable.count(n) > 0; }
  std::size_t at(int n) const;
  nlohmann::json to_json() const;
};

HomologyTable hh_dims(const FDAlgebra& a, int N, MixedModel model = MixedModel::Normalized);

struct CyclicTables {
  HomologyTable hh, hc, hc_minus, hp;
};
/// columns <= 0 picks a column count that never binds (N + 2).
CyclicTables hc_hcminus_hp_dims(const FDAlgebra& a, int N, int columns = 0,
                                MixedModel model = MixedModel::Normalized);

struct PeriodicityVerdict {
  enum class Status { Pass, Fail, Inconclusive } status = Status::Inconclusive;
  std::map<int, std::size_t> u_ranks;  // rank of u: HP_n -> HP_{n-2}
  std::string message;
};
PeriodicityVerdict periodicity_check(const FDAlgebra& a, int N, MixedModel model = MixedModel::Normalized);
const char* to_string(PeriodicityVerdict::Status s);

/// Fiber of HC^-(A) -> HC^-(A^ss), degree n = H_n for n in [lo, N - 1];
/// zero for semisimple A.
HomologyTable relative_cone_dims(const FDAlgebra& a, int N, int lo = -2);

// Helpers shared with verify.

/// Image rank of H(Tot(Q_N)) -> H(Tot(Q_{N-1})) at homological degree n for
/// each n in [lo, hi].
std::map<int, std::size_t> tower_image_dims(const ChainMap<BigRational>& tower, int lo, int hi);

}  // namespace nchodge

#endif  // NCHODGE_CYCLIC_HPP
