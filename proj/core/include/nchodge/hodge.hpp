#ifndef NCHODGE_HODGE_HPP
#define NCHODGE_HODGE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nchodge/complex.hpp"
#include "nchodge/conjfield.hpp"

namespace nchodge {

using KMatrix = Matrix<ConjElem>;
using KComplex = ChainComplex<ConjElem>;

/// Increasing filtration: W_n = 0 for n < nmin, everything for n >= nmax,
/// spans[k - lo][n - nmin] in between.
struct IncreasingFiltration {
  int nmin = 0, nmax = 0;
  std::vector<std::vector<KMatrix>> spans;

  KMatrix step(const KComplex& c, int k, int n) const;
  void validate(const KComplex& c, const char* side) const;
};

struct WeightData {
  IncreasingFiltration real, complex;
};

/// iota_R is linear on V_R; iota_C is conjugate-linear on V_C (v -> J conj v).
struct HodgeIota {
  std::map<int, KMatrix> real, complex;
};

/// (V_R, V_C, phi) with Hodge filtration F on V_C, optional weights and iota.
/// V_R has entries in the fixed field K0; phi: V_R (x) K -> V_C.
struct HodgeComplex {
  FieldPtr field;
  KComplex real;
  FilteredComplex<ConjElem> complex;
  std::map<int, KMatrix> phi;
  std::optional<WeightData> weight;
  std::optional<HodgeIota> iota;
  bool strict = true;
  std::string label;

  KMatrix phi_at(int k) const;
  ChainMap<ConjElem> phi_map() const;
  /// Shapes, phi chain map, filtration/weight compatibility, iota axioms,
  /// and (strict mode) phi a quasi-isomorphism.
  void validate() const;
};

HodgeComplex make_tate(int j);
HodgeComplex twist(const HodgeComplex& v, int j);
HodgeComplex tensor(const HodgeComplex& a, const HodgeComplex& b);
HodgeComplex direct_sum(const HodgeComplex& a, const HodgeComplex& b);
/// Moves degree k to degree k + s (no sign issues for the even shifts used here;
/// odd shifts negate differentials).
HodgeComplex shift_degrees(const HodgeComplex& v, int s);
HodgeComplex spec_field(int r1, int r2);
HodgeComplex projective_space_complex(int n);

struct HomComplex {
  KComplex raw;                  // over K0
  std::optional<KComplex> fixed;  // iota-invariant part, when V carries iota
};

/// Two-column total complex of V_R (+) F^0 V_C -> V_C, (v, w) -> phi v - w.
HomComplex kato_hom_complex(const HodgeComplex& v);
/// Same with W_0 V_R (+) (F^0 ∩ W_0) V_C -> W_0 V_C.
HomComplex beilinson_hom_complex(const HodgeComplex& v);

struct DimPair {
  std::size_t raw = 0;
  std::optional<std::size_t> fixed;
};

std::map<int, DimPair> deligne_dims(const HodgeComplex& v, int j, int lo, int hi);
std::map<int, DimPair> abs_hodge_dims(const HodgeComplex& v, int j, int lo, int hi);

struct PurityReport {
  bool pass = true;
  std::map<int, bool> per_degree;
  // First failure, if any.
  int degree = 0, weight = 0, p = 0;
  std::string message;
};

/// gr^W_n H = F^p ⊕ conj(F^q) for all p + q = n + 1, every degree.
PurityReport pure_weight_check(const HodgeComplex& v);

/// cone(phi (x) K) acyclic.
bool quasi_iso_audit(const HodgeComplex& v);

}  // namespace nchodge

#endif  // NCHODGE_HODGE_HPP
