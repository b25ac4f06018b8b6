#ifndef NCHODGE_VERIFY_HPP
#define NCHODGE_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nchodge/cyclic.hpp"
#include "nchodge/fdalgebra.hpp"

namespace nchodge {

/// Rank of K_i(O_F) ⊗ R for a number field of signature (r1, r2).
/// Negative degrees give 0.
std::size_t borel_ranks(int r1, int r2, int i);

/// K^st(A ⊗ C)_Q modeled as Q^S[β, β^{-1}]: one basis class per C-factor,
/// iota permuting the factors by complex conjugation and sending β to -β.
struct KstModel {
  std::size_t s = 0;
  std::vector<std::size_t> iota;  // permutation of S
  std::size_t dim(int degree) const { return degree % 2 == 0 ? s : 0; }
  /// Dimension of the iota-fixed part in the given degree.
  std::size_t fixed_dim(int degree) const;
  bool involutive() const;
};
KstModel kst_model(const WedderburnData& w);

enum class Provenance { Oracle, Computed };
const char* to_string(Provenance p);

struct RankEntry {
  std::size_t value = 0;
  bool provisional = false;
  Provenance provenance = Provenance::Oracle;
};
using RankTable = std::map<int, RankEntry>;

/// Shared inputs for one algebra: Wedderburn data and the stabilized
/// relative negative cyclic table (only for non-semisimple A).
struct AlgebraContext {
  FDAlgebra algebra;
  WedderburnData data;
  int truncation = 6;
  int lo = -9, hi = 9;
  std::optional<HomologyTable> relative;

  static AlgebraContext make(const FDAlgebra& a, int lo, int hi, int truncation = 6, std::uint64_t seed = 0);
  bool semisimple() const { return data.radical.cols() == 0; }
  /// Relative HC^- rank at degree n (0 for semisimple A).
  RankEntry relative_at(int n) const;
};

/// K_i(A) ⊗ R for i in [0, imax]: Borel per simple factor (through its
/// center's signature) plus the Goodwillie relative term.
RankTable k_ranks(const AlgebraContext& ctx, int imax);
/// K'_{-i}(A)_R = K_i(A^ss) ⊗ R, stored at degree -i for i in [0, imax].
RankTable kprime_ranks(const AlgebraContext& ctx, int imax);

enum class MiddlePath { Reduced, Direct };
const char* to_string(MiddlePath p);

/// Whether the direct assembly is available; `why` explains a refusal.
bool direct_supported(const AlgebraContext& ctx, std::string* why = nullptr);

/// Dimensions of the iota-fixed non-commutative Deligne complex, homological
/// degrees [lo, hi]. Direct throws UnsupportedInputError outside its family.
RankTable middle_dims(const AlgebraContext& ctx, int lo, int hi, MiddlePath path);

struct TriangleRow {
  int degree = 0;
  std::size_t left = 0, middle = 0, right = 0;
  std::optional<std::size_t> middle_direct;
  bool pass = true;
  bool provisional = false;
};

struct TriangleReport {
  std::string algebra;
  int imax = 9;
  std::vector<TriangleRow> rows;
  RankTable k, kprime, middle, middle_direct;
  std::optional<std::size_t> delta_rank;
  bool pass = true;
  bool provisional = false;
  bool direct_run = false;
  bool paths_agree = true;
  // Number fields: the two short exact sequences in degrees 0 and 1.
  std::optional<std::array<std::size_t, 3>> degree0, degree1, expected0, expected1;
  std::vector<std::string> provenance;
  std::string verdict() const;
};

enum class PathChoice { Reduced, Direct, Both };

struct VerifyOptions {
  int imax = 9;
  int truncation = 6;
  std::uint64_t seed = 0;
  PathChoice paths = PathChoice::Reduced;
};

TriangleReport verify_triangle(const FDAlgebra& a, const VerifyOptions& opt = {});
TriangleReport verify_triangle(const AlgebraContext& ctx, const VerifyOptions& opt = {});

}  // namespace nchodge

#endif  // NCHODGE_VERIFY_HPP
