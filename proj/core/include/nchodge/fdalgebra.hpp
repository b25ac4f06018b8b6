#ifndef NCHODGE_FDALGEBRA_HPP
#define NCHODGE_FDALGEBRA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nchodge/factor.hpp"
#include "nchodge/linalg.hpp"
#include "nchodge/unipoly.hpp"

namespace nchodge {

using QMatrix = Matrix<BigRational>;
using QVec = std::vector<BigRational>;

/// Associative unital algebra over Q given by structure constants:
/// e_i * e_j = sum_k table[i][j][k] e_k (stored sparsely).
struct FDAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  QVec unit;
  std::vector<std::vector<SparseVec<BigRational>>> table;

  /// Builds from dense constants c[i][j][k].
  static FDAlgebra from_dense(std::string name, const QVec& unit,
                              const std::vector<std::vector<QVec>>& c,
                              std::vector<std::string> labels = {});

  QVec mul(const QVec& x, const QVec& y) const;
  QVec basis_vector(std::size_t i) const;
  /// Matrix of y -> x y (left) or y -> y x (right).
  QMatrix left_mult(const QVec& x) const;
  QMatrix right_mult(const QVec& x) const;
};

struct AlgebraCheck {
  bool ok = true;
  std::string failure;
  std::array<std::size_t, 3> witness{};
};

/// Exhaustive associativity and unit-law check.
AlgebraCheck check_algebra(const FDAlgebra& a);

/// Kernel of the trace form (x, y) -> tr L_{xy}; columns span the radical.
QMatrix radical(const FDAlgebra& a);

struct Quotient {
  FDAlgebra algebra;
  QMatrix projection;  // dim(quotient) x dim(A), an algebra map
};

/// Quotient by the radical on a complement spanned by standard basis vectors.
Quotient semisimple_quotient(const FDAlgebra& a);

/// Basis of the center, as columns.
QMatrix center(const FDAlgebra& a);

/// Minimal polynomial of x by Krylov iteration.
UniPoly minimal_polynomial(const FDAlgebra& a, const QVec& x);

/// The subalgebra e A for a central idempotent e, with unit e.
FDAlgebra corner_algebra(const FDAlgebra& a, const QVec& e);

struct WedderburnFactor {
  std::size_t dim_q = 0;    // Q-dimension of the simple factor
  UniPoly center_minpoly;   // minimal polynomial of the center's generator
  int d = 1;                // [F : Q]
  std::size_t dim_over_center = 0;
  std::optional<int> m;     // matrix size over the division algebra, when the center is Q
  int r1 = 0, r2 = 0;
  QVec idempotent;          // central idempotent, coordinates in the semisimple quotient
};

struct WedderburnData {
  QMatrix radical;
  Quotient semisimple;
  QMatrix center;
  QVec primitive_element;
  UniPoly center_minpoly;
  std::vector<WedderburnFactor> factors;
  std::size_t center_dim() const { return center.cols(); }
};

WedderburnData factor_data(const FDAlgebra& a, std::uint64_t seed = 0);

// ------------------------------------------------------------------ presets

FDAlgebra trivial_algebra();  // Q
FDAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& mult, std::string name = "group");
FDAlgebra cyclic_group_algebra(std::size_t n);
FDAlgebra symmetric_group_algebra(std::size_t n);  // n <= 4
FDAlgebra upper_triangular(std::size_t n);
FDAlgebra full_matrix(std::size_t n);
FDAlgebra dual_numbers();
FDAlgebra truncated_poly(std::size_t n);  // Q[x]/x^n
FDAlgebra quaternion(const BigRational& a, const BigRational& b);
FDAlgebra number_field(const UniPoly& minpoly);
FDAlgebra product(const std::vector<FDAlgebra>& parts);

/// New basis f_j = sum_i p(i, j) e_i; p must be invertible.
FDAlgebra change_basis(const FDAlgebra& a, const QMatrix& p);

/// Names such as "Q", "dual_numbers", "truncated_poly:3", "upper_triangular:2",
/// "full_matrix:2", "group:C3", "group:S3", "quaternion:-1,-1",
/// "number_field:x^2+1", "product:Q;number_field:x^2-2".
FDAlgebra preset(const std::string& spec);
std::vector<std::string> preset_names();

/// {"dim": n, "unit": [...], "table": [[[...]]]} with rationals as strings.
FDAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const FDAlgebra& a);

}  // namespace nchodge

#endif  // NCHODGE_FDALGEBRA_HPP
