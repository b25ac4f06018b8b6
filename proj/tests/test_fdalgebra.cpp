#include <algorithm>
#include <random>

#include "doctest.h"
#include "nchodge/error.hpp"
#include "nchodge/fdalgebra.hpp"
#include "random_objects.hpp"

using namespace nchodge;

namespace {

struct FactorKey {
  std::size_t dim;
  int d, r1, r2;
  std::string minpoly_degree;
  auto operator<=>(const FactorKey&) const = default;
};

std::vector<FactorKey> keys(const WedderburnData& w) {
  std::vector<FactorKey> out;
  for (const auto& f : w.factors) out.push_back({f.dim_q, f.d, f.r1, f.r2, std::to_string(f.center_minpoly.degree())});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> family() {
  return {"Q",          "dual_numbers",  "truncated_poly:3", "upper_triangular:2", "upper_triangular:3",
          "full_matrix:2", "group:C3",   "group:S3",         "quaternion:-1,-1",   "number_field:x^2-2",
          "number_field:x^3-2", "product:Q;number_field:x^2+1"};
}

}  // namespace

TEST_CASE("algebra checks") {
  CHECK(check_algebra(dual_numbers()).ok);
  CHECK(check_algebra(symmetric_group_algebra(3)).ok);
  FDAlgebra bad = dual_numbers();
  bad.table[0][1] = {{0, BigRational(1)}};  // 1 * eps = 1
  AlgebraCheck c = check_algebra(bad);
  CHECK(!c.ok);
  CHECK(!c.failure.empty());
}

TEST_CASE("radicals and semisimple quotients") {
  CHECK(radical(full_matrix(2)).cols() == 0);
  CHECK(radical(dual_numbers()).cols() == 1);
  CHECK(radical(upper_triangular(2)).cols() == 1);
  CHECK(radical(upper_triangular(3)).cols() == 3);
  CHECK(semisimple_quotient(upper_triangular(2)).algebra.dim == 2);
  CHECK(semisimple_quotient(dual_numbers()).algebra.dim == 1);
  CHECK(semisimple_quotient(full_matrix(2)).algebra.dim == 4);
  for (const auto& name : family()) {
    FDAlgebra a = preset(name);
    CHECK_MESSAGE(radical(semisimple_quotient(a).algebra).cols() == 0, name);
  }
}

TEST_CASE("Wedderburn data of presets") {
  auto c3 = factor_data(cyclic_group_algebra(3));
  REQUIRE(c3.factors.size() == 2);
  CHECK(keys(c3)[0].r1 == 1);
  CHECK(keys(c3)[1].r2 == 1);

  auto s3 = factor_data(symmetric_group_algebra(3));
  REQUIRE(s3.factors.size() == 3);
  std::vector<std::size_t> dims;
  for (const auto& f : s3.factors) {
    dims.push_back(f.dim_q);
    CHECK(f.d == 1);
    CHECK(f.r1 == 1);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 1, 4});

  auto h = factor_data(quaternion(BigRational(-1), BigRational(-1)));
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].dim_q == 4);
  CHECK(h.factors[0].d == 1);
  CHECK(h.factors[0].r1 == 1);
  CHECK(h.factors[0].m == 1);

  auto m2 = factor_data(full_matrix(2));
  REQUIRE(m2.factors.size() == 1);
  CHECK(m2.factors[0].m == 2);

  CHECK(full_matrix(2).dim == 4);
  CHECK(number_field(UniPoly::parse("x^2-2")).dim == 2);
  CHECK_THROWS_AS(number_field(UniPoly::parse("x^2-1")), InvalidInputError);
}

TEST_CASE("Wedderburn invariants over the preset family") {
  for (const auto& name : family()) {
    FDAlgebra a = preset(name);
    WedderburnData w = factor_data(a);
    std::size_t total = w.radical.cols(), ds = 0;
    for (const auto& f : w.factors) {
      total += f.dim_q;
      ds += static_cast<std::size_t>(f.d);
      CHECK(f.r1 + 2 * f.r2 == f.d);
      std::size_t root = 0;
      while ((root + 1) * (root + 1) <= f.dim_over_center) ++root;
      CHECK_MESSAGE(root * root == f.dim_over_center, name);
      if (f.m) CHECK(static_cast<std::size_t>(*f.m * *f.m) <= f.dim_over_center);
    }
    CHECK_MESSAGE(total == a.dim, name);
    CHECK_MESSAGE(ds == w.center_dim(), name);
    CHECK(w.center_minpoly.degree() == static_cast<int>(w.center_dim()));
    CHECK(squarefree_part(w.center_minpoly) == w.center_minpoly.monic());
  }
}

TEST_CASE("Wedderburn data is invariant under change of basis") {
  std::mt19937 rng(3);
  for (const char* name : {"group:C3", "upper_triangular:2", "product:Q;number_field:x^2+1"}) {
    FDAlgebra a = preset(name);
    auto base = keys(factor_data(a));
    for (int t = 0; t < 5; ++t) {
      QMatrix p;
      do {
        p = testing::random_matrix(rng, a.dim, a.dim, -2, 2, 0.7);
      } while (rank(p) != a.dim);
      FDAlgebra b = change_basis(a, p);
      REQUIRE(check_algebra(b).ok);
      CHECK_MESSAGE(keys(factor_data(b)) == base, name);
    }
  }
}

TEST_CASE("JSON round trip and malformed input") {
  FDAlgebra a = symmetric_group_algebra(3);
  FDAlgebra b = algebra_from_json(algebra_to_json(a));
  CHECK(b.dim == a.dim);
  CHECK(b.table == a.table);
  CHECK(b.unit == a.unit);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"dim", 2}}), InvalidInputError);
  CHECK_THROWS_AS(preset("nonsense"), InvalidInputError);
  CHECK(preset("group_algebra:S3").dim == 6);
}
