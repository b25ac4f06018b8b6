#include "doctest.h"
#include "nchodge/error.hpp"
#include "nchodge/report.hpp"
#include "nchodge/verify.hpp"

using namespace nchodge;

namespace {

AlgebraContext ctx_of(const std::string& name, int imax = 9) { return AlgebraContext::make(preset(name), -imax, imax); }

}  // namespace

TEST_CASE("Borel ranks") {
  CHECK(borel_ranks(1, 0, 5) == 1);
  CHECK(borel_ranks(0, 1, 3) == 1);
  CHECK(borel_ranks(1, 0, 1) == 0);
  CHECK(borel_ranks(2, 0, 1) == 1);
  CHECK(borel_ranks(1, 1, 0) == 1);
  CHECK(borel_ranks(1, 0, -3) == 0);
  for (int r1 = 0; r1 <= 2; ++r1) {
    for (int r2 = 0; r2 <= 2; ++r2) {
      for (int j = 1; j <= 4; ++j) CHECK(borel_ranks(r1, r2, 2 * j) == 0);
    }
  }
}

TEST_CASE("K ranks") {
  CHECK(k_ranks(ctx_of("number_field:x^2+1"), 5).at(3).value == 1);
  CHECK(k_ranks(ctx_of("group:S3"), 5).at(5).value == 3);
  auto e = k_ranks(ctx_of("dual_numbers"), 5);
  CHECK(e.at(0).value == 1);
  CHECK(e.at(1).value == 1);  // units 1 + Q eps
  CHECK(e.at(1).provenance == Provenance::Computed);
}

TEST_CASE("K' ranks depend only on the semisimple quotient") {
  auto q = kprime_ranks(ctx_of("Q"), 9);
  auto e = kprime_ranks(ctx_of("dual_numbers"), 9);
  auto qq = kprime_ranks(ctx_of("product:Q;Q"), 9);
  auto t2 = kprime_ranks(ctx_of("upper_triangular:2"), 9);
  for (int i = 0; i <= 9; ++i) {
    CHECK(e.at(-i).value == q.at(-i).value);
    CHECK(t2.at(-i).value == qq.at(-i).value);
    CHECK(qq.at(-i).value == 2 * q.at(-i).value);
  }
  auto k = k_ranks(ctx_of("group:C3"), 9);
  auto kp = kprime_ranks(ctx_of("group:C3"), 9);
  for (int i = 0; i <= 9; ++i) CHECK(kp.at(-i).value == k.at(i).value);
}

TEST_CASE("K^st model") {
  auto c3 = kst_model(factor_data(cyclic_group_algebra(3)));
  CHECK(c3.s == 3);
  CHECK(c3.involutive());
  CHECK(c3.fixed_dim(0) == 2);
  CHECK(c3.fixed_dim(2) == 1);
  CHECK(c3.fixed_dim(1) == 0);
  auto q = kst_model(factor_data(trivial_algebra()));
  CHECK(q.fixed_dim(0) == 1);
  CHECK(q.fixed_dim(2) == 0);
}

TEST_CASE("middle dimensions") {
  auto q = middle_dims(ctx_of("Q"), -9, 9, MiddlePath::Reduced);
  CHECK(q.at(5).value == 1);
  auto qq = middle_dims(ctx_of("product:Q;Q"), -9, 9, MiddlePath::Reduced);
  auto m2 = middle_dims(ctx_of("full_matrix:2"), -9, 9, MiddlePath::Reduced);
  for (int n = -9; n <= 9; ++n) {
    CHECK(qq.at(n).value == 2 * q.at(n).value);
    CHECK(m2.at(n).value == q.at(n).value);
  }
}

TEST_CASE("reduced and direct paths agree on the overlap family") {
  for (const char* name : {"Q", "product:Q;Q", "number_field:x^2+1", "dual_numbers", "full_matrix:2"}) {
    AlgebraContext c = ctx_of(name);
    REQUIRE_MESSAGE(direct_supported(c), name);
    auto r = middle_dims(c, -2, 9, MiddlePath::Reduced);
    auto d = middle_dims(c, -2, 9, MiddlePath::Direct);
    for (int n = -2; n <= 9; ++n) {
      CHECK_MESSAGE(r.at(n).value == d.at(n).value, name << " degree " << n);
      CHECK(!d.at(n).provisional);
    }
  }
}

TEST_CASE("direct path refuses what it cannot model") {
  std::string why;
  CHECK(!direct_supported(ctx_of("group:C3"), &why));
  CHECK(!why.empty());
  CHECK_THROWS_AS(middle_dims(ctx_of("quaternion:-1,-1"), -2, 2, MiddlePath::Direct), UnsupportedInputError);
}

TEST_CASE("middle equals K in degrees at least two") {
  for (const char* name : {"Q", "number_field:x^3-2", "group:C3", "group:S3", "dual_numbers", "upper_triangular:2"}) {
    AlgebraContext c = ctx_of(name);
    auto k = k_ranks(c, 9);
    auto m = middle_dims(c, 2, 9, MiddlePath::Reduced);
    for (int i = 2; i <= 9; ++i) CHECK_MESSAGE(m.at(i).value == k.at(i).value, name << " degree " << i);
  }
}

TEST_CASE("triangles") {
  auto r = verify_triangle(preset("number_field:x^2-2"));
  CHECK(r.pass);
  REQUIRE(r.degree0);
  CHECK(*r.degree0 == std::array<std::size_t, 3>{1, 2, 1});
  CHECK(*r.degree1 == std::array<std::size_t, 3>{1, 2, 1});
  CHECK(r.delta_rank == std::size_t{0});

  auto q = verify_triangle(trivial_algebra());
  CHECK(q.pass);
  CHECK(q.verdict() == "PASS");
  CHECK(q.delta_rank == std::size_t{0});

  auto e = verify_triangle(dual_numbers());
  CHECK(e.pass);
  for (const auto& row : e.rows) {
    if (row.degree >= 2) CHECK(row.middle == row.left);
  }

  for (const char* name : {"group:C3", "product:Q;number_field:x^2+1", "upper_triangular:2"}) {
    auto t = verify_triangle(preset(name));
    CHECK_MESSAGE(t.pass, name);
    REQUIRE(t.delta_rank);
    CHECK(*t.delta_rank <= t.k.at(0).value);
  }
}

TEST_CASE("report JSON schema") {
  AlgebraContext c = ctx_of("number_field:x^2+1", 3);
  VerifyOptions opt;
  opt.imax = 3;
  opt.paths = PathChoice::Both;
  auto r = verify_triangle(c, opt);
  auto j = to_json(r, c.data);
  for (const char* key : {"algebra", "wedderburn", "tables", "triangle", "provenance"}) CHECK(j.contains(key));
  CHECK(j["tables"].contains("k"));
  CHECK(j["tables"].contains("kprime"));
  CHECK(j["tables"].contains("middle"));
  CHECK(j["triangle"].contains("per_degree"));
  CHECK(j["triangle"]["delta_rank"] == 0);
  CHECK(j["triangle"]["verdict"] == "PASS");
  CHECK(j["triangle"]["paths_agree"] == true);
  CHECK(!to_text(r).empty());
}
