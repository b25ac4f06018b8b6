#include <random>

#include "doctest.h"
#include "nchodge/complex.hpp"
#include "nchodge/conjfield.hpp"
#include "nchodge/error.hpp"
#include "random_objects.hpp"

using namespace nchodge;
using Q = BigRational;
using QM = Matrix<Q>;

TEST_CASE("gaussian elimination") {
  auto g = gaussian(QM::identity(3));
  CHECK(g.rank == 3);
  CHECK(g.kernel_basis.cols() == 0);

  g = gaussian(QM(2, 5));
  CHECK(g.rank == 0);
  CHECK(g.kernel_basis.cols() == 5);

  g = gaussian(QM::from_rows({{1, 2}, {2, 4}}));
  CHECK(g.rank == 1);
  REQUIRE(g.kernel_basis.cols() == 1);
  Q a = g.kernel_basis.at(0, 0), b = g.kernel_basis.at(1, 0);
  CHECK(a == Q(-2) * b);  // proportional to (2, -1)
}

TEST_CASE("solve and spans") {
  QM a = QM::from_rows({{1, 1}, {0, 1}, {1, 0}});
  QM b = QM::from_rows({{3}, {1}, {2}});
  QM x = solve(a, b);
  CHECK(a * x == b);
  CHECK_THROWS_AS(solve(a, QM::from_rows({{1}, {0}, {0}})), ShapeError);
  CHECK(contains_span(a, b));
  CHECK(!contains_span(a, QM::from_rows({{1}, {0}, {0}})));
}

TEST_CASE("Bareiss rank agrees with naive elimination on random matrices") {
  std::mt19937 rng(2024);
  for (int n = 0; n < 100; ++n) {
    QM m = testing::random_matrix(rng, 1 + n % 8, 1 + (n / 8) % 8, -9, 9, 0.6);
    CHECK(bareiss_rank(m) == naive_rank(m));
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("cohomology examples") {
  // cone of the identity of Q
  ChainComplex<Q> c(0, {1, 1}, {QM::identity(1)});
  CHECK(c.cohomology_dim(0) == 0);
  CHECK(c.cohomology_dim(1) == 0);

  ChainComplex<Q> z(0, {2, 3, 1}, {QM(3, 2), QM(1, 3)});
  CHECK(z.cohomology_dim(0) == 2);
  CHECK(z.cohomology_dim(1) == 3);
  CHECK(z.cohomology_dim(2) == 1);

  ChainComplex<Q> t(0, {2, 1}, {QM::from_rows({{1, 0}})});
  CHECK(t.cohomology_dim(0) == 1);
  CHECK(t.cohomology_dim(1) == 0);
  auto h = t.cohomology(0);
  CHECK(h.dim == 1);

  CHECK_THROWS_AS(ChainComplex<Q>(0, {2, 1}, {QM::identity(1)}), ShapeError);
  CHECK_THROWS_AS(ChainComplex<Q>(0, {1, 1, 1}, {QM::identity(1), QM::identity(1)}), Error);
}

TEST_CASE("random complexes satisfy d^2 = 0 and the Euler identity") {
  std::mt19937 rng(99);
  for (int n = 0; n < 200; ++n) {
    ChainComplex<Q> c = testing::random_complex(rng, 2 + n % 4, 4);
    CHECK_NOTHROW(c.check_d_squared());
    long chi = 0;
    for (int k = c.lo(); k <= c.hi(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.cohomology_dim(k));
    CHECK(chi == c.euler_characteristic());
  }
}

TEST_CASE("cones") {
  std::mt19937 rng(5);
  for (int n = 0; n < 20; ++n) {
    ChainComplex<Q> c = testing::random_complex(rng, 3, 3);
    ChainMap<Q> id{c, c, {}};
    for (int k = c.lo(); k <= c.hi(); ++k) id.components[k] = QM::identity(c.dim(k));
    ChainComplex<Q> cn = cone(id);
    for (int k = cn.lo(); k <= cn.hi(); ++k) CHECK(cn.cohomology_dim(k) == 0);

    // cone(C -> 0) is C shifted by one
    ChainComplex<Q> zero = ChainComplex<Q>::single(c.lo(), 0);
    ChainMap<Q> z{c, zero, {}};
    ChainComplex<Q> cz = cone(z);
    for (int k = c.lo(); k <= c.hi(); ++k) CHECK(cz.cohomology_dim(k - 1) == c.cohomology_dim(k));
  }
  ChainComplex<Q> q = ChainComplex<Q>::single(0, 1);
  ChainMap<Q> two{q, q, {{0, QM::from_rows({{2}})}}};
  ChainComplex<Q> c2 = cone(two);
  for (int k = c2.lo(); k <= c2.hi(); ++k) CHECK(c2.cohomology_dim(k) == 0);
}

TEST_CASE("cone is acyclic exactly for quasi-isomorphisms") {
  ChainComplex<Q> q = ChainComplex<Q>::single(0, 1);
  ChainComplex<Q> acyc(0, {1, 1}, {QM::identity(1)});
  // projection of Q -> Q (identity) onto Q in degree 0 is not a quasi-isomorphism
  ChainMap<Q> proj{acyc, q, {{0, QM::identity(1)}}};
  ChainComplex<Q> c = cone(proj);
  bool acyclic = true;
  for (int k = c.lo(); k <= c.hi(); ++k) acyclic = acyclic && c.cohomology_dim(k) == 0;
  CHECK(!acyclic);
  // zero map between acyclic complexes is one
  ChainMap<Q> z{acyc, acyc, {}};
  c = cone(z);
  acyclic = true;
  for (int k = c.lo(); k <= c.hi(); ++k) acyclic = acyclic && c.cohomology_dim(k) == 0;
  CHECK(acyclic);
}

TEST_CASE("totalization") {
  Bicomplex<Q> one;
  one.dims[{0, 0}] = 2;
  one.dims[{0, 1}] = 1;
  one.dv[{0, 0}] = QM::from_rows({{1, 1}});
  ChainComplex<Q> t = total(one);
  CHECK(t.cohomology_dim(0) == 1);
  CHECK(t.cohomology_dim(1) == 0);

  Bicomplex<Q> two;
  two.dims[{0, 0}] = 3;
  two.dims[{1, 0}] = 3;
  two.dh[{0, 0}] = QM::identity(3);
  t = total(two);
  for (int k = t.lo(); k <= t.hi(); ++k) CHECK(t.cohomology_dim(k) == 0);
}

TEST_CASE("iota invariants") {
  FieldPtr kf = ConjField::standard();
  using KM = Matrix<ConjElem>;
  ChainComplex<ConjElem> v = ChainComplex<ConjElem>::single(0, 1);
  SemilinearInvolution<ConjElem> conj{true, {{0, KM::identity(1)}}};
  auto r = iota_invariants(v, conj);
  CHECK(r.complex.dim(0) == 1);

  ChainComplex<ConjElem> v2 = ChainComplex<ConjElem>::single(0, 2);
  KM swap(2, 2);
  swap.set(0, 1, ConjElem(1));
  swap.set(1, 0, ConjElem(1));
  r = iota_invariants(v2, SemilinearInvolution<ConjElem>{true, {{0, swap}}});
  CHECK(r.complex.dim(0) == 2);
  CHECK(r.complex.dim(0) + r.minus_dims.at(0) == r.restricted_dims.at(0));

  ChainComplex<Q> c(0, {2, 1}, {QM::from_rows({{1, 0}})});
  auto id = iota_invariants(c, SemilinearInvolution<Q>{false, {{0, QM::identity(2)}, {1, QM::identity(1)}}});
  CHECK(id.complex.dim(0) == 2);
  CHECK(id.complex.cohomology_dim(0) == 1);
}

TEST_CASE("eigenspace dims of random involutions add up") {
  std::mt19937 rng(31);
  for (int n = 0; n < 50; ++n) {
    std::size_t dim = 1 + n % 6;
    QM j = testing::random_involution(rng, dim);
    REQUIRE(j * j == QM::identity(dim));
    ChainComplex<Q> c = ChainComplex<Q>::single(0, dim);
    auto r = iota_invariants(c, SemilinearInvolution<Q>{false, {{0, j}}});
    CHECK(r.complex.dim(0) + r.minus_dims.at(0) == dim);
  }
}

TEST_CASE("induced filtration") {
  ChainComplex<Q> c = ChainComplex<Q>::single(0, 3);
  FilteredComplex<Q> triv{c, 0, 0, {{QM::identity(3)}}};
  auto d = induced_filtration_dims(triv, 0);
  CHECK(d.front().second == 3);
  CHECK(d.back().second == 0);

  QM line = QM::from_rows({{1}, {0}, {0}});
  FilteredComplex<Q> two{c, 0, 1, {{QM::identity(3), line}}};
  d = induced_filtration_dims(two, 0);
  REQUIRE(d.size() == 3);
  CHECK(d[0].second == 3);
  CHECK(d[1].second == 1);
  CHECK(d[2].second == 0);

  // 0 -> Q^2 -> Q -> 0 with stupid filtration F^1 = degree >= 1
  ChainComplex<Q> dr(0, {2, 1}, {QM::from_rows({{1, 1}})});
  FilteredComplex<Q> stupid{dr, 0, 1, {{QM::identity(2), QM(2, 0)}, {QM::identity(1), QM::identity(1)}}};
  auto h0 = induced_filtration_dims(stupid, 0);
  CHECK(h0[0].second == 1);
  CHECK(h0[1].second == 0);
  auto h1 = induced_filtration_dims(stupid, 1);
  CHECK(h1[0].second == 0);
}
