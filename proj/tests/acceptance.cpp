// Acceptance suite: one PASS/FAIL line per criterion, with wall time.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "nchodge/cyclic.hpp"
#include "nchodge/hodge.hpp"
#include "nchodge/verify.hpp"
#include "random_objects.hpp"

using namespace nchodge;

namespace {

// Independent oracle: Borel's table written out case by case.
std::size_t borel_oracle(int r1, int r2, int i) {
  if (i == 0) return 1;
  if (i == 1) return static_cast<std::size_t>(r1 + r2 - 1);
  if (i % 2 == 0) return 0;
  return static_cast<std::size_t>((i - 1) % 4 == 0 ? r1 + r2 : r2);
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

bool run(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) o.fail("time " + std::to_string(s) + " s over the " + std::to_string(limit_s) + " s budget");
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
            << std::setprecision(2) << s << " s)";
  if (!o.ok) std::cout << " -- " << o.note.str();
  std::cout << std::endl;
  return o.ok;
}

void criterion1(Outcome& o) {
  const std::vector<std::pair<int, int>> sigs{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};
  for (auto [r1, r2] : sigs) {
    HodgeComplex v = spec_field(r1, r2);
    for (int i = 2; i <= 13; ++i) {
      std::size_t sum = 0;
      // Hom complexes of points live in degrees 0 and 1, so 2j - i in {0, 1}.
      for (int j = i / 2 - 1; j <= i / 2 + 2; ++j) {
        int deg = 2 * j - i;
        sum += deligne_dims(v, j, deg, deg).at(deg).fixed.value_or(0);
      }
      if (sum != borel_oracle(r1, r2, i)) {
        o.fail("(" + std::to_string(r1) + "," + std::to_string(r2) + ") i=" + std::to_string(i) + " got " +
               std::to_string(sum));
      }
    }
  }
}

void criterion2(Outcome& o) {
  struct Field {
    const char* poly;
    int r1, r2;
  };
  for (Field f : {Field{"x-1", 1, 0}, Field{"x^2-2", 2, 0}, Field{"x^2+1", 0, 1}, Field{"x^3-2", 1, 1}}) {
    VerifyOptions opt;
    TriangleReport r = verify_triangle(number_field(UniPoly::parse(f.poly)), opt);
    std::size_t u = static_cast<std::size_t>(f.r1 + f.r2);
    std::array<std::size_t, 3> e0{1, u, u - 1}, e1{u - 1, u, 1};
    if (!r.degree0 || *r.degree0 != e0) o.fail(std::string(f.poly) + ": degree-0 sequence");
    if (!r.degree1 || *r.degree1 != e1) o.fail(std::string(f.poly) + ": degree-1 sequence");
    if (r.delta_rank != std::size_t{0}) o.fail(std::string(f.poly) + ": delta rank");
  }
}

void hp_agree(Outcome& o, const FDAlgebra& a, const FDAlgebra& b, int N) {
  auto ta = hc_hcminus_hp_dims(a, N).hp;
  auto tb = hc_hcminus_hp_dims(b, N).hp;
  int compared = 0;
  for (int n = -2; n <= 3; ++n) {
    if (!ta.is_stable(n) || !tb.is_stable(n)) continue;
    ++compared;
    if (ta.at(n) != tb.at(n)) o.fail(a.name + " vs " + b.name + " at degree " + std::to_string(n));
  }
  if (compared < 4) o.fail(a.name + ": only " + std::to_string(compared) + " stable degrees");
}

void criterion4(Outcome& o) {
  struct Case {
    FDAlgebra a;
    std::size_t center;  // class count / center dimension, known by hand
    int N;
  };
  std::vector<Case> cases{{full_matrix(2), 1, 6},
                          {cyclic_group_algebra(3), 3, 6},
                          {symmetric_group_algebra(3), 3, 4},
                          {quaternion(BigRational(-1), BigRational(-1)), 1, 6}};
  for (const auto& c : cases) {
    auto hp = hc_hcminus_hp_dims(c.a, c.N).hp;
    int compared = 0;
    for (const auto& [n, d] : hp.dims) {
      if (!hp.is_stable(n)) continue;
      ++compared;
      std::size_t expect = n % 2 == 0 ? c.center : 0;
      if (d != expect) o.fail(c.a.name + " degree " + std::to_string(n));
    }
    if (compared < 4) o.fail(c.a.name + ": stable range too short");
  }
}

void criterion5(Outcome& o) {
  const int N = 5;
  auto m = hc_hcminus_hp_dims(full_matrix(2), N);
  auto q = hc_hcminus_hp_dims(trivial_algebra(), N);
  int compared = 0;
  for (int k = 0; k <= N - 1; ++k) {
    ++compared;
    if (m.hh.at(k) != q.hh.at(k)) o.fail("HH degree " + std::to_string(k));
  }
  for (int n = -2; n <= N - 1; ++n) {
    if (!m.hp.is_stable(n) || !q.hp.is_stable(n)) continue;
    ++compared;
    if (m.hp.at(n) != q.hp.at(n)) o.fail("HP degree " + std::to_string(n));
  }
  if (compared < 8) o.fail("too few stable degrees");
}

void criterion6(Outcome& o) {
  KComplex k = kato_hom_complex(make_tate(1)).raw;
  if (k.cohomology_dim(1) != 1) o.fail("H^1 of the Kato complex of R(1)");
  if (k.cohomology_dim(0) != 0) o.fail("H^0 of the Kato complex of R(1)");
  std::vector<HodgeComplex> weight0{make_tate(0),     spec_field(1, 0), spec_field(2, 0),
                                    spec_field(0, 1), spec_field(1, 1), spec_field(0, 2)};
  for (const auto& v : weight0) {
    for (int j = -2; j <= 4; ++j) {
      auto dims = abs_hodge_dims(v, j, -2, 10);
      for (int i = -2; i <= 10; ++i) {
        if (i > 2 * j && dims.at(i).raw != 0) o.fail(v.label + " j=" + std::to_string(j) + " i=" + std::to_string(i));
      }
    }
  }
}

void criterion7(Outcome& o) {
  const std::vector<std::string> names{"Q",        "number_field:x^2-2", "number_field:x^2+1", "number_field:x^2+2",
                                       "group:C3", "group:S3",           "upper_triangular:2", "dual_numbers",
                                       "full_matrix:2", "quaternion:-1,-1"};
  int direct = 0;
  for (const auto& name : names) {
    VerifyOptions opt;
    opt.imax = 9;
    opt.paths = PathChoice::Both;
    TriangleReport r = verify_triangle(preset(name), opt);
    if (!r.pass) o.fail(name + ": " + r.verdict());
    if (r.direct_run) {
      ++direct;
      if (!r.paths_agree) o.fail(name + ": reduced and direct paths disagree");
    }
  }
  if (direct == 0) o.fail("direct path never ran");
}

void criterion8(Outcome& o) {
  std::mt19937 rng(8);
  for (int n = 0; n < 200; ++n) {
    auto c = testing::random_complex(rng, 2 + n % 4, 5);
    for (int k = c.lo(); k + 1 < c.hi(); ++k) {
      if (!(c.d(k + 1) * c.d(k)).is_zero()) o.fail("d^2 != 0");
    }
  }
  for (int n = 0; n < 100; ++n) {
    auto m = testing::random_matrix(rng, 1 + n % 8, 1 + (n * 3) % 8, -9, 9, 0.6);
    if (bareiss_rank(m) != naive_rank(m)) o.fail("Bareiss and naive rank differ");
  }
  for (int n = 0; n < 20; ++n) {
    auto c = testing::random_complex(rng, 3, 4);
    ChainMap<BigRational> id{c, c, {}};
    for (int k = c.lo(); k <= c.hi(); ++k) id.components[k] = QMatrix::identity(c.dim(k));
    auto cn = cone(id);
    for (int k = cn.lo(); k <= cn.hi(); ++k) {
      if (cn.cohomology_dim(k) != 0) o.fail("cone(id) not acyclic");
    }
  }
  for (int n = 0; n < 50; ++n) {
    std::size_t dim = 1 + n % 6;
    auto j = testing::random_involution(rng, dim);
    auto r = iota_invariants(ChainComplex<BigRational>::single(0, dim), SemilinearInvolution<BigRational>{false, {{0, j}}});
    if (r.complex.dim(0) + r.minus_dims.at(0) != dim) o.fail("eigenspace dims do not add up");
  }
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "Borel-Deligne bridge", 10, criterion1);
  failed += !run(2, "Dirichlet sequences for number fields", 10, criterion2);
  failed += !run(3, "Goodwillie: HP invariant under nilpotent extensions", 4 * 60, [](Outcome& o) {
    const std::vector<std::pair<FDAlgebra, FDAlgebra>> pairs{
        {dual_numbers(), trivial_algebra()},
        {truncated_poly(3), trivial_algebra()},
        {upper_triangular(2), product({trivial_algebra(), trivial_algebra()})},
        {upper_triangular(3), product({trivial_algebra(), trivial_algebra(), trivial_algebra()})}};
    for (const auto& [a, b] : pairs) {
      auto t0 = std::chrono::steady_clock::now();
      hp_agree(o, a, b, 6);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (s > 60) o.fail(a.name + " took " + std::to_string(s) + " s");
    }
  });
  failed += !run(4, "semisimple HP equals the center in even degrees", 120, criterion4);
  failed += !run(5, "Morita invariance of HH and HP", 60, criterion5);
  failed += !run(6, "Hodge calibration and vanishing", 5, criterion6);
  failed += !run(7, "triangle verification across the test family", 5 * 60, criterion7);
  failed += !run(8, "engine properties", 30, criterion8);
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
