#include <random>

#include "doctest.h"
#include "nchodge/conjfield.hpp"
#include "nchodge/error.hpp"
#include "nchodge/factor.hpp"

using namespace nchodge;

namespace {

UniPoly P(const char* s) { return UniPoly::parse(s); }

UniPoly product_of(const std::vector<PolyFactor>& fs) {
  UniPoly out = UniPoly::constant(BigRational(1));
  for (const auto& f : fs) {
    for (int k = 0; k < f.multiplicity; ++k) out = out * f.factor;
  }
  return out;
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  BigRational a(BigInt(6), BigInt(-4));
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(BigRational(2, 3).inv() == BigRational(3, 2));
  CHECK(BigRational::parse("-10/4") == BigRational(-5, 2));
  CHECK_THROWS_AS(BigRational(0).inv(), ArithmeticError);
  CHECK_THROWS_AS(BigRational::parse("1/0"), Error);
  CHECK_THROWS_AS(BigRational::parse("abc"), InvalidInputError);
}

TEST_CASE("conjugation-closed field") {
  FieldPtr k = ConjField::standard();
  ConjElem i = k->imaginary_unit(), t = k->gen(0);
  CHECK((i * t).conj() == -(i * t));
  CHECK((t * t).is_real());
  CHECK(!(i * t).is_real());
  CHECK(ConjElem(BigRational(2, 3)).inv() == ConjElem(BigRational(3, 2)));
  CHECK(i * i == ConjElem(-1));
  ConjElem z = (t + i) / (t - i);
  CHECK(z * (t - i) == t + i);
  CHECK(z.real_part() + i * z.imag_part() == z);
  CHECK(z.real_part().is_real());
  CHECK(pow(i * t, 2) == -(t * t));
}

TEST_CASE("conjugation is an involutive ring automorphism") {
  FieldPtr k = ConjField::standard();
  ConjElem i = k->imaginary_unit(), t = k->gen(0);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  auto random_elem = [&] {
    ConjElem num = ConjElem(d(rng)) + ConjElem(d(rng)) * i + ConjElem(d(rng)) * t + ConjElem(d(rng)) * i * t * t;
    ConjElem den = ConjElem(1) + ConjElem(d(rng)) * t * t;
    return den.is_zero() ? num : num / den;
  };
  for (int n = 0; n < 40; ++n) {
    ConjElem x = random_elem(), y = random_elem();
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("Sturm counts") {
  CHECK(real_root_count(P("x^2 - 2")) == 2);
  CHECK(real_root_count(P("x^2 + 1")) == 0);
  CHECK(real_root_count(P("x^3 - 2")) == 1);
  CHECK(real_root_count(P("x - 1")) == 1);
  CHECK_THROWS_AS(real_root_count(P("3")), InvalidInputError);
}

TEST_CASE("Sturm count is additive on coprime squarefree products") {
  std::vector<UniPoly> ps = {P("x^2 - 2"), P("x^2 + 1"), P("x^3 - 2"), P("x^3 - 3*x + 1"), P("x - 5"), P("x^4 + 2")};
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      CHECK(real_root_count(ps[a] * ps[b]) == real_root_count(ps[a]) + real_root_count(ps[b]));
    }
  }
}

TEST_CASE("signatures") {
  CHECK(signature_from_minpoly(P("x - 1")) == Signature{1, 0});
  CHECK(signature_from_minpoly(P("x^2 + 1")) == Signature{0, 1});
  CHECK(signature_from_minpoly(P("x^3 - 2")) == Signature{1, 1});
  for (const char* s : {"x^2 - 2", "x^3 - 3*x + 1", "x^4 + 1", "x^5 - x - 1", "x^4 - 10*x^2 + 1"}) {
    UniPoly p = P(s);
    REQUIRE(is_irreducible(p));
    Signature sig = signature_from_minpoly(p);
    CHECK(sig.r1 + 2 * sig.r2 == p.degree());
  }
}

TEST_CASE("factorization over Q") {
  auto f = factor_rational_poly(P("x^4 - 1"));
  REQUIRE(f.size() == 3);
  CHECK(f[0].factor == P("x - 1"));
  CHECK(f[1].factor == P("x + 1"));
  CHECK(f[2].factor == P("x^2 + 1"));

  f = factor_rational_poly(P("x^3 - 1"));
  REQUIRE(f.size() == 2);
  CHECK(f[1].factor == P("x^2 + x + 1"));

  f = factor_rational_poly(P("x^4 - 4*x^2 + 4"));
  REQUIRE(f.size() == 1);
  CHECK(f[0].factor == P("x^2 - 2"));
  CHECK(f[0].multiplicity == 2);

  CHECK(is_irreducible(P("x^4 + 1")));
  CHECK(!is_irreducible(P("x^4 + 4")));  // (x^2+2x+2)(x^2-2x+2)
  CHECK_THROWS_AS(factor_rational_poly(UniPoly()), InvalidInputError);
}

TEST_CASE("factorization re-multiplies to the input") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-5, 5), deg(1, 3);
  for (int n = 0; n < 30; ++n) {
    UniPoly p = UniPoly::constant(BigRational(1));
    int parts = 1 + n % 3;
    for (int k = 0; k < parts; ++k) {
      std::vector<BigRational> co;
      int d = deg(rng);
      for (int i = 0; i < d; ++i) co.emplace_back(c(rng));
      co.emplace_back(1);
      p = p * UniPoly(co);
    }
    auto fs = factor_rational_poly(p);
    CHECK(product_of(fs) == p.monic());
    for (const auto& f : fs) CHECK(is_irreducible(f.factor));
  }
}
