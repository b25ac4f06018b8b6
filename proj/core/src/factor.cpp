#include "nchodge/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "nchodge/error.hpp"

namespace nchodge {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ZPoly = std::vector<BigInt>;
using FpPoly = std::vector<u64>;

// ---------------------------------------------------------------- F_p[x]

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 fp_pow(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e != 0) {
    if ((e & 1) != 0) r = static_cast<u64>(static_cast<u128>(r) * b % p);
    b = static_cast<u64>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

u64 fp_inv(u64 a, u64 p) { return fp_pow(a, p - 2, p); }

FpPoly fp_sub(FpPoly a, const FpPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  fp_trim(a);
  return a;
}

FpPoly fp_add(FpPoly a, const FpPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  fp_trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<u64>((static_cast<u128>(a[i]) * b[j] + r[i + j]) % p);
    }
  }
  fp_trim(r);
  return r;
}

// (quotient, remainder); divisor must be nonzero.
std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& d, u64 p) {
  fp_trim(a);
  if (a.size() < d.size()) return {{}, a};
  FpPoly q(a.size() - d.size() + 1, 0);
  const u64 li = fp_inv(d.back(), p);
  while (!a.empty() && a.size() >= d.size()) {
    size_t shift = a.size() - d.size();
    u64 f = static_cast<u64>(static_cast<u128>(a.back()) * li % p);
    q[shift] = f;
    for (size_t i = 0; i < d.size(); ++i) {
      u64 sub = static_cast<u64>(static_cast<u128>(f) * d[i] % p);
      a[i + shift] = (a[i + shift] + p - sub) % p;
    }
    fp_trim(a);
  }
  fp_trim(q);
  return {q, a};
}

FpPoly fp_monic(FpPoly a, u64 p) {
  if (a.empty()) return a;
  u64 li = fp_inv(a.back(), p);
  for (auto& c : a) c = static_cast<u64>(static_cast<u128>(c) * li % p);
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 li = fp_inv(r0.back(), p);
  for (auto& c : s0) c = static_cast<u64>(static_cast<u128>(c) * li % p);
  for (auto& c : t0) c = static_cast<u64>(static_cast<u128>(c) * li % p);
  fp_trim(s0);
  fp_trim(t0);
  return {s0, t0};
}

FpPoly fp_powmod(FpPoly base, BigInt e, const FpPoly& f, u64 p) {
  FpPoly r{1};
  base = fp_divmod(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()) != 0) r = fp_divmod(fp_mul(r, base, p), f, p).second;
    base = fp_divmod(fp_mul(base, base, p), f, p).second;
    e >>= 1;
  }
  return r;
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  FpPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = static_cast<u64>(static_cast<u128>(a[i]) * (i % p) % p);
  fp_trim(d);
  return d;
}

FpPoly to_fp(const ZPoly& f, u64 p) {
  FpPoly r(f.size());
  BigInt m;
  for (size_t i = 0; i < f.size(); ++i) {
    m = f[i] % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    r[i] = m.get_ui();
  }
  fp_trim(r);
  return r;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial modulo an odd prime. Deterministic under the
// fixed seed.
std::vector<FpPoly> fp_factor(FpPoly f, u64 p) {
  std::vector<std::pair<FpPoly, int>> ddf;
  FpPoly x{0, 1};
  FpPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = fp_powmod(h, BigInt(static_cast<unsigned long>(p)), f, p);
    FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
    if (g.size() > 1) {
      ddf.emplace_back(g, d);
      f = fp_divmod(f, g, p).first;
      h = fp_divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) ddf.emplace_back(fp_monic(f, p), static_cast<int>(f.size()) - 1);

  std::mt19937_64 rng(0x5eedULL);
  std::vector<FpPoly> out;
  for (auto& [g0, d] : ddf) {
    std::vector<FpPoly> stack{g0};
    BigInt pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    BigInt e = (pd - 1) / 2;
    while (!stack.empty()) {
      FpPoly g = std::move(stack.back());
      stack.pop_back();
      if (static_cast<int>(g.size()) - 1 == d) {
        out.push_back(fp_monic(g, p));
        continue;
      }
      for (;;) {
        FpPoly a(g.size() - 1);
        for (auto& c : a) c = rng() % p;
        fp_trim(a);
        if (a.size() <= 1) continue;
        FpPoly b = fp_sub(fp_powmod(a, e, g, p), FpPoly{1}, p);
        FpPoly s = fp_gcd(g, b, p);
        if (s.size() > 1 && s.size() < g.size()) {
          stack.push_back(fp_divmod(g, s, p).first);
          stack.push_back(s);
          break;
        }
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ Z[x] mod m

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  z_trim(r);
  return r;
}

void z_mod(ZPoly& a, const BigInt& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  z_trim(a);
}

// Symmetric representative in (-m/2, m/2].
void z_symmetric(ZPoly& a, const BigInt& m) {
  BigInt half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  z_trim(a);
}

ZPoly from_fp(const FpPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = BigInt(static_cast<unsigned long>(a[i]));
  return r;
}

// Exact division a / b over Z for monic b; returns false if not exact.
bool z_divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly r = a;
  if (r.size() < b.size()) return false;
  ZPoly q(r.size() - b.size() + 1, BigInt(0));
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    BigInt f = r.back();  // b monic
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    z_trim(r);
  }
  if (!r.empty()) return false;
  z_trim(q);
  quotient = std::move(q);
  return true;
}

// Lifts F = g*h (mod p), g and h monic, to a factorization mod p^k.
void hensel_two(const ZPoly& F, ZPoly& g, ZPoly& h, u64 p, int k) {
  auto [s, t] = fp_bezout(to_fp(g, p), to_fp(h, p), p);
  BigInt pm(static_cast<unsigned long>(p));
  const BigInt bp(static_cast<unsigned long>(p));
  for (int m = 1; m < k; ++m) {
    ZPoly gh = z_mul(g, h);
    ZPoly diff = F;
    if (gh.size() > diff.size()) diff.resize(gh.size(), BigInt(0));
    for (size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) c /= pm;  // exact
    FpPoly e = to_fp(diff, p);
    FpPoly es = fp_mul(e, s, p);
    FpPoly hp = to_fp(h, p);
    auto [q, r] = fp_divmod(es, hp, p);
    FpPoly dg = fp_add(fp_mul(e, t, p), fp_mul(q, to_fp(g, p), p), p);
    ZPoly dgz = from_fp(dg), dhz = from_fp(r);
    if (dgz.size() > g.size()) g.resize(dgz.size(), BigInt(0));
    for (size_t i = 0; i < dgz.size(); ++i) g[i] += pm * dgz[i];
    if (dhz.size() > h.size()) h.resize(dhz.size(), BigInt(0));
    for (size_t i = 0; i < dhz.size(); ++i) h[i] += pm * dhz[i];
    pm *= bp;
    z_mod(g, pm);
    z_mod(h, pm);
  }
}

// Lifts F = prod(factors) (mod p) to mod p^k by recursive splitting.
std::vector<ZPoly> hensel_multi(const ZPoly& F, const std::vector<FpPoly>& factors, u64 p,
                                int k, const BigInt& modulus) {
  if (factors.size() == 1) {
    ZPoly f = F;
    z_mod(f, modulus);
    return {f};
  }
  size_t half = factors.size() / 2;
  FpPoly a{1}, b{1};
  for (size_t i = 0; i < half; ++i) a = fp_mul(a, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) b = fp_mul(b, factors[i], p);
  ZPoly g = from_fp(a), h = from_fp(b);
  hensel_two(F, g, h, p, k);
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  auto out = hensel_multi(g, left, p, k, modulus);
  auto rest = hensel_multi(h, right, p, k, modulus);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Factors a monic squarefree integer polynomial of degree >= 2 over Z.
std::vector<ZPoly> zassenhaus_monic(const ZPoly& F) {
  const int n = static_cast<int>(F.size()) - 1;
  // Choose the good prime with the fewest modular factors among the first few.
  u64 best_p = 0;
  std::vector<FpPoly> best;
  int good = 0;
  for (u64 p = 3; good < 8 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    FpPoly fp = to_fp(F, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (fp_gcd(fp, fp_derivative(fp, p), p).size() != 1) continue;
    ++good;
    auto fac = fp_factor(fp, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw ArithmeticError("no good prime found for factorization");
  if (best.size() == 1) return {F};

  // Coefficient bound for monic factors: 2^n * ||F||_2 suffices.
  BigInt norm2(0);
  for (const auto& c : F) norm2 += c * c;
  BigInt norm = sqrt(norm2) + 1;
  BigInt bound = norm;
  bound <<= static_cast<unsigned long>(n);
  BigInt modulus(static_cast<unsigned long>(best_p));
  int k = 1;
  while (modulus <= 2 * bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_multi(F, best, best_p, k, modulus);

  std::vector<ZPoly> result;
  ZPoly rest = F;
  size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    std::vector<int> idx(subset);
    for (size_t i = 0; i < subset; ++i) idx[i] = static_cast<int>(i);
    const int r = static_cast<int>(lifted.size());
    for (;;) {
      ZPoly cand{BigInt(1)};
      for (int i : idx) {
        cand = z_mul(cand, lifted[static_cast<size_t>(i)]);
        z_mod(cand, modulus);
      }
      z_symmetric(cand, modulus);
      ZPoly q;
      if (z_divides(rest, cand, q)) {
        result.push_back(cand);
        rest = q;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          lifted.erase(lifted.begin() + *it);
        }
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(subset) - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == r - static_cast<int>(subset) + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < subset; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

// Primitive integer polynomial proportional to p with positive leading term.
ZPoly primitive_integer(const UniPoly& p) {
  BigInt den(1);
  for (const auto& c : p.coeffs()) den = lcm(den, c.denominator());
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.numerator() * (den / c.denominator()));
  BigInt g(0);
  for (const auto& c : z) g = gcd(g, c);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

UniPoly to_rational(const ZPoly& z) {
  std::vector<BigRational> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return UniPoly(std::move(c));
}

std::vector<UniPoly> factor_squarefree(const UniPoly& s) {
  if (s.degree() <= 1) return {s.monic()};
  ZPoly f = primitive_integer(s);
  const int n = static_cast<int>(f.size()) - 1;
  const BigInt lc = f.back();
  // F(x) = lc^(n-1) f(x / lc) is monic with integer coefficients.
  ZPoly F(f.size());
  BigInt power(1);
  for (int i = n - 1; i >= 0; --i) {
    F[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] * power;
    power *= lc;
  }
  F[static_cast<size_t>(n)] = 1;
  std::vector<UniPoly> out;
  for (const ZPoly& G : zassenhaus_monic(F)) {
    // g(x) = G(lc * x), then primitive part.
    ZPoly g(G.size());
    BigInt pw(1);
    for (size_t i = 0; i < G.size(); ++i) {
      g[i] = G[i] * pw;
      pw *= lc;
    }
    out.push_back(to_rational(g).monic());
  }
  return out;
}

bool coeff_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<PolyFactor> factor_rational_poly(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInputError("cannot factor the zero polynomial");
  std::vector<PolyFactor> out;
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    for (auto& f : factor_squarefree(s)) out.push_back({std::move(f), mult});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return coeff_less(a.factor, b.factor);
  });
  return out;
}

bool is_irreducible(const UniPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_rational_poly(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int real_root_count(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInputError("real root count of the zero polynomial");
  if (p.degree() < 1) throw InvalidInputError("real root count needs degree >= 1");
  UniPoly s = squarefree_part(p);
  auto chain = sturm_chain(s);
  std::vector<int> at_pos, at_neg;
  for (const auto& q : chain) {
    int lead = q.leading().sign();
    at_pos.push_back(lead);
    at_neg.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

Signature signature_from_minpoly(const UniPoly& p) {
  if (p.degree() < 1) throw InvalidInputError("minimal polynomial must have degree >= 1");
  auto f = factor_rational_poly(p);
  if (f.size() != 1 || f[0].multiplicity != 1) {
    throw InvalidInputError("polynomial " + p.to_string() + " is reducible; nontrivial factor " +
                            f[0].factor.to_string());
  }
  int r1 = real_root_count(p);
  return {r1, (p.degree() - r1) / 2};
}

}  // namespace nchodge
