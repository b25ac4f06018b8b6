#ifndef NCHODGE_UNIPOLY_HPP
#define NCHODGE_UNIPOLY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nchodge/rational.hpp"

namespace nchodge {

/// Univariate polynomial over Q. Coefficient i multiplies x^i; the
/// leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs);
  static UniPoly constant(const BigRational& c);
  static UniPoly monomial(const BigRational& c, int degree);
  static UniPoly x() { return monomial(BigRational(1), 1); }

  /// Parses expressions like "x^3 - 2", "2*x^2+3/2*x-1", "x - 1".
  static UniPoly parse(std::string_view text, char var = 'x');

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(int i) const;
  BigRational leading() const;

  BigRational eval(const BigRational& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const BigRational& s);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws ArithmeticError for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// Yun's algorithm: p = lc * prod_i s_i^i with s_i monic, squarefree and
/// pairwise coprime. Entries with s_i = 1 are omitted.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

}  // namespace nchodge

#endif  // NCHODGE_UNIPOLY_HPP
