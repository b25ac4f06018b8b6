#ifndef NCHODGE_CONJFIELD_HPP
#define NCHODGE_CONJFIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nchodge/rational.hpp"

namespace nchodge {

/// a + b*i with a, b rational.
struct GaussRat {
  BigRational re, im;

  GaussRat() = default;
  GaussRat(BigRational r, BigRational i = BigRational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_one() const { return re.is_one() && im.is_zero(); }
  GaussRat conj() const { return {re, -im}; }
  GaussRat inv() const;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussRat&, const GaussRat&) = default;
  std::string to_string() const;
};

/// Exponent vector with trailing zeros trimmed, so std::vector's
/// lexicographic order is the lex monomial order (generator 0 highest).
using Monomial = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial over Q(i).
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const GaussRat& c);
  static MPoly generator(size_t index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRat constant_value() const;  // requires is_constant()
  const std::map<Monomial, GaussRat>& terms() const { return terms_; }
  GaussRat leading_coeff() const;
  size_t max_var_plus_one() const;
  int degree_in(size_t var) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const GaussRat& c) const;
  MPoly operator-() const { return scaled(GaussRat(BigRational(-1))); }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Exact quotient; throws ArithmeticError if b does not divide a.
  static MPoly exact_div(const MPoly& a, const MPoly& b);
  /// Monic (lex leading coefficient 1) gcd; gcd(0, 0) = 0.
  static MPoly gcd(const MPoly& a, const MPoly& b);

  /// Applies coefficient conjugation and negates imaginary generators.
  MPoly conj(const std::vector<bool>& imaginary) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const GaussRat& c);
  std::map<Monomial, GaussRat> terms_;
};

class ConjElem;

/// Q(i)(t_1..t_m) with conjugation fixing real generators and negating
/// imaginary ones and i. The fixed field K0 consists of the elements
/// equal to their conjugate.
class ConjField : public std::enable_shared_from_this<ConjField> {
 public:
  enum class Reality { Real, Imaginary };
  struct Generator {
    std::string name;
    Reality reality = Reality::Real;
  };

  static std::shared_ptr<const ConjField> make(std::vector<Generator> gens);
  /// Q(i)(t) with t real: 2*pi is modeled by t, 2*pi*i by i*t.
  static std::shared_ptr<const ConjField> standard();

  size_t num_generators() const { return gens_.size(); }
  const Generator& generator(size_t k) const { return gens_.at(k); }
  const std::vector<bool>& imaginary_mask() const { return imaginary_; }
  std::vector<std::string> names() const;
  bool same_as(const ConjField& o) const;

  ConjElem zero() const;
  ConjElem one() const;
  ConjElem imaginary_unit() const;
  ConjElem gen(size_t k) const;
  ConjElem from_rational(const BigRational& q) const;
  ConjElem from_gauss(const GaussRat& g) const;

 private:
  explicit ConjField(std::vector<Generator> gens);
  std::vector<Generator> gens_;
  std::vector<bool> imaginary_;
};

using FieldPtr = std::shared_ptr<const ConjField>;

/// Element of a ConjField kept as a reduced fraction num/den with den of
/// lex leading coefficient 1. A default-constructed or integer-constructed
/// element carries no field and combines with elements of any field.
class ConjElem {
 public:
  ConjElem() : den_(GaussRat(BigRational(1))) {}
  ConjElem(int v) : num_(GaussRat(BigRational(v))), den_(GaussRat(BigRational(1))) {  // NOLINT
    if (v == 0) num_ = MPoly();
  }
  ConjElem(const BigRational& q);  // NOLINT(google-explicit-constructor)
  ConjElem(FieldPtr field, MPoly num, MPoly den);

  const FieldPtr& field() const { return field_; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  ConjElem inv() const;
  ConjElem conj() const;
  bool is_real() const { return conj() == *this; }
  /// (x + conj x) / 2 and (x - conj x) / (2i); both lie in K0.
  ConjElem real_part() const;
  ConjElem imag_part() const;

  ConjElem& operator+=(const ConjElem& o);
  ConjElem& operator-=(const ConjElem& o);
  ConjElem& operator*=(const ConjElem& o);
  ConjElem& operator/=(const ConjElem& o);
  friend ConjElem operator+(ConjElem a, const ConjElem& b) { return a += b; }
  friend ConjElem operator-(ConjElem a, const ConjElem& b) { return a -= b; }
  friend ConjElem operator*(ConjElem a, const ConjElem& b) { return a *= b; }
  friend ConjElem operator/(ConjElem a, const ConjElem& b) { return a /= b; }
  ConjElem operator-() const;
  friend bool operator==(const ConjElem& a, const ConjElem& b);

  std::string to_string() const;

 private:
  void normalize();
  static FieldPtr merge(const FieldPtr& a, const FieldPtr& b);
  FieldPtr field_;
  MPoly num_, den_;
};

/// Integer power, negative exponents allowed for nonzero bases.
ConjElem pow(const ConjElem& x, int e);

}  // namespace nchodge

#endif  // NCHODGE_CONJFIELD_HPP
