#include "nchodge/conjfield.hpp"

#include <algorithm>
#include <sstream>

#include "nchodge/error.hpp"

namespace nchodge {

// ------------------------------------------------------------------ GaussRat

GaussRat GaussRat::inv() const {
  BigRational n = re * re + im * im;
  if (n.is_zero()) throw ArithmeticError("inverse of zero");
  return {re / n, -im / n};
}

std::string GaussRat::to_string() const {
  if (im.is_zero()) return re.to_short_string();
  if (re.is_zero()) return (im.is_one() ? std::string() : im.to_short_string() + "*") + "i";
  return "(" + re.to_short_string() + (im.sign() < 0 ? "-" : "+") +
         (im.abs().is_one() ? std::string() : im.abs().to_short_string() + "*") + "i)";
}

// -------------------------------------------------------------------- MPoly

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + a[i]);
  for (size_t i = 0; i < b.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + b[i]);
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  if (d.size() > m.size()) return false;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r = m;
  for (size_t i = 0; i < d.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] - d[i]);
  trim(r);
  return r;
}

std::uint16_t exp_of(const Monomial& m, size_t var) { return var < m.size() ? m[var] : 0; }

// Univariate view in `var`: coefficient k multiplies var^k.
std::vector<MPoly> as_univariate(const MPoly& p, size_t var) {
  std::vector<MPoly> out(static_cast<size_t>(std::max(0, p.degree_in(var))) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    std::uint16_t e = exp_of(m, var);
    if (var < rest.size()) rest[var] = 0;
    trim(rest);
    MPoly t(c);
    MPoly mono;
    // Rebuild rest monomial as polynomial.
    MPoly term(GaussRat(BigRational(1)));
    for (size_t v = 0; v < rest.size(); ++v) {
      for (std::uint16_t k = 0; k < rest[v]; ++k) term = term * MPoly::generator(v);
    }
    out[e] += term * t;
  }
  return out;
}

MPoly from_univariate(const std::vector<MPoly>& coeffs, size_t var) {
  MPoly out, power(GaussRat(BigRational(1)));
  const MPoly x = MPoly::generator(var);
  for (const auto& c : coeffs) {
    out += c * power;
    power = power * x;
  }
  return out;
}

void trim_uni(std::vector<MPoly>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

MPoly content_in(const MPoly& p, size_t var) {
  MPoly g;
  for (const auto& c : as_univariate(p, var)) {
    if (c.is_zero()) continue;
    g = MPoly::gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of univariate polynomials over a domain.
std::vector<MPoly> prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
  trim_uni(a);
  const MPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    MPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim_uni(a);
  }
  return a;
}

}  // namespace

MPoly::MPoly(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::generator(size_t index) {
  MPoly p;
  Monomial m(index + 1, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), GaussRat(BigRational(1)));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussRat MPoly::constant_value() const {
  if (terms_.empty()) return {};
  return terms_.begin()->second;
}

GaussRat MPoly::leading_coeff() const {
  if (terms_.empty()) return {};
  return terms_.rbegin()->second;
}

size_t MPoly::max_var_plus_one() const {
  size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

int MPoly::degree_in(size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(exp_of(m, var)));
  return d;
}

void MPoly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  }
  return r;
}

MPoly MPoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  MPoly r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

MPoly MPoly::exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (b.is_constant()) return a.scaled(b.constant_value().inv());
  MPoly q, r = a;
  const auto& [lm, lc] = *b.terms_.rbegin();
  const GaussRat lci = lc.inv();
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms_.rbegin();
    if (!mono_divides(lm, rm)) throw ArithmeticError("inexact multivariate division");
    MPoly t;
    t.terms_.emplace(mono_div(rm, lm), rc * lci);
    q += t;
    r -= t * b;
  }
  return q;
}

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
  auto monic = [](const MPoly& p) {
    return p.is_zero() ? p : p.scaled(p.leading_coeff().inv());
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MPoly(GaussRat(BigRational(1)));
  size_t nv = std::max(a.max_var_plus_one(), b.max_var_plus_one());
  size_t var = nv;
  for (size_t v = nv; v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = v;
      break;
    }
  }
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  MPoly ca = content_in(a, var), cb = content_in(b, var);
  MPoly c = gcd(ca, cb);
  std::vector<MPoly> ua = as_univariate(exact_div(a, ca), var);
  std::vector<MPoly> ub = as_univariate(exact_div(b, cb), var);
  trim_uni(ua);
  trim_uni(ub);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    std::vector<MPoly> r = prem(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = {MPoly(GaussRat(BigRational(1)))};
      break;
    }
    MPoly rp = from_univariate(r, var);
    rp = exact_div(rp, content_in(rp, var));
    ua = std::move(ub);
    ub = as_univariate(rp, var);
    trim_uni(ub);
  }
  MPoly g = from_univariate(ub, var);
  g = exact_div(g, content_in(g, var));
  return monic(c * g);
}

MPoly MPoly::conj(const std::vector<bool>& imaginary) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    int odd = 0;
    for (size_t v = 0; v < m.size() && v < imaginary.size(); ++v) {
      if (imaginary[v] && (m[v] % 2) == 1) odd ^= 1;
    }
    GaussRat cc = c.conj();
    r.terms_.emplace(m, odd != 0 ? -cc : cc);
  }
  return r;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    GaussRat c = it->second;
    const Monomial& m = it->first;
    // Pull a sign out of purely real or purely imaginary coefficients.
    bool neg = (c.im.is_zero() && c.re.sign() < 0) || (c.re.is_zero() && c.im.sign() < 0);
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    if (m.empty() || !c.is_one()) factors.push_back(c.to_string());
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      std::string f = v < names.size() ? names[v] : "x" + std::to_string(v);
      if (m[v] > 1) f += "^" + std::to_string(m[v]);
      factors.push_back(f);
    }
    for (size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

// ---------------------------------------------------------------- ConjField

ConjField::ConjField(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (const auto& g : gens_) imaginary_.push_back(g.reality == Reality::Imaginary);
}

std::shared_ptr<const ConjField> ConjField::make(std::vector<Generator> gens) {
  return std::shared_ptr<const ConjField>(new ConjField(std::move(gens)));
}

std::shared_ptr<const ConjField> ConjField::standard() {
  static const auto field = make({{"t", Reality::Real}});
  return field;
}

std::vector<std::string> ConjField::names() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

bool ConjField::same_as(const ConjField& o) const {
  if (this == &o) return true;
  if (gens_.size() != o.gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name != o.gens_[i].name || gens_[i].reality != o.gens_[i].reality) return false;
  }
  return true;
}

ConjElem ConjField::zero() const {
  return {shared_from_this(), MPoly(), MPoly(GaussRat(BigRational(1)))};
}
ConjElem ConjField::one() const { return from_rational(BigRational(1)); }
ConjElem ConjField::imaginary_unit() const {
  return from_gauss(GaussRat(BigRational(0), BigRational(1)));
}
ConjElem ConjField::gen(size_t k) const {
  if (k >= gens_.size()) throw InvalidInputError("generator index out of range");
  return {shared_from_this(), MPoly::generator(k), MPoly(GaussRat(BigRational(1)))};
}
ConjElem ConjField::from_rational(const BigRational& q) const { return from_gauss(GaussRat(q)); }
ConjElem ConjField::from_gauss(const GaussRat& g) const {
  return {shared_from_this(), MPoly(g), MPoly(GaussRat(BigRational(1)))};
}

// ----------------------------------------------------------------- ConjElem

ConjElem::ConjElem(const BigRational& q) : num_(GaussRat(q)), den_(GaussRat(BigRational(1))) {}

ConjElem::ConjElem(FieldPtr field, MPoly num, MPoly den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("fraction with zero denominator");
  if (field_) {
    size_t nv = std::max(num_.max_var_plus_one(), den_.max_var_plus_one());
    if (nv > field_->num_generators()) throw InvalidInputError("monomial outside the field");
  }
  normalize();
}

void ConjElem::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(GaussRat(BigRational(1)));
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = MPoly::exact_div(num_, g);
      den_ = MPoly::exact_div(den_, g);
    }
  }
  GaussRat lc = den_.leading_coeff();
  if (!lc.is_one()) {
    GaussRat li = lc.inv();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

FieldPtr ConjElem::merge(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_as(*b)) return a;
  throw FieldMismatchError("operands belong to different fields");
}

bool ConjElem::is_one() const { return num_ == den_; }

ConjElem ConjElem::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  ConjElem r;
  r.field_ = field_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

ConjElem ConjElem::conj() const {
  ConjElem r;
  r.field_ = field_;
  static const std::vector<bool> none;
  const auto& mask = field_ ? field_->imaginary_mask() : none;
  r.num_ = num_.conj(mask);
  r.den_ = den_.conj(mask);
  r.normalize();
  return r;
}

ConjElem ConjElem::real_part() const {
  return (*this + conj()) * ConjElem(BigRational(1, 2));
}

ConjElem ConjElem::imag_part() const {
  // (x - conj x) / (2i) = -(i/2)(x - conj x)
  ConjElem half_i(nullptr, MPoly(GaussRat(BigRational(0), BigRational(-1, 2))),
                  MPoly(GaussRat(BigRational(1))));
  return (*this - conj()) * half_i;
}

ConjElem& ConjElem::operator+=(const ConjElem& o) {
  field_ = merge(field_, o.field_);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

ConjElem& ConjElem::operator-=(const ConjElem& o) { return *this += -o; }

ConjElem& ConjElem::operator*=(const ConjElem& o) {
  field_ = merge(field_, o.field_);
  if (is_zero() || o.is_zero()) {
    num_ = MPoly();
    den_ = MPoly(GaussRat(BigRational(1)));
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ConjElem& ConjElem::operator/=(const ConjElem& o) { return *this *= o.inv(); }

ConjElem ConjElem::operator-() const {
  ConjElem r = *this;
  r.num_ = -num_;
  return r;
}

bool operator==(const ConjElem& a, const ConjElem& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string ConjElem::to_string() const {
  std::vector<std::string> names = field_ ? field_->names() : std::vector<std::string>{};
  std::string n = num_.to_string(names);
  if (den_.is_constant() && den_.constant_value().is_one()) return n;
  return "(" + n + ")/(" + den_.to_string(names) + ")";
}

ConjElem pow(const ConjElem& x, int e) {
  ConjElem base = e < 0 ? x.inv() : x;
  ConjElem r(1);
  if (x.field()) r = x.field()->one();
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
  return r;
}

}  // namespace nchodge
