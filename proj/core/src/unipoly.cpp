#include "nchodge/unipoly.hpp"

#include <cctype>
#include <sstream>

#include "nchodge/error.hpp"

namespace nchodge {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const BigRational& c, int degree) {
  std::vector<BigRational> v(static_cast<size_t>(degree) + 1);
  v[static_cast<size_t>(degree)] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigRational(0);
  return c_[static_cast<size_t>(i)];
}

BigRational UniPoly::leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

BigRational UniPoly::eval(const BigRational& at) const {
  BigRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inv();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(UniPoly a, const BigRational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

UniPoly UniPoly::operator-() const { return *this * BigRational(-1); }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
  UniPoly r = *this;
  if (r.degree() < d.degree()) return {UniPoly{}, r};
  std::vector<BigRational> q(static_cast<size_t>(r.degree() - d.degree()) + 1);
  const BigRational lead_inv = d.leading().inv();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    BigRational f = r.leading() * lead_inv;
    q[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= d.degree(); ++i) {
      r.c_[static_cast<size_t>(i + shift)] -= f * d.c_[static_cast<size_t>(i)];
    }
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    BigRational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || !mag.is_one()) {
      os << mag.to_short_string();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

namespace {

// Recursive-descent parser for sums of terms c*x^k.
class PolyParser {
 public:
  PolyParser(std::string_view s, char var) : s_(s), var_(var) {}

  UniPoly parse() {
    UniPoly acc;
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      UniPoly t = term();
      acc += negate ? -t : t;
      skip();
      if (pos_ >= s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negate = c == '-';
      ++pos_;
    }
    return acc;
  }

 private:
  UniPoly term() {
    skip();
    BigRational coeff(1);
    bool have_coeff = false;
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(peek())) != 0)) {
      coeff = number();
      have_coeff = true;
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip();
      } else if (pos_ >= s_.size() || peek() != var_) {
        return UniPoly::constant(coeff);
      }
    }
    if (pos_ < s_.size() && peek() == var_) {
      ++pos_;
      skip();
      int exp = 1;
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (start == pos_) fail("missing exponent");
        exp = std::stoi(std::string(s_.substr(start, pos_ - start)));
      }
      return UniPoly::monomial(coeff, exp);
    }
    if (!have_coeff) fail("expected a term");
    return UniPoly::constant(coeff);
  }

  BigRational number() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(peek())) != 0 || peek() == '/')) {
      ++pos_;
    }
    return BigRational::parse(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInputError("cannot parse polynomial '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  char var_;
  size_t pos_ = 0;
};

}  // namespace

UniPoly UniPoly::parse(std::string_view text, char var) { return PolyParser(text, var).parse(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRational li = r0.leading().inv();
  return {r0 * li, s0 * li, t0 * li};
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInputError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInputError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  UniPoly f = p.monic();
  UniPoly a = gcd(f, f.derivative());
  UniPoly b = f / a;
  UniPoly c = f.derivative() / a;
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace nchodge
