#include "nchodge/rational.hpp"

#include <ostream>

#include "nchodge/error.hpp"

namespace nchodge {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvalidInputError("empty rational literal");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  BigInt n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
    throw InvalidInputError("malformed rational literal '" + std::string(text) + "'");
  }
  if (d == 0) throw InvalidInputError("rational literal with zero denominator");
  return BigRational(n, d);
}

BigRational BigRational::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return BigRational(mpq_class(1 / q_));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string BigRational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_short_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.to_short_string();
}

}  // namespace nchodge
