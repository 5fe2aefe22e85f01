#include "k3wall/exact.hpp"

#include <ostream>

namespace k3wall {

Sign sign_of(const BigInt& x) {
  const int s = sgn(x);
  return s < 0 ? Sign::kNegative : (s > 0 ? Sign::kPositive : Sign::kZero);
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::kNegative: return "NEG";
    case Sign::kZero: return "ZERO";
    case Sign::kPositive: return "POS";
  }
  return "?";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

Sign Rational::sign() const { return sign_of(value_.get_num()); }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() == Sign::kNegative ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= r;
  return out;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

}  // namespace k3wall
