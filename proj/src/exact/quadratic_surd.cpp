#include <cmath>
#include <ostream>

#include "k3wall/exact.hpp"
#include "sign_kernel.hpp"

namespace k3wall {

QuadraticSurd::QuadraticSurd(const BigInt& p, const BigInt& t, const BigInt& d, const BigInt& q)
    : p_(p), t_(t), d_(d), q_(q) {
  if (q_ == 0) throw std::domain_error("QuadraticSurd: zero denominator");
  if (d_ < 0) throw std::domain_error("QuadraticSurd: negative radicand");
  if (t_ != 0 && d_ > 1) {
    const auto [kernel, square] = squarefree_split(d_);
    t_ *= square;
    d_ = kernel;
  }
  if (d_ == 1) {
    p_ += t_;
    t_ = 0;
  }
  if (t_ == 0 || d_ == 0) {
    t_ = 0;
    d_ = 0;
  }
  if (q_ < 0) {
    p_ = -p_;
    t_ = -t_;
    q_ = -q_;
  }
  BigInt g = gcd(gcd(p_, t_), q_);
  if (g > 1) {
    p_ /= g;
    t_ /= g;
    q_ /= g;
  }
}

QuadraticSurd::QuadraticSurd(const Rational& r)
    : QuadraticSurd(r.numerator(), BigInt(0), BigInt(0), r.denominator()) {}

QuadraticSurd QuadraticSurd::sqrt(const Rational& n, const Rational& coefficient) {
  const SqrtNormal norm = sqrt_normalize(n);
  const Rational c = coefficient * norm.coefficient;
  return QuadraticSurd(BigInt(0), c.numerator(), norm.radicand, c.denominator());
}

Rational QuadraticSurd::to_rational() const {
  if (!is_rational()) throw std::domain_error("QuadraticSurd::to_rational: value is irrational");
  return Rational(p_, q_);
}

Sign QuadraticSurd::sign() const { return detail::sign_one(p_, t_, d_); }

double QuadraticSurd::to_double() const {
  return (p_.get_d() + t_.get_d() * std::sqrt(d_.get_d())) / q_.get_d();
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return Rational(p_, q_).to_string();
  std::string num;
  const BigInt at = t_ < 0 ? BigInt(-t_) : t_;
  const std::string root = (at == 1 ? std::string() : at.get_str()) + "√" + d_.get_str();
  if (p_ == 0) {
    num = (t_ < 0 ? "-" : "") + root;
  } else {
    num = p_.get_str() + (t_ < 0 ? " - " : " + ") + root;
  }
  if (q_ == 1) return num;
  if (p_ == 0) return num + "/" + q_.get_str();
  return "(" + num + ")/" + q_.get_str();
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-p_, -t_, d_, q_); }

namespace {

BigInt common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational() || a.radicand() == b.radicand()) return a.radicand();
  throw std::domain_error("QuadraticSurd: radicands " + a.radicand().get_str() + " and " +
                          b.radicand().get_str() + " do not combine");
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  const BigInt d = common_radicand(a, b);
  return QuadraticSurd(a.p_ * b.q_ + b.p_ * a.q_, a.t_ * b.q_ + b.t_ * a.q_, d, a.q_ * b.q_);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const BigInt d = common_radicand(a, b);
  // (p1 + t1 r)(p2 + t2 r) = p1 p2 + t1 t2 d + (p1 t2 + p2 t1) r
  return QuadraticSurd(a.p_ * b.p_ + a.t_ * b.t_ * d, a.p_ * b.t_ + b.p_ * a.t_, d, a.q_ * b.q_);
}

QuadraticSurd operator/(const QuadraticSurd& a, const Rational& b) {
  if (b.sign() == Sign::kZero) throw std::domain_error("QuadraticSurd: division by zero");
  return QuadraticSurd(a.p_ * b.denominator(), a.t_ * b.denominator(), a.d_,
                       a.q_ * b.numerator());
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.to_string(); }

std::strong_ordering surd_compare(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a == b) return std::strong_ordering::equal;
  // sign of (pa qb - pb qa) + ta qb sqrt(Da) - tb qa sqrt(Db), denominators positive
  const Sign s = detail::sign_two(a.p() * b.q() - b.p() * a.q(), a.t() * b.q(), a.radicand(),
                                  -(b.t() * a.q()), b.radicand());
  if (s == Sign::kNegative) return std::strong_ordering::less;
  if (s == Sign::kPositive) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace k3wall
