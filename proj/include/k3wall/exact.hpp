#ifndef K3WALL_EXACT_HPP
#define K3WALL_EXACT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace k3wall {

using BigInt = mpz_class;

enum class Sign { kNegative = -1, kZero = 0, kPositive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
Sign sign_of(const BigInt& x);
std::string to_string(Sign s);

/// Thrown when adaptive interval refinement reaches its bit cap without
/// separating a value from zero.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& n) : value_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q);

  /// Parses "a", "-a/b".
  static Rational parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  Sign sign() const;
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  BigInt floor() const;
  BigInt ceil() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational pow(const Rational& r, unsigned e);

/// Largest s with s*s <= n, for n >= 0.
BigInt isqrt(const BigInt& n);

/// Squarefree part decomposition: n == coefficient^2 * radicand.
/// radicand is squarefree, and 1 stands for "no radical" (0 for n == 0).
struct SqrtNormal {
  Rational coefficient;
  BigInt radicand;
};

/// sqrt(n) == coefficient * sqrt(radicand) with radicand a squarefree integer.
SqrtNormal sqrt_normalize(const Rational& n);

/// Squarefree kernel of a positive integer, with the square factor it removed.
std::pair<BigInt, BigInt> squarefree_split(const BigInt& n);

/// Value (p + t*sqrt(D)) / q, stored canonically: D squarefree and > 1 unless
/// t == 0 (then D == 0), q > 0, gcd(p, t, q) == 1.
class QuadraticSurd {
 public:
  QuadraticSurd() : p_(0), t_(0), d_(0), q_(1) {}
  QuadraticSurd(const BigInt& p, const BigInt& t, const BigInt& d, const BigInt& q);
  QuadraticSurd(const Rational& r);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(long n) : QuadraticSurd(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  /// coefficient * sqrt(n) for non-negative rational n.
  static QuadraticSurd sqrt(const Rational& n, const Rational& coefficient = Rational(1));

  const BigInt& p() const { return p_; }
  const BigInt& t() const { return t_; }
  const BigInt& radicand() const { return d_; }
  const BigInt& q() const { return q_; }

  bool is_rational() const { return t_ == 0; }
  /// Throws std::domain_error when the value is irrational.
  Rational to_rational() const;
  Sign sign() const;
  double to_double() const;
  std::string to_string() const;

  QuadraticSurd operator-() const;
  /// Sum and product are closed only when both radicands agree or one side is
  /// rational; otherwise std::domain_error.
  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const Rational& b);

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.p_ == b.p_ && a.t_ == b.t_ && a.d_ == b.d_ && a.q_ == b.q_;
  }

 private:
  BigInt p_, t_, d_, q_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s);

/// Exact order of two surds; never approximates.
std::strong_ordering surd_compare(const QuadraticSurd& a, const QuadraticSurd& b);

inline std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  return surd_compare(a, b);
}

struct SignOptions {
  unsigned initial_bits = 64;
  unsigned max_bits = 4096;
};

/// Finite sum of c_i * sqrt(d_i) with squarefree, pairwise distinct d_i and
/// non-zero c_i. d == 1 carries the rational part.
class SurdSum {
 public:
  struct Term {
    Rational coefficient;
    BigInt radicand;
  };

  SurdSum() = default;
  SurdSum(const Rational& r);       // NOLINT(google-explicit-constructor)
  SurdSum(const QuadraticSurd& s);  // NOLINT(google-explicit-constructor)
  SurdSum(long n) : SurdSum(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  /// coefficient * sqrt(radicand) for a non-negative rational radicand.
  static SurdSum sqrt(const Rational& radicand, const Rational& coefficient = Rational(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Number of irrational terms.
  std::size_t radical_count() const;
  Rational rational_part() const;
  bool is_rational() const { return radical_count() == 0; }

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o) { return *this += -o; }
  SurdSum& operator*=(const Rational& r);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(SurdSum a, const Rational& r) { return a *= r; }
  friend SurdSum operator*(const Rational& r, SurdSum a) { return a *= r; }

  double to_double() const;
  std::string to_string() const;

 private:
  void add_term(const Rational& coefficient, const BigInt& radicand);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const SurdSum& s);

/// Exact sign. Up to two radicals are decided by isolation and squaring; more
/// radicals use outward-rounded interval refinement after symbolic grouping.
Sign surdsum_sign(const SurdSum& x, const SignOptions& options = {});

std::strong_ordering compare(const SurdSum& a, const SurdSum& b, const SignOptions& options = {});

/// Exact floor.
BigInt floor(const SurdSum& x, const SignOptions& options = {});

/// Correctly rounded (half away from zero) decimal rendering with `digits`
/// fractional digits.
std::string to_decimal(const SurdSum& x, int digits, const SignOptions& options = {});
std::string to_decimal(const QuadraticSurd& x, int digits);
std::string to_decimal(const Rational& x, int digits);

}  // namespace k3wall

#endif  // K3WALL_EXACT_HPP
