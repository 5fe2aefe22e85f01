#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include <mpfr.h>

#include "k3wall/exact.hpp"
#include "sign_kernel.hpp"

namespace k3wall {
namespace detail {

namespace {

// sign(b*sqrt(d1) + c*sqrt(d2))
Sign sign_pair(const BigInt& b, const BigInt& d1, const BigInt& c, const BigInt& d2) {
  const Sign sb = d1 == 0 ? Sign::kZero : sign_of(b);
  const Sign sc = d2 == 0 ? Sign::kZero : sign_of(c);
  if (sb == Sign::kZero) return sc;
  if (sc == Sign::kZero || sb == sc) return sb;
  const int c2 = cmp(BigInt(b * b * d1), BigInt(c * c * d2));
  if (c2 > 0) return sb;
  if (c2 < 0) return sc;
  return Sign::kZero;
}

}  // namespace

Sign sign_one(const BigInt& a, const BigInt& b, const BigInt& d) {
  const Sign sa = sign_of(a);
  const Sign sb = d == 0 ? Sign::kZero : sign_of(b);
  if (sb == Sign::kZero) return sa;
  if (sa == Sign::kZero || sa == sb) return sb;
  const int c = cmp(BigInt(a * a), BigInt(b * b * d));
  if (c > 0) return sa;
  if (c < 0) return sb;
  return Sign::kZero;
}

Sign sign_two(const BigInt& a, const BigInt& b, const BigInt& d1, const BigInt& c,
              const BigInt& d2) {
  if (d1 == d2) return sign_one(a, b + c, d1);
  const Sign su = sign_pair(b, d1, c, d2);
  const Sign sa = sign_of(a);
  if (su == Sign::kZero) return sa;
  if (sa == Sign::kZero || sa == su) return su;
  // opposite signs: compare a^2 with u^2 = b^2 d1 + c^2 d2 + 2 b c sqrt(d1 d2)
  const Sign diff = sign_one(BigInt(a * a - b * b * d1 - c * c * d2), BigInt(-2 * b * c),
                             BigInt(d1 * d2));
  if (diff == Sign::kPositive) return sa;
  if (diff == Sign::kNegative) return su;
  return Sign::kZero;
}

}  // namespace detail

// --- SurdSum ---------------------------------------------------------------

SurdSum::SurdSum(const Rational& r) {
  if (r.sign() != Sign::kZero) terms_.push_back({r, BigInt(1)});
}

SurdSum::SurdSum(const QuadraticSurd& s) {
  add_term(Rational(s.p(), s.q()), BigInt(1));
  if (!s.is_rational()) add_term(Rational(s.t(), s.q()), s.radicand());
}

SurdSum SurdSum::sqrt(const Rational& radicand, const Rational& coefficient) {
  const SqrtNormal norm = sqrt_normalize(radicand);
  SurdSum out;
  if (norm.radicand != 0) out.add_term(coefficient * norm.coefficient, norm.radicand);
  return out;
}

void SurdSum::add_term(const Rational& coefficient, const BigInt& radicand) {
  if (coefficient.sign() == Sign::kZero || radicand == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    Rational transferred;
    if (it->radicand == radicand) {
      transferred = coefficient;
    } else {
      // sqrt(d) = sqrt(d * d_i) / d_i * sqrt(d_i) whenever d * d_i is a square
      const BigInt product = radicand * it->radicand;
      if (!mpz_perfect_square_p(product.get_mpz_t())) continue;
      transferred = coefficient * Rational(isqrt(product), it->radicand);
    }
    it->coefficient += transferred;
    if (it->coefficient.sign() == Sign::kZero) terms_.erase(it);
    return;
  }
  terms_.push_back({coefficient, radicand});
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
}

std::size_t SurdSum::radical_count() const {
  return static_cast<std::size_t>(std::count_if(
      terms_.begin(), terms_.end(), [](const Term& t) { return t.radicand != 1; }));
}

Rational SurdSum::rational_part() const {
  for (const auto& t : terms_) {
    if (t.radicand == 1) return t.coefficient;
  }
  return Rational(0);
}

SurdSum SurdSum::operator-() const {
  SurdSum out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& t : o.terms_) add_term(t.coefficient, t.radicand);
  return *this;
}

SurdSum& SurdSum::operator*=(const Rational& r) {
  if (r.sign() == Sign::kZero) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= r;
  return *this;
}

double SurdSum::to_double() const {
  double out = 0;
  for (const auto& t : terms_) out += t.coefficient.to_double() * std::sqrt(t.radicand.get_d());
  return out;
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coefficient.sign() == Sign::kNegative;
    const Rational mag = abs(t.coefficient);
    std::string piece;
    if (t.radicand == 1) {
      piece = mag.to_string();
    } else {
      const std::string root = "√" + t.radicand.get_str();
      if (mag == Rational(1)) {
        piece = root;
      } else if (mag.is_integer()) {
        piece = mag.to_string() + root;
      } else {
        piece = "(" + mag.to_string() + ")" + root;
      }
    }
    if (first) {
      out = (neg ? "-" : "") + piece;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SurdSum& s) { return os << s.to_string(); }

// --- interval evaluation -----------------------------------------------------

namespace {

class MpfrInterval {
 public:
  explicit MpfrInterval(unsigned bits) {
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_init2(tlo_, bits);
    mpfr_init2(thi_, bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  ~MpfrInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
    mpfr_clear(tlo_);
    mpfr_clear(thi_);
  }
  MpfrInterval(const MpfrInterval&) = delete;
  MpfrInterval& operator=(const MpfrInterval&) = delete;

  void add(const Rational& coefficient, const BigInt& radicand) {
    const mpq_class& q = coefficient.raw();
    if (radicand == 1) {
      mpfr_set_q(tlo_, q.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(thi_, q.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_set_z(tlo_, radicand.get_mpz_t(), MPFR_RNDD);
      mpfr_sqrt(tlo_, tlo_, MPFR_RNDD);
      mpfr_set_z(thi_, radicand.get_mpz_t(), MPFR_RNDU);
      mpfr_sqrt(thi_, thi_, MPFR_RNDU);
      // scale the positive enclosure [tlo, thi] of sqrt(d) by n/den
      if (sgn(q.get_num()) >= 0) {
        mpfr_mul_z(tlo_, tlo_, q.get_num_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(thi_, thi_, q.get_num_mpz_t(), MPFR_RNDU);
      } else {
        mpfr_swap(tlo_, thi_);
        mpfr_mul_z(tlo_, tlo_, q.get_num_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(thi_, thi_, q.get_num_mpz_t(), MPFR_RNDU);
      }
      mpfr_div_z(tlo_, tlo_, q.get_den_mpz_t(), MPFR_RNDD);
      mpfr_div_z(thi_, thi_, q.get_den_mpz_t(), MPFR_RNDU);
    }
    mpfr_add(lo_, lo_, tlo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, thi_, MPFR_RNDU);
  }

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  mpfr_t lo_, hi_, tlo_, thi_;
};

template <typename Decide>
auto refine(const SurdSum& x, const SignOptions& options, Decide decide, const char* what) {
  unsigned bits = std::max(options.initial_bits, 32u);
  for (;;) {
    MpfrInterval iv(bits);
    for (const auto& t : x.terms()) iv.add(t.coefficient, t.radicand);
    if (auto result = decide(iv)) return *result;
    if (bits >= options.max_bits) {
      throw PrecisionExhausted(std::string(what) + ": interval refinement reached " +
                               std::to_string(options.max_bits) + " bits for " + x.to_string());
    }
    bits = std::min(bits * 2, options.max_bits);
  }
}

}  // namespace

Sign surdsum_sign(const SurdSum& x, const SignOptions& options) {
  // Grouping at construction leaves only pairwise independent radicals, so an
  // empty sum is the only zero.
  std::vector<const SurdSum::Term*> radicals;
  Rational rational;
  for (const auto& t : x.terms()) {
    if (t.radicand == 1) {
      rational = t.coefficient;
    } else {
      radicals.push_back(&t);
    }
  }
  if (radicals.empty()) return rational.sign();
  if (radicals.size() <= 2) {
    BigInt lcm_den = rational.denominator();
    for (const auto* t : radicals) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                           t->coefficient.denominator().get_mpz_t());
    auto scaled = [&](const Rational& r) { return BigInt(r.numerator() * (lcm_den / r.denominator())); };
    if (radicals.size() == 1) {
      return detail::sign_one(scaled(rational), scaled(radicals[0]->coefficient),
                              radicals[0]->radicand);
    }
    return detail::sign_two(scaled(rational), scaled(radicals[0]->coefficient),
                            radicals[0]->radicand, scaled(radicals[1]->coefficient),
                            radicals[1]->radicand);
  }
  return refine(
      x, options,
      [](const MpfrInterval& iv) -> std::optional<Sign> {
        if (mpfr_sgn(iv.lo()) > 0) return Sign::kPositive;
        if (mpfr_sgn(iv.hi()) < 0) return Sign::kNegative;
        return std::nullopt;
      },
      "surdsum_sign");
}

std::strong_ordering compare(const SurdSum& a, const SurdSum& b, const SignOptions& options) {
  const Sign s = surdsum_sign(a - b, options);
  if (s == Sign::kNegative) return std::strong_ordering::less;
  if (s == Sign::kPositive) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt floor(const SurdSum& x, const SignOptions& options) {
  if (x.is_rational()) return x.rational_part().floor();
  // irrational, so the enclosure eventually avoids every integer
  return refine(
      x, options,
      [](const MpfrInterval& iv) -> std::optional<BigInt> {
        BigInt flo, fhi;
        mpfr_get_z(flo.get_mpz_t(), iv.lo(), MPFR_RNDD);
        mpfr_get_z(fhi.get_mpz_t(), iv.hi(), MPFR_RNDD);
        if (flo == fhi) return flo;
        return std::nullopt;
      },
      "floor");
}

namespace {

std::string format_scaled(const BigInt& magnitude, bool negative, int digits) {
  std::string s = magnitude.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative && magnitude != 0 ? "-" : "") + s;
}

}  // namespace

std::string to_decimal(const SurdSum& x, int digits, const SignOptions& options) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
  const bool negative = surdsum_sign(x, options) == Sign::kNegative;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const SurdSum shifted = (negative ? -x : x) * Rational(scale) + SurdSum(Rational(1, 2));
  return format_scaled(floor(shifted, options), negative, digits);
}

std::string to_decimal(const QuadraticSurd& x, int digits) { return to_decimal(SurdSum(x), digits); }

std::string to_decimal(const Rational& x, int digits) { return to_decimal(SurdSum(x), digits); }

}  // namespace k3wall
