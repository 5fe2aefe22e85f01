#include <vector>

#include "k3wall/exact.hpp"

namespace k3wall {
namespace {

constexpr unsigned long kSieveLimit = 100000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

// Trial division stops once p^3 exceeds the cofactor: what is left then has at
// most two prime factors, so it is squarefree unless it is a perfect square.
// Cofactors above kSieveLimit^3 with no small factor are taken as squarefree.
std::pair<BigInt, BigInt> squarefree_split(const BigInt& n) {
  if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
  BigInt m = n;
  BigInt kernel = 1;
  BigInt square = 1;
  for (const unsigned long p : small_primes()) {
    const BigInt pb(p);
    if (pb * pb * pb > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) kernel *= p;
  }
  if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) {
    square *= isqrt(m);
  } else {
    kernel *= m;
  }
  return {kernel, square};
}

SqrtNormal sqrt_normalize(const Rational& n) {
  if (n.sign() == Sign::kNegative) throw std::domain_error("sqrt_normalize: negative argument");
  if (n.sign() == Sign::kZero) return {Rational(0), BigInt(0)};
  // sqrt(a/b) = sqrt(a*b) / b
  const BigInt den = n.denominator();
  const auto [kernel, square] = squarefree_split(n.numerator() * den);
  return {Rational(square, den), kernel};
}

}  // namespace k3wall
