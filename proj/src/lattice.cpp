#include "k3wall/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace k3wall {

Surface::Surface(std::int64_t hsq) : hsq_(hsq) {
  if (hsq < 2 || hsq % 2 != 0) {
    throw std::invalid_argument("H^2 must be an even integer >= 2, got " + std::to_string(hsq));
  }
}

Surface Surface::from_genus(std::int64_t genus) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
  return Surface(2 * genus - 2);
}

std::string MukaiVector::to_string() const {
  return "(" + std::to_string(r) + ", " + std::to_string(c) + ", " + std::to_string(s) + ")";
}

std::string ChernCharacter::to_string() const {
  return "(" + std::to_string(ch0) + ", " + std::to_string(ch1) + ", " + ch2.to_string() + ")";
}

ChernCharacter to_chern(const MukaiVector& v) { return {v.r, v.c, Rational(v.s - v.r)}; }

MukaiVector to_mukai(const ChernCharacter& ch) {
  if (!ch.ch2.is_integer()) {
    throw std::domain_error("Chern character " + ch.to_string() + " has non-integral ch2");
  }
  return {ch.ch0, ch.ch1, ch.ch0 + ch.ch2.numerator().get_si()};
}

// The printed form carries plus signs; v^2 = k^2 H^2 - 2rs fixes the signs used here.
std::int64_t mukai_pairing(const MukaiVector& v, const MukaiVector& u, const Surface& x) {
  return v.c * u.c * x.hsq() - v.r * u.s - u.r * v.s;
}

std::int64_t euler_form(const MukaiVector& v, const MukaiVector& u, const Surface& x) {
  return -mukai_pairing(v, u, x);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t compute_s(std::int64_t r, std::int64_t k, const Surface& x) {
  if (r <= 0 || k <= 0 || k >= r) {
    throw std::invalid_argument("compute_s needs 0 < k < r, got r=" + std::to_string(r) +
                                " k=" + std::to_string(k));
  }
  if (gcd(r, k) != 1) {
    throw std::invalid_argument("compute_s needs gcd(r, k) = 1, got r=" + std::to_string(r) +
                                " k=" + std::to_string(k));
  }
  // s lies in (k^2 H^2/(2r) - 1 + 1/r, k^2 H^2/(2r) + 1/r], an interval of length one
  const std::int64_t numerator = k * k * x.hsq() + 2;
  const std::int64_t den = 2 * r;
  return numerator / den;  // numerator > 0
}

ChernCharacter twist_minus_H(const MukaiVector& v, const Surface& x) {
  const ChernCharacter ch = to_chern(v);
  const Rational ch2 = ch.ch2 - Rational(v.c * x.hsq()) + Rational(v.r * x.hsq(), 2);
  return {v.r, v.c - v.r, ch2};
}

ChernCharacter pushforward_class(std::int64_t r, std::int64_t k, const Surface& x) {
  return {0, r, Rational(k * x.hsq()) - Rational(r * x.hsq(), 2)};
}

MukaiVector alpha_class(std::int64_t r, std::int64_t k, std::int64_t s) { return {s, -k, r}; }

std::int64_t theorem_dimension(std::int64_t r, std::int64_t k, std::int64_t s, const Surface& x) {
  return mukai_square({r, k, s}, x) + 2;
}

}  // namespace k3wall
