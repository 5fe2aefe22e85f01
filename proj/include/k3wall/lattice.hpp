#ifndef K3WALL_LATTICE_HPP
#define K3WALL_LATTICE_HPP

#include <cstdint>
#include <string>

#include "k3wall/exact.hpp"

namespace k3wall {

/// Polarized K3 surface of Picard rank one, known only through H^2.
class Surface {
 public:
  /// H^2 must be even and at least 2.
  explicit Surface(std::int64_t hsq);
  static Surface from_genus(std::int64_t genus);

  std::int64_t hsq() const { return hsq_; }
  std::int64_t genus() const { return hsq_ / 2 + 1; }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  std::int64_t hsq_;
};

/// (rank, coefficient of H in ch_1, rank + ch_2)
struct MukaiVector {
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::int64_t s = 0;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  std::string to_string() const;
};

/// ch_1 is stored as its coefficient of H.
struct ChernCharacter {
  std::int64_t ch0 = 0;
  std::int64_t ch1 = 0;
  Rational ch2;

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
  std::string to_string() const;
};

ChernCharacter to_chern(const MukaiVector& v);
/// Throws std::domain_error when ch_2 is not integral.
MukaiVector to_mukai(const ChernCharacter& ch);

/// <(r,c,s),(r',c',s')> = c c' H^2 - r s' - r' s
std::int64_t mukai_pairing(const MukaiVector& v, const MukaiVector& u, const Surface& x);
inline std::int64_t mukai_square(const MukaiVector& v, const Surface& x) {
  return mukai_pairing(v, v, x);
}

/// chi(v, u) = -<v, u>
std::int64_t euler_form(const MukaiVector& v, const MukaiVector& u, const Surface& x);

/// The unique s with -2 <= k^2 H^2 - 2 r s < 2r - 2.
/// Requires gcd(r, k) = 1 and 0 < k < r; throws std::invalid_argument otherwise.
std::int64_t compute_s(std::int64_t r, std::int64_t k, const Surface& x);

/// ch(E(-H)) for a class with Mukai vector v.
ChernCharacter twist_minus_H(const MukaiVector& v, const Surface& x);

/// ch of the push-forward of a rank r, degree k H^2 bundle on a curve in |H|:
/// (0, r, k H^2 - r H^2 / 2).
ChernCharacter pushforward_class(std::int64_t r, std::int64_t k, const Surface& x);

/// (s, -k, r)
MukaiVector alpha_class(std::int64_t r, std::int64_t k, std::int64_t s);

/// v^2 + 2 for v = (r, k, s).
std::int64_t theorem_dimension(std::int64_t r, std::int64_t k, std::int64_t s, const Surface& x);

std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace k3wall

#endif  // K3WALL_LATTICE_HPP
