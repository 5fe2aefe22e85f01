#ifndef K3WALL_POLYGON_HPP
#define K3WALL_POLYGON_HPP

#include <vector>

#include "k3wall/exact.hpp"
#include "k3wall/lattice.hpp"
#include "k3wall/verdict.hpp"
#include "k3wall/walls.hpp"

namespace k3wall {

/// re = -ch2, im = ch1.H / H^2
struct ZbarPoint {
  Rational re;
  Rational im;
  friend bool operator==(const ZbarPoint&, const ZbarPoint&) = default;
};

ZbarPoint zbar(const ChernCharacter& ch);

/// Chain of extremal points starting at the origin.
struct HNPolygon {
  std::vector<ZbarPoint> points;

  /// Starts at the origin, im non-decreasing, and every turn is clockwise
  /// (collinear steps allowed): the chain bulges to the left of o -> p_n.
  bool is_convex() const;
};

/// sqrt(x^2 + (2H^2 + 4) y^2)
SurdSum nonstd_norm(const ZbarPoint& p, const Surface& x);
SurdSum segment_norm(const ZbarPoint& a, const ZbarPoint& b, const Surface& x);

struct H0Bound {
  SurdSum bound;
  BigInt floor;
};

/// chi/2 + (1/2) sum of segment norms. Throws NonConvex.
H0Bound h0_bound(const HNPolygon& poly, const Rational& chi, const Surface& x,
                 const SignOptions& options = {});

struct Triangle {
  ZbarPoint z1;  // Zbar(v)
  ZbarPoint z2;  // Zbar of the push-forward class
};

Triangle outer_triangle(const Scenario& sc);

enum class Z2PrimeFormula { kVerbatim, kAlternative };

/// re(z2') as printed: (-kH^2 + rH^2/2 + s - r)/(r-k) - s + r.
Rational z2_prime_re_verbatim(const Scenario& sc);
/// The same coordinate written over one denominator:
/// ((-kH^2 + rH^2/2 + s - r) + (-s + r)(r - k))/(r - k).
Rational z2_prime_re_alternative(const Scenario& sc);

struct RefinedRegion {
  ZbarPoint z0p;
  ZbarPoint z1p;
  ZbarPoint z2p;
  /// o, z0', z1', z2', z2 is a convex chain.
  bool convex = false;
  SurdSum q_out;
  SurdSum q_in;
  SurdSum two_eps_out;  // kH^2 - rH^2/2 + Q_out - 2(r+s)
  SurdSum margin;       // Q_out - Q_in - 2 eps_out
  /// The four-root expression for Q_out - Q_in in terms of s, r, k, H^2.
  SurdSum q_diff_closed_form;
  Verdict epsilon_check = Verdict::kFail;

  SurdSum eps_out() const { return two_eps_out * Rational(1, 2); }
};

RefinedRegion refined_region(const Scenario& sc, Z2PrimeFormula formula = Z2PrimeFormula::kVerbatim,
                             const SignOptions& options = {});

struct Step1Bound {
  SurdSum h;
  Verdict strict_check;  // h < r + s + 1
};

/// h = (r+s)/2 + sqrt((r-s)^2 + k^2 (2H^2 + 4))/2
Step1Bound step1_h_bound(const Scenario& sc, const SignOptions& options = {});

/// Containment in the triangle o, z1, z2. Throws DegenerateTriangle.
bool point_in_triangle(const ZbarPoint& p, const ZbarPoint& z1, const ZbarPoint& z2, bool strict);

}  // namespace k3wall

#endif  // K3WALL_POLYGON_HPP
