#ifndef K3WALL_WALLS_HPP
#define K3WALL_WALLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3wall/exact.hpp"
#include "k3wall/lattice.hpp"
#include "k3wall/plane.hpp"
#include "k3wall/verdict.hpp"

namespace k3wall {

/// The setup (r, k, H^2) with s = compute_s and the derived classes.
struct Scenario {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  Surface x{2};
  MukaiVector v;
  MukaiVector alpha;
  ChernCharacter v_minus_h;
  ChernCharacter pushforward;
  bool gcd_sk_ok = false;

  std::int64_t hsq() const { return x.hsq(); }
  std::int64_t v_square() const { return mukai_square(v, x); }
};

/// Throws std::invalid_argument unless 0 < k < r and gcd(r, k) = 1.
Scenario make_scenario(std::int64_t r, std::int64_t k, const Surface& x);

/// H^2 (k/r - 1/2), the common slope of the walls for the push-forward class.
Rational wall_slope(const Scenario& sc);

struct EllStar {
  Line line;
  QuadraticSurd b1;
  QuadraticSurd b2;
  Rational eps;        // k/r - b2
  Rational eps_prime;  // b1 - (k-r)/r
  Rational delta;      // 1/(r^2 (r+1))
  /// The line is w = slope b + alpha - 1.
  Rational alpha() const { return line.intercept + Rational(1); }
};

EllStar ell_star(const Scenario& sc);

struct LabelledVertical {
  std::string label;
  Rational b;
};

struct WallDiagram {
  EllStar star;
  Line ell_tilde;
  Line ell_v;
  Line ell_alpha;
  Line ell_v_minus_h;
  Line ell_1;  // origin and (k/r, w1)
  Line ell_2;  // origin and ((k-r)/r, w2)
  Rational theta;
  Rational beta;

  ParabolaIntersection tilde_roots;
  ParabolaIntersection v_roots;
  ParabolaIntersection alpha_roots;
  ParabolaIntersection v_minus_h_roots;

  std::vector<LabelledVertical> verticals;

  /// ell*, ell~, ell_v, ell_alpha, ell_v(-H) in that order.
  std::vector<Line> named() const;
  /// Every available Gamma-intersection b-value, labelled, with the line it lies on.
  struct LabelledB {
    std::string label;
    QuadraticSurd b;
    Line line;
  };
  std::vector<LabelledB> b_values() const;
};

/// Throws DegenerateDenominator when s (k - r) + k r == 0.
WallDiagram named_lines(const Scenario& sc);

struct OrderingItem {
  std::string id;
  std::string statement;
  Verdict verdict;
  std::string witness;
};

struct OrderingReport {
  std::vector<OrderingItem> items;
  /// No item is FAIL.
  bool passed() const;
};

/// Exact evaluation of the ordering chain for the named lines, the equality
/// bounds of the ell* gap condition and the origin position relative to ell*.
OrderingReport ordering_check(const WallDiagram& d, const Scenario& sc);

struct WallEntry {
  std::int64_t ch2 = 0;
  Line line;
  MukaiVector f1;
};

/// Walls of slope H^2 (k/r - 1/2) through Pi(r, kH, ch2) for ch2 = s-r, s-r-1, ...
/// while the intercept stays at or above that of ell*.
std::vector<WallEntry> enumerate_walls_above_ellstar(const Scenario& sc);

struct OriginLineCheck {
  Verdict e1 = Verdict::kNotApplicable;
  Verdict e2 = Verdict::kNotApplicable;
  Rational target1;  // k/r - 1/(r(r-1))
  Rational target2;  // (k-r)/r + 1/(r(r-1))
  Rational w1;
  Rational w2;
  std::string witness1;
  std::string witness2;
};

/// A target vertical at b = 0 gives BOUNDARY: the line through the origin
/// meets it on the boundary of U.
OriginLineCheck origin_line_check(const Scenario& sc);

}  // namespace k3wall

#endif  // K3WALL_WALLS_HPP
