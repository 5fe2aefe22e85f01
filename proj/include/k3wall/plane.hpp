#ifndef K3WALL_PLANE_HPP
#define K3WALL_PLANE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "k3wall/errors.hpp"
#include "k3wall/exact.hpp"
#include "k3wall/lattice.hpp"

namespace k3wall {

/// A point of the (b, w) plane with rational coordinates.
struct Point {
  Rational b;
  Rational w;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A point of the (b, w) plane with surd coordinates, e.g. a point of Gamma.
struct SurdPoint {
  QuadraticSurd b;
  QuadraticSurd w;
  friend bool operator==(const SurdPoint&, const SurdPoint&) = default;
};

/// w = slope * b + intercept
struct Line {
  Rational slope;
  Rational intercept;
  std::string label;

  Rational at(const Rational& b) const { return slope * b + intercept; }
  QuadraticSurd at(const QuadraticSurd& b) const {
    return b * QuadraticSurd(slope) + QuadraticSurd(intercept);
  }
  bool contains(const Point& p) const { return at(p.b) == p.w; }
  bool contains(const SurdPoint& p) const { return at(p.b) == p.w; }
};

struct VerticalLine {
  Rational b0;
  std::string label;
};

using AnyLine = std::variant<Line, VerticalLine>;

/// Gamma(b) = b^2 (H^2/2 + 1) - 1 for b != 0, and Gamma(0) = 0.
Rational gamma(const Rational& b, const Surface& x);
QuadraticSurd gamma(const QuadraticSurd& b, const Surface& x);

/// The parabola branch b^2 (H^2/2 + 1) - 1, without the special value at 0.
Rational parabola(const Rational& b, const Surface& x);
QuadraticSurd parabola(const QuadraticSurd& b, const Surface& x);

enum class Membership { kStrict, kClosure };

/// Strict: w > Gamma(b). Closure: w >= b^2 (H^2/2 + 1) - 1, which at b = 0
/// adds the boundary segment from (0, 0) down to (0, -1).
bool in_U(const Point& p, const Surface& x, Membership mode = Membership::kStrict);
bool in_U(const SurdPoint& p, const Surface& x, Membership mode = Membership::kStrict);

struct CentralCharge {
  Rational re;
  Rational im;
  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

/// Z_{b,w}: re = -ch2 + w ch0, im = ch1 - b ch0.
CentralCharge central_charge(const ChernCharacter& ch, const Rational& b, const Rational& w);

struct NuSlope {
  bool infinite = false;  // +infinity when Im Z = 0
  Rational value;
  friend bool operator==(const NuSlope&, const NuSlope&) = default;
};

NuSlope nu_slope(const ChernCharacter& ch, const Rational& b, const Rational& w);

/// Pi(E) = (ch1 / ch0, ch2 / ch0); throws RankZero for ch0 == 0.
Point project_pi(const ChernCharacter& ch);
Point project_pi(const MukaiVector& v);

/// Line through two points; a VerticalLine when the b-coordinates agree.
/// Throws CoincidentPoints for equal points.
AnyLine line_through(const Point& p1, const Point& p2, std::string label = {});

/// Convenience for callers that need a finite slope; throws std::domain_error
/// on a vertical result.
Line finite_line_through(const Point& p1, const Point& p2, std::string label = {});

struct ParabolaIntersection {
  enum class Kind { kTwoPoints, kTangent, kNone };
  Kind kind = Kind::kNone;
  QuadraticSurd b1;  // b1 <= b2; equal when tangent
  QuadraticSurd b2;

  bool meets() const { return kind != Kind::kNone; }
};

/// Roots of (H^2/2 + 1) b^2 - slope b - (intercept + 1) = 0, i.e. the
/// intersections with the parabola branch of Gamma.
ParabolaIntersection line_parabola_intersect(const Line& line, const Surface& x);

/// Vertical lines b = m/n on which Im Z of a class with ch_{<=1} = (rp, kp H)
/// is minimal in absolute value.
struct NoWallVerticals {
  Rational b_minus;
  Rational b_plus;
  std::int64_t m_minus = 0, n_minus = 0;
  std::int64_t m_plus = 0, n_plus = 0;
};

/// m- rp - n- kp = -1 and m+ rp - n+ kp = 1 with 0 < n+-  < rp.
/// Requires rp >= 2; throws NotCoprime when gcd(rp, kp) != 1.
NoWallVerticals no_wall_verticals(std::int64_t rp, std::int64_t kp);

/// Extended Euclid: returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
struct Bezout {
  std::int64_t g, x, y;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace k3wall

#endif  // K3WALL_PLANE_HPP
