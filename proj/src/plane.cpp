#include "k3wall/plane.hpp"

#include <cstdlib>

namespace k3wall {
namespace {

Rational parabola_coefficient(const Surface& x) { return Rational(x.hsq() / 2 + 1); }

}  // namespace

Rational parabola(const Rational& b, const Surface& x) {
  return b * b * parabola_coefficient(x) - Rational(1);
}

QuadraticSurd parabola(const QuadraticSurd& b, const Surface& x) {
  return b * b * QuadraticSurd(parabola_coefficient(x)) - QuadraticSurd(1);
}

Rational gamma(const Rational& b, const Surface& x) {
  if (b.sign() == Sign::kZero) return Rational(0);
  return parabola(b, x);
}

QuadraticSurd gamma(const QuadraticSurd& b, const Surface& x) {
  if (b.sign() == Sign::kZero) return QuadraticSurd(0);
  return parabola(b, x);
}

bool in_U(const Point& p, const Surface& x, Membership mode) {
  if (mode == Membership::kStrict) return p.w > gamma(p.b, x);
  return p.w >= parabola(p.b, x);
}

bool in_U(const SurdPoint& p, const Surface& x, Membership mode) {
  if (mode == Membership::kStrict) return surd_compare(p.w, gamma(p.b, x)) > 0;
  return surd_compare(p.w, parabola(p.b, x)) >= 0;
}

CentralCharge central_charge(const ChernCharacter& ch, const Rational& b, const Rational& w) {
  return {-ch.ch2 + w * Rational(ch.ch0), Rational(ch.ch1) - b * Rational(ch.ch0)};
}

NuSlope nu_slope(const ChernCharacter& ch, const Rational& b, const Rational& w) {
  const CentralCharge z = central_charge(ch, b, w);
  if (z.im.sign() == Sign::kZero) return {true, Rational(0)};
  return {false, -z.re / z.im};
}

Point project_pi(const ChernCharacter& ch) {
  if (ch.ch0 == 0) throw RankZero("projection of a rank-zero class " + ch.to_string());
  return {Rational(ch.ch1) / Rational(ch.ch0), ch.ch2 / Rational(ch.ch0)};
}

Point project_pi(const MukaiVector& v) { return project_pi(to_chern(v)); }

AnyLine line_through(const Point& p1, const Point& p2, std::string label) {
  if (p1 == p2) {
    throw CoincidentPoints("line through coincident points (" + p1.b.to_string() + ", " +
                           p1.w.to_string() + ")");
  }
  if (p1.b == p2.b) return VerticalLine{p1.b, std::move(label)};
  const Rational slope = (p2.w - p1.w) / (p2.b - p1.b);
  return Line{slope, p1.w - slope * p1.b, std::move(label)};
}

Line finite_line_through(const Point& p1, const Point& p2, std::string label) {
  AnyLine line = line_through(p1, p2, std::move(label));
  if (auto* finite = std::get_if<Line>(&line)) return *finite;
  throw std::domain_error("line through points with equal b = " + p1.b.to_string() +
                          " is vertical");
}

ParabolaIntersection line_parabola_intersect(const Line& line, const Surface& x) {
  const Rational a = parabola_coefficient(x);
  const Rational c = line.intercept + Rational(1);
  // a b^2 - m b - c = 0
  const Rational disc = line.slope * line.slope + Rational(4) * a * c;
  ParabolaIntersection out;
  if (disc.sign() == Sign::kNegative) return out;
  const Rational two_a = Rational(2) * a;
  if (disc.sign() == Sign::kZero) {
    out.kind = ParabolaIntersection::Kind::kTangent;
    out.b1 = out.b2 = QuadraticSurd(line.slope / two_a);
    return out;
  }
  const QuadraticSurd root = QuadraticSurd::sqrt(disc);
  out.kind = ParabolaIntersection::Kind::kTwoPoints;
  out.b1 = (QuadraticSurd(line.slope) - root) / two_a;
  out.b2 = (QuadraticSurd(line.slope) + root) / two_a;
  return out;
}

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

NoWallVerticals no_wall_verticals(std::int64_t rp, std::int64_t kp) {
  if (rp < 2) throw std::invalid_argument("no_wall_verticals needs r' >= 2");
  const Bezout e = extended_gcd(kp, rp);
  if (e.g != 1) {
    throw NotCoprime("gcd(" + std::to_string(rp) + ", " + std::to_string(kp) + ") = " +
                     std::to_string(e.g));
  }
  // n- kp == 1 (mod rp) and n+ kp == -1 (mod rp), both in (0, rp)
  std::int64_t n_minus = e.x % rp;
  if (n_minus <= 0) n_minus += rp;
  const std::int64_t n_plus = rp - n_minus;
  NoWallVerticals out;
  out.n_minus = n_minus;
  out.m_minus = (n_minus * kp - 1) / rp;
  out.n_plus = n_plus;
  out.m_plus = (n_plus * kp + 1) / rp;
  out.b_minus = Rational(out.m_minus) / Rational(out.n_minus);
  out.b_plus = Rational(out.m_plus) / Rational(out.n_plus);
  return out;
}

}  // namespace k3wall
