#include "k3wall/polygon.hpp"

#include <stdexcept>

#include "k3wall/errors.hpp"

namespace k3wall {
namespace {

Rational cross(const ZbarPoint& o, const ZbarPoint& a, const ZbarPoint& b) {
  return (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re);
}

Rational norm_weight(const Surface& x) { return Rational(2 * x.hsq() + 4); }

// sqrt(a^2 + (2H^2 + 4))
SurdSum unit_height_norm(const Rational& a, const Surface& x) {
  return SurdSum::sqrt(a * a + norm_weight(x));
}

}  // namespace

ZbarPoint zbar(const ChernCharacter& ch) { return {-ch.ch2, Rational(ch.ch1)}; }

bool HNPolygon::is_convex() const {
  if (points.empty() || points.front() != ZbarPoint{}) return false;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].im < points[i - 1].im) return false;
  }
  for (std::size_t i = 2; i < points.size(); ++i) {
    if (cross(points[i - 2], points[i - 1], points[i]).sign() == Sign::kPositive) return false;
  }
  return true;
}

SurdSum nonstd_norm(const ZbarPoint& p, const Surface& x) {
  return SurdSum::sqrt(p.re * p.re + norm_weight(x) * p.im * p.im);
}

SurdSum segment_norm(const ZbarPoint& a, const ZbarPoint& b, const Surface& x) {
  return nonstd_norm({b.re - a.re, b.im - a.im}, x);
}

H0Bound h0_bound(const HNPolygon& poly, const Rational& chi, const Surface& x,
                 const SignOptions& options) {
  if (!poly.is_convex()) throw NonConvex("polygon is not a convex chain from the origin");
  SurdSum total;
  for (std::size_t i = 1; i < poly.points.size(); ++i) {
    total += segment_norm(poly.points[i - 1], poly.points[i], x);
  }
  SurdSum bound = (SurdSum(chi) + total) * Rational(1, 2);
  BigInt fl = floor(bound, options);
  return {std::move(bound), std::move(fl)};
}

Triangle outer_triangle(const Scenario& sc) {
  const Rational h(sc.hsq());
  return {ZbarPoint{Rational(-sc.s + sc.r), Rational(sc.k)},
          ZbarPoint{h * (Rational(sc.r, 2) - Rational(sc.k)), Rational(sc.r)}};
}

Rational z2_prime_re_verbatim(const Scenario& sc) {
  const Rational h(sc.hsq());
  const Rational top = -Rational(sc.k) * h + Rational(sc.r, 2) * h + Rational(sc.s - sc.r);
  return top / Rational(sc.r - sc.k) + Rational(-sc.s + sc.r);
}

Rational z2_prime_re_alternative(const Scenario& sc) {
  const Rational h(sc.hsq());
  const Rational top = -Rational(sc.k) * h + Rational(sc.r, 2) * h + Rational(sc.s - sc.r);
  return (top + Rational((-sc.s + sc.r) * (sc.r - sc.k))) / Rational(sc.r - sc.k);
}

RefinedRegion refined_region(const Scenario& sc, Z2PrimeFormula formula,
                             const SignOptions& options) {
  const std::int64_t r = sc.r, k = sc.k, s = sc.s;
  const Surface& x = sc.x;
  const Rational h(sc.hsq());
  const Triangle tri = outer_triangle(sc);
  const ZbarPoint origin{};

  RefinedRegion out;
  out.z0p = {Rational(-s + r) * Rational(k - 1, k), Rational(k - 1)};
  out.z1p = {Rational(-s + r + 1), Rational(k)};
  out.z2p = {formula == Z2PrimeFormula::kVerbatim ? z2_prime_re_verbatim(sc)
                                                  : z2_prime_re_alternative(sc),
             Rational(k + 1)};
  out.convex = HNPolygon{{origin, out.z0p, out.z1p, out.z2p, tri.z2}}.is_convex();

  out.q_out = nonstd_norm(tri.z1, x) + segment_norm(tri.z1, tri.z2, x);
  out.q_in = segment_norm(origin, out.z0p, x) + segment_norm(out.z0p, out.z1p, x) +
             segment_norm(out.z1p, out.z2p, x) + segment_norm(out.z2p, tri.z2, x);
  const Rational chi = Rational(k) * h - Rational(r, 2) * h;
  out.two_eps_out = SurdSum(chi) + out.q_out - SurdSum(Rational(2 * (r + s)));
  out.margin = out.q_out - out.q_in - out.two_eps_out;

  const Rational a1 = Rational(s - r, k);
  const Rational a2 = (-Rational(k) * h + Rational(r, 2) * h + Rational(s - r)) / Rational(r - k);
  out.q_diff_closed_form = unit_height_norm(a1, x) - unit_height_norm(a1 - Rational(1), x) +
                           unit_height_norm(a2, x) - unit_height_norm(a2 - Rational(1), x);

  out.epsilon_check = verdict_of(surdsum_sign(out.margin, options) == Sign::kPositive);
  return out;
}

Step1Bound step1_h_bound(const Scenario& sc, const SignOptions& options) {
  const std::int64_t r = sc.r, k = sc.k, s = sc.s;
  const Rational radicand =
      Rational((r - s) * (r - s)) + Rational(k * k) * Rational(2 * sc.hsq() + 4);
  SurdSum h = SurdSum(Rational(r + s, 2)) + SurdSum::sqrt(radicand, Rational(1, 2));
  const Sign gap = surdsum_sign(SurdSum(Rational(r + s + 1)) - h, options);
  return {std::move(h), verdict_of(gap == Sign::kPositive)};
}

bool point_in_triangle(const ZbarPoint& p, const ZbarPoint& z1, const ZbarPoint& z2, bool strict) {
  const ZbarPoint o{};
  const Rational area = cross(o, z1, z2);
  if (area.sign() == Sign::kZero) throw DegenerateTriangle("triangle o, z1, z2 is degenerate");
  const int orient = area.sign() == Sign::kPositive ? 1 : -1;
  const Rational c[3] = {cross(o, z1, p), cross(z1, z2, p), cross(z2, o, p)};
  for (const Rational& ci : c) {
    const int sgn = to_int(ci.sign()) * orient;
    if (sgn < 0) return false;
    if (strict && sgn == 0) return false;
  }
  return true;
}

}  // namespace k3wall
