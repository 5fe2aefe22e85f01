#include "k3wall/walls.hpp"

#include <stdexcept>

#include "k3wall/errors.hpp"

namespace k3wall {
namespace {

int cmp(const QuadraticSurd& a, const QuadraticSurd& b) {
  const auto o = surd_compare(a, b);
  return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

std::string show(const QuadraticSurd& x) { return x.to_string(); }

OrderingItem strict_less(std::string id, std::string statement, const QuadraticSurd& a,
                         const QuadraticSurd& b) {
  const int c = cmp(a, b);
  return {std::move(id), std::move(statement), verdict_of(c < 0), show(a) + " vs " + show(b)};
}

OrderingItem weak_less(std::string id, std::string statement, const QuadraticSurd& a,
                       const QuadraticSurd& b) {
  const int c = cmp(a, b);
  const Verdict v = c < 0 ? Verdict::kPass : (c == 0 ? Verdict::kBoundary : Verdict::kFail);
  return {std::move(id), std::move(statement), v, show(a) + " vs " + show(b)};
}

OrderingItem missing(std::string id, std::string statement, const std::string& line) {
  return {std::move(id), std::move(statement), Verdict::kFail, line + " does not meet Gamma"};
}

Line line_through_origin(const Point& p, std::string label) {
  return finite_line_through(Point{Rational(0), Rational(0)}, p, std::move(label));
}

}  // namespace

Scenario make_scenario(std::int64_t r, std::int64_t k, const Surface& x) {
  Scenario sc;
  sc.r = r;
  sc.k = k;
  sc.x = x;
  sc.s = compute_s(r, k, x);
  sc.v = {r, k, sc.s};
  sc.alpha = alpha_class(r, k, sc.s);
  sc.v_minus_h = twist_minus_H(sc.v, x);
  sc.pushforward = pushforward_class(r, k, x);
  sc.gcd_sk_ok = gcd(sc.s, k) == 1;
  return sc;
}

Rational wall_slope(const Scenario& sc) {
  return Rational(sc.hsq()) * (Rational(sc.k, sc.r) - Rational(1, 2));
}

EllStar ell_star(const Scenario& sc) {
  const Rational m = wall_slope(sc);
  const Rational delta = Rational(1) / Rational(sc.r * sc.r * (sc.r + 1));
  const Rational left = Rational(sc.k - sc.r, sc.r) + delta;
  const Rational right = Rational(sc.k, sc.r) - delta;
  const Rational c_left = parabola(left, sc.x) - m * left;
  const Rational c_right = parabola(right, sc.x) - m * right;
  EllStar out;
  out.line = Line{m, c_left > c_right ? c_left : c_right, "ell_star"};
  out.delta = delta;
  const ParabolaIntersection roots = line_parabola_intersect(out.line, sc.x);
  // The line lies above the parabola at both targets, so it always cuts twice.
  if (roots.kind != ParabolaIntersection::Kind::kTwoPoints) {
    throw std::logic_error("ell* does not cut Gamma twice");
  }
  out.b1 = roots.b1;
  out.b2 = roots.b2;
  out.eps = Rational(sc.k, sc.r) - out.b2.to_rational();
  out.eps_prime = out.b1.to_rational() - Rational(sc.k - sc.r, sc.r);
  return out;
}

std::vector<Line> WallDiagram::named() const {
  return {star.line, ell_tilde, ell_v, ell_alpha, ell_v_minus_h};
}

std::vector<WallDiagram::LabelledB> WallDiagram::b_values() const {
  std::vector<LabelledB> out;
  out.push_back({"b1_star", star.b1, star.line});
  out.push_back({"b2_star", star.b2, star.line});
  auto add = [&out](const ParabolaIntersection& roots, const std::string& tag, const Line& line) {
    if (!roots.meets()) return;
    out.push_back({"b1_" + tag, roots.b1, line});
    out.push_back({"b2_" + tag, roots.b2, line});
  };
  add(tilde_roots, "tilde", ell_tilde);
  add(v_roots, "v", ell_v);
  add(alpha_roots, "alpha", ell_alpha);
  add(v_minus_h_roots, "v_minus_H", ell_v_minus_h);
  return out;
}

WallDiagram named_lines(const Scenario& sc) {
  const std::int64_t r = sc.r, k = sc.k, s = sc.s, hsq = sc.hsq();
  const Rational h(hsq);
  const std::int64_t den = s * (k - r) + k * r;
  if (den == 0) {
    throw DegenerateDenominator("s(k-r) + kr = 0 for (r,k,s) = " + sc.v.to_string());
  }

  WallDiagram d;
  d.star = ell_star(sc);
  const Rational m = d.star.line.slope;
  const Rational kr(k, r);

  d.theta = (Rational(s * s - r * r - s * k * hsq) + Rational(r * s) * h / Rational(2)) /
            Rational(den);
  d.beta = (Rational(r * (k - r) + s * k - k * k * hsq) + Rational(k * r) * h / Rational(2)) /
           Rational(den);

  d.ell_tilde = Line{m, Rational(s, r) - h * kr * (kr - Rational(1, 2)) - Rational(1), "ell_tilde"};
  d.ell_v = Line{Rational(s - r, k), Rational(0), "ell_v"};
  d.ell_alpha = Line{d.theta, d.beta - Rational(1), "ell_alpha"};
  d.ell_v_minus_h = line_through_origin(project_pi(sc.v_minus_h), "ell_v_minus_H");

  const Rational w1 = d.star.line.at(kr);
  const Rational w2 = d.star.line.at(Rational(k - r, r));
  d.ell_1 = line_through_origin(Point{kr, w1}, "ell_1");
  d.ell_2 = line_through_origin(Point{Rational(k - r, r), w2}, "ell_2");

  d.tilde_roots = line_parabola_intersect(d.ell_tilde, sc.x);
  d.v_roots = line_parabola_intersect(d.ell_v, sc.x);
  d.alpha_roots = line_parabola_intersect(d.ell_alpha, sc.x);
  d.v_minus_h_roots = line_parabola_intersect(d.ell_v_minus_h, sc.x);

  const NoWallVerticals e = no_wall_verticals(r, k);
  d.verticals.push_back({"b_E-", e.b_minus});
  d.verticals.push_back({"b_E+", e.b_plus});
  if (s >= 2 && sc.gcd_sk_ok) {
    const NoWallVerticals ke = no_wall_verticals(s, -k);
    d.verticals.push_back({"b_KE-", ke.b_minus});
    d.verticals.push_back({"b_KE+", ke.b_plus});
  }
  d.verticals.push_back({"b_F1-", e.b_minus});
  if (k == r - 1) {
    d.verticals.push_back({"b_-1/(r+1)", Rational(-1, r + 1)});
  } else {
    d.verticals.push_back({"b_F2+", no_wall_verticals(r, k - r).b_plus});
  }
  return d;
}

bool OrderingReport::passed() const {
  for (const auto& item : items) {
    if (item.verdict == Verdict::kFail) return false;
  }
  return true;
}

OrderingReport ordering_check(const WallDiagram& d, const Scenario& sc) {
  const std::int64_t r = sc.r, k = sc.k, s = sc.s;
  const QuadraticSurd left(Rational(k - r, r));
  const QuadraticSurd right(Rational(k, r));
  const QuadraticSurd zero(0L);
  const QuadraticSurd& b1s = d.star.b1;
  const QuadraticSurd& b2s = d.star.b2;
  std::vector<OrderingItem> items;

  // The ell* gap condition, recomputed from the stored roots.
  const QuadraticSurd delta(d.star.delta);
  items.push_back(weak_less("ellstar.gap_left", "b1* - (k-r)/r <= 1/(r^2(r+1))", b1s - left, delta));
  items.push_back(weak_less("ellstar.gap_right", "k/r - b2* <= 1/(r^2(r+1))", right - b2s, delta));

  items.push_back(strict_less("a.origin", "origin lies below ell* (alpha > 1)", zero,
                              QuadraticSurd(d.star.line.intercept)));
  items.push_back(strict_less("a.1", "(k-r)/r < b1*", left, b1s));
  items.push_back(strict_less("a.2", "b1* < b2*", b1s, b2s));
  items.push_back(strict_less("a.3", "b2* < k/r", b2s, right));

  items.push_back({"b.parallel", "ell~ is parallel to ell*",
                   verdict_of(d.ell_tilde.slope == d.star.line.slope),
                   d.ell_tilde.slope.to_string() + " vs " + d.star.line.slope.to_string()});
  items.push_back(strict_less("b.above", "ell~ lies above ell*",
                              QuadraticSurd(d.star.line.intercept),
                              QuadraticSurd(d.ell_tilde.intercept)));
  if (d.tilde_roots.meets()) {
    items.push_back(weak_less("b.1", "(k-r)/r <= b1~", left, d.tilde_roots.b1));
    items.push_back(strict_less("b.2", "b1~ < b1*", d.tilde_roots.b1, b1s));
    items.push_back(strict_less("b.3", "b2* < b2~", b2s, d.tilde_roots.b2));
    items.push_back(weak_less("b.4", "b2~ <= k/r", d.tilde_roots.b2, right));
  } else {
    items.push_back(missing("b.1", "ell~ meets Gamma", "ell~"));
  }

  // ell_v always meets the parabola: its discriminant is m^2 + 2H^2 + 4.
  if (s >= 2) {
    const QuadraticSurd bound(Rational(-k, s) + Rational(1) / Rational(s * (s - 1)));
    items.push_back(strict_less("c.1", "b1v < -k/s + 1/(s(s-1))", d.v_roots.b1, bound));
  } else {
    items.push_back({"c.1", "b1v < -k/s + 1/(s(s-1))", Verdict::kNotApplicable, "s = 1"});
  }
  items.push_back(strict_less("c.2", "b2* < b2v", b2s, d.v_roots.b2));
  items.push_back(weak_less("c.3", "b2v <= k/r", d.v_roots.b2, right));

  if (d.alpha_roots.meets()) {
    items.push_back(weak_less("d.1", "(k-r)/r <= b1alpha", left, d.alpha_roots.b1));
    items.push_back(strict_less("d.2", "b1alpha < b1*", d.alpha_roots.b1, b1s));
    if (s >= 2) {
      const QuadraticSurd bound(Rational(-k, s) - Rational(1) / Rational(s * (s - 1)));
      items.push_back(strict_less("d.3", "-k/s - 1/(s(s-1)) < b2alpha", bound, d.alpha_roots.b2));
    } else {
      items.push_back(
          {"d.3", "-k/s - 1/(s(s-1)) < b2alpha", Verdict::kNotApplicable, "s = 1"});
    }
  } else {
    items.push_back(missing("d.1", "ell_alpha meets Gamma", "ell_alpha"));
  }

  if (d.v_minus_h_roots.meets()) {
    const QuadraticSurd& b1 = d.v_minus_h_roots.b1;
    items.push_back(strict_less("e.1", "b1v(-H) < 0", b1, zero));
    items.push_back(strict_less("e.2", "0 < b2v(-H)", zero, d.v_minus_h_roots.b2));
    items.push_back(weak_less("e.3", "(k-r)/r <= b1v(-H)", left, b1));
    items.push_back(strict_less("e.4", "b1v(-H) < b1*", b1, b1s));
    if (d.alpha_roots.meets()) {
      items.push_back(weak_less("b1vH", "b1v(-H) <= b1alpha", b1, d.alpha_roots.b1));
    }
  } else {
    items.push_back(missing("e.1", "ell_v(-H) meets Gamma", "ell_v(-H)"));
  }
  return {std::move(items)};
}

std::vector<WallEntry> enumerate_walls_above_ellstar(const Scenario& sc) {
  const EllStar star = ell_star(sc);
  const Rational m = star.line.slope;
  const Rational kr(sc.k, sc.r);
  std::vector<WallEntry> out;
  for (std::int64_t ch2 = sc.s - sc.r;; --ch2) {
    const Rational intercept = Rational(ch2, sc.r) - m * kr;
    if (intercept < star.line.intercept) break;
    out.push_back({ch2, Line{m, intercept, "wall_ch2=" + std::to_string(ch2)},
                   MukaiVector{sc.r, sc.k, sc.r + ch2}});
  }
  return out;
}

OriginLineCheck origin_line_check(const Scenario& sc) {
  const std::int64_t r = sc.r, k = sc.k;
  const EllStar star = ell_star(sc);
  OriginLineCheck out;
  const Rational step = Rational(1) / Rational(r * (r - 1));
  out.target1 = Rational(k, r) - step;
  out.target2 = Rational(k - r, r) + step;
  out.w1 = star.line.at(Rational(k, r));
  out.w2 = star.line.at(Rational(k - r, r));

  if (out.target1.sign() == Sign::kZero) {
    out.e1 = Verdict::kBoundary;
    out.witness1 = "target vertical b = 0; ell_1 meets it at the origin";
  } else {
    const Rational lhs = Rational(r, k) * out.w1;
    const Rational rhs = gamma(out.target1, sc.x) / out.target1;
    out.e1 = verdict_of(lhs > rhs);
    out.witness1 = lhs.to_string() + " > " + rhs.to_string();
  }
  if (out.target2.sign() == Sign::kZero) {
    out.e2 = Verdict::kBoundary;
    out.witness2 = "target vertical b = 0; ell_2 meets it at the origin";
  } else {
    const Rational lhs = Rational(r, k - r) * out.w2;
    const Rational rhs = gamma(out.target2, sc.x) / out.target2;
    out.e2 = verdict_of(lhs < rhs);
    out.witness2 = lhs.to_string() + " < " + rhs.to_string();
  }
  return out;
}

}  // namespace k3wall
