#include "k3wall/serialize.hpp"

#include <stdexcept>

namespace k3wall {
namespace {

Json big(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json point_json(const ZbarPoint& p, int digits) {
  return {{"re", to_json(p.re, digits)}, {"im", to_json(p.im, digits)}};
}

Json line_json(const Line& l, int digits) {
  return {{"label", l.label},
          {"slope", to_json(l.slope, digits)},
          {"intercept", to_json(l.intercept, digits)}};
}

}  // namespace

Json to_json(const Rational& x, int digits) {
  return {{"num", big(x.numerator())},
          {"den", big(x.denominator())},
          {"exact", x.to_string()},
          {"decimal", to_decimal(x, digits)}};
}

Json to_json(const QuadraticSurd& x, int digits) {
  return {{"p", big(x.p())},
          {"t", big(x.t())},
          {"D", big(x.radicand())},
          {"q", big(x.q())},
          {"exact", x.to_string()},
          {"decimal", to_decimal(x, digits)}};
}

Json to_json(const SurdSum& x, int digits, const SignOptions& options) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) {
    terms.push_back({{"coefficient", to_json(t.coefficient, digits)}, {"radicand", big(t.radicand)}});
  }
  return {{"terms", terms}, {"exact", x.to_string()}, {"decimal", to_decimal(x, digits, options)}};
}

Rational rational_from_json(const Json& j) {
  return Rational(big_from(j.at("num")), big_from(j.at("den")));
}

QuadraticSurd surd_from_json(const Json& j) {
  return QuadraticSurd(big_from(j.at("p")), big_from(j.at("t")), big_from(j.at("D")),
                       big_from(j.at("q")));
}

SurdSum surdsum_from_json(const Json& j) {
  SurdSum out;
  for (const auto& t : j.at("terms")) {
    out += SurdSum::sqrt(Rational(big_from(t.at("radicand"))), rational_from_json(t.at("coefficient")));
  }
  return out;
}

std::string exact_with_decimal(const QuadraticSurd& x, int digits) {
  return x.to_string() + " ≈ " + to_decimal(x, digits);
}

Json scenario_json(const CertificateReport& rep) {
  Json j = {{"r", rep.r}, {"k", rep.k}, {"g", rep.g}, {"Hsq", rep.hsq}};
  j["s"] = rep.s ? Json(*rep.s) : Json(nullptr);
  j["v_square"] = rep.v_square ? Json(*rep.v_square) : Json(nullptr);
  return j;
}

Json to_json(const CertificateReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json item = {{"id", to_string(c.id)},
                 {"tag", equation_tag(c.id)},
                 {"verdict", to_string(c.verdict)},
                 {"witness", c.witness}};
    if (!c.info.empty()) item["info"] = c.info;
    checks.push_back(std::move(item));
  }
  return checks;
}

Json diagram_json(const Scenario& sc, const DiagramOptions& options) {
  const int digits = options.digits;
  const WallDiagram d = named_lines(sc);
  Json j;

  Json lines = Json::array();
  for (const Line& l : d.named()) lines.push_back(line_json(l, digits));
  lines.push_back(line_json(d.ell_1, digits));
  lines.push_back(line_json(d.ell_2, digits));
  j["lines"] = lines;

  Json bs = Json::array();
  for (const auto& b : d.b_values()) {
    bs.push_back({{"label", b.label},
                  {"line", b.line.label},
                  {"b", to_json(b.b, digits)},
                  {"w", to_json(b.line.at(b.b), digits)},
                  {"display", exact_with_decimal(b.b, digits)}});
  }
  j["b_values"] = bs;

  j["epsilons"] = {{"eps", to_json(d.star.eps, digits)},
                   {"eps_prime", to_json(d.star.eps_prime, digits)},
                   {"delta", to_json(d.star.delta, digits)}};
  j["theta"] = to_json(d.theta, digits);
  j["beta"] = to_json(d.beta, digits);

  Json verticals = Json::array();
  for (const auto& v : d.verticals) verticals.push_back({{"label", v.label}, {"b", to_json(v.b, digits)}});
  j["verticals"] = verticals;

  auto marker = [digits](const std::string& label, const Point& p) {
    return Json{{"label", label}, {"b", to_json(p.b, digits)}, {"w", to_json(p.w, digits)}};
  };
  j["region_markers"] = Json::array({marker("origin", {Rational(0), Rational(0)}),
                                     marker("pi_v", project_pi(sc.v)),
                                     marker("pi_v_minus_H", project_pi(sc.v_minus_h))});
  if (sc.alpha.r != 0) j["region_markers"].push_back(marker("pi_alpha", project_pi(sc.alpha)));

  Json walls = Json::array();
  for (const auto& w : enumerate_walls_above_ellstar(sc)) {
    walls.push_back({{"ch2", w.ch2},
                     {"F1", {w.f1.r, w.f1.c, w.f1.s}},
                     {"slope", to_json(w.line.slope, digits)},
                     {"intercept", to_json(w.line.intercept, digits)}});
  }
  j["walls_above_ell_star"] = walls;

  Json ordering = Json::array();
  const OrderingReport rep = ordering_check(d, sc);
  for (const auto& item : rep.items) {
    ordering.push_back({{"id", item.id},
                        {"statement", item.statement},
                        {"verdict", to_string(item.verdict)},
                        {"witness", item.witness}});
  }
  j["ordering"] = ordering;
  j["ordering_passed"] = rep.passed();

  const OriginLineCheck olc = origin_line_check(sc);
  j["origin_lines"] = {{"target1", to_json(olc.target1, digits)},
                  {"target2", to_json(olc.target2, digits)},
                  {"e1", to_string(olc.e1)},
                  {"e2", to_string(olc.e2)}};

  Json samples = Json::array();
  if (options.samples > 0) {
    // Span the strip (k-r)/r <= b <= k/r with a margin of 1/4 on each side.
    const Rational lo = Rational(sc.k - sc.r, sc.r) - Rational(1, 4);
    const Rational hi = Rational(sc.k, sc.r) + Rational(1, 4);
    const int n = options.samples;
    for (int i = 0; i < n; ++i) {
      const Rational b = n == 1 ? lo : lo + (hi - lo) * Rational(i, n - 1);
      samples.push_back({{"b", to_json(b, digits)}, {"w", to_json(gamma(b, sc.x), digits)}});
    }
  }
  j["gamma_samples"] = samples;
  return j;
}

Json polygon_json(const Scenario& sc, int digits, Z2PrimeFormula formula, const SignOptions& sign) {
  const Triangle tri = outer_triangle(sc);
  const RefinedRegion reg = refined_region(sc, formula, sign);
  const Step1Bound step1 = step1_h_bound(sc, sign);
  const Rational chi = pushforward_class(sc.r, sc.k, sc.x).ch2;
  const H0Bound tri_bound = h0_bound(HNPolygon{{ZbarPoint{}, tri.z1, tri.z2}}, chi, sc.x, sign);

  Json j;
  j["z1"] = point_json(tri.z1, digits);
  j["z2"] = point_json(tri.z2, digits);
  j["z0_prime"] = point_json(reg.z0p, digits);
  j["z1_prime"] = point_json(reg.z1p, digits);
  j["z2_prime"] = point_json(reg.z2p, digits);
  j["z2_prime_formula"] = formula == Z2PrimeFormula::kVerbatim ? "verbatim" : "alternative";
  j["z2_prime_formulas_agree"] = z2_prime_re_verbatim(sc) == z2_prime_re_alternative(sc);
  j["refined_chain_convex"] = reg.convex;
  j["chi"] = to_json(chi, digits);
  j["Q_out"] = to_json(reg.q_out, digits, sign);
  j["Q_in"] = to_json(reg.q_in, digits, sign);
  j["eps_out"] = to_json(reg.eps_out(), digits, sign);
  j["margin"] = to_json(reg.margin, digits, sign);
  j["Q_diff_closed_form"] = to_json(reg.q_diff_closed_form, digits, sign);
  j["Q_diff_closed_form_matches"] =
      surdsum_sign(reg.q_out - reg.q_in - reg.q_diff_closed_form, sign) == Sign::kZero;
  j["epsilon_check"] = to_string(reg.epsilon_check);
  j["h"] = to_json(step1.h, digits, sign);
  j["h_below_r_plus_s_plus_1"] = to_string(step1.strict_check);
  j["triangle_bound"] = {{"bound", to_json(tri_bound.bound, digits, sign)},
                         {"floor", big(tri_bound.floor)}};
  return j;
}

}  // namespace k3wall
