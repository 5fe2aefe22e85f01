// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if all pass.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3wall/certify.hpp"
#include "k3wall/errors.hpp"
#include "k3wall/plane.hpp"
#include "k3wall/polygon.hpp"
#include "k3wall/walls.hpp"
#include "oracle.hpp"

using namespace k3wall;
using oracle::Big;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances.
constexpr double kAc1Seconds = 1.0;
constexpr double kAc3Seconds = 60.0;
const Big& float_tolerance() {
  static const Big t("1e-60");  // 256-bit re-evaluation: closer than this counts as a tie
  return t;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << x;
  return os.str();
}

bool zero(const SurdSum& x) { return surdsum_sign(x) == Sign::kZero; }

// ---------------------------------------------------------------------------
// Independent floating re-evaluation of the certification inequalities.

enum class Tri { kTrue, kFalse, kTie };

Tri lt(const Big& a, const Big& b) {
  if (boost::multiprecision::abs(a - b) < float_tolerance()) return Tri::kTie;
  return a < b ? Tri::kTrue : Tri::kFalse;
}
Tri all_of(std::initializer_list<Tri> xs) {
  bool tie = false;
  for (Tri x : xs) {
    if (x == Tri::kFalse) return Tri::kFalse;
    tie = tie || x == Tri::kTie;
  }
  return tie ? Tri::kTie : Tri::kTrue;
}
Tri negate(Tri x) { return x == Tri::kTie ? x : (x == Tri::kTrue ? Tri::kFalse : Tri::kTrue); }

struct FloatRoots {
  bool meets = false;
  Big b1, b2;
};

FloatRoots float_roots(const Big& slope, const Big& intercept, const Big& a) {
  const Big disc = slope * slope + 4 * a * (intercept + 1);
  if (disc < 0) return {};
  const Big root = boost::multiprecision::sqrt(disc);
  return {true, (slope - root) / (2 * a), (slope + root) / (2 * a)};
}

Big norm(const Big& re, const Big& im, const Big& hsq) {
  return boost::multiprecision::sqrt(re * re + (2 * hsq + 4) * im * im);
}

std::int64_t brute_s(std::int64_t r, std::int64_t k, std::int64_t hsq) {
  for (std::int64_t s = -2;; ++s) {
    const std::int64_t v2 = k * k * hsq - 2 * r * s;
    if (-2 <= v2 && v2 < 2 * r - 2) return s;
  }
}

// nullopt: the check is not applicable in this scenario.
std::map<CheckId, std::optional<Tri>> float_checks(std::int64_t r, std::int64_t k, std::int64_t g) {
  std::map<CheckId, std::optional<Tri>> out;
  const std::int64_t hsq_i = 2 * g - 2;
  const Big hsq(hsq_i), R(r), K(k);
  const std::int64_t s_i = brute_s(r, k, hsq_i);
  const Big S(s_i);
  const Big a = hsq / 2 + 1;
  const Big kr = K / R;
  const Big delta = 1 / (R * R * (R + 1));

  // ell*: the least intercept whose roots reach within delta of both strip ends
  const Big m = hsq * (kr - Big(1) / 2);
  const Big left_t = (K - R) / R + delta, right_t = kr - delta;
  auto wide = [&](const Big& c) {
    const FloatRoots fr = float_roots(m, c, a);
    return fr.meets && fr.b1 <= left_t && fr.b2 >= right_t;
  };
  Big lo = -1, hi = 1;
  while (!wide(hi)) hi *= 2;
  for (int i = 0; i < 500; ++i) {
    const Big mid = (lo + hi) / 2;
    (wide(mid) ? hi : lo) = mid;
  }
  const Big c_star = hi;
  const FloatRoots star = float_roots(m, c_star, a);

  // ell_alpha through Pi(alpha) = (-k/s, (r-s)/s) and Pi(v(-H))
  const Big pa_b = -K / S, pa_w = (R - S) / S;
  const Big pv_b = (K - R) / R;
  const Big pv_w = (S - R - K * hsq + R * hsq / 2) / R;
  const bool alpha_defined = pa_b != pv_b;
  Big theta = 0, beta = 0;
  FloatRoots alpha_roots;
  if (alpha_defined) {
    theta = (pv_w - pa_w) / (pv_b - pa_b);
    beta = pa_w - theta * pa_b + 1;
    alpha_roots = float_roots(theta, beta - 1, a);
  }
  const FloatRoots v_roots = float_roots((S - R) / K, 0, a);

  const Big mid_den = K * K * hsq / (2 * R) - 1;
  const Big upper = -(K + 1) / S;
  if (mid_den > 0) {
    const Big mid = -(K + 1) / mid_den;
    out[CheckId::C1] = all_of({lt(kr - 1 + delta, mid), lt(mid, upper)});
    if (alpha_roots.meets) {
      out[CheckId::C2] = all_of({lt(-1 / (R + 1), mid), lt(mid, upper), lt(upper, alpha_roots.b2)});
    } else {
      out[CheckId::C2] = std::nullopt;
    }
  }

  {
    const Big z1_re = R - S, z1_im = K;
    const Big z2_re = hsq * (R / 2 - K), z2_im = R;
    const Big z0p_re = (R - S) * (K - 1) / K, z0p_im = K - 1;
    const Big z1p_re = R - S + 1, z1p_im = K;
    const Big z2p_re = (-K * hsq + R * hsq / 2 + S - R) / (R - K) + R - S, z2p_im = K + 1;
    const Big q_out = norm(z1_re, z1_im, hsq) + norm(z2_re - z1_re, z2_im - z1_im, hsq);
    const Big q_in = norm(z0p_re, z0p_im, hsq) + norm(z1p_re - z0p_re, z1p_im - z0p_im, hsq) +
                     norm(z2p_re - z1p_re, z2p_im - z1p_im, hsq) +
                     norm(z2_re - z2p_re, z2_im - z2p_im, hsq);
    const Big two_eps_out = K * hsq - R * hsq / 2 + q_out - 2 * (R + S);
    out[CheckId::C3] = lt(two_eps_out, q_out - q_in);
  }

  {
    const Big sm1 = S - 1;
    const Big lhs = -2 / K * S * (S - R) + (hsq + 2) * (K * K * sm1 + 1 / sm1 - 2 * K);
    out[CheckId::C4] = lt(lhs, 2 * R * S * sm1);
  }

  if (alpha_defined) {
    out[CheckId::C5] = negate(lt(theta * theta + 2 * beta * (hsq + 2), 0));
    out[CheckId::C6] = alpha_roots.meets
                           ? std::optional<Tri>(lt(-K / S - 1 / (S * (S - 1)), alpha_roots.b2))
                           : std::nullopt;
    out[CheckId::C7] = lt(beta - 1, 0);
    out[CheckId::C12] = lt(star.b2, v_roots.b2);
    out[CheckId::C13] = alpha_roots.meets ? std::optional<Tri>(lt(alpha_roots.b1, star.b1))
                                          : std::nullopt;
  } else {
    out[CheckId::C5] = Tri::kFalse;
  }
  out[CheckId::C8] = lt(0, S / R - hsq * kr * (kr - Big(1) / 2) - 1);
  out[CheckId::C9] = lt(1, c_star + 1);

  const Big step = 1 / (R * (R - 1));
  const Big t1 = kr - step, t2 = (K - R) / R + step;
  auto gam = [&](const Big& b) { return b * b * a - 1; };
  const Big w1 = m * kr + c_star, w2 = m * (K - R) / R + c_star;
  if (boost::multiprecision::abs(t1) >= float_tolerance()) out[CheckId::C10] = lt(gam(t1) / t1, R / K * w1);
  if (boost::multiprecision::abs(t2) >= float_tolerance()) out[CheckId::C11] = lt(R / (K - R) * w2, gam(t2) / t2);

  out[CheckId::G1] = lt(2 * R, hsq);
  out[CheckId::G2] = lt(2 * R * (R + 1), hsq);
  const std::int64_t v2 = k * k * hsq_i - 2 * r * s_i;
  out[CheckId::A1] = (-2 <= v2 && v2 < 2 * r - 2) ? Tri::kTrue : Tri::kFalse;
  out[CheckId::A2] = std::gcd(r, k) == 1 ? Tri::kTrue : Tri::kFalse;
  out[CheckId::A3] = std::gcd(s_i, k) == 1 ? Tri::kTrue : Tri::kFalse;
  out[CheckId::A4] = k < r ? Tri::kTrue : Tri::kFalse;
  return out;
}

// Every non-boundary exact verdict must match the float re-evaluation.
bool float_agrees(const CertificateReport& rep, std::string& why, int& compared) {
  const auto expect = float_checks(rep.r, rep.k, rep.g);
  for (const auto& c : rep.checks) {
    if (c.verdict == Verdict::kBoundary || c.verdict == Verdict::kNotApplicable) continue;
    const auto it = expect.find(c.id);
    if (it == expect.end() || !it->second) {
      why = "g=" + std::to_string(rep.g) + " " + to_string(c.id) + ": no float counterpart";
      return false;
    }
    const Tri t = *it->second;
    if (t == Tri::kTie) continue;
    ++compared;
    if ((t == Tri::kTrue) != (c.verdict == Verdict::kPass)) {
      why = "g=" + std::to_string(rep.g) + " " + to_string(c.id) + " exact " + to_string(c.verdict);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Brute-force chain enumeration for the polygon criterion.

struct ChainSearch {
  std::vector<ZbarPoint> lattice;  // integral points of the closed triangle
  ZbarPoint target;
  std::int64_t hsq;
  Big best = -1;
  std::vector<ZbarPoint> best_chain;
  std::size_t chains = 0;

  static Rational cross(const ZbarPoint& o, const ZbarPoint& p, const ZbarPoint& q) {
    return (p.re - o.re) * (q.im - o.im) - (p.im - o.im) * (q.re - o.re);
  }

  void walk(std::vector<ZbarPoint>& chain, const Big& length) {
    const ZbarPoint last = chain.back();  // copy: push_back may reallocate
    if (last == target) {
      ++chains;
      if (length > best) {
        best = length;
        best_chain = chain;
      }
      return;
    }
    for (const ZbarPoint& p : lattice) {
      if (p.im < last.im || p == last) continue;
      // strictly clockwise turns; a collinear vertex adds no length
      if (chain.size() >= 2 && cross(chain[chain.size() - 2], last, p).sign() != Sign::kNegative) continue;
      const Big step = norm(oracle::eval(p.re - last.re), oracle::eval(p.im - last.im), Big(hsq));
      chain.push_back(p);
      walk(chain, length + step);
      chain.pop_back();
    }
  }
};

// ---------------------------------------------------------------------------

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  const Scenario sc = make_scenario(2, 1, Surface::from_genus(8));
  const WallDiagram d = named_lines(sc);
  const RefinedRegion reg = refined_region(sc);
  const Step1Bound h = step1_h_bound(sc);
  auto q = [](std::int64_t n, std::int64_t m = 1) { return QuadraticSurd(Rational(n, m)); };
  o.require(sc.hsq() == 14 && sc.s == 4, "H^2, s");
  o.require(sc.v_square() == -2, "v^2");
  o.require(project_pi(sc.v) == Point{Rational(1, 2), Rational(1)}, "Pi(v)");
  o.require(project_pi(sc.alpha) == Point{Rational(-1, 4), Rational(-1, 2)}, "Pi(alpha)");
  o.require(project_pi(sc.v_minus_h) == Point{Rational(-1, 2), Rational(1)}, "Pi(v(-H))");
  o.require(d.star.line.slope == Rational(0) && d.star.line.intercept == Rational(7, 18), "ell*");
  o.require(d.star.b1 == q(-5, 12) && d.star.b2 == q(5, 12), "b*");
  o.require(d.star.eps == Rational(1, 12) && d.star.eps_prime == Rational(1, 12), "eps");
  o.require(d.theta == Rational(-6) && d.beta == Rational(-1), "theta, beta");
  o.require(d.alpha_roots.b1 == q(-1, 2) && d.alpha_roots.b2 == q(-1, 4), "b^alpha");
  o.require(d.v_roots.b1 == q(-1, 4) && d.v_roots.b2 == q(1, 2), "b^v");
  o.require(d.tilde_roots.b1 == q(-1, 2) && d.tilde_roots.b2 == q(1, 2), "b~");
  o.require(zero(reg.q_out - SurdSum(12)), "Q_out");
  o.require(zero(reg.q_in - SurdSum::sqrt(33, 2)), "Q_in");
  o.require(zero(reg.eps_out()), "eps_out");
  o.require(zero(h.h - SurdSum(6)), "h");
  const double secs = seconds_since(t0);
  o.require(secs < kAc1Seconds, "runtime");
  o.detail = (o.pass ? "all pinned values exact" : o.detail) + ", " + fmt(secs) + " s (limit " +
             fmt(kAc1Seconds) + " s)";
  return o;
}

Outcome ac2() {
  Outcome o;
  const CertificateReport rep = certify_genus(2, 1, 8);
  std::vector<std::string> failed;
  for (const auto& c : rep.checks) {
    if (c.id < CheckId::C1) continue;
    if (c.verdict == Verdict::kFail) failed.push_back(to_string(c.id));
    o.require(c.verdict == Verdict::kPass || c.verdict == Verdict::kBoundary ||
                  c.verdict == Verdict::kFail,
              to_string(c.id) + " is " + to_string(c.verdict));
  }
  o.require(failed == std::vector<std::string>{"C1", "C2"}, "failing set differs");
  o.require(!rep.overall, "overall should be FAIL");
  std::int64_t first_c2 = -1;
  for (std::int64_t g = 2; g <= 100 && first_c2 < 0; ++g) {
    if (certify_genus(2, 1, g).check(CheckId::C2).verdict == Verdict::kPass) first_c2 = g;
  }
  o.require(first_c2 == 16, "C2 first passes at g=" + std::to_string(first_c2));
  if (o.pass) o.detail = "failing set {C1, C2}, overall FAIL; C2 first clears at g=16 (H^2=30)";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto t0 = Clock::now();
  const MinGenusResult res = min_genus(2, 1, 200, 50, 1);
  const double secs = seconds_since(t0);
  o.require(secs < kAc3Seconds, "runtime " + fmt(secs));
  o.require(res.g_min.has_value() && res.report.has_value(), "no g_min");
  if (!o.pass) return o;
  std::string why;
  int at_min = 0, compared = 0;
  o.require(float_agrees(*res.report, why, at_min), why);
  // The same cross-check on every genus the scan visited.
  for (std::int64_t g = 2; g <= 200 && o.pass; ++g) {
    o.require(float_agrees(certify_genus(2, 1, g), why, compared), why);
  }
  if (o.pass) {
    o.detail = "g_min=" + std::to_string(*res.g_min) + (res.stable ? " (stable)" : " (unstable)") + ", " +
               std::to_string(at_min) + " verdicts at g_min and " + std::to_string(compared) +
               " over g=2..200 match the 256-bit re-evaluation, tie tolerance 1e-60, " + fmt(secs) +
               " s (limit " + fmt(kAc3Seconds) + " s)";
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  int cases = 0;
  for (std::int64_t r = 1; r <= 8; ++r) {
    for (std::int64_t g = 2; g <= 200; ++g) {
      const Surface x = Surface::from_genus(g);
      // k = 1 < r needs r >= 2; for r = 1 the identity reads v^2 + 2 = 0 with s = brute force.
      const std::int64_t s = r == 1 ? brute_s(1, 1, x.hsq()) : compute_s(r, 1, x);
      const std::int64_t lhs = theorem_dimension(r, 1, s, x);
      const std::int64_t rhs = 2 * g - 2 * r * (g / r);
      o.require(lhs == rhs, "r=" + std::to_string(r) + " g=" + std::to_string(g));
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases, zero failures";
  return o;
}

Outcome ac5() {
  Outcome o;
  int cases = 0;
  for (std::int64_t hsq = 2; hsq <= 200; hsq += 2) {
    const Surface x(hsq);
    for (std::int64_t r = 1; r <= 6; ++r) {
      for (std::int64_t c = -6; c <= 6; ++c) {
        for (std::int64_t v2 : {-2, 0, 2, 4}) {
          const std::int64_t twice_rs = c * c * hsq - v2;
          if (twice_rs % (2 * r) != 0) continue;
          const MukaiVector v{r, c, twice_rs / (2 * r)};
          o.require(!in_U(project_pi(v), x, Membership::kStrict), v.to_string());
          ++cases;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " classes over H^2 = 2..200, none projects into U";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(606);
  int lines = 0, irrational = 0;
  while (lines < 1000) {
    const Surface x(2 * oracle::uniform(rng, 1, 500));
    const Line l{Rational(BigInt(oracle::uniform(rng, -1000, 1000)), BigInt(oracle::uniform(rng, 1, 97))),
                 Rational(BigInt(oracle::uniform(rng, -97, 1000)), BigInt(oracle::uniform(rng, 1, 97))), {}};
    const auto roots = line_parabola_intersect(l, x);
    if (!roots.meets()) continue;
    ++lines;
    for (const QuadraticSurd& b : {roots.b1, roots.b2}) {
      if (!b.is_rational()) ++irrational;
      const QuadraticSurd w = l.at(b);
      o.require(w - parabola(b, x) == QuadraticSurd(0L), "parabola residue");
      o.require(w - (b * QuadraticSurd(l.slope) + QuadraticSurd(l.intercept)) == QuadraticSurd(0L),
                "line residue");
    }
  }
  if (o.pass) {
    o.detail = "1000 lines, " + std::to_string(irrational) + " irrational roots, all residues exactly 0";
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  int pairs = 0;
  for (std::int64_t rp = 2; rp <= 50; ++rp) {
    for (std::int64_t kp = -rp * rp; kp <= rp * rp; ++kp) {
      if (std::gcd(rp, kp) != 1) continue;
      const NoWallVerticals v = no_wall_verticals(rp, kp);
      o.require(v.m_minus * rp - v.n_minus * kp == -1, "Bezout minus");
      o.require(v.m_plus * rp - v.n_plus * kp == 1, "Bezout plus");
      o.require(std::abs(v.n_minus) < rp && std::abs(v.n_plus) < rp && v.n_minus > 0 && v.n_plus > 0,
                "range of n");
      o.require(v.b_minus == Rational(v.m_minus, v.n_minus) && v.b_plus == Rational(v.m_plus, v.n_plus),
                "b = m/n");
      ++pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " coprime pairs, |k'| <= r'^2, r' <= 50";
  return o;
}

Outcome ac8() {
  Outcome o;
  std::mt19937_64 rng(808);
  auto surd = [&rng] {
    return QuadraticSurd(BigInt(oracle::uniform(rng, -1000000, 1000000)),
                         BigInt(oracle::uniform(rng, -1000000, 1000000)),
                         BigInt(oracle::uniform(rng, 0, 10000)), BigInt(oracle::uniform(rng, 1, 1000000)));
  };
  int undecided = 0;
  for (int i = 0; i < 10000; ++i) {
    const QuadraticSurd a = surd(), b = surd();
    const int expect = oracle::decisive_sign(oracle::eval(a) - oracle::eval(b));
    const auto got = surd_compare(a, b);
    const int g = got < 0 ? -1 : (got > 0 ? 1 : 0);
    if (expect == 0) {
      ++undecided;
      o.require(g == 0 && a == b, "oracle tie on unequal surds");
    } else {
      o.require(g == expect, "comparison " + std::to_string(i));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    SurdSum x;
    for (int j = 0, n = static_cast<int>(oracle::uniform(rng, 1, 5)); j < n; ++j) {
      x += SurdSum::sqrt(Rational(oracle::uniform(rng, 1, 300)),
                         Rational(BigInt(oracle::uniform(rng, -60, 60)), BigInt(oracle::uniform(rng, 1, 25))));
    }
    const int expect = oracle::decisive_sign(oracle::eval(x));
    const int got = to_int(surdsum_sign(x));
    o.require(expect == 0 ? x.empty() && got == 0 : got == expect, "sign " + std::to_string(i));
  }
  int zeros = 0;
  for (std::int64_t d = 2; d <= 40; ++d) {
    for (std::int64_t m = 2; m <= 6; ++m) {
      const SurdSum x = SurdSum::sqrt(Rational(d * m * m)) - SurdSum::sqrt(Rational(d), Rational(m));
      o.require(surdsum_sign(x) == Sign::kZero && x.empty(), "identity sqrt(m^2 d) = m sqrt(d)");
      ++zeros;
    }
  }
  o.require(surdsum_sign(SurdSum::sqrt(8) - SurdSum::sqrt(2, 2)) == Sign::kZero, "sqrt8 - 2 sqrt2");
  if (o.pass) {
    o.detail = "10000 comparisons, 1000 signs agree with the 256-bit oracle; " + std::to_string(zeros + 1) +
               " symbolic zeros detected";
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  std::ostringstream info;
  for (auto [r, k, g] : {std::tuple{2L, 1L, 8L}, {3L, 1L, 12L}}) {
    const Scenario sc = make_scenario(r, k, Surface::from_genus(g));
    const Triangle tri = outer_triangle(sc);
    ChainSearch search;
    search.target = tri.z2;
    search.hsq = sc.hsq();
    const Rational lo_re = std::min({Rational(0), tri.z1.re, tri.z2.re});
    const Rational hi_re = std::max({Rational(0), tri.z1.re, tri.z2.re});
    for (BigInt re = lo_re.floor(); Rational(re) <= hi_re; ++re) {
      for (std::int64_t im = 0; im <= std::max(k, r); ++im) {
        const ZbarPoint p{Rational(re), Rational(im)};
        if (point_in_triangle(p, tri.z1, tri.z2, false)) search.lattice.push_back(p);
      }
    }
    std::vector<ZbarPoint> chain{ZbarPoint{}};
    search.walk(chain, 0);
    const RefinedRegion reg = refined_region(sc);
    const SurdSum triangle_len = reg.q_out;
    // The best chain may tie with the triangle chain; confirm exactly.
    SurdSum best_exact;
    for (std::size_t i = 1; i < search.best_chain.size(); ++i) {
      best_exact += segment_norm(search.best_chain[i - 1], search.best_chain[i], sc.x);
    }
    o.require(surdsum_sign(triangle_len - best_exact) == Sign::kZero,
              "(" + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(g) +
                  ") a chain beats the triangle");
    const Big diff_from_norms = oracle::eval(reg.q_out) - oracle::eval(reg.q_in);
    o.require(boost::multiprecision::abs(oracle::eval(reg.q_diff_closed_form) - diff_from_norms) <
                  float_tolerance(),
              "closed form (float)");
    o.require(surdsum_sign(reg.q_out - reg.q_in - reg.q_diff_closed_form) == Sign::kZero,
              "closed form (exact)");
    info << (info.tellp() > 0 ? "; " : "") << "(" << r << "," << k << "," << g << "): "
         << search.lattice.size() << " lattice points, " << search.chains << " chains";
  }
  if (o.pass) o.detail = info.str() + "; triangle chain maximal, closed form exact";
  return o;
}

Outcome ac10() {
  Outcome o;
  int certified = 0;
  for (std::int64_t r = 2; r <= 5; ++r) {
    for (std::int64_t k = 1; k < r; ++k) {
      if (std::gcd(r, k) != 1) continue;
      for (std::int64_t g = 2; g <= 400; ++g) {
        const CertificateReport rep = certify_genus(r, k, g);
        if (!rep.overall) continue;
        ++certified;
        const Scenario sc = make_scenario(r, k, Surface::from_genus(g));
        const std::string where =
            "(" + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(g) + ")";
        o.require(ordering_check(named_lines(sc), sc).passed(), where + " ordering");
        const EllStar star = ell_star(sc);
        const Rational cap(1, 2 * r);
        o.require(star.eps.sign() == Sign::kPositive && star.eps < cap, where + " eps");
        o.require(star.eps_prime.sign() == Sign::kPositive && star.eps_prime < cap, where + " eps'");
      }
    }
  }
  o.require(certified > 0, "no certified genus");
  if (o.pass) {
    o.detail = std::to_string(certified) +
               " certified (r,k,g) with r <= 5, g <= 400: ordering passes, 0 < eps, eps' < 1/(2r)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 pinned scenario (2,1,8)", ac1},
      {"AC2 certify(2,1,8) verdicts", ac2},
      {"AC3 min_genus(2,1,200,50) float cross-check", ac3},
      {"AC4 dimension identity", ac4},
      {"AC5 projection exclusion", ac5},
      {"AC6 root fidelity", ac6},
      {"AC7 extended-Euclid verticals", ac7},
      {"AC8 surd kernel vs oracle", ac8},
      {"AC9 polygon bound consistency", ac9},
      {"AC10 ordering at certified genera", ac10},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
