#include "k3wall/certify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "k3wall/errors.hpp"
#include "k3wall/walls.hpp"

namespace k3wall {
namespace {

struct CheckInfo {
  CheckId id;
  const char* name;
  const char* tag;
};

const CheckInfo kChecks[] = {
    {CheckId::A1, "A1", "assumption"},       {CheckId::A2, "A2", "gcd(r,k)=1"},
    {CheckId::A3, "A3", "gcd(s,k)=1"},       {CheckId::A4, "A4", "k<r"},
    {CheckId::G1, "G1", "H^2>2r"},           {CheckId::G2, "G2", "H^2>2r(r+1)"},
    {CheckId::C1, "C1", "cond--1"},          {CheckId::C2, "C2", "cond--2"},
    {CheckId::C3, "C3", "epsilon"},          {CheckId::C4, "C4", "cond.1"},
    {CheckId::C5, "C5", "cond.3-before"},    {CheckId::C6, "C6", "cond.3"},
    {CheckId::C7, "C7", "cond.5-before"},    {CheckId::C8, "C8", "cond.5"},
    {CheckId::C9, "C9", "condition.extra"},  {CheckId::C10, "C10", "cond.e1"},
    {CheckId::C11, "C11", "cond.e2"},        {CheckId::C12, "C12", "cond.2"},
    {CheckId::C13, "C13", "cond.4"},
};

const CheckInfo& info_of(CheckId id) {
  for (const auto& c : kChecks) {
    if (c.id == id) return c;
  }
  throw std::logic_error("unknown check id");
}

std::string show(const Rational& x) { return x.to_string(); }

std::string show(const QuadraticSurd& x) {
  if (x.is_rational()) return x.to_string();
  return x.to_string() + " (~" + to_decimal(x, 6) + ")";
}

std::string show(const SurdSum& x) {
  if (x.is_rational()) return x.to_string();
  return x.to_string() + " (~" + to_decimal(x, 6) + ")";
}

CheckResult na(CheckId id, std::string reason) {
  return {id, Verdict::kNotApplicable, std::move(reason), {}};
}

bool less(const QuadraticSurd& a, const QuadraticSurd& b) { return surd_compare(a, b) < 0; }

}  // namespace

std::string to_string(CheckId id) { return info_of(id).name; }
std::string equation_tag(CheckId id) { return info_of(id).tag; }

const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> out;
    for (const auto& c : kChecks) out.push_back(c.id);
    return out;
  }();
  return ids;
}

const CheckResult& CertificateReport::check(CheckId id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("check " + to_string(id) + " not in report");
}

std::vector<CheckResult> check_assumptions(std::int64_t r, std::int64_t k, const Surface& x,
                                           std::optional<std::int64_t>* s_out) {
  if (r < 1 || k < 1) throw std::invalid_argument("r and k must be positive");
  std::vector<CheckResult> out;
  const std::int64_t g = gcd(r, k);
  const CheckResult a2{CheckId::A2, verdict_of(g == 1), "gcd(" + std::to_string(r) + ", " +
                                                            std::to_string(k) + ") = " +
                                                            std::to_string(g), {}};
  const CheckResult a4{CheckId::A4, verdict_of(k < r),
                       std::to_string(k) + " < " + std::to_string(r), {}};
  std::optional<std::int64_t> s;
  if (a2.verdict == Verdict::kPass && a4.verdict == Verdict::kPass) s = compute_s(r, k, x);
  if (s) {
    const std::int64_t v2 = mukai_square({r, k, *s}, x);
    out.push_back({CheckId::A1, verdict_of(-2 <= v2 && v2 < 2 * r - 2),
                   "-2 <= v^2 = " + std::to_string(v2) + " < " + std::to_string(2 * r - 2), {}});
  } else {
    out.push_back(na(CheckId::A1, "s undefined without gcd(r,k)=1 and k<r"));
  }
  out.push_back(a2);
  if (s) {
    const std::int64_t gs = gcd(*s, k);
    out.push_back({CheckId::A3, verdict_of(gs == 1),
                   "gcd(s, k) = gcd(" + std::to_string(*s) + ", " + std::to_string(k) +
                       ") = " + std::to_string(gs), {}});
  } else {
    out.push_back(na(CheckId::A3, "s undefined"));
  }
  out.push_back(a4);
  if (s_out) *s_out = s;
  return out;
}

CertificateReport certify_genus(std::int64_t r, std::int64_t k, std::int64_t g,
                                const CertifyOptions& options) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  const Surface x = Surface::from_genus(g);
  const std::int64_t hsq = x.hsq();
  CertificateReport rep;
  rep.r = r;
  rep.k = k;
  rep.g = g;
  rep.hsq = hsq;
  std::optional<std::int64_t> s_opt;
  rep.checks = check_assumptions(r, k, x, &s_opt);
  rep.s = s_opt;

  rep.checks.push_back({CheckId::G1, verdict_of(hsq > 2 * r),
                        std::to_string(hsq) + " > " + std::to_string(2 * r), {}});
  rep.checks.push_back({CheckId::G2, verdict_of(hsq > 2 * r * (r + 1)),
                        std::to_string(hsq) + " > " + std::to_string(2 * r * (r + 1)), {}});

  auto finish = [&rep]() {
    rep.overall = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) {
      return c.verdict == Verdict::kPass || c.verdict == Verdict::kNotApplicable ||
             (c.verdict == Verdict::kBoundary && (c.id == CheckId::C10 || c.id == CheckId::C11));
    });
  };

  // s >= 2 follows from G2; below that several terms divide by s or s - 1.
  if (!s_opt || *s_opt < 2) {
    const std::string reason = s_opt ? "s = " + std::to_string(*s_opt) + " < 2" : "scenario undefined";
    for (CheckId id : all_check_ids()) {
      if (id >= CheckId::C1) rep.checks.push_back(na(id, reason));
    }
    if (s_opt) rep.v_square = mukai_square({r, k, *s_opt}, x);
    finish();
    return rep;
  }

  const Scenario sc = make_scenario(r, k, x);
  const std::int64_t s = sc.s;
  rep.v_square = sc.v_square();
  const Rational h(hsq);
  const Rational kr(k, r);
  const Rational delta = Rational(1) / Rational(r * r * (r + 1));

  const EllStar star = ell_star(sc);
  std::optional<WallDiagram> diagram;
  std::string degenerate;
  try {
    diagram = named_lines(sc);
  } catch (const DegenerateDenominator& e) {
    degenerate = e.what();
  }
  const bool alpha_meets = diagram && diagram->alpha_roots.meets();
  const std::string no_alpha =
      diagram ? "ell_alpha does not meet Gamma" : "theta, beta undefined: " + degenerate;

  // C1 and C2 share the middle term -(k+1)/(k^2 H^2/(2r) - 1).
  const Rational mid_den = Rational(k * k * hsq, 2 * r) - Rational(1);
  const Rational upper = Rational(-(k + 1), s);
  if (mid_den.sign() != Sign::kPositive) {
    rep.checks.push_back(na(CheckId::C1, "k^2 H^2/(2r) - 1 = " + show(mid_den) + " <= 0"));
    rep.checks.push_back(na(CheckId::C2, "k^2 H^2/(2r) - 1 = " + show(mid_den) + " <= 0"));
  } else {
    const Rational mid = Rational(-(k + 1)) / mid_den;
    const Rational lower1 = kr - Rational(1) + delta;
    rep.checks.push_back({CheckId::C1, verdict_of(lower1 < mid && mid < upper),
                          show(lower1) + " < " + show(mid) + " < " + show(upper), {}});
    const Rational lower2 = Rational(-1, r + 1);
    if (!alpha_meets) {
      rep.checks.push_back(na(CheckId::C2, no_alpha));
    } else {
      const QuadraticSurd& b2a = diagram->alpha_roots.b2;
      const bool ok = lower2 < mid && mid < upper && less(QuadraticSurd(upper), b2a);
      rep.checks.push_back({CheckId::C2, verdict_of(ok),
                            show(lower2) + " < " + show(mid) + " < " + show(upper) + " < " +
                                show(b2a),
                            {}});
    }
  }

  {
    const RefinedRegion reg = refined_region(sc, options.z2_prime, options.sign);
    CheckResult c3{CheckId::C3, reg.epsilon_check,
                   "2 eps_out = " + show(reg.two_eps_out) + " < Q_out - Q_in = " +
                       show(reg.q_out - reg.q_in),
                   {}};
    if (!reg.convex) c3.info = "o, z0', z1', z2', z2 is not a convex chain";
    rep.checks.push_back(std::move(c3));
  }

  if (s == 1) {
    rep.checks.push_back(na(CheckId::C4, "s = 1"));
  } else {
    const Rational sm1(s - 1);
    const Rational lhs = Rational(-2, k) * Rational(s) * Rational(s - r) +
                         (h + Rational(2)) * (Rational(k * k) * sm1 + Rational(1) / sm1 -
                                              Rational(2 * k));
    const Rational rhs(2 * r * s * (s - 1));
    rep.checks.push_back({CheckId::C4, verdict_of(lhs < rhs), show(lhs) + " < " + show(rhs), {}});
  }

  if (!diagram) {
    rep.checks.push_back({CheckId::C5, Verdict::kFail, degenerate, {}});
    rep.checks.push_back(na(CheckId::C6, no_alpha));
    rep.checks.push_back(na(CheckId::C7, no_alpha));
  } else {
    const Rational disc = diagram->theta * diagram->theta +
                          Rational(2) * diagram->beta * (h + Rational(2));
    rep.checks.push_back({CheckId::C5, verdict_of(disc.sign() != Sign::kNegative),
                          "theta^2 + 2 beta (H^2+2) = " + show(disc) + " >= 0 (theta = " +
                              show(diagram->theta) + ", beta = " + show(diagram->beta) + ")",
                          {}});
    if (s == 1) {
      rep.checks.push_back(na(CheckId::C6, "s = 1"));
    } else if (!alpha_meets) {
      rep.checks.push_back(na(CheckId::C6, no_alpha));
    } else {
      const Rational lhs = Rational(-k, s) - Rational(1) / Rational(s * (s - 1));
      const QuadraticSurd& b2a = diagram->alpha_roots.b2;
      rep.checks.push_back({CheckId::C6, verdict_of(less(QuadraticSurd(lhs), b2a)),
                            show(lhs) + " < " + show(b2a), {}});
    }
    const Rational bm1 = diagram->beta - Rational(1);
    rep.checks.push_back({CheckId::C7, verdict_of(bm1.sign() == Sign::kNegative),
                          "beta - 1 = " + show(bm1) + " < 0", {}});
  }

  {
    const Rational c8 = Rational(s, r) - h * kr * (kr - Rational(1, 2)) - Rational(1);
    rep.checks.push_back({CheckId::C8, verdict_of(c8.sign() == Sign::kPositive),
                          show(c8) + " > 0", {}});
  }

  {
    const Rational alpha = star.alpha();
    const Rational half_gap = Rational(1, 2) - delta;
    const Rational tilt = kr - Rational(1, 2);
    const Rational chain = (h + Rational(2)) * half_gap * half_gap -
                           h * h / (h + Rational(2)) * tilt * tilt;
    const bool chain_holds = Rational(2) * alpha >= chain && chain > Rational(2);
    CheckResult c9{CheckId::C9, verdict_of(alpha > Rational(1)), "alpha = " + show(alpha) + " > 1",
                   {}};
    c9.info = std::string("printed chain 2 alpha = ") + show(Rational(2) * alpha) + " >= " +
              show(chain) + " > 2 " + (chain_holds ? "holds" : "does not hold");
    rep.checks.push_back(std::move(c9));
  }

  {
    const OriginLineCheck l = origin_line_check(sc);
    rep.checks.push_back({CheckId::C10, l.e1, l.witness1, {}});
    rep.checks.push_back({CheckId::C11, l.e2, l.witness2, {}});
  }

  if (diagram) {
    const QuadraticSurd& b2v = diagram->v_roots.b2;
    rep.checks.push_back({CheckId::C12, verdict_of(less(star.b2, b2v)),
                          "b2v = " + show(b2v) + " > b2* = k/r - eps = " + show(star.b2), {}});
  } else {
    rep.checks.push_back(na(CheckId::C12, degenerate));
  }
  if (!alpha_meets) {
    rep.checks.push_back(na(CheckId::C13, no_alpha));
  } else {
    const QuadraticSurd& b1a = diagram->alpha_roots.b1;
    rep.checks.push_back({CheckId::C13, verdict_of(less(b1a, star.b1)),
                          "b1alpha = " + show(b1a) + " < b1* = (k-r)/r + eps' = " +
                              show(star.b1),
                          {}});
  }

  finish();
  return rep;
}

namespace {

// pass[i] is the overall verdict at genus lo + i.
std::vector<char> evaluate_range(std::int64_t r, std::int64_t k, std::int64_t lo, std::int64_t hi,
                                 unsigned jobs, const CertifyOptions& options) {
  if (hi < lo) return {};
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<char> pass(n, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        pass[i] = certify_genus(r, k, lo + static_cast<std::int64_t>(i), options).overall ? 1 : 0;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return pass;
}

}  // namespace

MinGenusResult min_genus(std::int64_t r, std::int64_t k, std::int64_t g_max, std::int64_t horizon,
                         unsigned jobs, const CertifyOptions& options) {
  if (g_max < 2) throw std::invalid_argument("g_max must be >= 2");
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  MinGenusResult out;
  out.horizon = horizon;
  const std::vector<char> pass = evaluate_range(r, k, 2, g_max, jobs, options);
  const auto it = std::find(pass.begin(), pass.end(), 1);
  if (it == pass.end()) return out;
  const std::int64_t g_min = 2 + (it - pass.begin());
  out.g_min = g_min;
  out.report = certify_genus(r, k, g_min, options);
  const std::vector<char> window =
      evaluate_range(r, k, g_min + 1, g_min + horizon, jobs, options);
  const auto bad = std::find(window.begin(), window.end(), 0);
  out.stable = bad == window.end();
  if (!out.stable) out.first_failure_after = g_min + 1 + (bad - window.begin());
  return out;
}

}  // namespace k3wall
