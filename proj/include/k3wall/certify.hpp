#ifndef K3WALL_CERTIFY_HPP
#define K3WALL_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3wall/exact.hpp"
#include "k3wall/lattice.hpp"
#include "k3wall/polygon.hpp"
#include "k3wall/verdict.hpp"

namespace k3wall {

enum class CheckId { A1, A2, A3, A4, G1, G2, C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13 };

/// "A1", "C10", ...
std::string to_string(CheckId id);
/// Equation tag the check evaluates, e.g. "cond--1".
std::string equation_tag(CheckId id);
/// All ids in report order.
const std::vector<CheckId>& all_check_ids();

struct CheckResult {
  CheckId id;
  Verdict verdict = Verdict::kNotApplicable;
  std::string witness;  // both sides in exact form, or the reason for N/A
  std::string info;     // supplementary, does not affect the verdict
};

struct CertificateReport {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t g = 0;
  std::int64_t hsq = 0;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> v_square;
  std::vector<CheckResult> checks;
  bool overall = false;

  const CheckResult& check(CheckId id) const;
};

struct CertifyOptions {
  SignOptions sign;
  Z2PrimeFormula z2_prime = Z2PrimeFormula::kVerbatim;
};

/// A1-A4. s is absent when A2 or A4 fails.
std::vector<CheckResult> check_assumptions(std::int64_t r, std::int64_t k, const Surface& x,
                                           std::optional<std::int64_t>* s_out = nullptr);

/// Requires r, k >= 1 and g >= 2 (std::invalid_argument otherwise).
CertificateReport certify_genus(std::int64_t r, std::int64_t k, std::int64_t g,
                                const CertifyOptions& options = {});

struct MinGenusResult {
  std::optional<std::int64_t> g_min;
  /// Every genus in g_min+1 .. g_min+horizon also passes.
  bool stable = false;
  /// First genus in the horizon window that fails, if any.
  std::optional<std::int64_t> first_failure_after;
  std::int64_t horizon = 0;
  std::optional<CertificateReport> report;
};

/// Linear scan over g = 2 .. g_max; jobs > 1 evaluates genera on worker threads.
/// The result does not depend on jobs.
MinGenusResult min_genus(std::int64_t r, std::int64_t k, std::int64_t g_max, std::int64_t horizon,
                         unsigned jobs = 1, const CertifyOptions& options = {});

}  // namespace k3wall

#endif  // K3WALL_CERTIFY_HPP
