#ifndef K3WALL_VERDICT_HPP
#define K3WALL_VERDICT_HPP

#include <string>

namespace k3wall {

/// Outcome of one exact inequality check. kBoundary marks an equality at a
/// non-strict bound or a point on the boundary of U.
enum class Verdict { kPass, kFail, kBoundary, kNotApplicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kBoundary: return "BOUNDARY";
    case Verdict::kNotApplicable: return "N/A";
  }
  return "?";
}

inline Verdict verdict_of(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

}  // namespace k3wall

#endif  // K3WALL_VERDICT_HPP
