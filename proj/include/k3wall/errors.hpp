#ifndef K3WALL_ERRORS_HPP
#define K3WALL_ERRORS_HPP

#include <stdexcept>

namespace k3wall {

class RankZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CoincidentPoints : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotCoprime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The line through Pi(alpha) and Pi(v(-H)) is vertical: s (k - r) + k r == 0.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonConvex : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateTriangle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace k3wall

#endif  // K3WALL_ERRORS_HPP
