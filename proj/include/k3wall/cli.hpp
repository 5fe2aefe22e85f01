#ifndef K3WALL_CLI_HPP
#define K3WALL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "k3wall/polygon.hpp"

namespace k3wall {

namespace exit_code {
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kNotFound = 3;
constexpr int kIo = 4;
}  // namespace exit_code

/// Built-in defaults, overridden by the K3WALL_CONFIG file, overridden by flags.
struct CliConfig {
  unsigned precision_bits = 4096;
  std::int64_t horizon = 50;
  int digits = 6;
  Z2PrimeFormula z2_prime = Z2PrimeFormula::kVerbatim;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// key=value lines; '#' starts a comment. Keys: precision_bits, horizon,
/// digits, z2_prime (verbatim|alternative). Throws IoError / ConfigError.
CliConfig parse_config(std::istream& in, CliConfig base = {});
CliConfig load_config_file(const std::string& path, CliConfig base = {});

/// Entry point of the k3wall executable; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3wall

#endif  // K3WALL_CLI_HPP
