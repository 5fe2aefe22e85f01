#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "k3wall/cli.hpp"
#include "k3wall/serialize.hpp"

using namespace k3wall;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "k3wall");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "k3wall_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

// Unsets K3WALL_CONFIG on scope exit so that later cases see the defaults.
struct ConfigEnv {
  explicit ConfigEnv(const std::string& path) { setenv("K3WALL_CONFIG", path.c_str(), 1); }
  ~ConfigEnv() { unsetenv("K3WALL_CONFIG"); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    unsetenv("K3WALL_CONFIG");
    CHECK(run({"certify", "--r", "2", "--k", "1", "--g", "16"}).code == exit_code::kPass);
    CHECK(run({"certify", "--r", "2", "--k", "1", "--g", "8"}).code == exit_code::kFail);
    CHECK(run({"certify", "--r", "2", "--k", "1"}).code == exit_code::kUsage);
    CHECK(run({"certify", "--r", "2", "--k", "1", "--g", "1"}).code == exit_code::kUsage);
    CHECK(run({"certify", "--r", "2", "--k", "1", "--g", "8", "--format", "xml"}).code ==
          exit_code::kUsage);
    CHECK(run({"min-genus", "--r", "2", "--k", "1", "--gmax", "10"}).code == exit_code::kNotFound);
    CHECK(run({"min-genus", "--r", "2", "--k", "1", "--gmax", "40", "--horizon", "5"}).code ==
          exit_code::kPass);
    CHECK(run({"polygon", "--r", "2", "--k", "1", "--g", "8", "--points", "1,1;0,2"}).code ==
          exit_code::kFail);
    CHECK(run({"diagram", "--r", "2", "--k", "1", "--g", "8", "--out", "/nonexistent/dir/x"}).code ==
          exit_code::kIo);
    CHECK(run({}).code == exit_code::kUsage);
  }

  TEST_CASE("certify JSON envelope round-trips") {
    const Run r = run({"certify", "--r", "2", "--k", "1", "--g", "8", "--format", "json"});
    REQUIRE(r.code == exit_code::kFail);
    const Json j = Json::parse(r.out);
    CHECK(j.at("format_version") == 1);
    CHECK(j.at("command") == "certify");
    CHECK(j.at("overall") == "FAIL");
    REQUIRE(j.at("checks").size() == all_check_ids().size());
    CHECK(j.at("checks")[0].at("id") == "A1");
    const CertificateReport rep = certify_genus(2, 1, 8);
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
      CHECK(j.at("checks")[i].at("verdict") == to_string(rep.checks[i].verdict));
      CHECK(j.at("checks")[i].at("witness") == rep.checks[i].witness);
    }
  }

  TEST_CASE("diagram JSON values parse back to the exact objects") {
    const Run r = run({"diagram", "--r", "2", "--k", "1", "--g", "8", "--format", "json", "--samples", "5"});
    REQUIRE(r.code == exit_code::kPass);
    const Json d = Json::parse(r.out).at("diagram");
    const WallDiagram expect = named_lines(make_scenario(2, 1, Surface::from_genus(8)));
    const auto bs = expect.b_values();
    REQUIRE(d.at("b_values").size() == bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      CHECK(d.at("b_values")[i].at("label") == bs[i].label);
      CHECK(surd_from_json(d.at("b_values")[i].at("b")) == bs[i].b);
    }
    CHECK(rational_from_json(d.at("theta")) == Rational(-6));
    CHECK(d.at("gamma_samples").size() == 5);
    CHECK(d.at("ordering_passed") == true);
  }

  TEST_CASE("exact values survive serialization") {
    const Rational big = Rational(BigInt("123456789012345678901234567890"), BigInt(7));
    CHECK(rational_from_json(to_json(big, 6)) == big);
    const QuadraticSurd q(BigInt(3), BigInt(-5), BigInt(7), BigInt(11));
    CHECK(surd_from_json(to_json(q, 6)) == q);
    const SurdSum s = SurdSum(12) - SurdSum::sqrt(33, 2) + SurdSum::sqrt(5, Rational(1, 3));
    CHECK((surdsum_from_json(to_json(s, 6)) - s).empty());
    CHECK(exact_with_decimal(QuadraticSurd(Rational(5, 12)), 6) == "5/12 ≈ 0.416667");
  }

  TEST_CASE("diagram CSV output") {
    const auto prefix = (scratch_dir() / "diag").string();
    const Run r = run({"diagram", "--r", "2", "--k", "1", "--g", "8", "--out", prefix});
    REQUIRE(r.code == exit_code::kPass);
    const std::string points = slurp(prefix + "_points.csv");
    const std::string lines = slurp(prefix + "_lines.csv");
    CHECK(points.rfind("label,b,w,exact\n", 0) == 0);
    CHECK(points.find("b2_star,0.416667,0.388889,\"5/12 ≈ 0.416667\"") != std::string::npos);
    CHECK(lines.find("ell_star,0.000000,0.388889,") != std::string::npos);
    CHECK(lines.find("b_KE-,,,-0.333333") != std::string::npos);
    CHECK(Json::parse(slurp(prefix + ".json")).at("command") == "diagram");
  }

  TEST_CASE("config file overrides defaults and flags override the file") {
    const auto path = (scratch_dir() / "k3wall.conf").string();
    {
      std::ofstream f(path);
      f << "# test config\ndigits = 3\nhorizon = 0\n";
    }
    ConfigEnv env(path);
    Run r = run({"diagram", "--r", "2", "--k", "1", "--g", "8", "--format", "json", "--samples", "0"});
    REQUIRE(r.code == exit_code::kPass);
    CHECK(Json::parse(r.out).at("diagram").at("theta").at("decimal") == "-6.000");
    r = run({"diagram", "--r", "2", "--k", "1", "--g", "8", "--format", "json", "--samples", "0",
             "--digits", "1"});
    CHECK(Json::parse(r.out).at("diagram").at("theta").at("decimal") == "-6.0");
    r = run({"min-genus", "--r", "2", "--k", "1", "--format", "json"});
    CHECK(Json::parse(r.out).at("min_genus").at("stability") == "unverified horizon");

    {
      std::ofstream f(path);
      f << "colour = blue\n";
    }
    CHECK(run({"certify", "--r", "2", "--k", "1", "--g", "8"}).code == exit_code::kUsage);
    setenv("K3WALL_CONFIG", "/nonexistent/k3wall.conf", 1);
    CHECK(run({"certify", "--r", "2", "--k", "1", "--g", "8"}).code == exit_code::kIo);
  }

  TEST_CASE("config parser") {
    std::istringstream in("precision_bits=128\nz2_prime = alternative # trailing comment\n\n");
    const CliConfig c = parse_config(in);
    CHECK(c.precision_bits == 128);
    CHECK(c.z2_prime == Z2PrimeFormula::kAlternative);
    CHECK(c.horizon == 50);
    std::istringstream bad("precision_bits=abc\n");
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
  }

  TEST_CASE("polygon user chain") {
    const Run r = run({"polygon", "--r", "2", "--k", "1", "--g", "8", "--points", "-1,1;0,2", "--chi", "0",
                       "--format", "json"});
    REQUIRE(r.code == exit_code::kPass);
    const Json u = Json::parse(r.out).at("polygon").at("user_chain");
    CHECK(u.at("floor") == 5);
    CHECK(u.at("inside_triangle") == true);
    CHECK((surdsum_from_json(u.at("bound")) - SurdSum::sqrt(33)).empty());
  }

  TEST_CASE("lattice queries") {
    const Run r = run({"lattice", "--g", "8", "--v", "2,1,4", "--u", "1,0,1", "--format", "json"});
    REQUIRE(r.code == exit_code::kPass);
    const Json l = Json::parse(r.out).at("lattice");
    CHECK(l.dump().find("-2") != std::string::npos);
  }
}
