#include "k3wall/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "k3wall/certify.hpp"
#include "k3wall/errors.hpp"
#include "k3wall/serialize.hpp"

namespace k3wall {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": not an integer: " + value);
  }
}

struct Common {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t g = 0;
  std::string format = "table";
  int digits = 6;
};

void add_scenario_flags(CLI::App* sub, Common& c) {
  sub->add_option("--r", c.r, "rank r")->required();
  sub->add_option("--k", c.k, "degree coefficient k")->required();
  sub->add_option("--g", c.g, "genus g = H^2/2 + 1")->required();
}

void add_format_flags(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--digits", c.digits, "decimal digits")->check(CLI::Range(0, 100));
}

Json envelope(const std::string& command, const CertificateReport& rep) {
  Json j;
  j["format_version"] = 1;
  j["command"] = command;
  j["scenario"] = scenario_json(rep);
  j["checks"] = to_json(rep);
  j["overall"] = rep.overall ? "PASS" : "FAIL";
  return j;
}

void print_report(std::ostream& out, const CertificateReport& rep) {
  out << "scenario r=" << rep.r << " k=" << rep.k << " g=" << rep.g << " H^2=" << rep.hsq;
  if (rep.s) out << " s=" << *rep.s;
  if (rep.v_square) out << " v^2=" << *rep.v_square;
  out << "\n";
  for (const auto& c : rep.checks) {
    out << std::left << std::setw(4) << to_string(c.id) << " " << std::setw(16) << equation_tag(c.id)
        << " " << std::setw(9) << to_string(c.verdict) << " " << c.witness << "\n";
    if (!c.info.empty()) out << "     " << std::string(16, ' ') << " " << std::string(9, ' ') << " "
                             << c.info << "\n";
  }
  out << "overall: " << (rep.overall ? "PASS" : "FAIL") << "\n";
}

Scenario scenario_or_usage(const Common& c) {
  if (c.g < 2) throw std::invalid_argument("--g must be >= 2");
  return make_scenario(c.r, c.k, Surface::from_genus(c.g));
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw IoError("write failed for " + path);
}

std::string points_csv(const Json& diagram) {
  std::ostringstream os;
  os << "label,b,w,exact\n";
  for (const auto& s : diagram.at("gamma_samples")) {
    os << "gamma," << s.at("b").at("decimal").get<std::string>() << ","
       << s.at("w").at("decimal").get<std::string>() << ",\n";
  }
  for (const auto& b : diagram.at("b_values")) {
    os << b.at("label").get<std::string>() << "," << b.at("b").at("decimal").get<std::string>()
       << "," << b.at("w").at("decimal").get<std::string>() << ","
       << csv_quote(b.at("display").get<std::string>()) << "\n";
  }
  for (const auto& m : diagram.at("region_markers")) {
    os << m.at("label").get<std::string>() << "," << m.at("b").at("decimal").get<std::string>()
       << "," << m.at("w").at("decimal").get<std::string>() << ","
       << csv_quote("(" + m.at("b").at("exact").get<std::string>() + ", " +
                    m.at("w").at("exact").get<std::string>() + ")")
       << "\n";
  }
  return os.str();
}

std::string lines_csv(const Json& diagram) {
  std::ostringstream os;
  os << "label,slope,intercept,b0\n";
  for (const auto& l : diagram.at("lines")) {
    os << l.at("label").get<std::string>() << "," << l.at("slope").at("decimal").get<std::string>()
       << "," << l.at("intercept").at("decimal").get<std::string>() << ",\n";
  }
  for (const auto& w : diagram.at("walls_above_ell_star")) {
    os << "wall_ch2=" << w.at("ch2").get<long>() << "," << w.at("slope").at("decimal").get<std::string>()
       << "," << w.at("intercept").at("decimal").get<std::string>() << ",\n";
  }
  for (const auto& v : diagram.at("verticals")) {
    os << v.at("label").get<std::string>() << ",,," << v.at("b").at("decimal").get<std::string>()
       << "\n";
  }
  return os.str();
}

void print_diagram_table(std::ostream& out, const Json& d) {
  out << "lines (w = slope b + intercept)\n";
  for (const auto& l : d.at("lines")) {
    out << "  " << std::left << std::setw(14) << l.at("label").get<std::string>() << " slope "
        << l.at("slope").at("exact").get<std::string>() << ", intercept "
        << l.at("intercept").at("exact").get<std::string>() << "\n";
  }
  out << "Gamma intersections\n";
  for (const auto& b : d.at("b_values")) {
    out << "  " << std::left << std::setw(14) << b.at("label").get<std::string>() << " "
        << b.at("display").get<std::string>() << "\n";
  }
  out << "eps = " << d.at("epsilons").at("eps").at("exact").get<std::string>()
      << ", eps' = " << d.at("epsilons").at("eps_prime").at("exact").get<std::string>()
      << ", theta = " << d.at("theta").at("exact").get<std::string>()
      << ", beta = " << d.at("beta").at("exact").get<std::string>() << "\n";
  out << "verticals\n";
  for (const auto& v : d.at("verticals")) {
    out << "  " << std::left << std::setw(14) << v.at("label").get<std::string>() << " b = "
        << v.at("b").at("exact").get<std::string>() << "\n";
  }
  out << "walls above ell*\n";
  for (const auto& w : d.at("walls_above_ell_star")) {
    out << "  ch2 = " << w.at("ch2").get<long>() << ": intercept "
        << w.at("intercept").at("exact").get<std::string>() << "\n";
  }
  out << "ordering\n";
  for (const auto& o : d.at("ordering")) {
    out << "  " << std::left << std::setw(18) << o.at("id").get<std::string>() << std::setw(9)
        << o.at("verdict").get<std::string>() << " " << o.at("statement").get<std::string>()
        << "   [" << o.at("witness").get<std::string>() << "]\n";
  }
  out << "ordering passed: " << (d.at("ordering_passed").get<bool>() ? "yes" : "no") << "\n";
}

void print_polygon_table(std::ostream& out, const Json& p) {
  auto pt = [&p](const char* key) {
    return "(" + p.at(key).at("re").at("exact").get<std::string>() + ", " +
           p.at(key).at("im").at("exact").get<std::string>() + ")";
  };
  auto val = [&p](const char* key) {
    return p.at(key).at("exact").get<std::string>() + " ≈ " +
           p.at(key).at("decimal").get<std::string>();
  };
  out << "z1 = " << pt("z1") << ", z2 = " << pt("z2") << "\n";
  out << "z0' = " << pt("z0_prime") << ", z1' = " << pt("z1_prime") << ", z2' = " << pt("z2_prime")
      << " (" << p.at("z2_prime_formula").get<std::string>() << ")\n";
  out << "refined chain convex: " << (p.at("refined_chain_convex").get<bool>() ? "yes" : "no")
      << "\n";
  out << "Q_out = " << val("Q_out") << "\n";
  out << "Q_in = " << val("Q_in") << "\n";
  out << "eps_out = " << val("eps_out") << "\n";
  out << "Q_out - Q_in - 2 eps_out = " << val("margin") << "  "
      << p.at("epsilon_check").get<std::string>() << "\n";
  out << "closed form of Q_out - Q_in matches: "
      << (p.at("Q_diff_closed_form_matches").get<bool>() ? "yes" : "no") << "\n";
  out << "h = " << val("h") << "  h < r+s+1: " << p.at("h_below_r_plus_s_plus_1").get<std::string>()
      << "\n";
  out << "triangle bound = " << p.at("triangle_bound").at("bound").at("exact").get<std::string>()
      << " ≈ " << p.at("triangle_bound").at("bound").at("decimal").get<std::string>() << ", floor "
      << p.at("triangle_bound").at("floor").dump() << "\n";
}

std::vector<ZbarPoint> parse_points(const std::string& text) {
  std::vector<ZbarPoint> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("point '" + item + "' needs re,im");
    const Rational re = Rational::parse(trim(item.substr(0, comma)));
    const Rational im = Rational::parse(trim(item.substr(comma + 1)));
    if (!re.is_integer() || !im.is_integer()) {
      throw std::invalid_argument("polygon points must be integral, got '" + item + "'");
    }
    pts.push_back({re, im});
  }
  if (pts.empty() || pts.front() != ZbarPoint{}) pts.insert(pts.begin(), ZbarPoint{});
  return pts;
}

MukaiVector parse_mukai(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c)) {
    throw std::invalid_argument("Mukai vector must be r,c,s: '" + text + "'");
  }
  return {std::stol(trim(a)), std::stol(trim(b)), std::stol(trim(c))};
}

}  // namespace

CliConfig parse_config(std::istream& in, CliConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "precision_bits") {
      const long v = parse_long(key, value);
      if (v < 64) throw ConfigError("precision_bits must be >= 64");
      base.precision_bits = static_cast<unsigned>(v);
    } else if (key == "horizon") {
      const long v = parse_long(key, value);
      if (v < 0) throw ConfigError("horizon must be >= 0");
      base.horizon = v;
    } else if (key == "digits") {
      const long v = parse_long(key, value);
      if (v < 0 || v > 100) throw ConfigError("digits must be in [0, 100]");
      base.digits = static_cast<int>(v);
    } else if (key == "z2_prime") {
      if (value == "verbatim") {
        base.z2_prime = Z2PrimeFormula::kVerbatim;
      } else if (value == "alternative") {
        base.z2_prime = Z2PrimeFormula::kAlternative;
      } else {
        throw ConfigError("z2_prime must be verbatim or alternative");
      }
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return base;
}

CliConfig load_config_file(const std::string& path, CliConfig base) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config file " + path);
  return parse_config(f, base);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  try {
    if (const char* path = std::getenv("K3WALL_CONFIG"); path != nullptr && *path != '\0') {
      config = load_config_file(path);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kIo;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }

  CLI::App app{"Exact wall-crossing geometry and genus certification for K3 surfaces", "k3wall"};
  app.require_subcommand(1);

  Common cert, mg, diag, poly, lat;
  for (Common* c : {&cert, &mg, &diag, &poly, &lat}) c->digits = config.digits;

  auto* certify_cmd = app.add_subcommand("certify", "check every hypothesis at one genus");
  add_scenario_flags(certify_cmd, cert);
  add_format_flags(certify_cmd, cert);

  std::int64_t gmax = 200;
  std::int64_t horizon = config.horizon;
  unsigned jobs = 1;
  auto* min_cmd = app.add_subcommand("min-genus", "least certified genus");
  min_cmd->add_option("--r", mg.r, "rank r")->required();
  min_cmd->add_option("--k", mg.k, "degree coefficient k")->required();
  min_cmd->add_option("--gmax", gmax, "largest genus to scan")->check(CLI::Range(2L, 1000000L));
  min_cmd->add_option("--horizon", horizon, "genera after g_min that must also pass")
      ->check(CLI::Range(0L, 1000000L));
  min_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  add_format_flags(min_cmd, mg);

  int samples = 200;
  std::string out_prefix;
  auto* diag_cmd = app.add_subcommand("diagram", "named lines, Gamma intersections, verticals");
  add_scenario_flags(diag_cmd, diag);
  add_format_flags(diag_cmd, diag);
  diag_cmd->add_option("--samples", samples, "Gamma samples")->check(CLI::Range(0, 1000000));
  diag_cmd->add_option("--out", out_prefix, "write PREFIX.json, PREFIX_points.csv, PREFIX_lines.csv");

  std::string points_text, chi_text;
  auto* poly_cmd = app.add_subcommand("polygon", "HN polygon bounds");
  add_scenario_flags(poly_cmd, poly);
  add_format_flags(poly_cmd, poly);
  poly_cmd->add_option("--points", points_text, "user chain 're,im;re,im;...' from the origin");
  poly_cmd->add_option("--chi", chi_text, "chi for the user chain (default chi of the push-forward)");

  std::string v_text, u_text;
  auto* lat_cmd = app.add_subcommand("lattice", "Mukai lattice queries");
  lat_cmd->add_option("--r", lat.r, "rank r");
  lat_cmd->add_option("--k", lat.k, "degree coefficient k");
  lat_cmd->add_option("--g", lat.g, "genus")->required();
  lat_cmd->add_option("--v", v_text, "Mukai vector r,c,s");
  lat_cmd->add_option("--u", u_text, "second Mukai vector r,c,s");
  add_format_flags(lat_cmd, lat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }

  CertifyOptions copts;
  copts.sign.max_bits = config.precision_bits;
  copts.z2_prime = config.z2_prime;
  SignOptions sign = copts.sign;

  try {
    if (*certify_cmd) {
      if (cert.g < 2) throw std::invalid_argument("--g must be >= 2");
      const CertificateReport rep = certify_genus(cert.r, cert.k, cert.g, copts);
      if (cert.format == "json") {
        out << envelope("certify", rep).dump(2) << "\n";
      } else {
        print_report(out, rep);
      }
      return rep.overall ? exit_code::kPass : exit_code::kFail;
    }

    if (*min_cmd) {
      if (mg.r < 1 || mg.k < 1) throw std::invalid_argument("--r and --k must be positive");
      const MinGenusResult res = min_genus(mg.r, mg.k, gmax, horizon, jobs, copts);
      const std::string stability = !res.g_min ? "n/a"
                                    : horizon == 0 ? "unverified horizon"
                                    : res.stable   ? "stable"
                                                   : "unstable";
      if (mg.format == "json") {
        Json j;
        if (res.report) {
          j = envelope("min-genus", *res.report);
        } else {
          j["format_version"] = 1;
          j["command"] = "min-genus";
          j["scenario"] = {{"r", mg.r}, {"k", mg.k}};
          j["checks"] = Json::array();
        }
        j["min_genus"] = {{"g_max", gmax},
                          {"horizon", horizon},
                          {"found", res.g_min.has_value()},
                          {"g_min", res.g_min ? Json(*res.g_min) : Json(nullptr)},
                          {"stable", res.stable},
                          {"stability", stability},
                          {"first_failure_after",
                           res.first_failure_after ? Json(*res.first_failure_after) : Json(nullptr)}};
        out << j.dump(2) << "\n";
      } else if (res.g_min) {
        out << "g_min = " << *res.g_min << "\n";
        out << "stable = " << (res.stable ? "true" : "false") << " (" << stability << ", horizon "
            << horizon << ")\n";
        if (res.first_failure_after) out << "first failure after g_min: g = " << *res.first_failure_after << "\n";
        print_report(out, *res.report);
      } else {
        out << "NotFound: no genus in [2, " << gmax << "] passes every check\n";
      }
      return res.g_min ? exit_code::kPass : exit_code::kNotFound;
    }

    if (*diag_cmd) {
      const Scenario sc = scenario_or_usage(diag);
      const CertificateReport rep = certify_genus(diag.r, diag.k, diag.g, copts);
      Json j = envelope("diagram", rep);
      j["diagram"] = diagram_json(sc, {diag.digits, samples});
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".json", j.dump(2) + "\n");
        write_file(out_prefix + "_points.csv", points_csv(j["diagram"]));
        write_file(out_prefix + "_lines.csv", lines_csv(j["diagram"]));
        out << "wrote " << out_prefix << ".json, " << out_prefix << "_points.csv, " << out_prefix
            << "_lines.csv\n";
      } else if (diag.format == "json") {
        out << j.dump(2) << "\n";
      } else {
        print_diagram_table(out, j["diagram"]);
      }
      return exit_code::kPass;
    }

    if (*poly_cmd) {
      const Scenario sc = scenario_or_usage(poly);
      const CertificateReport rep = certify_genus(poly.r, poly.k, poly.g, copts);
      Json j = envelope("polygon", rep);
      j["polygon"] = polygon_json(sc, poly.digits, config.z2_prime, sign);
      if (!points_text.empty()) {
        const HNPolygon user{parse_points(points_text)};
        const Rational chi = chi_text.empty() ? pushforward_class(sc.r, sc.k, sc.x).ch2
                                              : Rational::parse(chi_text);
        const H0Bound b = h0_bound(user, chi, sc.x, sign);
        const Triangle tri = outer_triangle(sc);
        bool inside = true;
        for (const auto& p : user.points) inside = inside && point_in_triangle(p, tri.z1, tri.z2, false);
        Json pts = Json::array();
        for (const auto& p : user.points) {
          pts.push_back({{"re", to_json(p.re, poly.digits)}, {"im", to_json(p.im, poly.digits)}});
        }
        j["polygon"]["user_chain"] = {{"points", pts},
                                      {"chi", to_json(chi, poly.digits)},
                                      {"bound", to_json(b.bound, poly.digits, sign)},
                                      {"floor", b.floor.fits_slong_p() ? Json(b.floor.get_si())
                                                                      : Json(b.floor.get_str())},
                                      {"inside_triangle", inside}};
      }
      if (poly.format == "json") {
        out << j.dump(2) << "\n";
      } else {
        print_polygon_table(out, j["polygon"]);
        if (j["polygon"].contains("user_chain")) {
          const Json& u = j["polygon"]["user_chain"];
          out << "user chain bound = " << u["bound"]["exact"].get<std::string>() << " ≈ "
              << u["bound"]["decimal"].get<std::string>() << ", floor " << u["floor"].dump()
              << ", inside triangle: " << (u["inside_triangle"].get<bool>() ? "yes" : "no") << "\n";
        }
      }
      return exit_code::kPass;
    }

    if (*lat_cmd) {
      if (lat.g < 2) throw std::invalid_argument("--g must be >= 2");
      const Surface x = Surface::from_genus(lat.g);
      Json j;
      j["format_version"] = 1;
      j["command"] = "lattice";
      j["scenario"] = {{"g", lat.g}, {"Hsq", x.hsq()}};
      j["checks"] = Json::array();
      Json body;
      if (lat.r != 0 || lat.k != 0) {
        const Scenario sc = make_scenario(lat.r, lat.k, x);
        j["scenario"]["r"] = sc.r;
        j["scenario"]["k"] = sc.k;
        j["scenario"]["s"] = sc.s;
        j["scenario"]["v_square"] = sc.v_square();
        body["dimension"] = theorem_dimension(sc.r, sc.k, sc.s, x);
        if (sc.k == 1) body["dimension_closed_form"] = 2 * lat.g - 2 * sc.r * (lat.g / sc.r);
        body["gcd_s_k"] = gcd(sc.s, sc.k);
        body["chi_O_v"] = euler_form({1, 0, 1}, sc.v, x);
        body["alpha"] = {sc.alpha.r, sc.alpha.c, sc.alpha.s};
        auto pi = [&](const Point& p) {
          return Json{{"b", to_json(p.b, lat.digits)}, {"w", to_json(p.w, lat.digits)}};
        };
        body["pi_v"] = pi(project_pi(sc.v));
        if (sc.alpha.r != 0) body["pi_alpha"] = pi(project_pi(sc.alpha));
        body["pi_v_minus_H"] = pi(project_pi(sc.v_minus_h));
        body["ch_v_minus_H"] = {sc.v_minus_h.ch0, sc.v_minus_h.ch1, sc.v_minus_h.ch2.to_string()};
        body["ch_pushforward"] = {sc.pushforward.ch0, sc.pushforward.ch1,
                                  sc.pushforward.ch2.to_string()};
      }
      if (!v_text.empty()) {
        const MukaiVector v = parse_mukai(v_text);
        body["v_square_query"] = mukai_square(v, x);
        if (!u_text.empty()) {
          const MukaiVector u = parse_mukai(u_text);
          body["pairing"] = mukai_pairing(v, u, x);
          body["euler_form"] = euler_form(v, u, x);
        }
      }
      j["lattice"] = body;
      if (lat.format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << "g=" << lat.g << " H^2=" << x.hsq() << "\n";
        for (const auto& [key, value] : j["scenario"].items()) {
          if (key != "g" && key != "Hsq") out << key << " = " << value.dump() << "\n";
        }
        for (const auto& [key, value] : body.items()) {
          if (value.is_object() && value.contains("b")) {
            out << key << " = (" << value["b"]["exact"].get<std::string>() << ", "
                << value["w"]["exact"].get<std::string>() << ")\n";
          } else {
            out << key << " = " << value.dump() << "\n";
          }
        }
      }
      return exit_code::kPass;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kIo;
  } catch (const NonConvex& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kFail;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << " (raise precision_bits in the config file)\n";
    return exit_code::kFail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kFail;
  }
  return exit_code::kUsage;
}

}  // namespace k3wall
