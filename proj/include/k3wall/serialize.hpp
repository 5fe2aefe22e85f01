#ifndef K3WALL_SERIALIZE_HPP
#define K3WALL_SERIALIZE_HPP

#include <json.hpp>

#include "k3wall/certify.hpp"
#include "k3wall/exact.hpp"
#include "k3wall/polygon.hpp"
#include "k3wall/walls.hpp"

namespace k3wall {

using Json = nlohmann::ordered_json;

/// {"num", "den", "exact", "decimal"}; integers that overflow 64 bits are strings.
Json to_json(const Rational& x, int digits);
/// {"p", "t", "D", "q", "exact", "decimal"}
Json to_json(const QuadraticSurd& x, int digits);
/// {"terms": [{"coefficient", "radicand"}], "exact", "decimal"}
Json to_json(const SurdSum& x, int digits, const SignOptions& options = {});

Rational rational_from_json(const Json& j);
QuadraticSurd surd_from_json(const Json& j);
SurdSum surdsum_from_json(const Json& j);

Json to_json(const CertificateReport& rep);
Json scenario_json(const CertificateReport& rep);

struct DiagramOptions {
  int digits = 6;
  int samples = 200;
};

Json diagram_json(const Scenario& sc, const DiagramOptions& options);
Json polygon_json(const Scenario& sc, int digits, Z2PrimeFormula formula,
                  const SignOptions& sign = {});

/// "5/12 ≈ 0.416667"
std::string exact_with_decimal(const QuadraticSurd& x, int digits);

}  // namespace k3wall

#endif  // K3WALL_SERIALIZE_HPP
