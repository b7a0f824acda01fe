#pragma once

// JSON and CSV renderings. Rationals are "num/den" strings and floats are
// decimal strings, so output is byte-for-byte reproducible.

#include "chowla/analytics.hpp"
#include "chowla/cotsum.hpp"
#include "chowla/lseries.hpp"
#include "chowla/structmat.hpp"
#include "chowla/vanish.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chowla {

using Json = nlohmann::ordered_json;

/// Shortest round-tripping decimal form of a double; "inf"/"nan" otherwise.
std::string decimal(double x);

Json to_json(const CycloElem& a);
CycloElem cyclo_from_json(const Json& j);

Json rationals_json(const std::vector<Rational>& v);

/// {"p","k","generator","z":[{"r","value":CycloElem}...]}, plus "x" decimals with `digits`.
Json to_json(const XkTable& table, std::optional<int> float_digits = std::nullopt);

Json to_json(const DimReport& rep);
Json to_json(const FcdReport& rep, int digits);
Json to_json(const PassReport& rep);
Json to_json(const MomentReport& rep);

struct LSeriesReport {
  std::string route;  // "xk", "characters", "series"
  int p = 0;
  int k = 0;
  std::vector<Rational> f;
  std::string value_re;
  std::string value_im;
  std::optional<bool> exact_zero;
  std::optional<double> tolerance;
};

Json to_json(const LSeriesReport& rep);

/// Rows "r,x" with `digits` significant digits.
std::string xk_csv(const XkTable& table, int digits);
std::string moment_csv_header();
std::string moment_csv_row(const MomentReport& rep);

}  // namespace chowla
