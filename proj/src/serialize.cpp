#include "chowla/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace chowla {

std::string decimal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const CycloElem& a) {
  Json j;
  j["p"] = a.p();
  j["coeffs"] = rationals_json(a.coeffs());
  return j;
}

CycloElem cyclo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("coeffs")) {
    throw std::invalid_argument("CycloElem JSON needs p and coeffs");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return CycloElem(j.at("p").get<int>(), std::move(coeffs));
}

Json to_json(const XkTable& table, std::optional<int> float_digits) {
  Json j;
  j["p"] = table.p();
  j["k"] = table.k();
  j["generator"] = table.generator();
  Json rows = Json::array();
  for (int r = 1; r < table.p(); ++r) {
    Json row;
    row["r"] = r;
    row["z"] = to_json(table.z(r));
    if (float_digits) row["x"] = to_decimal(xk_float(table, r, *float_digits), *float_digits);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const DimReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["dim"] = rep.dim;
  j["bound"] = rep.bound;
  j["case"] = std::string(to_string(rep.dim_case));
  Json basis = Json::array();
  for (const auto& f : rep.kernel.basis) basis.push_back(rationals_json(integer_normalized(f.values())));
  j["basis"] = std::move(basis);
  return j;
}

Json to_json(const FcdReport& rep, int digits) {
  Json j;
  j["corollary"] = to_string(rep.corollary);
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["det_exact"] = rep.det_exact ? Json(to_string(*rep.det_exact)) : Json(nullptr);
  j["det_float"] = to_decimal(rep.det_float, digits);
  j["formula_float"] = to_decimal(rep.formula_float, digits);
  j["rel_dev"] = to_decimal(rep.rel_dev, 6);
  j["pass"] = rep.pass;
  return j;
}

Json to_json(const PassReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["X"] = rep.series.X;
  j["estimate"] = decimal(rep.series.estimate);
  j["expected"] = decimal(rep.expected);
  j["deviation"] = decimal(rep.deviation);
  j["tolerance"] = decimal(rep.tolerance);
  j["converged"] = rep.converged;
  j["pass"] = rep.pass;
  return j;
}

Json to_json(const MomentReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["m"] = rep.m;
  j["lhs_exact"] = to_string(rep.lhs);
  j["lhs"] = decimal(rep.lhs_float);
  j["rhs_constant"] = decimal(rep.rhs_constant);
  j["rhs_doubled"] = decimal(rep.rhs_doubled);
  j["deviation"] = decimal(rep.deviation);
  j["bound"] = decimal(rep.bound);
  j["pass"] = rep.pass;
  return j;
}

Json to_json(const LSeriesReport& rep) {
  Json j;
  j["route"] = rep.route;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["f"] = rationals_json(rep.f);
  j["value_re"] = rep.value_re;
  j["value_im"] = rep.value_im;
  j["exact_zero"] = rep.exact_zero ? Json(*rep.exact_zero) : Json(nullptr);
  j["tolerance"] = rep.tolerance ? Json(decimal(*rep.tolerance)) : Json(nullptr);
  return j;
}

std::string xk_csv(const XkTable& table, int digits) {
  std::ostringstream os;
  os << "r,x\n";
  for (int r = 1; r < table.p(); ++r) os << r << ',' << to_decimal(xk_float(table, r, digits), digits) << '\n';
  return os.str();
}

std::string moment_csv_header() { return "p,k,m,lhs,rhs_doubled,deviation,bound,pass\n"; }

std::string moment_csv_row(const MomentReport& rep) {
  std::ostringstream os;
  os << rep.p << ',' << rep.k << ',' << rep.m << ',' << decimal(rep.lhs_float) << ','
     << decimal(rep.rhs_doubled) << ',' << decimal(rep.deviation) << ',' << decimal(rep.bound) << ','
     << (rep.pass ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace chowla
