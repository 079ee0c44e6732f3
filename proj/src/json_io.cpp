#include "opf/json_io.hpp"

namespace opf {

json scalar_to_json(const Rational& r) { return r.to_fraction_string(); }

json scalar_to_json(const LambdaPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_fraction_string());
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error("rational must be a string \"n/d\" or an integer");
}

LambdaPoly lambda_poly_from_json(const json& j) {
  if (!j.is_array()) throw Error("\"coeff_lambda\" must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return LambdaPoly(std::move(coeffs));
}

json to_json(const RankCertificate& c) {
  json out;
  out["map"] = c.map;
  out["n"] = c.n;
  out["source_dim"] = c.source_dim;
  out["rank"] = c.rank;
  out["injective"] = c.injective;
  out["matrix"] = {c.rows, c.cols};
  out["eliminated_cols"] = c.eliminated_cols;
  if (c.lambda) out["lambda"] = c.lambda->to_fraction_string();
  return out;
}

json to_json(const Decomposition& d) {
  json out;
  out["blocks"] = d.blocks;
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(to_string(c));
  out["components"] = comps;
  out["skeleton"] = to_string(d.skeleton);
  return out;
}

json to_json(const DimSeries& d) {
  json out;
  out["kind"] = series_kind_name(d.kind);
  json dims = json::array();
  for (const auto& v : d.dims) {
    // Integers stay numbers; a fractional "dimension" is kept exact as a string.
    if (v.is_integer() && v.numerator().fits_slong_p())
      dims.push_back(v.numerator().get_si());
    else
      dims.push_back(v.to_string());
  }
  out["dims"] = dims;
  return out;
}

}  // namespace opf
