#pragma once

#include <json.hpp>

#include "opf/certificate.hpp"
#include "opf/error.hpp"
#include "opf/lambda_poly.hpp"
#include "opf/lincomb.hpp"
#include "opf/parse.hpp"
#include "opf/rational.hpp"
#include "opf/redblack.hpp"
#include "opf/series.hpp"

namespace opf {

using json = nlohmann::ordered_json;

json scalar_to_json(const Rational& r);
json scalar_to_json(const LambdaPoly& p);

/// [{"basis": "...", "coeff": "n/d"}, ...] or "coeff_lambda" for λ-scalars,
/// in canonical-string order.
template <class B, class S>
json to_json(const LinComb<B, S>& x) {
  json out = json::array();
  for (const auto& [basis, c] : x.sorted_terms()) {
    json term;
    term["basis"] = basis;
    if constexpr (std::is_same_v<S, LambdaPoly>)
      term["coeff_lambda"] = scalar_to_json(c);
    else
      term["coeff"] = scalar_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

Rational rational_from_json(const json& j);
LambdaPoly lambda_poly_from_json(const json& j);

/// Inverse of to_json. Every basis string is parsed as `kind`; a term written
/// in another grammar fails with ParseError.
template <class B, class S>
LinComb<B, S> lincomb_from_json(const json& j, BasisKind kind) {
  if (!j.is_array()) throw Error("linear combination JSON must be an array");
  LinComb<B, S> out;
  for (const auto& term : j) {
    if (!term.contains("basis")) throw Error("linear combination term lacks \"basis\"");
    Term parsed = parse_term(term.at("basis").get<std::string>(), kind);
    const B* b = std::get_if<B>(&parsed);
    if (!b) throw Error("basis kind mismatch for " + term.at("basis").get<std::string>());
    if constexpr (std::is_same_v<S, LambdaPoly>) {
      if (!term.contains("coeff_lambda")) throw Error("expected \"coeff_lambda\" for a λ-scalar term");
      out.add_term(*b, lambda_poly_from_json(term.at("coeff_lambda")));
    } else {
      if (!term.contains("coeff")) throw Error("expected \"coeff\" for a rational term");
      out.add_term(*b, rational_from_json(term.at("coeff")));
    }
  }
  return out;
}

json to_json(const RankCertificate& c);
json to_json(const Decomposition& d);
json to_json(const DimSeries& d);

}  // namespace opf
