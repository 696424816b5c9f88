#pragma once

// JSON encodings. Exact rationals are always "num/den" strings; complex
// coefficients are [re, im] pairs.

#include "modform/mlde.hpp"
#include "modform/structure.hpp"

#include <json.hpp>

#include <string>

namespace modform {

using Json = nlohmann::json;

Json to_json(const QSeries& s);
Json to_json(const ComplexSeries& s);
QSeries qseries_from_json(const Json& j);
ComplexSeries complex_series_from_json(const Json& j);

/// {"weight": w, "coords": [{"u": u, "v": v, "c": "num/den"}, ...]}
Json to_json(const PolynomialQR& f);
PolynomialQR polynomial_from_json(const Json& j);

Json to_json(const Mlde& op);
Json to_json(const IndicialData& data);
Json to_json(const Residual& r);
Json to_json(const VVMF& f);
Json to_json(const ValidationReport& r);
Json to_json(const ComplexMatrix& m);
Json to_json(const RelationReport& r);
Json to_json(const PoincareSeries& ps);
Json to_json(const IntPolynomial& poly);
Json to_json(const TwoDimClass& cls);
Json to_json(const BasisReport& r);

/// "q^(1/12)*(1 - 2*q - q^2 + O(q^6))" style rendering.
std::string to_text(const QSeries& s);

}  // namespace modform
