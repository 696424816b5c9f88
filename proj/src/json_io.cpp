#include "modform/json_io.hpp"

#include <sstream>

namespace modform {

namespace {

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "expected a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

Json string_list(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(format_rational(x));
  return out;
}

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const QSeries& s) {
  return {{"leading", format_rational(s.leading())}, {"coeffs", string_list(s.coeffs())}};
}

Json to_json(const ComplexSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(complex_pair(c));
  return {{"leading", format_rational(s.leading())}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const Json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from(c));
    return QSeries(rational_from(j.at("leading")), std::move(coeffs));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed series JSON: ") + e.what());
  }
}

ComplexSeries complex_series_from_json(const Json& j) {
  try {
    std::vector<Complex> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    return ComplexSeries(rational_from(j.at("leading")), std::move(coeffs));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const PolynomialQR& f) {
  Json coords = Json::array();
  for (const auto& [m, c] : f.coords()) coords.push_back({{"u", m.u}, {"v", m.v}, {"c", format_rational(c)}});
  return {{"weight", f.weight()}, {"coords", coords}};
}

PolynomialQR polynomial_from_json(const Json& j) {
  try {
    PolynomialQR::Coords coords;
    for (const auto& t : j.at("coords"))
      coords[{t.at("u").get<int>(), t.at("v").get<int>()}] += rational_from(t.at("c"));
    return PolynomialQR(j.at("weight").get<int>(), std::move(coords));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed form JSON: ") + e.what());
  }
}

Json to_json(const Mlde& op) {
  Json coeffs = Json::array();
  for (const auto& g : op.coeffs()) coeffs.push_back(to_json(g));
  return {{"k0", op.weight()}, {"order", op.order()}, {"coeffs", coeffs}};
}

Json to_json(const IndicialData& data) {
  return {{"poly", string_list(data.poly)},
          {"roots", string_list(data.roots)},
          {"fully_rational", data.fully_rational},
          {"root_sum", format_rational(data.root_sum)}};
}

Json to_json(const Residual& r) {
  Json out{{"zero", r.zero}, {"checked_terms", r.checked_terms}};
  if (r.first_exponent) {
    out["first_exponent"] = format_rational(*r.first_exponent);
    out["first_value"] = format_rational(r.first_value);
  }
  return out;
}

Json to_json(const VVMF& f) {
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  return {{"weight", f.weight()}, {"exponents", string_list(f.rep().exponents)}, {"components", comps}};
}

Json to_json(const ValidationReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back({{"index", c.index}, {"holomorphic", c.holomorphic}, {"message", c.message}});
  return {{"ok", r.ok}, {"components", comps}};
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const RelationReport& r) {
  return {{"holds", r.holds},
          {"sign", r.sign},
          {"s_squared_residual", r.s_squared_residual},
          {"braid_residual", r.braid_residual}};
}

Json to_json(const IntPolynomial& poly) {
  Json terms = Json::array();
  for (const auto& [e, c] : poly) terms.push_back(Json::array({e, c}));
  return terms;
}

Json to_json(const PoincareSeries& ps) {
  return {{"numerator", to_json(ps.numerator())}, {"denominator", "(1-t^4)(1-t^6)"}};
}

Json to_json(const TwoDimClass& cls) {
  Json out{{"a", cls.a},
           {"b", cls.b},
           {"kind", cls.kind == TwoDimKind::Split ? "split" : "cyclic"},
           {"k0", cls.k0},
           {"fundamental_weights", cls.fundamental_weights}};
  out["coker_weight"] = cls.coker_weight ? Json(*cls.coker_weight) : Json(nullptr);
  return out;
}

Json to_json(const BasisReport& r) {
  Json weights = Json::array();
  for (const auto& w : r.weights)
    weights.push_back(
        {{"weight", w.weight}, {"spanning_set", w.spanning_set}, {"rank", w.rank}, {"expected", w.expected}});
  return {{"consistent", r.consistent},
          {"k_max", r.k_max},
          {"fundamental_weights", r.fundamental_weights},
          {"weights", weights},
          {"summary", r.summary}};
}

std::string to_text(const QSeries& s) {
  std::ostringstream out;
  if (sgn(s.leading()) != 0) out << "q^(" << s.leading().get_str() << ")*(";
  bool first = true;
  for (std::size_t n = 0; n <= s.truncation(); ++n) {
    const Rational& c = s[n];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    out << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    if (n == 0 || mag != 1) out << mag.get_str() << (n > 0 ? "*" : "");
    if (n == 1) out << "q";
    if (n > 1) out << "q^" << n;
    first = false;
  }
  if (first) out << "0";
  out << " + O(q^" << s.truncation() + 1 << ")";
  if (sgn(s.leading()) != 0) out << ")";
  return out.str();
}

}  // namespace modform
