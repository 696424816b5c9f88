#include "modform/modform.h"

#include "modform/json_io.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

struct mf_series {
  modform::QSeries value;
};

struct mf_mlde {
  modform::Mlde value;
};

namespace {

using namespace modform;

thread_local std::string last_error;
thread_local std::string last_error_json = "{}";

void clear_error() {
  last_error.clear();
  last_error_json = "{}";
}

mf_status record(mf_status status, std::string_view name, const std::string& message, Json extra = Json::object()) {
  last_error = message;
  extra["error"] = std::string(name);
  extra["message"] = message;
  last_error_json = extra.dump();
  return status;
}

template <class Fn>
mf_status guarded(Fn&& fn) {
  clear_error();
  try {
    fn();
    return MF_OK;
  } catch (const DependentGeneratorsError& e) {
    return record(MF_ERR_DEPENDENT_GENERATORS, error_name(e.code()), e.what(), Json{{"weight", e.weight()}});
  } catch (const Error& e) {
    return record(static_cast<mf_status>(e.code()), error_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return record(MF_ERR_INTERNAL, "Internal", e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string("null ") + what);
}

mf_series* wrap(QSeries s) { return new mf_series{std::move(s)}; }

QSeries named_form(std::string_view form, std::size_t terms) {
  if (form == "P") return eisenstein(Eisenstein::P, terms);
  if (form == "Q" || form == "E4") return eisenstein(Eisenstein::Q, terms);
  if (form == "R" || form == "E6") return eisenstein(Eisenstein::R, terms);
  if (form == "delta") return delta(terms);
  if (form.starts_with("eta^")) {
    const auto h = parse_rational(form.substr(4));
    if (!is_integer(h) || sgn(h) <= 0) throw Error(ErrorCode::InvalidArgument, "eta exponent must be positive");
    return eta_power(static_cast<unsigned>(to_long(h)), terms);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown form '" + std::string(form) + "'");
}

std::vector<Rational> parse_list(std::string_view csv) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json poincare_report(const PoincareSeries& ps, int max_weight) {
  Json coefficients = Json::array();
  for (int w = 0; w <= max_weight; ++w) {
    const long long c = ps_coefficient(ps, w);
    if (c != 0) coefficients.push_back(Json::array({w, c}));
  }
  Json out = to_json(ps);
  out["coefficients"] = coefficients;
  return out;
}

std::vector<VVMF> derivative_tower(const VVMF& f) {
  std::vector<VVMF> out{f};
  while (out.size() < f.dim()) out.push_back(serre_vvmf(out.back()));
  return out;
}

}  // namespace

extern "C" {

const char* mf_version(void) { return "1.0.0"; }

const char* mf_status_name(mf_status status) {
  if (status == MF_OK) return "OK";
  if (status == MF_ERR_INTERNAL) return "Internal";
  return error_name(static_cast<ErrorCode>(status)).data();
}

const char* mf_last_error(void) { return last_error.c_str(); }
const char* mf_last_error_json(void) { return last_error_json.c_str(); }
void mf_string_free(char* s) { std::free(s); }

mf_status mf_series_form(const char* form, size_t terms, mf_series** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "output");
    *out = wrap(named_form(form, terms));
  });
}

mf_status mf_series_from_json(const char* json, mf_series** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    Json parsed;
    try {
      parsed = Json::parse(json);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    *out = wrap(qseries_from_json(parsed));
  });
}

mf_status mf_series_to_json(const mf_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "output");
    *out = duplicate(to_json(s->value).dump());
  });
}

mf_status mf_series_to_text(const mf_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "output");
    *out = duplicate(to_text(s->value));
  });
}

void mf_series_free(mf_series* s) { delete s; }

mf_status mf_series_truncation(const mf_series* s, size_t* out) {
  return guarded([&] {
    require(s, "series");
    require(out, "output");
    *out = s->value.truncation();
  });
}

mf_status mf_series_add(const mf_series* a, const mf_series* b, mf_series** out) {
  return guarded([&] {
    require(a, "series");
    require(b, "series");
    require(out, "output");
    *out = wrap(add(a->value, b->value));
  });
}

mf_status mf_series_mul(const mf_series* a, const mf_series* b, mf_series** out) {
  return guarded([&] {
    require(a, "series");
    require(b, "series");
    require(out, "output");
    *out = wrap(mul(a->value, b->value));
  });
}

mf_status mf_series_scale(const mf_series* a, const char* rational, mf_series** out) {
  return guarded([&] {
    require(a, "series");
    require(rational, "scalar");
    require(out, "output");
    *out = wrap(scale(a->value, parse_rational(rational)));
  });
}

mf_status mf_series_theta(const mf_series* a, mf_series** out) {
  return guarded([&] {
    require(a, "series");
    require(out, "output");
    *out = wrap(theta(a->value));
  });
}

mf_status mf_series_serre(const mf_series* a, int weight, mf_series** out) {
  return guarded([&] {
    require(a, "series");
    require(out, "output");
    *out = wrap(serre_derivative(a->value, weight));
  });
}

mf_status mf_series_align(const mf_series* a, size_t terms, mf_series** out) {
  return guarded([&] {
    require(a, "series");
    require(out, "output");
    *out = wrap(align_truncation(a->value, terms));
  });
}

mf_status mf_series_evaluate(const mf_series* a, double tau_re, double tau_im, double* out_re, double* out_im,
                             int* reliable) {
  return guarded([&] {
    require(a, "series");
    require(out_re, "output");
    require(out_im, "output");
    const Evaluation e = evaluate(a->value, Complex(tau_re, tau_im));
    *out_re = e.value.real();
    *out_im = e.value.imag();
    if (reliable) *reliable = e.reliable ? 1 : 0;
  });
}

mf_status mf_dim_m(int weight, int* out) {
  return guarded([&] {
    require(out, "output");
    *out = dim_M(weight);
  });
}

mf_status mf_mlde_from_exponents(const char* exponents, mf_mlde** out) {
  return guarded([&] {
    require(exponents, "exponents");
    require(out, "output");
    const auto list = parse_list(exponents);
    *out = new mf_mlde{mlde_from_exponents(list)};
  });
}

mf_status mf_mlde_from_coeffs(int weight, const char* coeffs_json, mf_mlde** out) {
  return guarded([&] {
    require(coeffs_json, "coefficients");
    require(out, "output");
    Json parsed;
    try {
      parsed = Json::parse(coeffs_json);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    if (!parsed.is_array()) throw Error(ErrorCode::ParseError, "coefficients must be a JSON array");
    std::vector<PolynomialQR> coeffs;
    for (const auto& g : parsed) coeffs.push_back(polynomial_from_json(g));
    *out = new mf_mlde{Mlde(weight, std::move(coeffs))};
  });
}

void mf_mlde_free(mf_mlde* op) { delete op; }

mf_status mf_mlde_to_json(const mf_mlde* op, char** out) {
  return guarded([&] {
    require(op, "operator");
    require(out, "output");
    *out = duplicate(to_json(op->value).dump());
  });
}

mf_status mf_mlde_solve(const mf_mlde* op, size_t terms, char** report_json) {
  return guarded([&] {
    require(op, "operator");
    require(report_json, "output");
    const Mlde& L = op->value;
    const IndicialData indicial = indicial_polynomial(L);
    const VVMF system = fundamental_system(L, terms);
    Json residuals = Json::array();
    for (const auto& c : system.components()) residuals.push_back(to_json(verify_solution(L, c)));
    Json report = to_json(L);
    report["indicial"] = to_json(indicial);
    report["weight_relation"] = weight_relation_check(L.weight(), system.rep().exponents);
    report["solution"] = to_json(system);
    report["residuals"] = residuals;
    report["essential"] = is_essential(system, terms);
    report["cyclic_criterion"] = cyclic_criterion(system);
    *report_json = duplicate(report.dump());
  });
}

mf_status mf_mlde_monodromy(const mf_mlde* op, size_t terms, double tol, const double* points, size_t npoints,
                            char** report_json) {
  return guarded([&] {
    require(op, "operator");
    require(report_json, "output");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    const VVMF system = fundamental_system(op->value, terms);
    std::vector<Complex> taus;
    if (points) {
      for (size_t i = 0; i < npoints; ++i) taus.emplace_back(points[2 * i], points[2 * i + 1]);
    } else {
      taus = default_sample_points(system.dim());
    }
    RepData rep = system.rep();
    rep.rho_s = recover_rho_s(system, taus);
    const RelationReport relations = check_relations(rep, tol);
    Json pts = Json::array();
    for (const auto& t : taus) pts.push_back(Json::array({t.real(), t.imag()}));
    Json report{{"k0", system.weight()},
                {"exponents", to_json(system).at("exponents")},
                {"terms", terms},
                {"tol", tol},
                {"points", pts},
                {"rho_S", to_json(*rep.rho_s)},
                {"rho_T", to_json(rep.rho_t())},
                {"relations", to_json(relations)},
                {"s_squared_sign", relations.sign}};
    *report_json = duplicate(report.dump());
  });
}

mf_status mf_mlde_verify_basis(const mf_mlde* op, int k_max, size_t terms, char** report_json) {
  return guarded([&] {
    require(op, "operator");
    require(report_json, "output");
    const VVMF system = fundamental_system(op->value, terms);
    const auto generators = derivative_tower(system);
    const BasisReport basis = free_basis_verify(generators, k_max, terms);
    Json report = to_json(basis);
    report["expected_series"] = to_json(ps_cyclic(system.weight(), static_cast<int>(system.dim())));
    report["matches_cyclic_series"] =
        ps_from_weights(basis.fundamental_weights) == ps_cyclic(system.weight(), static_cast<int>(system.dim()));
    *report_json = duplicate(report.dump());
  });
}

mf_status mf_classify2d(int a, int b, char** report_json) {
  return guarded([&] {
    require(report_json, "output");
    const TwoDimClass cls = classify_2dim(a, b);
    Json report = to_json(cls);
    report["poincare"] = to_json(ps_from_weights(cls.fundamental_weights));
    if (cls.kind == TwoDimKind::Cyclic) report["coker_ps_difference"] = to_json(coker_ps_difference(cls));
    *report_json = duplicate(report.dump());
  });
}

mf_status mf_poincare_weights(const int* weights, size_t count, int max_weight, char** report_json) {
  return guarded([&] {
    require(report_json, "output");
    if (count > 0) require(weights, "weights");
    const PoincareSeries ps = ps_from_weights(std::span<const int>(weights, count));
    *report_json = duplicate(poincare_report(ps, max_weight).dump());
  });
}

mf_status mf_poincare_cyclic(int k0, int p, int max_weight, char** report_json) {
  return guarded([&] {
    require(report_json, "output");
    *report_json = duplicate(poincare_report(ps_cyclic(k0, p), max_weight).dump());
  });
}

}  // extern "C"
