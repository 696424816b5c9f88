// Command-line front end over the modform C API.
//
//   modform qexp --form Q --terms 8
//   modform serre --form delta --terms 16
//   modform mlde solve --exponents 0,5/6 --terms 32
//   modform monodromy --mlde 0,5/6 --terms 80 --tol 1e-6
//   modform classify2d --a 10 --b 0
//   modform poincare --weights 4,6
//   modform verify-basis --mlde 0,5/6 --kmax 40
//
// Exit status: 0 success, 1 domain error (JSON error object on stdout),
// 2 usage error.

#include "modform/modform.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_terms() {
  if (const char* env = std::getenv("MODFORM_TERMS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 64;
}

struct Config {
  std::size_t terms = default_terms();
  double tol = 1e-6;
  std::string format = "json";
};

// Owns a string handed out by the library.
struct Owned {
  char* s = nullptr;
  ~Owned() { mf_string_free(s); }
};

struct Failure {
  int code;
};

void check(mf_status status) {
  if (status != MF_OK) throw Failure{kDomainError};
}

void emit(const std::string& json, const Config& cfg) {
  if (cfg.format == "text")
    std::cout << nlohmann::json::parse(json).dump(2) << "\n";
  else
    std::cout << json << "\n";
}

void emit_series(mf_series* s, const Config& cfg) {
  Owned out;
  if (cfg.format == "text") {
    check(mf_series_to_text(s, &out.s));
    std::cout << out.s << "\n";
  } else {
    check(mf_series_to_json(s, &out.s));
    std::cout << out.s << "\n";
  }
}

std::string read_argument(const std::string& value) {
  if (!value.empty() && value.front() == '@') {
    std::ifstream in(value.substr(1));
    if (!in) throw UsageError("cannot open " + value.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return value;
}

struct MldeHandle {
  mf_mlde* op = nullptr;
  ~MldeHandle() { mf_mlde_free(op); }
};

struct SeriesHandle {
  mf_series* s = nullptr;
  ~SeriesHandle() { mf_series_free(s); }
};

void build_mlde(MldeHandle& h, const std::string& exponents, std::optional<int> weight, const std::string& coeffs) {
  if (!exponents.empty()) {
    if (weight || !coeffs.empty()) throw UsageError("give either exponents or --weight/--coeffs, not both");
    check(mf_mlde_from_exponents(exponents.c_str(), &h.op));
    return;
  }
  if (!weight) throw UsageError("an operator needs exponents or --weight with --coeffs");
  const std::string json = coeffs.empty() ? "[]" : read_argument(coeffs);
  check(mf_mlde_from_coeffs(*weight, json.c_str(), &h.op));
}

std::optional<int> natural_weight(const std::string& form) {
  if (form == "Q" || form == "E4") return 4;
  if (form == "R" || form == "E6") return 6;
  if (form == "delta") return 12;
  if (form.rfind("eta^", 0) == 0) {
    const int h = std::atoi(form.c_str() + 4);
    if (h > 0 && h % 2 == 0) return h / 2;
  }
  return std::nullopt;
}

std::vector<double> parse_points(const std::string& text) {
  // "re,im;re,im;..."
  std::vector<double> out;
  std::stringstream in(text);
  std::string pair;
  while (std::getline(in, pair, ';')) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw UsageError("points are re,im pairs separated by ';'");
    out.push_back(std::stod(pair.substr(0, comma)));
    out.push_back(std::stod(pair.substr(comma + 1)));
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-expansions, MLDEs and module structure for modular forms on SL(2,Z)"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--terms", cfg.terms, "number of q-expansion terms (env MODFORM_TERMS)")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  std::string form;
  auto* qexp = app.add_subcommand("qexp", "q-expansion of P, Q, R, delta or eta^h");
  qexp->add_option("--form", form, "P|Q|R|delta|eta^h")->required();
  add_common(qexp);

  std::string serre_form, serre_input;
  std::optional<int> serre_weight;
  auto* serre = app.add_subcommand("serre", "Serre derivative of a named form or a series JSON file");
  auto* serre_form_opt = serre->add_option("--form", serre_form, "P|Q|R|delta|eta^h");
  serre->add_option("--input", serre_input, "series JSON file")->excludes(serre_form_opt);
  serre->add_option("--weight", serre_weight, "weight at which the series is regarded");
  add_common(serre);

  auto* mlde = app.add_subcommand("mlde", "modular linear differential equations");
  mlde->require_subcommand(1);
  std::string exponents, coeffs;
  std::optional<int> mlde_weight;
  auto* solve = mlde->add_subcommand("solve", "fundamental system of an MLDE");
  solve->add_option("--exponents", exponents, "indicial roots, e.g. 0,5/6");
  solve->add_option("--weight", mlde_weight, "weight k0 of an explicit operator");
  solve->add_option("--coeffs", coeffs, "JSON array of g_0..g_{p-2} (or @file)");
  add_common(solve);

  std::string mono_spec, mono_points, mono_coeffs;
  std::optional<int> mono_weight;
  auto* monodromy = app.add_subcommand("monodromy", "numeric rho(S) of a fundamental system");
  monodromy->add_option("--mlde", mono_spec, "indicial roots, e.g. 0,5/6");
  monodromy->add_option("--weight", mono_weight, "weight k0 of an explicit operator");
  monodromy->add_option("--coeffs", mono_coeffs, "JSON array of g_0..g_{p-2} (or @file)");
  monodromy->add_option("--tol", cfg.tol, "relation tolerance")->check(CLI::PositiveNumber);
  monodromy->add_option("--points", mono_points, "sample points re,im;re,im;...");
  add_common(monodromy);

  int a = 0, b = 0;
  auto* classify = app.add_subcommand("classify2d", "2-dimensional indecomposable extension of chi^b by chi^a");
  classify->add_option("--a", a, "sub-character exponent")->required();
  classify->add_option("--b", b, "quotient character exponent")->required();
  add_common(classify);

  std::string ps_weights, ps_cyclic_arg;
  int ps_max = 40;
  auto* poincare = app.add_subcommand("poincare", "Hilbert-Poincare series");
  auto* w_opt = poincare->add_option("--weights", ps_weights, "fundamental weights, e.g. 4,6");
  poincare->add_option("--cyclic", ps_cyclic_arg, "k0,p of a cyclic R-module")->excludes(w_opt);
  poincare->add_option("--max-weight", ps_max, "list coefficients up to this weight");
  add_common(poincare);

  std::string vb_spec, vb_coeffs;
  std::optional<int> vb_weight;
  int k_max = 40;
  auto* verify = app.add_subcommand("verify-basis", "check {F, DF, ...} as free M-generators");
  verify->add_option("--mlde", vb_spec, "indicial roots, e.g. 0,5/6");
  verify->add_option("--weight", vb_weight, "weight k0 of an explicit operator");
  verify->add_option("--coeffs", vb_coeffs, "JSON array of g_0..g_{p-2} (or @file)");
  verify->add_option("--kmax", k_max, "largest weight to check");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*qexp) {
      SeriesHandle s;
      check(mf_series_form(form.c_str(), cfg.terms, &s.s));
      emit_series(s.s, cfg);
    } else if (*serre) {
      SeriesHandle in, out;
      int weight = 0;
      if (!serre_input.empty()) {
        check(mf_series_from_json(read_argument("@" + serre_input).c_str(), &in.s));
        if (!serre_weight) throw UsageError("--weight is required with --input");
        weight = *serre_weight;
      } else {
        if (serre_form.empty()) throw UsageError("give --form or --input");
        check(mf_series_form(serre_form.c_str(), cfg.terms, &in.s));
        const auto w = serre_weight ? serre_weight : natural_weight(serre_form);
        if (!w) throw UsageError("--weight is required for " + serre_form);
        weight = *w;
      }
      check(mf_series_serre(in.s, weight, &out.s));
      emit_series(out.s, cfg);
    } else if (*solve) {
      MldeHandle h;
      build_mlde(h, exponents, mlde_weight, coeffs);
      Owned report;
      check(mf_mlde_solve(h.op, cfg.terms, &report.s));
      emit(report.s, cfg);
    } else if (*monodromy) {
      MldeHandle h;
      build_mlde(h, mono_spec, mono_weight, mono_coeffs);
      const auto points = mono_points.empty() ? std::vector<double>{} : parse_points(mono_points);
      Owned report;
      check(mf_mlde_monodromy(h.op, cfg.terms, cfg.tol, points.empty() ? nullptr : points.data(), points.size() / 2,
                              &report.s));
      emit(report.s, cfg);
    } else if (*classify) {
      Owned report;
      check(mf_classify2d(a, b, &report.s));
      emit(report.s, cfg);
    } else if (*poincare) {
      Owned report;
      if (!ps_cyclic_arg.empty()) {
        const auto args = parse_ints(ps_cyclic_arg);
        if (args.size() != 2) throw UsageError("--cyclic takes k0,p");
        check(mf_poincare_cyclic(args[0], args[1], ps_max, &report.s));
      } else if (!ps_weights.empty()) {
        const auto weights = parse_ints(ps_weights);
        check(mf_poincare_weights(weights.data(), weights.size(), ps_max, &report.s));
      } else {
        throw UsageError("give --weights or --cyclic");
      }
      emit(report.s, cfg);
    } else if (*verify) {
      MldeHandle h;
      build_mlde(h, vb_spec, vb_weight, vb_coeffs);
      Owned report;
      check(mf_mlde_verify_basis(h.op, k_max, cfg.terms, &report.s));
      emit(report.s, cfg);
    }
  } catch (const Failure& f) {
    std::cout << mf_last_error_json() << "\n";
    return f.code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: malformed number\n";
    return kUsageError;
  }
  return 0;
}
