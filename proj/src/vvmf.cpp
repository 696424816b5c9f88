#include "modform/vvmf.hpp"

#include "modform/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace modform {

ComplexMatrix RepData::rho_t() const {
  ComplexMatrix t = ComplexMatrix::Zero(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    t(j, j) = std::exp(Complex(0.0, 2.0 * std::numbers::pi * exponents[j].get_d()));
  return t;
}

RepData make_rep(std::vector<Rational> exponents, int s_squared_sign) {
  for (const auto& m : exponents)
    if (sgn(m) < 0 || m >= 1) throw Error(ErrorCode::OutOfRange, "exponent " + format_rational(m) + " not in [0, 1)");
  if (s_squared_sign != 1 && s_squared_sign != -1)
    throw Error(ErrorCode::InvalidArgument, "rho(S^2) sign must be +1 or -1");
  RepData rep;
  rep.exponents = std::move(exponents);
  rep.s_squared_sign = s_squared_sign;
  return rep;
}

VVMF::VVMF(int weight, RepData rep, std::vector<QSeries> components)
    : weight_(weight), rep_(std::move(rep)), components_(std::move(components)) {
  if (components_.size() != rep_.dim())
    throw Error(ErrorCode::InvalidArgument, "component count does not match the representation dimension");
}

ValidationReport validate(const VVMF& f) {
  ValidationReport report;
  for (std::size_t j = 0; j < f.dim(); ++j) {
    ComponentCheck check{j, true, "holomorphic at infinity"};
    const QSeries& c = f.component(j);
    if (!c.is_zero()) {
      const Rational gap = c.leading() - f.rep().exponents[j];
      if (!is_integer(gap)) {
        check.holomorphic = false;
        check.message = "leading exponent " + format_rational(c.leading()) + " is not congruent to m = " +
                        format_rational(f.rep().exponents[j]) + " mod 1";
      } else if (sgn(gap) < 0) {
        check.holomorphic = false;
        check.message = "meromorphic at infinity: leading exponent " + format_rational(c.leading()) + " < m = " +
                        format_rational(f.rep().exponents[j]);
      }
    }
    report.ok = report.ok && check.holomorphic;
    report.components.push_back(std::move(check));
  }
  return report;
}

VVMF module_action(const QSeries& g, int w, const VVMF& f) {
  if (!g.is_zero() && (!is_integer(g.leading()) || sgn(g.leading()) < 0))
    throw Error(ErrorCode::InvalidArgument, "multiplier is not a holomorphic classical form");
  std::vector<QSeries> out;
  out.reserve(f.dim());
  for (const auto& c : f.components()) out.push_back(mul(g, c));
  return VVMF(f.weight() + w, f.rep(), std::move(out));
}

VVMF module_action(const PolynomialQR& g, const VVMF& f) {
  std::size_t terms = 0;
  for (const auto& c : f.components()) terms = std::max(terms, c.truncation());
  return module_action(to_qexpansion(g, terms), g.weight(), f);
}

VVMF serre_vvmf(const VVMF& f) {
  std::vector<QSeries> out;
  out.reserve(f.dim());
  for (const auto& c : f.components()) out.push_back(serre_derivative(c, f.weight()));
  return VVMF(f.weight() + 2, f.rep(), std::move(out));
}

bool is_essential(const VVMF& f, std::size_t terms) {
  const std::size_t p = f.dim();
  if (terms + 1 < p)
    throw Error(ErrorCode::InsufficientTruncation, std::to_string(terms + 1) + " coefficients cannot separate " +
                                                       std::to_string(p) + " components");
  // Columns are exact exponents; only exponents known for every component of
  // the same lattice class contribute.
  std::vector<QSeries> rows;
  rows.reserve(p);
  for (const auto& c : f.components()) {
    if (c.is_zero()) return false;
    rows.push_back(align_truncation(c, terms));
  }
  std::map<Rational, Rational> top_by_class;
  for (const auto& r : rows) {
    Rational cls = r.leading() - Rational(floor_of(r.leading()));
    auto [it, inserted] = top_by_class.emplace(cls, r.known_through());
    if (!inserted) it->second = std::min(it->second, r.known_through());
  }
  std::map<Rational, std::size_t> column;
  for (const auto& r : rows) {
    const Rational cls = r.leading() - Rational(floor_of(r.leading()));
    for (std::size_t n = 0; n <= r.truncation(); ++n) {
      Rational e = r.leading() + Rational(static_cast<long>(n));
      if (e <= top_by_class[cls]) column.emplace(e, 0);
    }
  }
  std::size_t idx = 0;
  for (auto& [e, i] : column) i = idx++;
  RationalMatrix m(p, std::vector<Rational>(column.size(), Rational(0)));
  for (std::size_t j = 0; j < p; ++j) {
    const auto& r = rows[j];
    for (std::size_t n = 0; n <= r.truncation(); ++n) {
      auto it = column.find(r.leading() + Rational(static_cast<long>(n)));
      if (it != column.end()) m[j][it->second] = r[n];
    }
  }
  return rank(std::move(m)) == p;
}

std::vector<Complex> evaluate_vec(const VVMF& f, Complex tau) {
  std::vector<Complex> out;
  out.reserve(f.dim());
  for (const auto& c : f.components()) out.push_back(evaluate(c, tau).value);
  return out;
}

std::vector<Complex> default_sample_points(std::size_t count) {
  std::vector<Complex> points;
  for (std::size_t l = 0; l < count; ++l) {
    const double angle = count == 1 ? 1.35 : 1.15 + 0.40 * static_cast<double>(l) / static_cast<double>(count - 1);
    points.push_back(std::polar(1.0, angle));
  }
  return points;
}

ComplexMatrix recover_rho_s(const VVMF& f, std::span<const Complex> points) {
  const std::size_t p = f.dim();
  if (points.size() != p)
    throw Error(ErrorCode::InvalidArgument, "need exactly " + std::to_string(p) + " sample points");
  std::vector<ComplexSeries> numeric;
  numeric.reserve(p);
  for (const auto& c : f.components()) numeric.push_back(to_complex(c));

  ComplexMatrix at_tau(p, p);
  ComplexMatrix at_s(p, p);
  for (std::size_t l = 0; l < p; ++l) {
    const Complex tau = points[l];
    const Complex s_tau = -1.0 / tau;
    const Complex factor = std::pow(tau, -f.weight());
    for (std::size_t j = 0; j < p; ++j) {
      at_tau(j, l) = evaluate(numeric[j], tau).value;
      at_s(j, l) = factor * evaluate(numeric[j], s_tau).value;
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(at_tau);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (!(smallest > 0.0) || sv(0) / smallest > 1e8)
    throw Error(ErrorCode::SingularSampleMatrix, "sample matrix is numerically singular; choose other points");
  return at_s * at_tau.inverse();
}

RelationReport check_relations(const RepData& rep, double tol) {
  if (!rep.rho_s) throw Error(ErrorCode::InvalidArgument, "representation has no rho(S)");
  const ComplexMatrix& s = *rep.rho_s;
  const auto p = static_cast<Eigen::Index>(rep.dim());
  if (s.rows() != p || s.cols() != p) throw Error(ErrorCode::InvalidArgument, "rho(S) has the wrong shape");
  const ComplexMatrix id = ComplexMatrix::Identity(p, p);
  const ComplexMatrix s2 = s * s;
  const double plus = (s2 - id).cwiseAbs().maxCoeff();
  const double minus = (s2 + id).cwiseAbs().maxCoeff();

  RelationReport report;
  report.sign = plus <= minus ? 1 : -1;
  report.s_squared_residual = std::min(plus, minus);
  const ComplexMatrix st = s * rep.rho_t();
  report.braid_residual = (st * st * st - s2).cwiseAbs().maxCoeff();
  report.holds = report.s_squared_residual <= tol && report.braid_residual <= tol;
  return report;
}

}  // namespace modform
