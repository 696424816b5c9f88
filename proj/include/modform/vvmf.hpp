#pragma once

// Vector-valued modular forms for SL(2, Z) with rho(T) = diag(e^{2 pi i m_j}).

#include "modform/classical.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modform {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct RepData {
  /// T-exponents m_j, each in [0, 1).
  std::vector<Rational> exponents;
  std::optional<ComplexMatrix> rho_s;
  /// rho(S^2) = sign * I.
  int s_squared_sign = 1;

  std::size_t dim() const { return exponents.size(); }
  ComplexMatrix rho_t() const;
};

/// Checks 0 <= m_j < 1 (OutOfRange otherwise).
RepData make_rep(std::vector<Rational> exponents, int s_squared_sign = 1);

class VVMF {
 public:
  VVMF(int weight, RepData rep, std::vector<QSeries> components);

  int weight() const { return weight_; }
  const RepData& rep() const { return rep_; }
  std::size_t dim() const { return components_.size(); }
  const std::vector<QSeries>& components() const { return components_; }
  const QSeries& component(std::size_t j) const { return components_.at(j); }

 private:
  int weight_;
  RepData rep_;
  std::vector<QSeries> components_;
};

struct ComponentCheck {
  std::size_t index = 0;
  bool holomorphic = true;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ComponentCheck> components;
};

/// Holomorphy at the cusp: leading_j - m_j must be a nonnegative integer for
/// every nonzero component.
ValidationReport validate(const VVMF& f);

/// g * F for a classical form g of weight w (integer leading exponent >= 0).
VVMF module_action(const QSeries& g, int w, const VVMF& f);
VVMF module_action(const PolynomialQR& g, const VVMF& f);

/// Componentwise Serre derivative at the weight of F.
VVMF serre_vvmf(const VVMF& f);

/// Exact rank test on the aligned coefficients of the components.
bool is_essential(const VVMF& f, std::size_t terms);

std::vector<Complex> evaluate_vec(const VVMF& f, Complex tau);

/// tau_l = exp(i theta_l), theta_l evenly spaced in [1.15, 1.55].
std::vector<Complex> default_sample_points(std::size_t count);

/// Solves tau^{-k} F(-1/tau_l) = X F(tau_l) for X at the given points.
/// Throws SingularSampleMatrix when the sample matrix has condition > 1e8.
ComplexMatrix recover_rho_s(const VVMF& f, std::span<const Complex> points);

struct RelationReport {
  bool holds = false;
  int sign = 1;
  double s_squared_residual = 0.0;
  double braid_residual = 0.0;
};

/// rho(S)^2 = +-I and (rho(S) rho(T))^3 = rho(S)^2, entrywise within tol.
RelationReport check_relations(const RepData& rep, double tol);

}  // namespace modform
