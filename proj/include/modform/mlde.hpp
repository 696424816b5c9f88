#pragma once

// Monic modular linear differential operators
//   L = D^p + g_{p-2} D^{p-2} + ... + g_0,   g_j in M_{2(p-j)},
// acting at weight k0, where D^j is the iterated Serre derivative
// D_{k0+2j-2} ... D_{k0+2} D_{k0}.

#include "modform/skew.hpp"
#include "modform/vvmf.hpp"

#include <optional>
#include <span>
#include <vector>

namespace modform {

class Mlde {
 public:
  /// coeffs[j] is g_j, j = 0..p-2; the order is coeffs.size() + 1 unless
  /// given explicitly (an order-1 operator has no coefficients).
  Mlde(int weight, std::vector<PolynomialQR> coeffs);

  int weight() const { return weight_; }
  std::size_t order() const { return coeffs_.size() + 1; }
  const std::vector<PolynomialQR>& coeffs() const { return coeffs_; }

  /// d^p + sum g_j d^j in the skew ring.
  SkewPolynomial as_skew() const;

 private:
  int weight_;
  std::vector<PolynomialQR> coeffs_;
};

/// Dense polynomial with rational coefficients, lowest degree first.
using RationalPolynomial = std::vector<Rational>;

Rational evaluate(const RationalPolynomial& poly, const Rational& x);

struct IndicialData {
  RationalPolynomial poly;
  /// Rational roots with multiplicity, ascending.
  std::vector<Rational> roots;
  bool fully_rational = false;
  /// Sum of all p roots (Vieta), rational or not.
  Rational root_sum;
};

IndicialData indicial_polynomial(const Mlde& op);

/// The solution q^root (1 + sum a_n q^n) to `terms` terms.
/// Throws NotARoot, ResonantRoot.
QSeries solve_frobenius(const Mlde& op, const Rational& root, std::size_t terms);

/// Frobenius solutions at every indicial root, bundled as a vvmf of weight k0.
/// Throws IrrationalRoots, RootsNotDistinct, RootsOutOfRange.
VVMF fundamental_system(const Mlde& op, std::size_t terms);

/// 12 * sum(m_j) == p (p + k0 - 1).
bool weight_relation_check(int k0, std::span<const Rational> exponents);

/// The unique operator of order p <= 5 with indicial roots `exponents`.
/// Throws NonIntegralWeight, RootsNotDistinct, RootsOutOfRange, OrderTooLarge.
Mlde mlde_from_exponents(std::span<const Rational> exponents);

struct Residual {
  bool zero = true;
  /// Exponent and value of the first nonzero coefficient of L f.
  std::optional<Rational> first_exponent;
  Rational first_value;
  std::size_t checked_terms = 0;
};

/// Applies L through the skew ring action and inspects L f.
Residual verify_solution(const Mlde& op, const QSeries& f);

}  // namespace modform
