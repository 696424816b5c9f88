#pragma once

// The graded ring M = C[Q, R] of level-one modular forms, the quasi-modular
// series P, the discriminant, eta powers and the Serre derivation D.

#include "modform/qseries.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

namespace modform {

enum class Eisenstein { P, Q, R };

/// P = -1/12 + 2 sum sigma_1(n) q^n (so that D(Delta) = 0),
/// Q = E4 = 1 + 240 sum sigma_3(n) q^n, R = E6 = 1 - 504 sum sigma_5(n) q^n.
/// Memoized; repeated calls only pay for terms not yet computed.
QSeries eisenstein(Eisenstein kind, std::size_t terms);

/// (Q^3 - R^2) / 1728 = q - 24 q^2 + 252 q^3 - ...
QSeries delta(std::size_t terms);

/// eta^h = q^(h/24) prod (1 - q^n)^h, from the pentagonal number series by
/// binary powering.
QSeries eta_power(unsigned h, std::size_t terms);

struct Monomial {
  int u = 0;  // power of Q
  int v = 0;  // power of R

  int weight() const { return 4 * u + 6 * v; }
  auto operator<=>(const Monomial&) const = default;
};

/// Number of (u, v) >= 0 with 4u + 6v = w; zero for odd or negative w.
std::size_t count_monomials(int w);

/// dim M_w. Throws OddWeight for odd w, InvalidArgument for negative w.
int dim_M(int w);

/// All Q^u R^v of weight w in lexicographic (u, v) order.
std::vector<Monomial> monomial_basis(int w);

/// A homogeneous element of M written on the monomials Q^u R^v.
class PolynomialQR {
 public:
  using Coords = std::map<Monomial, Rational>;

  /// The zero element of the given weight.
  explicit PolynomialQR(int weight = 0);
  PolynomialQR(int weight, Coords coords);

  static PolynomialQR monomial(Monomial m, const Rational& c = Rational(1));

  int weight() const { return weight_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Rational coefficient(Monomial m) const;
  /// Constant term of the q-expansion (Q and R both start with 1).
  Rational value_at_infinity() const;

  bool operator==(const PolynomialQR& other) const;

  friend PolynomialQR operator+(const PolynomialQR& a, const PolynomialQR& b);
  friend PolynomialQR operator-(const PolynomialQR& a, const PolynomialQR& b);
  friend PolynomialQR operator*(const PolynomialQR& a, const PolynomialQR& b);
  friend PolynomialQR operator*(const Rational& c, const PolynomialQR& a);

 private:
  int weight_;
  Coords coords_;
};

/// Caches Q^u and R^v expansions at a fixed truncation.
class MonomialExpander {
 public:
  explicit MonomialExpander(std::size_t terms);

  std::size_t terms() const { return terms_; }
  const QSeries& expand(Monomial m);
  QSeries expand(const PolynomialQR& f);

 private:
  const QSeries& power(std::vector<QSeries>& cache, Eisenstein base, int exponent);

  std::size_t terms_;
  std::vector<QSeries> q_powers_;
  std::vector<QSeries> r_powers_;
  std::map<Monomial, QSeries> monomials_;
};

QSeries to_qexpansion(const PolynomialQR& f, std::size_t terms);

/// Inverts to_qexpansion by exact elimination on the first terms+1
/// coefficients. Throws NotInM, AmbiguousTruncation, CannotExtend, OddWeight.
PolynomialQR from_qexpansion(const QSeries& f, int weight, std::size_t terms);

/// D_k f = theta f + k P f, keeping the truncation of f.
QSeries serre_derivative(const QSeries& f, int k);

/// D on M via D(Q) = -R/3, D(R) = -Q^2/2 and the Leibniz rule.
PolynomialQR serre_derivative(const PolynomialQR& f);

}  // namespace modform
