#pragma once

// The skew polynomial ring M[d] with d f - f d = D(f), kept in the normal
// form sum_j f_j d^j (coefficients to the left).

#include "modform/classical.hpp"

#include <map>

namespace modform {

class SkewPolynomial {
 public:
  using Terms = std::map<unsigned, PolynomialQR>;

  SkewPolynomial() = default;
  /// Zero coefficients are dropped.
  explicit SkewPolynomial(Terms terms);

  static SkewPolynomial d(unsigned power = 1);
  static SkewPolynomial coefficient(const PolynomialQR& f);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest d-power; 0 for the zero element.
  unsigned degree() const;
  /// True when every term has the same total weight (coefficient weight + 2 * d-power).
  bool is_homogeneous() const;
  /// Total weight of a nonzero homogeneous element.
  int weight() const;

  bool operator==(const SkewPolynomial& other) const = default;

  friend SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b);
  friend SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b);
  friend SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b);

 private:
  void accumulate(unsigned power, const PolynomialQR& f);

  Terms terms_;
};

SkewPolynomial skew_mul(const SkewPolynomial& a, const SkewPolynomial& b);

/// Action on a series regarded at weight k: each d is the Serre derivative at
/// the current weight, coefficients multiply.
QSeries apply(const SkewPolynomial& s, const QSeries& f, int k);

}  // namespace modform
