#pragma once

// Truncated q-expansions q^leading * (c_0 + c_1 q + ... + c_N q^N) over an
// exact rational or a complex floating coefficient field.
//
// Terms past q^(leading + N) are unknown, never implicitly zero: every
// operation shrinks the truncation to what both inputs actually determine.

#include "modform/error.hpp"
#include "modform/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace modform {

using Complex = std::complex<double>;

template <class Field>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
};

template <>
struct FieldTraits<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& x) { return x; }
};

template <class Field>
class BasicSeries {
 public:
  using value_type = Field;
  using Traits = FieldTraits<Field>;

  /// The zero series with a single known term.
  BasicSeries() : leading_(0), coeffs_(1, Traits::zero()) {}

  BasicSeries(Rational leading, std::vector<Field> coeffs)
      : leading_(std::move(leading)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw Error(ErrorCode::InvalidArgument, "a q-expansion needs at least one known coefficient");
    leading_.canonicalize();
  }

  static BasicSeries zero(std::size_t truncation) {
    return BasicSeries(Rational(0), std::vector<Field>(truncation + 1, Traits::zero()));
  }

  static BasicSeries constant(const Field& c, std::size_t truncation) {
    std::vector<Field> coeffs(truncation + 1, Traits::zero());
    coeffs[0] = c;
    return BasicSeries(Rational(0), std::move(coeffs));
  }

  const Rational& leading() const { return leading_; }
  std::size_t truncation() const { return coeffs_.size() - 1; }
  /// Exponent of the last known term.
  Rational known_through() const { return leading_ + Rational(static_cast<long>(truncation())); }
  const std::vector<Field>& coeffs() const { return coeffs_; }
  const Field& operator[](std::size_t n) const { return coeffs_.at(n); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Field& c) { return Traits::is_zero(c); });
  }

  /// Structural equality. All zero series of equal truncation compare equal,
  /// whatever lattice they were produced on.
  bool operator==(const BasicSeries& other) const {
    if (truncation() != other.truncation()) return false;
    if (is_zero() && other.is_zero()) return true;
    return leading_ == other.leading_ && coeffs_ == other.coeffs_;
  }

 private:
  Rational leading_;
  std::vector<Field> coeffs_;
};

using QSeries = BasicSeries<Rational>;
using ComplexSeries = BasicSeries<Complex>;

namespace detail {

inline std::size_t index_of(const Rational& offset) { return static_cast<std::size_t>(to_long(offset)); }

template <class Field>
BasicSeries<Field> clip_to(const BasicSeries<Field>& s, const Rational& limit) {
  Rational span = limit - s.leading();
  if (sgn(span) < 0) throw Error(ErrorCode::CannotExtend, "no known terms below the truncation limit");
  auto n = static_cast<std::size_t>(floor_of(span).get_ui());
  n = std::min(n, s.truncation());
  return BasicSeries<Field>(s.leading(), std::vector<Field>(s.coeffs().begin(), s.coeffs().begin() + n + 1));
}

}  // namespace detail

template <class Field>
BasicSeries<Field> add(const BasicSeries<Field>& a, const BasicSeries<Field>& b) {
  Rational offset = a.leading() - b.leading();
  if (!is_integer(offset)) {
    // A zero series carries no lattice, only a truncation bound.
    if (a.is_zero()) return detail::clip_to(b, a.known_through());
    if (b.is_zero()) return detail::clip_to(a, b.known_through());
    throw Error(ErrorCode::NonIntegralOffset,
                "leading exponents " + format_rational(a.leading()) + " and " + format_rational(b.leading()) +
                    " differ by a non-integer");
  }
  const Rational lead = std::min(a.leading(), b.leading());
  const Rational top = std::min(a.known_through(), b.known_through());
  const std::size_t n = detail::index_of(top - lead);
  std::vector<Field> out(n + 1, FieldTraits<Field>::zero());
  for (const auto* s : {&a, &b}) {
    const std::size_t shift = detail::index_of(s->leading() - lead);
    for (std::size_t i = 0; i + shift <= n; ++i) out[i + shift] += (*s)[i];
  }
  return BasicSeries<Field>(lead, std::move(out));
}

template <class Field>
BasicSeries<Field> negate(const BasicSeries<Field>& a) {
  std::vector<Field> out(a.coeffs());
  for (auto& c : out) c = -c;
  return BasicSeries<Field>(a.leading(), std::move(out));
}

template <class Field>
BasicSeries<Field> sub(const BasicSeries<Field>& a, const BasicSeries<Field>& b) {
  return add(a, negate(b));
}

template <class Field>
BasicSeries<Field> scale(const BasicSeries<Field>& a, const Field& c) {
  std::vector<Field> out(a.coeffs());
  for (auto& x : out) x *= c;
  return BasicSeries<Field>(a.leading(), std::move(out));
}

template <class Field>
BasicSeries<Field> mul(const BasicSeries<Field>& a, const BasicSeries<Field>& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Field> out(n + 1, FieldTraits<Field>::zero());
  for (std::size_t i = 0; i <= n; ++i) {
    if (FieldTraits<Field>::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return BasicSeries<Field>(a.leading() + b.leading(), std::move(out));
}

/// Exact convolution on common-denominator integer numerators.
QSeries mul(const QSeries& a, const QSeries& b);

/// theta = q d/dq: the coefficient of q^(leading+n) is multiplied by leading+n.
template <class Field>
BasicSeries<Field> theta(const BasicSeries<Field>& a) {
  std::vector<Field> out(a.coeffs());
  for (std::size_t n = 0; n < out.size(); ++n)
    out[n] *= FieldTraits<Field>::from_rational(a.leading() + Rational(static_cast<long>(n)));
  return BasicSeries<Field>(a.leading(), std::move(out));
}

/// Drops every coefficient past q^(leading+n).
template <class Field>
BasicSeries<Field> align_truncation(const BasicSeries<Field>& a, std::size_t n) {
  if (n > a.truncation())
    throw Error(ErrorCode::CannotExtend, "cannot extend a series known to " + std::to_string(a.truncation()) +
                                             " terms to " + std::to_string(n));
  return BasicSeries<Field>(a.leading(), std::vector<Field>(a.coeffs().begin(), a.coeffs().begin() + n + 1));
}

/// Shifts the leading exponent up past vanishing initial coefficients.
template <class Field>
BasicSeries<Field> normalize(const BasicSeries<Field>& a) {
  if (a.is_zero()) return BasicSeries<Field>::zero(a.truncation());
  std::size_t k = 0;
  while (FieldTraits<Field>::is_zero(a[k])) ++k;
  return BasicSeries<Field>(a.leading() + Rational(static_cast<long>(k)),
                            std::vector<Field>(a.coeffs().begin() + k, a.coeffs().end()));
}

/// True when a - b vanishes on every term both series determine.
template <class Field>
bool agree(const BasicSeries<Field>& a, const BasicSeries<Field>& b) {
  return sub(a, b).is_zero();
}

inline ComplexSeries to_complex(const QSeries& a) {
  std::vector<Complex> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(FieldTraits<Rational>::to_complex(c));
  return ComplexSeries(a.leading(), std::move(out));
}

struct Evaluation {
  Complex value;
  /// False when |q| > 0.5, where a truncated sum is not trustworthy.
  bool reliable = true;
};

template <class Field>
Evaluation evaluate(const BasicSeries<Field>& a, Complex tau) {
  if (!(tau.imag() > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must lie in the upper half plane");
  if (a.is_zero()) return {Complex(0.0, 0.0), true};
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  const Complex q = std::exp(two_pi_i * tau);
  Complex sum(0.0, 0.0);
  for (std::size_t n = a.truncation() + 1; n-- > 0;) sum = sum * q + FieldTraits<Field>::to_complex(a[n]);
  const Complex prefactor = std::exp(two_pi_i * a.leading().get_d() * tau);
  return {prefactor * sum, std::abs(q) <= 0.5};
}

template <class Field>
BasicSeries<Field> operator+(const BasicSeries<Field>& a, const BasicSeries<Field>& b) { return add(a, b); }
template <class Field>
BasicSeries<Field> operator-(const BasicSeries<Field>& a, const BasicSeries<Field>& b) { return sub(a, b); }
template <class Field>
BasicSeries<Field> operator-(const BasicSeries<Field>& a) { return negate(a); }
template <class Field>
BasicSeries<Field> operator*(const BasicSeries<Field>& a, const BasicSeries<Field>& b) { return mul(a, b); }
template <class Field>
BasicSeries<Field> operator*(const Field& c, const BasicSeries<Field>& a) { return scale(a, c); }

}  // namespace modform
