#include "modform/skew.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modform {

SkewPolynomial::SkewPolynomial(Terms terms) {
  for (auto& [power, f] : terms) accumulate(power, f);
}

SkewPolynomial SkewPolynomial::d(unsigned power) {
  return SkewPolynomial(Terms{{power, PolynomialQR::monomial({0, 0})}});
}

SkewPolynomial SkewPolynomial::coefficient(const PolynomialQR& f) { return SkewPolynomial(Terms{{0u, f}}); }

unsigned SkewPolynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

bool SkewPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int w = weight();
  for (const auto& [power, f] : terms_)
    if (f.weight() + 2 * static_cast<int>(power) != w) return false;
  return true;
}

int SkewPolynomial::weight() const {
  if (terms_.empty()) return 0;
  const auto& [power, f] = *terms_.begin();
  return f.weight() + 2 * static_cast<int>(power);
}

void SkewPolynomial::accumulate(unsigned power, const PolynomialQR& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    terms_.emplace(power, f);
    return;
  }
  // Coefficients are homogeneous; mixing weights at one d-power is rejected by PolynomialQR.
  it->second = it->second + f;
  if (it->second.is_zero()) terms_.erase(it);
}

SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
  SkewPolynomial out = a;
  for (const auto& [power, f] : b.terms_) out.accumulate(power, f);
  return out;
}

SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) {
  SkewPolynomial out = a;
  for (const auto& [power, f] : b.terms_) out.accumulate(power, Rational(-1) * f);
  return out;
}

SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b) {
  // (f d^i)(g d^j) = f * sum_l C(i,l) D^l(g) d^(i-l+j).
  SkewPolynomial out;
  for (const auto& [i, f] : a.terms_) {
    for (const auto& [j, g] : b.terms_) {
      PolynomialQR derived = g;
      Integer binom = 1;
      for (unsigned l = 0; l <= i; ++l) {
        if (l > 0) {
          derived = serre_derivative(derived);
          binom = binom * (i - l + 1) / l;
        }
        if (derived.is_zero()) break;
        out.accumulate(i - l + j, Rational(binom) * (f * derived));
      }
    }
  }
  return out;
}

SkewPolynomial skew_mul(const SkewPolynomial& a, const SkewPolynomial& b) { return a * b; }

QSeries apply(const SkewPolynomial& s, const QSeries& f, int k) {
  MonomialExpander expander(f.truncation());
  std::optional<QSeries> result;
  QSeries current = f;
  int weight = k;
  for (unsigned power = 0; power <= s.degree(); ++power) {
    if (power > 0) {
      current = serre_derivative(current, weight);
      weight += 2;
    }
    auto it = s.terms().find(power);
    if (it == s.terms().end()) continue;
    QSeries term = mul(expander.expand(it->second), current);
    result = result ? add(*result, term) : std::move(term);
  }
  if (!result) return scale(f, Rational(0));
  return *result;
}

}  // namespace modform
