#include "modform/structure.hpp"

#include "modform/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace modform {

namespace {

void add_term(IntPolynomial& poly, int e, long long c) {
  auto& slot = poly[e];
  slot += c;
  if (slot == 0) poly.erase(e);
}

const IntPolynomial& denominator() {
  static const IntPolynomial den{{0, 1}, {4, -1}, {6, -1}, {10, 1}};
  return den;
}

bool admissible(int a, int b) {
  const int diff = ((a - b) % 12 + 12) % 12;
  return diff == 2 || diff == 10;
}

}  // namespace

PoincareSeries::PoincareSeries(IntPolynomial numerator) {
  for (const auto& [e, c] : numerator)
    if (c != 0) numerator_.emplace(e, c);
}

PoincareSeries ps_from_weights(std::span<const int> weights) {
  IntPolynomial num;
  for (int e : weights) add_term(num, e, 1);
  return PoincareSeries(std::move(num));
}

PoincareSeries ps_cyclic(int k0, int p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  // (1 - t^{2p}) / (1 - t^2) = 1 + t^2 + ... + t^{2p-2}
  IntPolynomial num;
  for (int l = 0; l < p; ++l) add_term(num, k0 + 2 * l, 1);
  return PoincareSeries(std::move(num));
}

long long ps_coefficient(const PoincareSeries& ps, int w) {
  long long sum = 0;
  for (const auto& [e, c] : ps.numerator()) sum += c * static_cast<long long>(count_monomials(w - e));
  return sum;
}

PoincareSeries ps_difference(const PoincareSeries& a, const PoincareSeries& b) {
  IntPolynomial num = a.numerator();
  for (const auto& [e, c] : b.numerator()) add_term(num, e, -c);
  return PoincareSeries(std::move(num));
}

IntPolynomial as_polynomial(const PoincareSeries& ps) {
  IntPolynomial rem = ps.numerator();
  IntPolynomial quotient;
  // Long division from the lowest degree; the divisor has constant term 1.
  while (!rem.empty()) {
    const auto [e, c] = *rem.begin();
    if (rem.rbegin()->first - e < 10)
      throw Error(ErrorCode::InvalidArgument, "Poincare series is not a polynomial");
    add_term(quotient, e, c);
    for (const auto& [de, dc] : denominator()) add_term(rem, e + de, -c * dc);
  }
  return quotient;
}

CharacterModule character_module(int k0) {
  if (k0 < 0 || k0 > 11) throw Error(ErrorCode::OutOfRange, "k0 must satisfy 0 <= k0 <= 11");
  const int weights[] = {k0};
  return {k0, static_cast<unsigned>(2 * k0), ps_from_weights(weights)};
}

TwoDimClass classify_2dim(int a, int b) {
  if (a < 0 || a > 11 || b < 0 || b > 11) throw Error(ErrorCode::OutOfRange, "a and b must lie in 0..11");
  if (!admissible(a, b))
    throw Error(ErrorCode::NotIndecomposable, "a - b must be +-2 mod 12 for an indecomposable extension");
  TwoDimClass cls;
  cls.a = a;
  cls.b = b;
  const int up = b - a;
  if (up == 2 || up == 10) {
    // D F_0 = 0: free generators eta^{2a} (sub) and a lift of eta^{2b}.
    cls.kind = TwoDimKind::Split;
    cls.k0 = a;
    cls.fundamental_weights = {a, b};
  } else {
    // m_1 - m_2 = 1/6 or 5/6: cyclic R-module, k0 = 6(m_1 + m_2) - 1.
    cls.kind = TwoDimKind::Cyclic;
    cls.k0 = (a + b) / 2 - 1;
    cls.fundamental_weights = {cls.k0, cls.k0 + 2};
    if (a - b == 10) cls.coker_weight = b;
  }
  return cls;
}

std::vector<TwoDimClass> enumerate_2dim() {
  std::vector<TwoDimClass> out;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      if (admissible(a, b)) out.push_back(classify_2dim(a, b));
  return out;
}

IntPolynomial coker_ps_difference(const TwoDimClass& cls) {
  if (cls.kind != TwoDimKind::Cyclic) throw Error(ErrorCode::InvalidArgument, "cokernel is defined for cyclic classes");
  const int ab[] = {cls.a, cls.b};
  return as_polynomial(ps_difference(ps_from_weights(ab), ps_cyclic(cls.k0, 2)));
}

BasisReport free_basis_verify(std::span<const VVMF> generators, int k_max, std::size_t terms) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  const RepData& rep = generators.front().rep();
  for (const auto& g : generators) {
    if (g.rep().exponents != rep.exponents)
      throw Error(ErrorCode::InvalidArgument, "generators must share one representation");
    if (!validate(g).ok) throw Error(ErrorCode::InvalidArgument, "generator is not holomorphic at infinity");
  }
  const std::size_t p = rep.dim();

  BasisReport report;
  report.k_max = k_max;
  for (const auto& g : generators) report.fundamental_weights.push_back(g.weight());
  const PoincareSeries ps = ps_from_weights(report.fundamental_weights);

  // Column layout: component j, exponent m_j + n, n <= limit_j, where limit_j
  // is the last offset known for every generator.
  std::vector<long> limit(p, static_cast<long>(terms));
  for (const auto& g : generators)
    for (std::size_t j = 0; j < p; ++j) {
      const QSeries& c = g.component(j);
      if (c.is_zero()) {
        limit[j] = std::min(limit[j], static_cast<long>(c.truncation()));
        continue;
      }
      const long shift = to_long(c.leading() - rep.exponents[j]);
      limit[j] = std::min(limit[j], shift + static_cast<long>(c.truncation()));
    }
  std::vector<std::size_t> col_offset(p + 1, 0);
  for (std::size_t j = 0; j < p; ++j) col_offset[j + 1] = col_offset[j] + static_cast<std::size_t>(limit[j] + 1);

  MonomialExpander expander(terms);
  const int lowest = *std::min_element(report.fundamental_weights.begin(), report.fundamental_weights.end());
  for (int w = lowest; w <= k_max; ++w) {
    RationalMatrix rows;
    for (const auto& g : generators) {
      const int shift = w - g.weight();
      if (shift < 0 || shift % 2 != 0) continue;
      for (const auto& m : monomial_basis(shift)) {
        const QSeries& mono = expander.expand(m);
        std::vector<Rational> row(col_offset[p], Rational(0));
        for (std::size_t j = 0; j < p; ++j) {
          const QSeries prod = mul(mono, g.component(j));
          if (prod.is_zero()) continue;
          const long start = to_long(prod.leading() - rep.exponents[j]);
          for (long n = 0; n <= static_cast<long>(prod.truncation()) && start + n <= limit[j]; ++n)
            row[col_offset[j] + static_cast<std::size_t>(start + n)] = prod[static_cast<std::size_t>(n)];
        }
        rows.push_back(std::move(row));
      }
    }
    const long long expected = ps_coefficient(ps, w);
    if (rows.empty() && expected == 0) continue;
    WeightCheck check;
    check.weight = w;
    check.spanning_set = rows.size();
    check.expected = expected;
    check.rank = rank(std::move(rows));
    report.weights.push_back(check);
    if (check.rank < check.spanning_set)
      throw DependentGeneratorsError(w, "generators are M-linearly dependent in weight " + std::to_string(w));
    if (static_cast<long long>(check.rank) != expected) report.consistent = false;
  }
  report.summary = report.consistent
                       ? "consistent with free of rank " + std::to_string(generators.size()) + " up to weight " +
                             std::to_string(k_max)
                       : "dimension count disagrees with the Poincare series";
  return report;
}

Rational growth_bound(const PoincareSeries& ps, int p, int k0, int k_limit) {
  Rational worst(0);
  for (int k = 0; k <= k_limit; ++k) {
    Rational dev = Rational(static_cast<long>(ps_coefficient(ps, k0 + 2 * k))) - make_rational(static_cast<long>(p) * k, 6);
    if (sgn(dev) < 0) dev = -dev;
    worst = std::max(worst, dev);
  }
  return worst;
}

bool cyclic_criterion(const VVMF& f) {
  const auto& m = f.rep().exponents;
  if (std::set<Rational>(m.begin(), m.end()).size() != m.size()) return false;
  for (std::size_t j = 0; j < f.dim(); ++j) {
    const QSeries& c = f.component(j);
    if (c.is_zero() || normalize(c).leading() != m[j]) return false;
  }
  return true;
}

}  // namespace modform
