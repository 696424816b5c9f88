#include "modform/classical.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace modform {
namespace {

using testing::random_form;
using testing::random_monomial;

QSeries integral(long leading_num, long leading_den, std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QSeries(make_rational(leading_num, leading_den), std::move(c));
}

// prod_{n=1}^{terms} (1 - q^n)^h by repeated multiplication with each factor.
QSeries euler_product_oracle(unsigned h, std::size_t terms) {
  std::vector<Rational> s(terms + 1, Rational(0));
  s[0] = 1;
  for (std::size_t n = 1; n <= terms; ++n)
    for (unsigned rep = 0; rep < h; ++rep)
      for (std::size_t i = terms; i >= n; --i) s[i] -= s[i - n];
  return QSeries(make_rational(h, 24), std::move(s));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

TEST(Eisenstein, LeadingCoefficients) {
  EXPECT_EQ(eisenstein(Eisenstein::Q, 2), integral(0, 1, {1, 240, 2160}));
  EXPECT_EQ(eisenstein(Eisenstein::R, 2), integral(0, 1, {1, -504, -16632}));
  EXPECT_EQ(eisenstein(Eisenstein::P, 3),
            QSeries(Rational(0), {make_rational(-1, 12), Rational(2), Rational(6), Rational(8)}));
}

TEST(Eisenstein, CacheReturnsConsistentPrefixes) {
  const QSeries longer = eisenstein(Eisenstein::Q, 50);
  EXPECT_EQ(align_truncation(longer, 7), eisenstein(Eisenstein::Q, 7));
  EXPECT_EQ(eisenstein(Eisenstein::Q, 60).truncation(), 60u);
}

TEST(Delta, Expansion) {
  const QSeries d = delta(3);
  EXPECT_EQ(d, integral(1, 1, {1, -24, 252, -1472}));
  EXPECT_EQ(d.leading(), Rational(1));
  EXPECT_EQ(d[0], Rational(1));
}

TEST(EtaPower, MatchesEulerProduct) {
  EXPECT_EQ(eta_power(2, 5), integral(1, 12, {1, -2, -1, 2, 1, 2}));
  EXPECT_EQ(eta_power(2, 5).leading(), make_rational(1, 12));
  for (unsigned h : {1u, 3u, 4u, 10u, 17u, 24u})
    EXPECT_EQ(eta_power(h, 30), euler_product_oracle(h, 30)) << "h=" << h;
}

TEST(EtaPower, TwentyFourthPowerIsDelta) {
  EXPECT_EQ(eta_power(24, 3), delta(3));
  EXPECT_EQ(eta_power(24, 40), delta(40));
}

TEST(DimM, Formula) {
  EXPECT_EQ(dim_M(0), 1);
  EXPECT_EQ(dim_M(12), 2);
  EXPECT_EQ(dim_M(14), 1);
  EXPECT_EQ(dim_M(2), 0);
  EXPECT_EQ(code_of([] { dim_M(7); }), ErrorCode::OddWeight);
  EXPECT_EQ(code_of([] { dim_M(-2); }), ErrorCode::InvalidArgument);
}

TEST(DimM, MatchesBasisSize) {
  for (int w = 0; w <= 200; w += 2) {
    EXPECT_EQ(static_cast<std::size_t>(dim_M(w)), monomial_basis(w).size()) << "w=" << w;
    EXPECT_EQ(count_monomials(w), monomial_basis(w).size());
  }
}

TEST(MonomialBasis, Enumeration) {
  EXPECT_EQ(monomial_basis(12), (std::vector<Monomial>{{0, 2}, {3, 0}}));
  EXPECT_TRUE(monomial_basis(2).empty());
  EXPECT_EQ(monomial_basis(10), (std::vector<Monomial>{{1, 1}}));
}

TEST(PolynomialQR, RejectsWrongWeightMonomial) {
  EXPECT_THROW(PolynomialQR(8, {{{1, 1}, Rational(1)}}), Error);
  EXPECT_THROW(PolynomialQR(4) + PolynomialQR::monomial({1, 0}) + PolynomialQR::monomial({0, 1}), Error);
}

TEST(ToQExpansion, Examples) {
  EXPECT_EQ(to_qexpansion(PolynomialQR::monomial({0, 0}), 5), QSeries::constant(Rational(1), 5));
  const PolynomialQR disc(12, {{{3, 0}, make_rational(1, 1728)}, {{0, 2}, make_rational(-1, 1728)}});
  EXPECT_TRUE(agree(to_qexpansion(disc, 12), delta(12)));
  const QSeries twice_q = to_qexpansion(PolynomialQR::monomial({1, 0}, Rational(2)), 3);
  EXPECT_EQ(twice_q[0], Rational(2));
  EXPECT_EQ(twice_q[1], Rational(480));
}

TEST(FromQExpansion, Examples) {
  const PolynomialQR disc(12, {{{3, 0}, make_rational(1, 1728)}, {{0, 2}, make_rational(-1, 1728)}});
  EXPECT_EQ(from_qexpansion(delta(10), 12, 10), disc);
  EXPECT_EQ(from_qexpansion(eisenstein(Eisenstein::Q, 6), 4, 6), PolynomialQR::monomial({1, 0}));

  std::vector<Rational> one_plus_q(7, Rational(0));
  one_plus_q[0] = one_plus_q[1] = 1;
  EXPECT_EQ(code_of([&] { from_qexpansion(QSeries(Rational(0), one_plus_q), 4, 6); }), ErrorCode::NotInM);
}

TEST(FromQExpansion, Errors) {
  EXPECT_EQ(code_of([] { from_qexpansion(delta(30), 36, 1); }), ErrorCode::AmbiguousTruncation);
  EXPECT_EQ(code_of([] { from_qexpansion(eisenstein(Eisenstein::Q, 3), 4, 8); }), ErrorCode::CannotExtend);
  EXPECT_EQ(code_of([] { from_qexpansion(eta_power(2, 10), 4, 8); }), ErrorCode::NotInM);
  EXPECT_EQ(code_of([] { from_qexpansion(eisenstein(Eisenstein::Q, 8), 5, 8); }), ErrorCode::OddWeight);
}

TEST(SerreDerivative, RamanujanIdentities) {
  EXPECT_TRUE(serre_derivative(delta(40), 12).is_zero());
  const QSeries q = eisenstein(Eisenstein::Q, 40);
  const QSeries r = eisenstein(Eisenstein::R, 40);
  EXPECT_EQ(serre_derivative(q, 4), scale(r, make_rational(-1, 3)));
  EXPECT_EQ(serre_derivative(q, 4)[1], Rational(168));
  EXPECT_EQ(serre_derivative(r, 6), scale(mul(q, q), make_rational(-1, 2)));
  EXPECT_TRUE(serre_derivative(QSeries::constant(Rational(1), 10), 0).is_zero());
}

TEST(SerreDerivative, OnPolynomials) {
  EXPECT_EQ(serre_derivative(PolynomialQR::monomial({1, 0})), PolynomialQR::monomial({0, 1}, make_rational(-1, 3)));
  EXPECT_EQ(serre_derivative(PolynomialQR::monomial({0, 1})), PolynomialQR::monomial({2, 0}, make_rational(-1, 2)));
  EXPECT_TRUE(serre_derivative(PolynomialQR::monomial({0, 0}, Rational(7))).is_zero());
  EXPECT_EQ(serre_derivative(PolynomialQR::monomial({1, 0})).weight(), 6);
}

TEST(SerreDerivativeProperty, Leibniz) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = PolynomialQR::monomial(random_monomial(24), testing::random_rational());
    const auto b = PolynomialQR::monomial(random_monomial(24), testing::random_rational());
    EXPECT_EQ(serre_derivative(a * b), serre_derivative(a) * b + a * serre_derivative(b));
  }
}

TEST(SerreDerivativeProperty, CommutesWithExpansion) {
  for (int w = 0; w <= 24; w += 2)
    for (const auto& m : monomial_basis(w)) {
      const auto f = PolynomialQR::monomial(m);
      EXPECT_EQ(to_qexpansion(serre_derivative(f), 32), serre_derivative(to_qexpansion(f, 32), w))
          << "Q^" << m.u << " R^" << m.v;
    }
}

TEST(SerreDerivativeProperty, AnnihilatesEtaPowers) {
  for (int k = 1; k <= 11; ++k) EXPECT_TRUE(serre_derivative(eta_power(2 * k, 32), k).is_zero()) << "k=" << k;
}

TEST(FromQExpansionProperty, InvertsExpansion) {
  for (int trial = 0; trial < 30; ++trial) {
    const int w = testing::random_even_weight(24);
    const auto f = random_form(w);
    EXPECT_EQ(from_qexpansion(to_qexpansion(f, 12), w, 12), f) << "w=" << w;
  }
}

}  // namespace
}  // namespace modform
