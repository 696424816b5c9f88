#include "modform/json_io.hpp"
#include "modform/qseries.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace modform {
namespace {

using testing::random_series;

QSeries series(Rational leading, std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QSeries(std::move(leading), std::move(c));
}

TEST(QSeries, AddComponentwise) {
  EXPECT_EQ(add(series(0, {1, 2}), series(0, {3, 4})), series(0, {4, 6}));
  const Rational twelfth = make_rational(1, 12);
  EXPECT_EQ(add(series(twelfth, {1, 0}), series(twelfth, {0, 1})), series(twelfth, {1, 1}));
}

TEST(QSeries, AddRejectsLatticeMismatch) {
  try {
    add(series(0, {1}), series(make_rational(1, 2), {1}));
    FAIL() << "expected NonIntegralOffset";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralOffset);
  }
}

TEST(QSeries, AddKeepsOnlyJointlyKnownTerms) {
  // 1 + q + q^2 (known to q^2) plus q^1 * (1 + q + q^2 + q^3) (known to q^4)
  const QSeries s = add(series(0, {1, 1, 1}), series(1, {1, 1, 1, 1}));
  EXPECT_EQ(s, series(0, {1, 2, 2}));
  EXPECT_EQ(s.truncation(), 2u);
}

TEST(QSeries, AddZeroFromAnotherLattice) {
  const QSeries f = series(make_rational(1, 12), {1, 2, 3});
  const QSeries z = scale(series(0, {1, 1, 1, 1, 1}), Rational(0));
  EXPECT_EQ(add(f, z), f);
}

TEST(QSeries, MulExamples) {
  EXPECT_EQ(mul(series(0, {1, -2, 0}), series(0, {1, 2, 0})), series(0, {1, 0, -4}));
  const Rational twelfth = make_rational(1, 12);
  EXPECT_EQ(mul(series(twelfth, {1}), series(twelfth, {1})), series(make_rational(1, 6), {1}));
}

TEST(QSeries, MulTruncatesToShorterFactor) {
  const QSeries p = mul(series(0, {1, 1, 1, 1, 1}), series(0, {1, 1}));
  EXPECT_EQ(p, series(0, {1, 2}));
}

TEST(QSeries, CubeMinusSquareGivesTauFunction) {
  // E4 and E6 to q^4 written out by hand; tau(1..4) from the Euler product
  // q prod(1-q^n)^24 expanded independently.
  const QSeries q = series(0, {1, 240, 2160, 6720, 17520});
  const QSeries r = series(0, {1, -504, -16632, -122976, -532728});
  const QSeries d = scale(sub(mul(mul(q, q), q), mul(r, r)), make_rational(1, 1728));
  EXPECT_EQ(d, series(0, {0, 1, -24, 252, -1472}));
  EXPECT_EQ(scale(sub(mul(r, r), mul(mul(q, q), q)), make_rational(-1, 1728)), d);
}

TEST(QSeries, ScaleExamples) {
  EXPECT_TRUE(scale(series(0, {5, 7}), Rational(0)).is_zero());
  EXPECT_EQ(scale(series(make_rational(5, 6), {1, 3}), Rational(2)), series(make_rational(5, 6), {2, 6}));
}

TEST(QSeries, ThetaExamples) {
  EXPECT_TRUE(theta(QSeries::constant(Rational(1), 4)).is_zero());
  EXPECT_EQ(theta(series(0, {1, 240, 2160})), series(0, {0, 240, 4320}));
  const Rational twelfth = make_rational(1, 12);
  EXPECT_EQ(theta(series(twelfth, {1})), QSeries(twelfth, {twelfth}));
}

TEST(QSeries, AlignTruncation) {
  EXPECT_EQ(align_truncation(series(0, {1, 240, 2160}), 1), series(0, {1, 240}));
  EXPECT_TRUE(align_truncation(QSeries::zero(6), 3).is_zero());
  try {
    align_truncation(series(0, {1, 2, 3}), 5);
    FAIL() << "expected CannotExtend";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CannotExtend);
  }
}

TEST(QSeries, NormalizeShiftsLeading) {
  const QSeries s = normalize(series(make_rational(1, 3), {0, 0, 5, 1}));
  EXPECT_EQ(s.leading(), make_rational(7, 3));
  EXPECT_EQ(s, series(make_rational(7, 3), {5, 1}));
}

// Oracles: direct summation in high precision (E4 at 2i) and the closed form
// eta(i)^2 = Gamma(1/4)^2 / (4 pi^{3/2}).
TEST(QSeries, EvaluateAgainstOracles) {
  const QSeries e4 = series(0, {1, 240, 2160, 6720, 17520, 30240, 60480, 82560, 140400, 181680, 272160});
  EXPECT_NEAR(evaluate(e4, Complex(0, 2)).value.real(), 1.0008369884347377, 1e-7);

  const QSeries eta2(make_rational(1, 12), {Rational(1), Rational(-2), Rational(-1), Rational(2), Rational(1),
                                            Rational(2), Rational(-2), Rational(0), Rational(-2), Rational(-2),
                                            Rational(1)});
  const Evaluation v = evaluate(eta2, Complex(0, 1));
  EXPECT_NEAR(v.value.real(), 0.5901702995080481, 1e-9);
  EXPECT_NEAR(v.value.imag(), 0.0, 1e-12);
  EXPECT_TRUE(v.reliable);

  EXPECT_EQ(evaluate(QSeries::zero(3), Complex(0.3, 0.7)).value, Complex(0, 0));
}

TEST(QSeries, EvaluateFlagsSlowConvergence) {
  const Evaluation e = evaluate(series(0, {1, 1}), Complex(0, 0.05));
  EXPECT_FALSE(e.reliable);
  EXPECT_THROW(evaluate(series(0, {1}), Complex(0, -1)), Error);
}

TEST(QSeriesProperty, RingLaws) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_series(12), b = random_series(12), c = random_series(12);
    EXPECT_EQ(add(a, b), add(b, a));
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
    EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
  }
}

TEST(QSeriesProperty, ExactMulMatchesSchoolbookConvolution) {
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(15, make_rational(1, 4));
    const auto b = random_series(11, make_rational(2, 3));
    std::vector<Rational> ref(12, Rational(0));
    for (std::size_t i = 0; i <= 11; ++i)
      for (std::size_t j = 0; i + j <= 11; ++j) ref[i + j] += a[i] * b[j];
    EXPECT_EQ(mul(a, b), QSeries(make_rational(11, 12), ref));
  }
}

TEST(QSeriesProperty, ThetaIsADerivation) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_series(10, make_rational(1, 12));
    const auto b = random_series(10, make_rational(5, 6));
    EXPECT_TRUE(agree(theta(mul(a, b)), add(mul(theta(a), b), mul(a, theta(b)))));
  }
}

TEST(QSeriesProperty, EvaluationIsMultiplicative) {
  const Complex tau(0.21, 0.85);  // |q| = e^{-2 pi 0.85} < 0.01
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(40, make_rational(1, 3));
    const auto b = random_series(45);
    const Complex lhs = evaluate(mul(a, b), tau).value;
    const Complex rhs = evaluate(a, tau).value * evaluate(b, tau).value;
    EXPECT_LT(std::abs(lhs - rhs), 1e-8);
  }
}

TEST(QSeriesJson, SchemaAndRoundTrip) {
  const QSeries s(make_rational(1, 12), {Rational(1), make_rational(-2, 3), Rational(0)});
  const Json j = to_json(s);
  EXPECT_EQ(j.dump(), R"({"coeffs":["1/1","-2/3","0/1"],"leading":"1/12"})");
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = random_series(8, make_rational(trial, 7));
    const std::string text = to_json(r).dump();
    EXPECT_EQ(qseries_from_json(Json::parse(text)), r);
    EXPECT_EQ(to_json(qseries_from_json(Json::parse(text))).dump(), text);
  }
  const Json c = to_json(to_complex(s));
  EXPECT_EQ(c["coeffs"][1][0].get<double>(), -2.0 / 3.0);
  EXPECT_EQ(complex_series_from_json(c).truncation(), 2u);
}

TEST(QSeriesJson, RejectsMalformedInput) {
  EXPECT_THROW(qseries_from_json(Json::parse(R"({"leading":"1/0","coeffs":["1"]})")), Error);
  EXPECT_THROW(qseries_from_json(Json::parse(R"({"leading":"0","coeffs":[1.5]})")), Error);
  EXPECT_THROW(qseries_from_json(Json::parse(R"({"leading":"0","coeffs":[]})")), Error);
}

}  // namespace
}  // namespace modform
