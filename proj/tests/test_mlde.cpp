#include "modform/mlde.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <numeric>

namespace modform {
namespace {

PolynomialQR q_times(const Rational& c) { return PolynomialQR::monomial({1, 0}, c); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

std::vector<Rational> twelfths(std::initializer_list<long> nums) {
  std::vector<Rational> out;
  for (long n : nums) out.push_back(make_rational(n, 12));
  return out;
}

Mlde random_mlde(std::size_t order) {
  std::vector<PolynomialQR> coeffs;
  for (std::size_t j = 0; j + 2 <= order; ++j) coeffs.push_back(testing::random_form(2 * static_cast<int>(order - j)));
  return Mlde(static_cast<int>(testing::rng()() % 13), std::move(coeffs));
}

// Coefficient of q^lambda in L(q^lambda), read off the skew action directly.
Rational brute_force_indicial(const Mlde& op, const Rational& lambda) {
  const QSeries monomial(lambda, {Rational(1), Rational(0), Rational(0)});
  return apply(op.as_skew(), monomial, op.weight())[0];
}

TEST(Indicial, Examples) {
  const auto first = indicial_polynomial(Mlde(7, {}));
  EXPECT_EQ(first.poly, (RationalPolynomial{make_rational(-7, 12), Rational(1)}));
  EXPECT_EQ(first.roots, std::vector<Rational>{make_rational(7, 12)});

  const auto e4 = indicial_polynomial(Mlde(4, {q_times(make_rational(-1, 6))}));
  EXPECT_EQ(e4.poly, (RationalPolynomial{Rational(0), make_rational(-5, 6), Rational(1)}));
  EXPECT_EQ(e4.roots, twelfths({0, 10}));
  EXPECT_TRUE(e4.fully_rational);

  const auto k3 = indicial_polynomial(Mlde(3, {q_times(make_rational(-1, 18))}));
  EXPECT_EQ(k3.roots, twelfths({1, 7}));
}

TEST(Indicial, IrrationalRootsAreReported) {
  const auto data = indicial_polynomial(Mlde(0, {q_times(Rational(1))}));
  EXPECT_FALSE(data.fully_rational);
  EXPECT_TRUE(data.roots.empty());
  EXPECT_EQ(data.root_sum, make_rational(1, 6));
}

TEST(IndicialProperty, MatchesBruteForceOracle) {
  for (int trial = 0; trial < 40; ++trial) {
    const Mlde op = random_mlde(1 + trial % 5);
    const auto data = indicial_polynomial(op);
    ASSERT_EQ(data.poly.size(), op.order() + 1);
    for (std::size_t i = 0; i <= op.order() + 1; ++i) {
      const Rational lambda = testing::random_rational(12, 12);
      EXPECT_EQ(evaluate(data.poly, lambda), brute_force_indicial(op, lambda)) << "trial " << trial;
    }
    for (const auto& r : data.roots) EXPECT_EQ(sgn(evaluate(data.poly, r)), 0);
  }
}

TEST(IndicialProperty, WeightRelationIsAutomatic) {
  for (int trial = 0; trial < 100; ++trial) {
    const Mlde op = random_mlde(1 + trial % 4);
    const auto p = static_cast<long>(op.order());
    EXPECT_EQ(12 * indicial_polynomial(op).root_sum, Rational(p * (p + op.weight() - 1)));
  }
}

TEST(Frobenius, EisensteinSolution) {
  const Mlde op(4, {q_times(make_rational(-1, 6))});
  EXPECT_EQ(solve_frobenius(op, Rational(0), 48), eisenstein(Eisenstein::Q, 48));
  const QSeries other = solve_frobenius(op, make_rational(5, 6), 24);
  EXPECT_EQ(other.leading(), make_rational(5, 6));
  EXPECT_EQ(other[0], Rational(1));
  EXPECT_TRUE(verify_solution(op, other).zero);
}

TEST(Frobenius, FirstOrderGivesEtaPowers) {
  for (int k0 = 1; k0 <= 11; ++k0)
    EXPECT_EQ(solve_frobenius(Mlde(k0, {}), make_rational(k0, 12), 30), eta_power(2 * k0, 30)) << "k0=" << k0;
}

// Divisor-sum oracles: 1 + 24 sum sigma_odd(n) q^n and sum sigma(2n+1) q^{n+1/2}.
TEST(Frobenius, WeightTwoSystemMatchesDivisorSums) {
  const auto sigma = [](long n, bool odd_only) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0 && (!odd_only || d % 2 == 1)) s += d;
    return s;
  };
  const VVMF f = fundamental_system(mlde_from_exponents(twelfths({0, 6})), 30);
  EXPECT_EQ(f.weight(), 2);
  EXPECT_EQ(f.component(0)[0], Rational(1));
  for (long n = 1; n <= 30; ++n) EXPECT_EQ(f.component(0)[n], Rational(24 * sigma(n, true))) << "n=" << n;
  for (long n = 0; n <= 30; ++n) EXPECT_EQ(f.component(1)[n], Rational(sigma(2 * n + 1, false))) << "n=" << n;
}

TEST(Frobenius, Errors) {
  const Mlde op(4, {q_times(make_rational(-1, 6))});
  EXPECT_EQ(code_of([&] { solve_frobenius(op, make_rational(1, 2), 8); }), ErrorCode::NotARoot);
  // roots 0 and 1: (x - 5/12)(x - 7/12) - 35/144 = x(x - 1)
  const Mlde resonant(5, {q_times(make_rational(-35, 144))});
  EXPECT_EQ(code_of([&] { solve_frobenius(resonant, Rational(0), 8); }), ErrorCode::ResonantRoot);
  EXPECT_NO_THROW(solve_frobenius(resonant, Rational(1), 8));
}

TEST(FundamentalSystem, Examples) {
  const VVMF f = fundamental_system(Mlde(4, {q_times(make_rational(-1, 6))}), 20);
  ASSERT_EQ(f.dim(), 2u);
  EXPECT_EQ(f.component(0).leading(), Rational(0));
  EXPECT_EQ(f.component(1).leading(), make_rational(5, 6));
  EXPECT_EQ(f.rep().exponents, twelfths({0, 10}));
  EXPECT_EQ(f.weight(), 4);

  const VVMF eta = fundamental_system(Mlde(5, {}), 20);
  EXPECT_EQ(eta.component(0), eta_power(10, 20));
  EXPECT_EQ(eta.rep().s_squared_sign, -1);
}

TEST(FundamentalSystem, Errors) {
  EXPECT_EQ(code_of([] { fundamental_system(Mlde(-1, {q_times(make_rational(1, 144))}), 8); }),
            ErrorCode::RootsNotDistinct);
  EXPECT_EQ(code_of([] { fundamental_system(Mlde(0, {q_times(Rational(1))}), 8); }), ErrorCode::IrrationalRoots);
  EXPECT_EQ(code_of([] { fundamental_system(Mlde(12, {}), 8); }), ErrorCode::RootsOutOfRange);
  EXPECT_EQ(code_of([] { fundamental_system(Mlde(5, {q_times(make_rational(-35, 144))}), 8); }),
            ErrorCode::RootsOutOfRange);
}

TEST(WeightRelation, Examples) {
  EXPECT_TRUE(weight_relation_check(4, twelfths({0, 10})));
  EXPECT_FALSE(weight_relation_check(2, twelfths({0, 10})));
  for (int k0 = 0; k0 < 12; ++k0) EXPECT_TRUE(weight_relation_check(k0, twelfths({k0})));
}

TEST(FromExponents, Examples) {
  const Mlde a = mlde_from_exponents(twelfths({0, 10}));
  EXPECT_EQ(a.weight(), 4);
  EXPECT_EQ(a.coeffs(), std::vector<PolynomialQR>{q_times(make_rational(-1, 6))});

  const Mlde b = mlde_from_exponents(twelfths({1, 7}));
  EXPECT_EQ(b.weight(), 3);
  EXPECT_EQ(b.coeffs(), std::vector<PolynomialQR>{q_times(make_rational(-1, 18))});

  const Mlde c = mlde_from_exponents(twelfths({0, 6}));
  EXPECT_EQ(c.weight(), 2);
  EXPECT_EQ(c.coeffs(), std::vector<PolynomialQR>{q_times(make_rational(-1, 18))});
}

TEST(FromExponents, Errors) {
  EXPECT_EQ(code_of([] { mlde_from_exponents(twelfths({0, 3})); }), ErrorCode::NonIntegralWeight);
  EXPECT_EQ(code_of([] { mlde_from_exponents(twelfths({0, 0})); }), ErrorCode::RootsNotDistinct);
  EXPECT_EQ(code_of([] { mlde_from_exponents(twelfths({12})); }), ErrorCode::RootsOutOfRange);
  EXPECT_EQ(code_of([] { mlde_from_exponents(twelfths({0, 1, 2, 3, 4, 5})); }), ErrorCode::OrderTooLarge);
  EXPECT_EQ(code_of([] { mlde_from_exponents(std::vector<Rational>{}); }), ErrorCode::InvalidArgument);
}

TEST(VerifySolution, Examples) {
  const Mlde op(4, {q_times(make_rational(-1, 6))});
  const auto ok = verify_solution(op, eisenstein(Eisenstein::Q, 48));
  EXPECT_TRUE(ok.zero);
  EXPECT_EQ(ok.checked_terms, 48u);

  EXPECT_TRUE(verify_solution(Mlde(2, {}), eta_power(4, 48)).zero);

  // At lambda = 0 the indicial value vanishes, so the first nonzero residual
  // of E6 under this operator sits at q^1.
  const auto bad = verify_solution(op, eisenstein(Eisenstein::R, 20));
  EXPECT_FALSE(bad.zero);
  EXPECT_EQ(bad.first_exponent, Rational(1));
  EXPECT_EQ(bad.first_value, Rational(-124));
}

TEST(MldeProperty, RoundTripOverTwelfths) {
  int checked = 0;
  for (unsigned mask = 1; mask < (1u << 12); ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<Rational> m;
    for (long i = 0; i < 12; ++i)
      if (mask & (1u << i)) m.push_back(make_rational(i, 12));
    const Rational sum = std::accumulate(m.begin(), m.end(), Rational(0));
    if (!is_integer(12 * sum / Rational(static_cast<long>(m.size())))) continue;
    const Mlde op = mlde_from_exponents(m);
    const VVMF f = fundamental_system(op, 48);
    for (std::size_t j = 0; j < m.size(); ++j) {
      EXPECT_EQ(f.component(j).leading(), m[j]);
      EXPECT_TRUE(verify_solution(op, f.component(j)).zero) << "mask " << mask;
    }
    EXPECT_TRUE(weight_relation_check(op.weight(), m));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(MldeProperty, MonodromyConsistency) {
  const std::vector<std::vector<Rational>> systems{twelfths({0, 10}), twelfths({1, 7}), twelfths({0, 6}),
                                                  twelfths({3, 5}),  twelfths({5}),    twelfths({0, 4, 8}),
                                                  twelfths({1, 5, 9})};
  for (const auto& m : systems) {
    const VVMF f = fundamental_system(mlde_from_exponents(m), 80);
    RepData rep = f.rep();
    rep.rho_s = recover_rho_s(f, default_sample_points(f.dim()));
    const auto report = check_relations(rep, 1e-6);
    EXPECT_TRUE(report.holds) << "m0=" << format_rational(m[0]) << " residuals " << report.s_squared_residual << ", "
                              << report.braid_residual;
    EXPECT_EQ(report.sign, rep.s_squared_sign);
  }
}

}  // namespace
}  // namespace modform
