#include "modform/mlde.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <string>

namespace modform {

namespace {

void trim(RationalPolynomial& poly) {
  while (poly.size() > 1 && sgn(poly.back()) == 0) poly.pop_back();
}

RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// prod_{l < count} (x - (k0 + 2l)/12)
RationalPolynomial rising_weights(int k0, std::size_t count) {
  RationalPolynomial out{Rational(1)};
  for (std::size_t l = 0; l < count; ++l)
    out = multiply(out, {-make_rational(k0 + 2 * static_cast<long>(l), 12), Rational(1)});
  return out;
}

std::vector<Complex> numeric_roots(const RationalPolynomial& poly) {
  const auto deg = static_cast<Eigen::Index>(poly.size() - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = poly.back().get_d();
  for (Eigen::Index i = 0; i < deg; ++i) {
    if (i + 1 < deg) companion(i + 1, i) = 1.0;
    companion(i, deg - 1) = -poly[i].get_d() / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> convergents(double x, long max_den) {
  std::vector<Rational> out;
  Integer h_prev = 1, h = static_cast<long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  out.emplace_back(h, k);
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 40 && std::abs(frac) > 1e-15; ++iter) {
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    Rational c(h, k);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

// Divides out (x - r); poly(r) must be zero.
RationalPolynomial deflate(const RationalPolynomial& poly, const Rational& r) {
  RationalPolynomial out(poly.size() - 1);
  Rational carry(0);
  for (std::size_t i = poly.size() - 1; i-- > 0;) {
    carry = poly[i + 1] + carry * r;
    out[i] = carry;
  }
  return out;
}

std::vector<Rational> rational_roots(RationalPolynomial poly) {
  std::vector<Rational> roots;
  trim(poly);
  while (poly.size() > 1) {
    if (poly.size() == 2) {
      roots.push_back(-poly[0] / poly[1]);
      break;
    }
    bool found = false;
    for (const Complex z : numeric_roots(poly)) {
      if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
      for (const auto& c : convergents(z.real(), 1000000)) {
        if (sgn(evaluate(poly, c)) == 0) {
          roots.push_back(c);
          poly = deflate(poly, c);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// L written as sum_i h_i(q) theta^i with coefficients on the left.
std::vector<QSeries> theta_form(const Mlde& op, std::size_t terms) {
  const std::size_t p = op.order();
  std::vector<QSeries> current{QSeries::constant(Rational(1), terms)};
  std::vector<QSeries> total(p + 1, QSeries::zero(terms));
  MonomialExpander expander(terms);
  auto accumulate = [&](const QSeries& factor, const std::vector<QSeries>& ops) {
    for (std::size_t i = 0; i < ops.size(); ++i) total[i] = add(total[i], mul(factor, ops[i]));
  };
  for (std::size_t j = 0; j <= p; ++j) {
    if (j > 0) {
      // D_k (sum h_i theta^i) = sum (D_k h_i) theta^i + h_i theta^{i+1}
      const int k = op.weight() + 2 * static_cast<int>(j - 1);
      std::vector<QSeries> next(current.size() + 1, QSeries::zero(terms));
      for (std::size_t i = 0; i < current.size(); ++i) {
        next[i] = add(next[i], serre_derivative(current[i], k));
        next[i + 1] = add(next[i + 1], current[i]);
      }
      current = std::move(next);
    }
    if (j == p)
      accumulate(QSeries::constant(Rational(1), terms), current);
    else if (j + 2 <= p && !op.coeffs()[j].is_zero())
      accumulate(expander.expand(op.coeffs()[j]), current);
  }
  return total;
}

}  // namespace

Mlde::Mlde(int weight, std::vector<PolynomialQR> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {
  const std::size_t p = order();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int expected = 2 * static_cast<int>(p - j);
    if (coeffs_[j].is_zero())
      coeffs_[j] = PolynomialQR(expected);
    else if (coeffs_[j].weight() != expected)
      throw Error(ErrorCode::InvalidArgument, "coefficient g_" + std::to_string(j) + " must have weight " +
                                                  std::to_string(expected));
  }
}

SkewPolynomial Mlde::as_skew() const {
  SkewPolynomial s = SkewPolynomial::d(static_cast<unsigned>(order()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    s = s + SkewPolynomial(SkewPolynomial::Terms{{static_cast<unsigned>(j), coeffs_[j]}});
  return s;
}

Rational evaluate(const RationalPolynomial& poly, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

IndicialData indicial_polynomial(const Mlde& op) {
  const std::size_t p = op.order();
  RationalPolynomial poly = rising_weights(op.weight(), p);
  for (std::size_t j = 0; j + 2 <= p; ++j) {
    const Rational g_inf = op.coeffs()[j].value_at_infinity();
    if (sgn(g_inf) == 0) continue;
    const auto part = rising_weights(op.weight(), j);
    for (std::size_t i = 0; i < part.size(); ++i) poly[i] += g_inf * part[i];
  }
  IndicialData data;
  data.root_sum = -poly[p - 1] / poly[p];
  data.roots = rational_roots(poly);
  data.fully_rational = data.roots.size() == p;
  data.poly = std::move(poly);
  return data;
}

QSeries solve_frobenius(const Mlde& op, const Rational& root, std::size_t terms) {
  const auto indicial = indicial_polynomial(op);
  if (sgn(evaluate(indicial.poly, root)) != 0)
    throw Error(ErrorCode::NotARoot, format_rational(root) + " is not a root of the indicial polynomial");

  const std::vector<QSeries> h = theta_form(op, terms);
  const std::size_t p = op.order();

  // powers[m][i] = (root + m)^i
  std::vector<std::vector<Rational>> powers(terms + 1, std::vector<Rational>(p + 1));
  for (std::size_t m = 0; m <= terms; ++m) {
    const Rational x = root + Rational(static_cast<long>(m));
    powers[m][0] = 1;
    for (std::size_t i = 1; i <= p; ++i) powers[m][i] = powers[m][i - 1] * x;
  }

  std::vector<Rational> a(terms + 1, Rational(0));
  a[0] = 1;
  for (std::size_t n = 1; n <= terms; ++n) {
    const Rational denom = evaluate(indicial.poly, root + Rational(static_cast<long>(n)));
    if (sgn(denom) == 0)
      throw Error(ErrorCode::ResonantRoot, "indicial polynomial vanishes at " + format_rational(root) + " + " +
                                               std::to_string(n));
    Rational acc(0);
    for (std::size_t m = 0; m < n; ++m) {
      if (sgn(a[m]) == 0) continue;
      Rational weight(0);
      for (std::size_t i = 0; i <= p; ++i) weight += h[i][n - m] * powers[m][i];
      acc += weight * a[m];
    }
    a[n] = -acc / denom;
  }
  return QSeries(root, std::move(a));
}

VVMF fundamental_system(const Mlde& op, std::size_t terms) {
  const auto indicial = indicial_polynomial(op);
  if (!indicial.fully_rational) throw Error(ErrorCode::IrrationalRoots, "indicial roots are not all rational");
  const auto& roots = indicial.roots;
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
    throw Error(ErrorCode::RootsNotDistinct, "indicial roots are not distinct");
  for (const auto& r : roots)
    if (sgn(r) < 0 || r >= 1) throw Error(ErrorCode::RootsOutOfRange, "indicial root " + format_rational(r) + " not in [0, 1)");

  std::vector<std::future<QSeries>> jobs;
  for (const auto& r : roots)
    jobs.push_back(std::async(std::launch::async, [&op, r, terms] { return solve_frobenius(op, r, terms); }));
  std::vector<QSeries> components;
  for (auto& job : jobs) components.push_back(job.get());
  return VVMF(op.weight(), make_rep(roots, op.weight() % 2 == 0 ? 1 : -1), std::move(components));
}

bool weight_relation_check(int k0, std::span<const Rational> exponents) {
  Rational sum(0);
  for (const auto& m : exponents) sum += m;
  const long p = static_cast<long>(exponents.size());
  return 12 * sum == Rational(p * (p + k0 - 1));
}

Mlde mlde_from_exponents(std::span<const Rational> exponents) {
  const std::size_t p = exponents.size();
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "at least one exponent is required");
  for (const auto& m : exponents)
    if (sgn(m) < 0 || m >= 1) throw Error(ErrorCode::RootsOutOfRange, "exponent " + format_rational(m) + " not in [0, 1)");
  if (std::set<Rational>(exponents.begin(), exponents.end()).size() != p)
    throw Error(ErrorCode::RootsNotDistinct, "exponents are not distinct");
  if (p > 5)
    throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(p) +
                                              " leaves free coefficients; supply the operator explicitly");

  Rational sum(0);
  for (const auto& m : exponents) sum += m;
  const Rational k0 = 12 * sum / Rational(static_cast<long>(p)) - Rational(static_cast<long>(p)) + 1;
  if (!is_integer(k0))
    throw Error(ErrorCode::NonIntegralWeight, "exponents force the non-integral weight " + format_rational(k0));
  const int weight = static_cast<int>(to_long(k0));

  RationalPolynomial target{Rational(1)};
  for (const auto& m : exponents) target = multiply(target, {-m, Rational(1)});
  RationalPolynomial rest = rising_weights(weight, p);
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = target[i] - rest[i];
  // Degrees p and p-1 cancel by the choice of k0; peel off the rest from the top.
  std::vector<Rational> constants(p >= 2 ? p - 1 : 0, Rational(0));
  for (std::size_t j = constants.size(); j-- > 0;) {
    constants[j] = rest[j];
    const auto basis = rising_weights(weight, j);
    for (std::size_t i = 0; i < basis.size(); ++i) rest[i] -= constants[j] * basis[i];
  }

  std::vector<PolynomialQR> coeffs;
  for (std::size_t j = 0; j < constants.size(); ++j) {
    const int w = 2 * static_cast<int>(p - j);
    const auto basis = monomial_basis(w);
    coeffs.push_back(constants[j] * PolynomialQR::monomial(basis.front()));
  }
  return Mlde(weight, std::move(coeffs));
}

Residual verify_solution(const Mlde& op, const QSeries& f) {
  const QSeries image = apply(op.as_skew(), f, op.weight());
  Residual out;
  out.checked_terms = image.truncation();
  for (std::size_t n = 0; n <= image.truncation(); ++n) {
    if (sgn(image[n]) != 0) {
      out.zero = false;
      out.first_exponent = image.leading() + Rational(static_cast<long>(n));
      out.first_value = image[n];
      break;
    }
  }
  return out;
}

}  // namespace modform
