#include "modform/classical.hpp"

#include "modform/linalg.hpp"

#include <array>
#include <mutex>
#include <string>

namespace modform {

namespace {

// sigma_k(n) for n = 0..terms (sigma_k(0) unused, set to 0).
std::vector<Integer> divisor_sums(unsigned k, std::size_t terms) {
  std::vector<Integer> sigma(terms + 1, 0);
  Integer dk;
  for (std::size_t d = 1; d <= terms; ++d) {
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    for (std::size_t m = d; m <= terms; m += d) sigma[m] += dk;
  }
  return sigma;
}

QSeries compute_eisenstein(Eisenstein kind, std::size_t terms) {
  Rational constant(1);
  Rational factor;
  unsigned k = 0;
  switch (kind) {
    case Eisenstein::P:
      constant = make_rational(-1, 12);
      factor = 2;
      k = 1;
      break;
    case Eisenstein::Q:
      factor = 240;
      k = 3;
      break;
    case Eisenstein::R:
      factor = -504;
      k = 5;
      break;
  }
  const auto sigma = divisor_sums(k, terms);
  std::vector<Rational> coeffs(terms + 1);
  coeffs[0] = constant;
  for (std::size_t n = 1; n <= terms; ++n) coeffs[n] = factor * Rational(sigma[n]);
  return QSeries(Rational(0), std::move(coeffs));
}

struct EisensteinCache {
  std::mutex lock;
  std::array<QSeries, 3> longest;
  std::array<bool, 3> filled{};
};

EisensteinCache& eisenstein_cache() {
  static EisensteinCache cache;
  return cache;
}

void check_weight(int w) {
  if (w < 0) throw Error(ErrorCode::InvalidArgument, "negative weight " + std::to_string(w));
  if (w % 2 != 0) throw Error(ErrorCode::OddWeight, "M has no forms of odd weight " + std::to_string(w));
}

}  // namespace

QSeries eisenstein(Eisenstein kind, std::size_t terms) {
  auto& cache = eisenstein_cache();
  const auto slot = static_cast<std::size_t>(kind);
  std::lock_guard guard(cache.lock);
  if (!cache.filled[slot] || cache.longest[slot].truncation() < terms) {
    cache.longest[slot] = compute_eisenstein(kind, terms);
    cache.filled[slot] = true;
  }
  return align_truncation(cache.longest[slot], terms);
}

QSeries delta(std::size_t terms) {
  const QSeries q = eisenstein(Eisenstein::Q, terms + 1);
  const QSeries r = eisenstein(Eisenstein::R, terms + 1);
  const QSeries d = scale(mul(mul(q, q), q) - mul(r, r), make_rational(1, 1728));
  // Constant term cancels; re-anchor at q^1 keeping terms+1 coefficients.
  return QSeries(Rational(1), std::vector<Rational>(d.coeffs().begin() + 1, d.coeffs().end()));
}

QSeries eta_power(unsigned h, std::size_t terms) {
  // Euler's product prod(1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2), k in Z.
  std::vector<Rational> euler(terms + 1, Rational(0));
  for (long k = 0;; ++k) {
    const long e1 = k * (3 * k - 1) / 2;
    const long e2 = k * (3 * k + 1) / 2;
    if (static_cast<std::size_t>(e1) > terms) break;
    const long sign = (k % 2 == 0) ? 1 : -1;
    euler[e1] = sign;
    if (k > 0 && static_cast<std::size_t>(e2) <= terms) euler[e2] = sign;
  }
  QSeries base(Rational(0), std::move(euler));
  QSeries result = QSeries::constant(Rational(1), terms);
  for (unsigned e = h; e > 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    if (e > 1) base = mul(base, base);
  }
  return QSeries(make_rational(static_cast<long>(h), 24), result.coeffs());
}

std::size_t count_monomials(int w) {
  if (w < 0 || w % 2 != 0) return 0;
  std::size_t count = 0;
  for (int v = 0; 6 * v <= w; ++v)
    if ((w - 6 * v) % 4 == 0) ++count;
  return count;
}

int dim_M(int w) {
  check_weight(w);
  const int k = w / 2;
  return k % 6 == 1 ? k / 6 : k / 6 + 1;
}

std::vector<Monomial> monomial_basis(int w) {
  check_weight(w);
  std::vector<Monomial> basis;
  for (int u = 0; 4 * u <= w; ++u)
    if ((w - 4 * u) % 6 == 0) basis.push_back({u, (w - 4 * u) / 6});
  return basis;
}

PolynomialQR::PolynomialQR(int weight) : weight_(weight) { check_weight(weight); }

PolynomialQR::PolynomialQR(int weight, Coords coords) : weight_(weight) {
  check_weight(weight);
  for (auto& [m, c] : coords) {
    if (m.u < 0 || m.v < 0 || m.weight() != weight)
      throw Error(ErrorCode::InvalidArgument, "monomial Q^" + std::to_string(m.u) + "R^" + std::to_string(m.v) +
                                                  " does not have weight " + std::to_string(weight));
    if (sgn(c) != 0) coords_.emplace(m, c);
  }
}

PolynomialQR PolynomialQR::monomial(Monomial m, const Rational& c) { return PolynomialQR(m.weight(), {{m, c}}); }

Rational PolynomialQR::coefficient(Monomial m) const {
  auto it = coords_.find(m);
  return it == coords_.end() ? Rational(0) : it->second;
}

Rational PolynomialQR::value_at_infinity() const {
  Rational sum(0);
  for (const auto& [m, c] : coords_) sum += c;
  return sum;
}

bool PolynomialQR::operator==(const PolynomialQR& other) const {
  if (is_zero() && other.is_zero()) return true;
  return weight_ == other.weight_ && coords_ == other.coords_;
}

PolynomialQR operator+(const PolynomialQR& a, const PolynomialQR& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.weight_ != b.weight_)
    throw Error(ErrorCode::InvalidArgument, "cannot add forms of weights " + std::to_string(a.weight_) + " and " +
                                                std::to_string(b.weight_));
  PolynomialQR::Coords sum = a.coords_;
  for (const auto& [m, c] : b.coords_) sum[m] += c;
  return PolynomialQR(a.weight_, std::move(sum));
}

PolynomialQR operator-(const PolynomialQR& a, const PolynomialQR& b) { return a + Rational(-1) * b; }

PolynomialQR operator*(const PolynomialQR& a, const PolynomialQR& b) {
  PolynomialQR::Coords prod;
  for (const auto& [ma, ca] : a.coords_)
    for (const auto& [mb, cb] : b.coords_) prod[{ma.u + mb.u, ma.v + mb.v}] += ca * cb;
  return PolynomialQR(a.weight_ + b.weight_, std::move(prod));
}

PolynomialQR operator*(const Rational& c, const PolynomialQR& a) {
  PolynomialQR::Coords out;
  if (sgn(c) != 0)
    for (const auto& [m, x] : a.coords_) out.emplace(m, c * x);
  return PolynomialQR(a.weight_, std::move(out));
}

MonomialExpander::MonomialExpander(std::size_t terms) : terms_(terms) {}

const QSeries& MonomialExpander::power(std::vector<QSeries>& cache, Eisenstein base, int exponent) {
  if (cache.empty()) cache.push_back(QSeries::constant(Rational(1), terms_));
  while (static_cast<int>(cache.size()) <= exponent) cache.push_back(mul(cache.back(), eisenstein(base, terms_)));
  return cache[exponent];
}

const QSeries& MonomialExpander::expand(Monomial m) {
  auto it = monomials_.find(m);
  if (it != monomials_.end()) return it->second;
  QSeries s = mul(power(q_powers_, Eisenstein::Q, m.u), power(r_powers_, Eisenstein::R, m.v));
  return monomials_.emplace(m, std::move(s)).first->second;
}

QSeries MonomialExpander::expand(const PolynomialQR& f) {
  QSeries sum = QSeries::zero(terms_);
  for (const auto& [m, c] : f.coords()) sum = add(sum, scale(expand(m), c));
  return sum;
}

QSeries to_qexpansion(const PolynomialQR& f, std::size_t terms) {
  MonomialExpander expander(terms);
  return expander.expand(f);
}

PolynomialQR from_qexpansion(const QSeries& f, int weight, std::size_t terms) {
  const auto basis = monomial_basis(weight);
  if (f.is_zero()) return PolynomialQR(weight);
  if (!is_integer(f.leading()) || sgn(f.leading()) < 0)
    throw Error(ErrorCode::NotInM, "leading exponent " + format_rational(f.leading()) +
                                       " is not a nonnegative integer");
  if (terms + 1 < basis.size())
    throw Error(ErrorCode::AmbiguousTruncation, std::to_string(terms + 1) + " coefficients cannot determine a form in a " +
                                                    std::to_string(basis.size()) + "-dimensional space");
  if (f.known_through() < Rational(static_cast<long>(terms)))
    throw Error(ErrorCode::CannotExtend, "series is known only through q^" + format_rational(f.known_through()));

  const long lead = to_long(f.leading());
  MonomialExpander expander(terms);
  RationalMatrix a(terms + 1, std::vector<Rational>(basis.size()));
  std::vector<Rational> b(terms + 1, Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const QSeries& e = expander.expand(basis[j]);
    for (std::size_t n = 0; n <= terms; ++n) a[n][j] = e[n];
  }
  for (std::size_t n = 0; n <= terms; ++n)
    if (static_cast<long>(n) >= lead) b[n] = f[n - lead];

  const auto sol = solve(a, b, basis.size());
  if (!sol.consistent) throw Error(ErrorCode::NotInM, "series is not a modular form of weight " + std::to_string(weight));
  if (sol.rank < basis.size())
    throw Error(ErrorCode::AmbiguousTruncation, "truncation does not separate the monomial basis");
  PolynomialQR::Coords coords;
  for (std::size_t j = 0; j < basis.size(); ++j) coords.emplace(basis[j], sol.x[j]);
  return PolynomialQR(weight, std::move(coords));
}

QSeries serre_derivative(const QSeries& f, int k) {
  const QSeries p = eisenstein(Eisenstein::P, f.truncation());
  return add(theta(f), scale(mul(p, f), Rational(k)));
}

PolynomialQR serre_derivative(const PolynomialQR& f) {
  PolynomialQR::Coords out;
  for (const auto& [m, c] : f.coords()) {
    if (m.u > 0) out[{m.u - 1, m.v + 1}] += c * make_rational(-m.u, 3);
    if (m.v > 0) out[{m.u + 2, m.v - 1}] += c * make_rational(-m.v, 2);
  }
  return PolynomialQR(f.weight() + 2, std::move(out));
}

}  // namespace modform
