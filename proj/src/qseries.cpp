#include "modform/qseries.hpp"

namespace modform {

namespace {

// Scales the first n+1 coefficients of s to integers over one denominator.
Integer common_numerators(const QSeries& s, std::size_t n, std::vector<Integer>& out) {
  Integer den = 1;
  for (std::size_t i = 0; i <= n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s[i].get_den_mpz_t());
  out.resize(n + 1);
  Integer factor;
  for (std::size_t i = 0; i <= n; ++i) {
    mpz_divexact(factor.get_mpz_t(), den.get_mpz_t(), s[i].get_den_mpz_t());
    mpz_mul(out[i].get_mpz_t(), factor.get_mpz_t(), s[i].get_num_mpz_t());
  }
  return den;
}

}  // namespace

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Integer> an, bn;
  const Integer da = common_numerators(a, n, an);
  const Integer db = common_numerators(b, n, bn);

  std::vector<std::size_t> support_b;
  for (std::size_t j = 0; j <= n; ++j)
    if (bn[j] != 0) support_b.push_back(j);

  std::vector<Integer> acc(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (an[i] == 0) continue;
    for (std::size_t j : support_b) {
      if (i + j > n) break;
      mpz_addmul(acc[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
  }

  const Integer den = da * db;
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = Rational(acc[k], den);
    out[k].canonicalize();
  }
  return QSeries(a.leading() + b.leading(), std::move(out));
}

}  // namespace modform
