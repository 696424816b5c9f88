#include "modform/rational.hpp"

#include "modform/error.hpp"

#include <cctype>

namespace modform {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

long to_long(const Rational& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw Error(ErrorCode::InvalidArgument, "expected a small integer, got " + format_rational(x));
  return x.get_num().get_si();
}

}  // namespace modform
