#include "supconv/rational.hpp"

#include "supconv/error.hpp"

#include <cctype>

namespace supconv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::NotConstructed: return "not-constructed";
    case ErrorKind::MalformedFile: return "malformed-file";
  }
  return "unknown";
}

Rational make_rational(long num, long den) {
  require(den != 0, ErrorKind::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, ErrorKind::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  require(is_integer_literal(num) && is_integer_literal(den) && den[0] != '-',
          ErrorKind::InvalidInput, "not a rational literal: '" + text + "'");
  const Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  const Integer d(den[0] == '+' ? den.substr(1) : den, 10);
  return make_rational(n, d);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace supconv
