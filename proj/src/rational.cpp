#include "gallery/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gallery {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(const std::string& text) {
  throw std::invalid_argument("malformed rational literal: '" + text + "'");
}

// mpz_set_str rejects a leading '+'.
Z to_z(const std::string& s) { return Z(s[0] == '+' ? s.substr(1) : s, 10); }

Q parse_decimal(const std::string& text, std::size_t dot) {
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_digits = text.size() - dot - 1;
  if (frac_digits == 0 || !is_integer_literal(digits)) bad_literal(text);
  Z num = to_z(digits);
  Z den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
  Q q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Q parse_rational(const std::string& text) {
  if (text.empty()) bad_literal(text);
  std::size_t dot = text.find('.');
  if (dot != std::string::npos) {
    if (text.find('/') != std::string::npos ||
        text.find('.', dot + 1) != std::string::npos) {
      bad_literal(text);
    }
    return parse_decimal(text, dot);
  }
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) bad_literal(text);
    return Q(to_z(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) bad_literal(text);
  Z d = to_z(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Q q(to_z(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& v) { return v.get_str(); }

double to_double(const Q& v) { return v.get_d(); }

long floor_long(const Q& v) {
  Z q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(v.get_mpq_t()), mpq_denref(v.get_mpq_t()));
  if (!q.fits_slong_p()) throw std::overflow_error("rational floor out of long range");
  return q.get_si();
}

long ceil_long(const Q& v) {
  Z q;
  mpz_cdiv_q(q.get_mpz_t(), mpq_numref(v.get_mpq_t()), mpq_denref(v.get_mpq_t()));
  if (!q.fits_slong_p()) throw std::overflow_error("rational ceil out of long range");
  return q.get_si();
}

}  // namespace gallery
