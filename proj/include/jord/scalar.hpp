#pragma once
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace jord {

// exact rational scalar; mpq_class keeps lowest terms / positive denominator
// as long as values are built through arithmetic or the helpers below
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

// accepts "p" or "p/q", base 10, optional leading '-'
inline Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_scalar: empty string");
  for (char ch : text)
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
      throw std::invalid_argument("parse_scalar: bad character in '" + text + "'");
  Scalar s;
  if (s.set_str(text, 10) != 0) throw std::invalid_argument("parse_scalar: cannot parse '" + text + "'");
  if (s.get_den() == 0) throw std::invalid_argument("parse_scalar: zero denominator in '" + text + "'");
  s.canonicalize();
  return s;
}

// "p/q", or just "p" when the denominator is 1
inline std::string scalar_str(const Scalar& x) { return x.get_str(); }

// exact square root if x is a square of a rational, else nullopt
inline std::optional<Scalar> rational_sqrt(const Scalar& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Scalar r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace jord
