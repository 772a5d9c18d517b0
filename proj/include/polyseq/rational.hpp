#pragma once

// Exact scalar types. Everything in polyseq is computed over these; no
// floating point is used anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in lowest terms with a positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw Error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer factorial(std::int64_t n) {
  if (n < 0) throw Error("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// C(n, k) with the usual convention that it vanishes outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Integer ipow(const Integer& base, std::int64_t e) {
  if (e < 0) throw Error("ipow: negative exponent");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

/// base^e for any sign of e (base must be nonzero when e < 0).
inline Rational pow_signed(const Integer& base, std::int64_t e) {
  if (e >= 0) return Rational(ipow(base, e));
  if (base == 0) throw Error("pow_signed: zero to a negative power");
  return make_rational(1, ipow(base, -e));
}

inline Rational pow_signed(const Rational& base, std::int64_t e) {
  if (e >= 0) {
    Integer n = ipow(base.get_num(), e);
    Integer d = ipow(base.get_den(), e);
    return make_rational(n, d);
  }
  if (base == 0) throw Error("pow_signed: zero to a negative power");
  return make_rational(ipow(base.get_den(), -e), ipow(base.get_num(), -e));
}

inline Integer sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// "a/b" in lowest terms, "a" for integers, leading '-' when negative.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Inverse of to_string. Accepts optional sign, integer or "a/b" form.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid(s, true)) throw Error("parse_rational: malformed '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw Error("parse_rational: malformed '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

}  // namespace polyseq
