#pragma once

// p-adic valuation, reduction of p-integral rationals modulo p^N, and the
// denominator data used by the Clausen-von Staudt type statements.

#include <polyseq/families.hpp>

#include <cstdint>
#include <string>

namespace polyseq {

class ZeroValuation : public Error {
 public:
  using Error::Error;
};

class NotPIntegral : public Error {
 public:
  using Error::Error;
};

/// A residue class value mod modulus, 0 <= value < modulus.
struct Residue {
  Integer value;
  Integer modulus;

  friend bool operator==(const Residue&, const Residue&) = default;
};

inline std::int64_t ord_p(const Integer& z, std::int64_t p) {
  if (z == 0) throw ZeroValuation("ord_p of zero");
  Integer r = z;
  std::int64_t e = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
    ++e;
  }
  return e;
}

/// ord_p(numerator) - ord_p(denominator).
inline std::int64_t ord_p(const Rational& q, std::int64_t p) {
  if (q == 0) throw ZeroValuation("ord_p of zero");
  return ord_p(q.get_num(), p) - ord_p(q.get_den(), p);
}

/// True when q lies in Z_(p), i.e. p does not divide the reduced denominator.
inline bool is_p_integral(const Rational& q, std::int64_t p) {
  return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
}

/// a * b^{-1} mod m for q = a/b with gcd(b, m) = 1.
inline Residue reduce_modulo(const Rational& q, const Integer& modulus) {
  if (modulus < 1) throw Error("reduce_modulo: modulus must be positive");
  Integer inv;
  if (modulus == 1) return {0, 1};
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw NotPIntegral("reduce_modulo: denominator of " + to_string(q) +
                       " is not invertible mod " + to_string(modulus));
  Integer v = q.get_num() * inv;
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return {v, modulus};
}

/// q mod p^N; q must be p-integral.
inline Residue reduce_mod(const Rational& q, std::int64_t p, std::int64_t N) {
  if (!is_p_integral(q, p))
    throw NotPIntegral("reduce_mod: " + to_string(q) + " is not " + std::to_string(p) + "-integral");
  return reduce_modulo(q, ipow(Integer(static_cast<long>(p)), N));
}

/// Denominator-order data at an odd prime p for index 2n: b(2n), d(2n) and
/// beta-hat(2n) are the denominators of B_{2n}, D_{2n}^{(1)} and beta_{2n}^{(1)}.
struct ValuationReport {
  std::int64_t p = 0;
  std::int64_t n = 0;  // half index; the order is 2n
  Integer b, d, beta_hat;
  std::int64_t ord_b = 0, ord_d = 0, ord_beta_hat = 0;
  std::int64_t alpha = 0;  // 2n mod (p-1)
  std::int64_t gamma = 0;  // min(2n, 2p-3)
  bool p_minus_1_divides = false;
};

inline ValuationReport valuation_report(std::int64_t p, std::int64_t n) {
  if (p < 3 || !is_prime(p)) throw Error("valuation_report: p must be an odd prime");
  if (n < 1) throw Error("valuation_report: n must be >= 1");
  ValuationReport r;
  r.p = p;
  r.n = n;
  r.b = bernoulli(2 * n).get_den();
  r.d = polycosecant(2 * n, 1).get_den();
  r.beta_hat = polycotangent(2 * n, 1).get_den();
  r.ord_b = ord_p(r.b, p);
  r.ord_d = ord_p(r.d, p);
  r.ord_beta_hat = ord_p(r.beta_hat, p);
  r.alpha = (2 * n) % (p - 1);
  r.gamma = std::min(2 * n, 2 * p - 3);
  r.p_minus_1_divides = r.alpha == 0;
  return r;
}

}  // namespace polyseq
