#pragma once

// Truncated formal power series in one variable over the rationals.
//
// A Series of truncation order T stores the ordinary coefficients
// c_0..c_T of sum c_n t^n; the exponential-generating-function convention
// (a_n = n! c_n) is applied only by egf_coefficient(). Arithmetic on two
// series of orders T1, T2 yields order min(T1, T2); division cancels the
// common t-valuation first and loses that many orders.

#include <polyseq/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace polyseq {

class DivisionValuation : public Error {
 public:
  using Error::Error;
};

class ComposeNonzeroConstant : public Error {
 public:
  using Error::Error;
};

class IndexBeyondTruncation : public Error {
 public:
  using Error::Error;
};

/// Truncation order used by every oracle computation unless raised.
inline constexpr std::size_t kDefaultTruncation = 24;

class Series {
 public:
  /// The zero series of order 0.
  Series() : coeffs_(1) {}

  /// The zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}

  /// Takes c_0..c_T; the order is coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("Series: empty coefficient list");
  }

  static Series constant(const Rational& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series t (the identity under composition).
  static Series variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient; order() + 1 for the zero series.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return coeffs_.size();
  }

  Series truncated(std::size_t order) const {
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + std::min(order, this->order()) + 1);
    c.resize(order + 1);
    return Series(std::move(c));
  }

  friend Series operator+(const Series& a, const Series& b) {
    std::size_t t = std::min(a.order(), b.order());
    std::vector<Rational> c(t + 1);
    for (std::size_t i = 0; i <= t; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return Series(std::move(c));
  }

  friend Series operator-(const Series& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x = -x;
    return Series(std::move(c));
  }

  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    std::size_t t = std::min(a.order(), b.order());
    std::vector<Rational> c(t + 1);
    for (std::size_t i = 0; i <= t; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= t; ++j)
        if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Series(std::move(c));
  }

  friend Series operator*(const Rational& k, const Series& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x *= k;
    return Series(std::move(c));
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

inline Series add(const Series& a, const Series& b) { return a + b; }
inline Series mul(const Series& a, const Series& b) { return a * b; }

/// q with q*b == a through the retained orders. Both series are shifted down
/// by v = valuation(b) first, so the result has order min(T_a, T_b) - v.
inline Series div(const Series& a, const Series& b) {
  const std::size_t v = b.valuation();
  if (v > b.order())
    throw DivisionValuation("series division by a series that is zero through its order");
  if (a.valuation() < v)
    throw DivisionValuation("series division: valuation(a) < valuation(b)");
  const std::size_t t = std::min(a.order(), b.order()) - v;
  std::vector<Rational> q(t + 1);
  const Rational& lead = b[v];
  for (std::size_t i = 0; i <= t; ++i) {
    Rational acc = a[i + v];
    for (std::size_t j = 1; j <= i; ++j)
      if (b[v + j] != 0) acc -= b[v + j] * q[i - j];
    q[i] = acc / lead;
  }
  return Series(std::move(q));
}

/// a(b(t)); b must have zero constant term. Horner evaluation.
inline Series compose(const Series& a, const Series& b) {
  if (b[0] != 0)
    throw ComposeNonzeroConstant("compose: inner series has nonzero constant term");
  const std::size_t t = std::min(a.order(), b.order());
  Series acc = Series::constant(a[t], t);
  for (std::size_t i = t; i-- > 0;) {
    acc = acc * b;
    acc = acc + Series::constant(a[i], t);
  }
  return acc;
}

/// a^e for any integer e; negative powers need a nonzero constant term.
inline Series pow(const Series& a, std::int64_t e) {
  if (e < 0) return div(Series::constant(1, a.order()), pow(a, -e));
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// s(-t).
inline Series reflect(const Series& s) {
  std::vector<Rational> c(s.coeffs());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Series(std::move(c));
}

/// d/dt; loses one order.
inline Series derivative(const Series& s) {
  if (s.order() == 0) return Series(0);
  std::vector<Rational> c(s.order());
  for (std::size_t i = 1; i <= s.order(); ++i) c[i - 1] = s[i] * static_cast<long>(i);
  return Series(std::move(c));
}

/// n! times the ordinary coefficient of t^n.
inline Rational egf_coefficient(const Series& s, std::size_t n) {
  if (n > s.order())
    throw IndexBeyondTruncation("egf_coefficient: index " + std::to_string(n) +
                                " beyond truncation order " + std::to_string(s.order()));
  return s[n] * Rational(factorial(static_cast<std::int64_t>(n)));
}

// Elementary building blocks.

/// e^{ct}.
inline Series exp_scaled(const Rational& c, std::size_t order) {
  std::vector<Rational> coeffs(order + 1);
  Rational term = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    coeffs[i] = term;
    term = term * c / static_cast<long>(i + 1);
  }
  return Series(std::move(coeffs));
}

inline Series sinh_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 1; i <= order; i += 2)
    c[i] = make_rational(1, factorial(static_cast<std::int64_t>(i)));
  return Series(std::move(c));
}

inline Series cosh_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order; i += 2)
    c[i] = make_rational(1, factorial(static_cast<std::int64_t>(i)));
  return Series(std::move(c));
}

inline Series sin_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 1; i <= order; i += 2)
    c[i] = make_rational(sign_power((i - 1) / 2), factorial(static_cast<std::int64_t>(i)));
  return Series(std::move(c));
}

inline Series cos_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order; i += 2)
    c[i] = make_rational(sign_power(i / 2), factorial(static_cast<std::int64_t>(i)));
  return Series(std::move(c));
}

/// tanh t = sinh t / cosh t (cosh has unit constant term, no order loss).
inline Series tanh_series(std::size_t order) {
  return div(sinh_series(order), cosh_series(order));
}

/// tanh(t/2) = sinh(t/2) / cosh(t/2), by exact series division.
inline Series tanh_half_series(std::size_t order) {
  Series half = make_rational(1, 2) * Series::variable(order);
  return div(compose(sinh_series(order), half), compose(cosh_series(order), half));
}

enum class Elementary { exp_scaled, sinh, cosh, tanh_half };

inline Series make_elementary(Elementary kind, std::size_t order, const Rational& c = 1) {
  switch (kind) {
    case Elementary::exp_scaled: return exp_scaled(c, order);
    case Elementary::sinh: return sinh_series(order);
    case Elementary::cosh: return cosh_series(order);
    case Elementary::tanh_half: return tanh_half_series(order);
  }
  throw Error("make_elementary: unknown kind");
}

enum class PolylogLevel { one, two };

/// Li_k(inner) = sum_{m>=1} inner^m / m^k, or for level two
/// A_k(inner) = 2 sum_{n>=0} inner^{2n+1} / (2n+1)^k. Any integer k.
/// Powers of inner beyond the truncation vanish because valuation >= 1.
inline Series polylog_apply(PolylogLevel level, std::int64_t k, const Series& inner) {
  if (inner[0] != 0)
    throw ComposeNonzeroConstant("polylog_apply: inner series has nonzero constant term");
  const std::size_t t = inner.order();
  Series acc(t);
  Series power = inner;
  for (std::size_t m = 1; m <= t; ++m) {
    bool take = level == PolylogLevel::one || m % 2 == 1;
    if (take) {
      Rational w = pow_signed(Integer(static_cast<long>(m)), -k);
      if (level == PolylogLevel::two) w *= 2;
      acc = acc + w * power;
    }
    if (m < t) power = power * inner;
  }
  return acc;
}

}  // namespace polyseq
