#pragma once

// Symmetrized poly-Bernoulli numbers script-B_m^{(-l)}(n) and symmetrized
// polycosecant numbers script-D_m^{(-l)}(n), together with the two-variable
// generating functions behind their duality:
//
//   sum script-B_m^{(-l)}(n) x^l/l! y^m/m! = n! e^{x+y} / (e^x+e^y-e^{x+y})^{n+1}
//   f_{1,n}(t,y) = n! e^{t+y} / (1+e^t+e^y-e^{t+y})^{n+1},  f_{2,n}(t,y) = f_{1,n}(-t,y)
//   f_{1,n} + f_{2,n} = sum script-D_m^{(-l)}(n) t^m/m! y^l/l!

#include <polyseq/families.hpp>

#include <cstdint>

namespace polyseq {

/// n! e^{x+y} / (e^x+e^y-e^{x+y})^{n+1}, orders T in both variables.
inline BiSeries sym_poly_bernoulli_bivariate(std::int64_t n, std::size_t order) {
  BiSeries ex = biseries_exp(1, 0, order);
  BiSeries ey = biseries_exp(0, 1, order);
  BiSeries exy = biseries_exp(1, 1, order);
  BiSeries den = pow(ex + ey - exy, n + 1);
  return Rational(factorial(n)) * div(exy, den);
}

/// f_{1,n}(t,y) when sign = +1 and f_{2,n}(t,y) when sign = -1.
inline BiSeries sym_cosecant_component(std::int64_t n, int sign, std::size_t order) {
  BiSeries one = BiSeries::constant(1, order, order);
  BiSeries et = biseries_exp(sign, 0, order);
  BiSeries ey = biseries_exp(0, 1, order);
  BiSeries ety = biseries_exp(sign, 1, order);
  BiSeries den = pow(one + et + ey - ety, n + 1);
  return Rational(factorial(n)) * div(ety, den);
}

/// f_{1,n} + f_{2,n}.
inline BiSeries sym_polycosecant_bivariate(std::int64_t n, std::size_t order) {
  return sym_cosecant_component(n, 1, order) + sym_cosecant_component(n, -1, order);
}

enum class SymBernoulliMethod { definition, closed_form, biseries };

/// script-B_m^{(-l)}(n).
inline Rational sym_poly_bernoulli(std::int64_t m, std::int64_t l, std::int64_t n,
                                   SymBernoulliMethod method = SymBernoulliMethod::closed_form) {
  if (m < 0 || l < 0 || n < 0) throw Error("sym_poly_bernoulli: indices must be non-negative");
  switch (method) {
    case SymBernoulliMethod::definition: {
      // s(n,j) vanishes for j > n, so the defining series is finite.
      Rational acc = 0;
      for (std::int64_t j = 0; j <= n; ++j) {
        Integer s = stirling1(n, j);
        if (s == 0) continue;
        acc += Rational(s) * poly_bernoulli_polynomial(m, -l - j, Rational(static_cast<long>(n)));
      }
      return acc;
    }
    case SymBernoulliMethod::closed_form: {
      Integer acc = 0;
      for (std::int64_t j = 0; j <= std::min(l, m); ++j)
        acc += factorial(n) * factorial(j) * factorial(j) * binomial(j + n, n) *
               stirling2(l + 1, j + 1) * stirling2(m + 1, j + 1);
      return Rational(acc);
    }
    case SymBernoulliMethod::biseries: {
      auto order = static_cast<std::size_t>(std::max(l, m));
      // x carries the weight index l, y the order index m.
      return biseries_egf_coefficient(sym_poly_bernoulli_bivariate(n, order),
                                      static_cast<std::size_t>(l), static_cast<std::size_t>(m));
    }
  }
  throw Error("sym_poly_bernoulli: unknown method");
}

/// D-hat_m^{(-l)}(n): EGF coefficient of
///   1/2 (e^t+1)^{1-n} Li_{-l}(tanh(t/2))/sinh t  +  the same at -t.
inline Rational copoly_hat(std::int64_t m, std::int64_t l, std::int64_t n) {
  if (m < 0 || l < 0 || n < 0) throw Error("copoly_hat: indices must be non-negative");
  const std::size_t order = std::max<std::size_t>(oracle_truncation(), static_cast<std::size_t>(m));
  Series base = tilde_cosecant_series(-l, order);
  Series prefactor = pow(exp_scaled(1, order) + Series::constant(1, order), 1 - n);
  Series g = make_rational(1, 2) * (prefactor * base);
  return egf_coefficient(g + reflect(g), static_cast<std::size_t>(m));
}

enum class SymCosecantMethod { definition, closed_form };

/// script-D_m^{(-l)}(n). Zero for odd m.
inline Rational sym_polycosecant(std::int64_t m, std::int64_t l, std::int64_t n,
                                 SymCosecantMethod method = SymCosecantMethod::closed_form) {
  if (m < 0 || l < 0 || n < 0) throw Error("sym_polycosecant: indices must be non-negative");
  switch (method) {
    case SymCosecantMethod::definition: {
      Rational acc = 0;
      for (std::int64_t j = 0; j <= n; ++j) {
        Integer s = stirling1(n, j);
        if (s != 0) acc += Rational(s) * copoly_hat(m, l + j, n);
      }
      return acc;
    }
    case SymCosecantMethod::closed_form: {
      if (m % 2 != 0) return 0;
      // n!/2^{n+1} sum_j (j!)^2/2^{j-1} C(j+n,n) S(m+1,j+1) S(l+1,j+1)
      Rational acc = 0;
      for (std::int64_t j = 0; j <= std::min(m, l); ++j) {
        Integer num = factorial(j) * factorial(j) * binomial(j + n, n) * stirling2(m + 1, j + 1) *
                      stirling2(l + 1, j + 1);
        acc += Rational(num) * pow_signed(Integer(2), 1 - j);
      }
      return Rational(factorial(n)) * acc / Rational(ipow(2, n + 1));
    }
  }
  throw Error("sym_polycosecant: unknown method");
}

}  // namespace polyseq
