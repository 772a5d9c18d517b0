#pragma once

// Poly-Bernoulli numbers B_n^{(k)}, C_n^{(k)} and polynomials B_n^{(k)}(x),
// polycosecant numbers D_n^{(k)}, polycotangent numbers beta_n^{(k)} and
// the level-one variant tilde-D_m^{(-k)}.
//
// Every family has a generating-function route (series oracle) and, where
// one exists, closed Stirling-sum routes. The canonical route stays in
// integer arithmetic for non-positive weight:
//   D:    sasaki for k <= -1, explicit otherwise
//   beta: stirling_negk for k <= -1, explicit otherwise
//   B, C: closed form

#include <polyseq/biseries.hpp>
#include <polyseq/sequences.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

namespace polyseq {

class MethodDomain : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::size_t& truncation_setting() {
  static std::size_t t = kDefaultTruncation;
  return t;
}

}  // namespace detail

/// Truncation order of the series oracle (default 24).
inline std::size_t oracle_truncation() { return detail::truncation_setting(); }

inline void set_oracle_truncation(std::size_t order) {
  if (order < 2) throw Error("oracle truncation must be at least 2");
  detail::truncation_setting() = order;
}

enum class Family { PolyB_B, PolyB_C, Cosecant, Cotangent, TildeD };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::PolyB_B: return "PolyB_B";
    case Family::PolyB_C: return "PolyB_C";
    case Family::Cosecant: return "Cosecant";
    case Family::Cotangent: return "Cotangent";
    case Family::TildeD: return "TildeD";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::PolyB_B, Family::PolyB_C, Family::Cosecant, Family::Cotangent,
                   Family::TildeD})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

/// Addresses one number: order n, weight k (any sign).
struct FamilyIndex {
  Family family;
  std::int64_t n;
  std::int64_t k;

  friend auto operator<=>(const FamilyIndex&, const FamilyIndex&) = default;
};

// ---------------------------------------------------------------------------
// Generating functions.

enum class PolyBernoulliVariant { B, C };

/// Li_k(1-e^{-t})/(1-e^{-t}) for B, Li_k(1-e^{-t})/(e^t-1) for C.
inline Series poly_bernoulli_series(PolyBernoulliVariant variant, std::int64_t k,
                                    std::size_t order) {
  const std::size_t t = order + 1;
  Series inner = Series::constant(1, t) - exp_scaled(-1, t);
  Series li = polylog_apply(PolylogLevel::one, k, inner);
  if (variant == PolyBernoulliVariant::B) return div(li, inner);
  return div(li, exp_scaled(1, t) - Series::constant(1, t));
}

/// A_k(tanh(t/2))/sinh t.
inline Series polycosecant_series(std::int64_t k, std::size_t order) {
  const std::size_t t = order + 1;
  return div(polylog_apply(PolylogLevel::two, k, tanh_half_series(t)), sinh_series(t));
}

/// A_k(tanh(t/2))/tanh t.
inline Series polycotangent_series(std::int64_t k, std::size_t order) {
  const std::size_t t = order + 1;
  return div(polylog_apply(PolylogLevel::two, k, tanh_half_series(t)), tanh_series(t));
}

/// Li_{weight}(tanh(t/2))/sinh t.
inline Series tilde_cosecant_series(std::int64_t weight, std::size_t order) {
  const std::size_t t = order + 1;
  return div(polylog_apply(PolylogLevel::one, weight, tanh_half_series(t)), sinh_series(t));
}

/// f(t,y) = sum D_n^{(-k)} t^n/n! y^k/k!
///        = 1 + e^t(e^y-1)/(1+e^t+e^y-e^{t+y}) + e^{-t}(e^y-1)/(1+e^{-t}+e^y-e^{-t+y}).
inline BiSeries polycosecant_bivariate_series(std::size_t order) {
  auto one = BiSeries::constant(1, order, order);
  auto half = [&](std::int64_t s) {
    BiSeries et = biseries_exp(s, 0, order);
    BiSeries ey = biseries_exp(0, 1, order);
    BiSeries ety = biseries_exp(s, 1, order);
    return div(et * (ey - one), one + et + ey - ety);
  };
  return one + half(1) + half(-1);
}

namespace detail {

class FamilySeriesCache {
 public:
  template <class Build>
  Series get(int tag, std::int64_t k, std::size_t order, Build build) {
    auto key = std::make_tuple(tag, k, order);
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Series s = build();
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(s)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::int64_t, std::size_t>, Series> table_;
};

inline FamilySeriesCache& series_cache() {
  static FamilySeriesCache cache;
  return cache;
}

class FamilyValueCache {
 public:
  template <class Compute>
  Rational get(const FamilyIndex& idx, Compute compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(idx); it != table_.end()) return it->second;
    }
    Rational v = compute();
    std::lock_guard lock(mutex_);
    return table_.emplace(idx, v).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<FamilyIndex, Rational> table_;
};

inline FamilyValueCache& value_cache() {
  static FamilyValueCache cache;
  return cache;
}

// Oracle order large enough to reach index n.
inline std::size_t order_for(std::int64_t n) {
  return std::max<std::size_t>(oracle_truncation(), static_cast<std::size_t>(n));
}

inline Rational series_value(Family family, std::int64_t n, std::int64_t k) {
  const std::size_t order = order_for(n);
  Series s = series_cache().get(static_cast<int>(family), k, order, [&] {
    switch (family) {
      case Family::PolyB_B: return poly_bernoulli_series(PolyBernoulliVariant::B, k, order);
      case Family::PolyB_C: return poly_bernoulli_series(PolyBernoulliVariant::C, k, order);
      case Family::Cosecant: return polycosecant_series(k, order);
      case Family::Cotangent: return polycotangent_series(k, order);
      case Family::TildeD: return tilde_cosecant_series(k, order);
    }
    throw Error("unknown family");
  });
  return egf_coefficient(s, static_cast<std::size_t>(n));
}

inline void require_order(std::int64_t n, const char* what) {
  if (n < 0) throw Error(std::string(what) + ": negative order index");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Poly-Bernoulli numbers and polynomials.

enum class PolyBernoulliMethod { closed_form, series };

inline Rational poly_bernoulli(PolyBernoulliVariant variant, std::int64_t n, std::int64_t k,
                               PolyBernoulliMethod method = PolyBernoulliMethod::closed_form) {
  detail::require_order(n, "poly_bernoulli");
  const Family family =
      variant == PolyBernoulliVariant::B ? Family::PolyB_B : Family::PolyB_C;
  if (method == PolyBernoulliMethod::series) return detail::series_value(family, n, k);

  return detail::value_cache().get({family, n, k}, [&] {
    // (-1)^n sum_m (-1)^m m! S(n', m') / (m+1)^k with (n',m') = (n,m) for B
    // and (n+1,m+1) for C.
    Rational acc = 0;
    for (std::int64_t m = 0; m <= n; ++m) {
      Integer s = variant == PolyBernoulliVariant::B ? stirling2(n, m) : stirling2(n + 1, m + 1);
      if (s == 0) continue;
      Rational term = Rational(sign_power(m) * factorial(m) * s);
      acc += term * pow_signed(Integer(static_cast<long>(m + 1)), -k);
    }
    return Rational(sign_power(n) * acc);
  });
}

/// B_n^{(k)}(x) from e^{-xt} Li_k(1-e^{-t})/(1-e^{-t}).
inline Rational poly_bernoulli_polynomial(std::int64_t n, std::int64_t k, const Rational& x) {
  detail::require_order(n, "poly_bernoulli_polynomial");
  const std::size_t order = detail::order_for(n);
  Series base = detail::series_cache().get(static_cast<int>(Family::PolyB_B), k, order, [&] {
    return poly_bernoulli_series(PolyBernoulliVariant::B, k, order);
  });
  Series s = exp_scaled(-x, base.order()) * base;
  return egf_coefficient(s, static_cast<std::size_t>(n));
}

// ---------------------------------------------------------------------------
// Polycosecant numbers.

enum class CosecantMethod { explicit_sum, sasaki, series };

namespace detail {

// sum_{i<=n/2} (2i+1)^{-(k+1)} sum_{j=2i+1}^{n+1} (-1)^{j+1} j!/2^{j-1} C(j-1,2i) S(n+1,j)
inline Rational polycosecant_explicit(std::int64_t n, std::int64_t k) {
  Rational acc = 0;
  for (std::int64_t i = 0; i <= n / 2; ++i) {
    Rational inner = 0;
    for (std::int64_t j = 2 * i + 1; j <= n + 1; ++j) {
      Integer num = sign_power(j + 1) * factorial(j) * binomial(j - 1, 2 * i) * stirling2(n + 1, j);
      inner += make_rational(num, ipow(2, j - 1));
    }
    acc += inner * pow_signed(Integer(static_cast<long>(2 * i + 1)), -(k + 1));
  }
  return acc;
}

// D_{2n}^{(-k)} = sum_{i=1}^{min(2n+1,k)} i!(i-1)!/2^{i-1} S(k,i) S(2n+1,i), k >= 1.
inline Rational polycosecant_sasaki(std::int64_t order, std::int64_t neg_weight) {
  Rational acc = 0;
  for (std::int64_t i = 1; i <= std::min(order + 1, neg_weight); ++i) {
    Integer num = factorial(i) * factorial(i - 1) * stirling2(neg_weight, i) * stirling2(order + 1, i);
    acc += make_rational(num, ipow(2, i - 1));
  }
  return acc;
}

}  // namespace detail

inline Rational polycosecant(std::int64_t n, std::int64_t k, CosecantMethod method) {
  detail::require_order(n, "polycosecant");
  switch (method) {
    case CosecantMethod::explicit_sum: return detail::polycosecant_explicit(n, k);
    case CosecantMethod::sasaki:
      if (k > -1 || n % 2 != 0)
        throw MethodDomain("polycosecant: sasaki method needs weight <= -1 and even order");
      return detail::polycosecant_sasaki(n, -k);
    case CosecantMethod::series: return detail::series_value(Family::Cosecant, n, k);
  }
  throw Error("polycosecant: unknown method");
}

/// D_n^{(k)} by the canonical method (memoized).
inline Rational polycosecant(std::int64_t n, std::int64_t k) {
  detail::require_order(n, "polycosecant");
  if (n % 2 != 0) return 0;
  return detail::value_cache().get({Family::Cosecant, n, k}, [&] {
    return polycosecant(n, k, k <= -1 ? CosecantMethod::sasaki : CosecantMethod::explicit_sum);
  });
}

// ---------------------------------------------------------------------------
// Polycotangent numbers.

enum class CotangentMethod { explicit_sum, stirling_negk, from_cosecant, series };

namespace detail {

// sum_{j=0}^{2n} sum_{i<=j/2} (-1)^j/2^j j!/(2i+1)^k C(j+1,2i+1)
//   * ((j+1)(j+2)/2 S(2n,j+2) + S(2n+1,j+1))
inline Rational polycotangent_explicit(std::int64_t order, std::int64_t k) {
  Rational acc = 0;
  for (std::int64_t j = 0; j <= order; ++j) {
    Integer stir = (j + 1) * (j + 2) / 2 * stirling2(order, j + 2) + stirling2(order + 1, j + 1);
    if (stir == 0) continue;
    Rational inner = 0;
    for (std::int64_t i = 0; i <= j / 2; ++i)
      inner += Rational(binomial(j + 1, 2 * i + 1)) *
               pow_signed(Integer(static_cast<long>(2 * i + 1)), -k);
    acc += make_rational(sign_power(j) * factorial(j) * stir, ipow(2, j)) * inner;
  }
  return acc;
}

// beta_{2n}^{(-k)}, k >= 1, as four Stirling double sums.
inline Rational polycotangent_stirling(std::int64_t order, std::int64_t kk) {
  Rational acc = 0;
  auto term = [&](const Integer& num, std::int64_t j) {
    acc += make_rational(num, ipow(2, j + 1));
  };
  for (std::int64_t j = 0; j <= std::min(order, kk - 1); ++j) {
    term(factorial(j) * factorial(j + 1) * stirling2(order, j) * stirling2(kk, j + 1), j);
    term(factorial(j) * factorial(j + 1) * stirling2(order + 1, j + 1) * stirling2(kk, j + 1), j);
  }
  for (std::int64_t j = 0; j <= std::min(order - 1, kk - 1); ++j) {
    term(factorial(j + 1) * factorial(j + 1) * stirling2(order, j + 1) * stirling2(kk, j + 1), j);
    term(factorial(j + 1) * factorial(j + 2) * stirling2(order, j + 2) * stirling2(kk, j + 1), j);
  }
  return acc;
}

}  // namespace detail

inline Rational polycotangent(std::int64_t n, std::int64_t k, CotangentMethod method);

/// beta_n^{(k)} by the canonical method (memoized).
inline Rational polycotangent(std::int64_t n, std::int64_t k) {
  detail::require_order(n, "polycotangent");
  if (n % 2 != 0) return 0;
  return detail::value_cache().get({Family::Cotangent, n, k}, [&] {
    return polycotangent(n, k,
                         k <= -1 ? CotangentMethod::stirling_negk : CotangentMethod::explicit_sum);
  });
}

inline Rational polycotangent(std::int64_t n, std::int64_t k, CotangentMethod method) {
  detail::require_order(n, "polycotangent");
  switch (method) {
    case CotangentMethod::explicit_sum:
      if (n % 2 != 0) return 0;
      return detail::polycotangent_explicit(n, k);
    case CotangentMethod::stirling_negk:
      if (k > -1 || n % 2 != 0)
        throw MethodDomain("polycotangent: stirling_negk method needs weight <= -1 and even order");
      return detail::polycotangent_stirling(n, -k);
    case CotangentMethod::from_cosecant: {
      if (n % 2 != 0) return 0;
      Rational acc = 0;
      for (std::int64_t i = 0; 2 * i <= n; ++i)
        acc += Rational(binomial(n, 2 * i)) * polycosecant(2 * i, k);
      return acc;
    }
    case CotangentMethod::series: return detail::series_value(Family::Cotangent, n, k);
  }
  throw Error("polycotangent: unknown method");
}

/// D_n^{(k)} = sum_i C(n,2i) E_{n-2i} beta_{2i}^{(k)} for even n.
inline Rational cosecant_from_cotangent(std::int64_t n, std::int64_t k) {
  if (n < 0 || n % 2 != 0)
    throw IndexParity("cosecant_from_cotangent: order must be even and non-negative");
  Rational acc = 0;
  for (std::int64_t i = 0; 2 * i <= n; ++i)
    acc += Rational(binomial(n, 2 * i) * euler_number(n - 2 * i)) * polycotangent(2 * i, k);
  return acc;
}

/// Right-hand side of D_n^{(k-1)} = sum_m C(n+1,2m+1) D_{n-2m}^{(k)}.
inline Rational k_shift_recurrence(std::int64_t n, std::int64_t k) {
  detail::require_order(n, "k_shift_recurrence");
  Rational acc = 0;
  for (std::int64_t m = 0; 2 * m <= n; ++m)
    acc += Rational(binomial(n + 1, 2 * m + 1)) * polycosecant(n - 2 * m, k);
  return acc;
}

/// tilde-D_m^{(weight)} from Li_{weight}(tanh(t/2))/sinh t, weight <= 0.
inline Rational tilde_cosecant(std::int64_t m, std::int64_t weight) {
  detail::require_order(m, "tilde_cosecant");
  if (weight > 0) throw MethodDomain("tilde_cosecant: weight must be non-positive");
  return detail::series_value(Family::TildeD, m, weight);
}

/// Canonical value for any family index.
inline Rational value(const FamilyIndex& idx) {
  switch (idx.family) {
    case Family::PolyB_B: return poly_bernoulli(PolyBernoulliVariant::B, idx.n, idx.k);
    case Family::PolyB_C: return poly_bernoulli(PolyBernoulliVariant::C, idx.n, idx.k);
    case Family::Cosecant: return polycosecant(idx.n, idx.k);
    case Family::Cotangent: return polycotangent(idx.n, idx.k);
    case Family::TildeD: return tilde_cosecant(idx.n, idx.k);
  }
  throw Error("value: unknown family");
}

}  // namespace polyseq
