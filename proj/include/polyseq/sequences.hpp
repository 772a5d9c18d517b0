#pragma once

// Classical sequences underlying the poly-Bernoulli families: Stirling
// numbers of both kinds, Bernoulli, Euler and tangent numbers, Euler
// polynomials and the totient. Triangular tables and the series-derived
// sequences are memoized in a SequenceCache; stored values never change.

#include <polyseq/series.hpp>

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <vector>

namespace polyseq {

class IndexParity : public Error {
 public:
  using Error::Error;
};

class SequenceCache {
 public:
  /// Stirling number of the second kind: S(n,m) = S(n-1,m-1) + m S(n-1,m).
  Integer stirling2(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0 || m > n) return 0;
    std::lock_guard lock(mutex_);
    grow(stirling2_, n, [](auto& rows, std::size_t r) {
      for (std::size_t c = 1; c < r; ++c)
        rows[r][c] = rows[r - 1][c - 1] + static_cast<unsigned long>(c) * rows[r - 1][c];
    });
    return stirling2_[n][m];
  }

  /// Unsigned Stirling number of the first kind, the coefficient of x^m in
  /// x(x+1)...(x+n-1): s(n,m) = s(n-1,m-1) + (n-1) s(n-1,m).
  Integer stirling1(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0 || m > n) return 0;
    std::lock_guard lock(mutex_);
    grow(stirling1_, n, [](auto& rows, std::size_t r) {
      for (std::size_t c = 1; c < r; ++c)
        rows[r][c] = rows[r - 1][c - 1] + static_cast<unsigned long>(r - 1) * rows[r - 1][c];
    });
    return stirling1_[n][m];
  }

  /// B_n from t/(e^t - 1), so B_1 = -1/2.
  Rational bernoulli(std::int64_t n) {
    if (n < 0) throw Error("bernoulli: negative index");
    std::lock_guard lock(mutex_);
    ensure(bernoulli_, n, [](std::size_t order) {
      Series num = Series::variable(order + 1);
      Series den = exp_scaled(1, order + 1) - Series::constant(1, order + 1);
      return div(num, den);
    });
    return bernoulli_[n];
  }

  /// E_n from 1/cosh t.
  Integer euler_number(std::int64_t n) {
    if (n < 0) throw Error("euler_number: negative index");
    std::lock_guard lock(mutex_);
    ensure(euler_, n, [](std::size_t order) {
      return div(Series::constant(1, order), cosh_series(order));
    });
    return euler_[n].get_num();
  }

  /// T_{2n+1} from tan t = sin t / cos t; `index` is the odd subscript.
  Integer tangent_number(std::int64_t index) {
    if (index < 0 || index % 2 == 0)
      throw IndexParity("tangent number T_i requires an odd index, got " + std::to_string(index));
    std::lock_guard lock(mutex_);
    ensure(tangent_, index, [](std::size_t order) {
      return div(sin_series(order), cos_series(order));
    });
    return tangent_[index].get_num();
  }

 private:
  template <class Fill>
  static void grow(std::vector<std::vector<Integer>>& rows, std::int64_t n, Fill fill) {
    if (rows.empty()) rows.push_back({Integer(1)});
    for (std::size_t r = rows.size(); r <= static_cast<std::size_t>(n); ++r) {
      rows.emplace_back(r + 1);
      rows[r][0] = 0;
      rows[r][r] = 1;
      fill(rows, r);
    }
  }

  // Rebuilds the table from a series of at least twice the needed order, so
  // repeated small extensions stay amortized.
  template <class Build>
  static void ensure(std::vector<Rational>& table, std::int64_t n, Build build) {
    if (static_cast<std::size_t>(n) < table.size()) return;
    std::size_t order = std::max<std::size_t>(32, 2 * static_cast<std::size_t>(n));
    Series s = build(order);
    table.assign(s.order() + 1, Rational());
    for (std::size_t i = 0; i <= s.order(); ++i) table[i] = egf_coefficient(s, i);
  }

  std::mutex mutex_;
  std::vector<std::vector<Integer>> stirling1_;
  std::vector<std::vector<Integer>> stirling2_;
  std::vector<Rational> bernoulli_;
  std::vector<Rational> euler_;
  std::vector<Rational> tangent_;
};

inline SequenceCache& sequence_cache() {
  static SequenceCache cache;
  return cache;
}

inline Integer stirling2(std::int64_t n, std::int64_t m) {
  return sequence_cache().stirling2(n, m);
}

inline Integer stirling1(std::int64_t n, std::int64_t m) {
  return sequence_cache().stirling1(n, m);
}

/// S(n,m) by the alternating sum (-1)^m/m! sum_l (-1)^l C(m,l) l^n.
/// Independent of the recursion; used to cross-check it.
inline Integer stirling2_alternating(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) return 0;
  Integer acc = 0;
  for (std::int64_t l = 0; l <= m; ++l) {
    Integer term = binomial(m, l) * ipow(Integer(static_cast<long>(l)), n);
    acc += sign_power(l) * term;
  }
  acc *= sign_power(m);
  Integer q;
  mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), factorial(m).get_mpz_t());
  return q;
}

inline Rational bernoulli(std::int64_t n) { return sequence_cache().bernoulli(n); }

inline Integer euler_number(std::int64_t n) { return sequence_cache().euler_number(n); }

/// E_m(x) from 2 e^{xt} / (e^t + 1).
inline Rational euler_polynomial(std::int64_t m, const Rational& x) {
  if (m < 0) throw Error("euler_polynomial: negative index");
  auto order = static_cast<std::size_t>(m);
  Series num = Rational(2) * exp_scaled(x, order);
  Series den = exp_scaled(1, order) + Series::constant(1, order);
  return egf_coefficient(div(num, den), order);
}

enum class TangentKind { T, tilde };

/// T_{2n+1} (kind T, odd index) or the signed variant tilde-T_{2n}
/// (kind tilde, even index): tilde-T_0 = 1, tilde-T_{2n} = (-1)^{n-1} T_{2n+1}.
inline Integer tangent(TangentKind kind, std::int64_t index) {
  if (kind == TangentKind::T) return sequence_cache().tangent_number(index);
  if (index < 0 || index % 2 != 0)
    throw IndexParity("tilde tangent number requires an even index, got " + std::to_string(index));
  if (index == 0) return 1;
  std::int64_t n = index / 2;
  return sign_power(n - 1) * sequence_cache().tangent_number(index + 1);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= limit; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

inline std::int64_t totient(std::int64_t m) {
  if (m < 1) throw Error("totient: argument must be positive");
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace polyseq
