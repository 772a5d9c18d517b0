#pragma once

// Truncated power series in two variables t, y over the rationals. The grid
// holds ordinary coefficients c_{m,l} of t^m y^l for m <= T_t, l <= T_y.

#include <polyseq/series.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace polyseq {

class DivisionZeroConstant : public Error {
 public:
  using Error::Error;
};

class BiSeries {
 public:
  BiSeries() : BiSeries(0, 0) {}

  BiSeries(std::size_t order_t, std::size_t order_y)
      : order_t_(order_t), order_y_(order_y), grid_((order_t + 1) * (order_y + 1)) {}

  static BiSeries constant(const Rational& c, std::size_t order_t, std::size_t order_y) {
    BiSeries s(order_t, order_y);
    s.at(0, 0) = c;
    return s;
  }

  /// Embeds a univariate series as a function of t alone.
  static BiSeries from_t(const Series& s, std::size_t order_y) {
    BiSeries r(s.order(), order_y);
    for (std::size_t m = 0; m <= s.order(); ++m) r.at(m, 0) = s[m];
    return r;
  }

  /// Embeds a univariate series as a function of y alone.
  static BiSeries from_y(const Series& s, std::size_t order_t) {
    BiSeries r(order_t, s.order());
    for (std::size_t l = 0; l <= s.order(); ++l) r.at(0, l) = s[l];
    return r;
  }

  std::size_t order_t() const { return order_t_; }
  std::size_t order_y() const { return order_y_; }

  const Rational& operator()(std::size_t m, std::size_t l) const {
    check(m, l);
    return grid_[m * (order_y_ + 1) + l];
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_t_, b.order_t_), std::min(a.order_y_, b.order_y_));
    for (std::size_t m = 0; m <= r.order_t_; ++m)
      for (std::size_t l = 0; l <= r.order_y_; ++l) r.at(m, l) = a(m, l) + b(m, l);
    return r;
  }

  friend BiSeries operator-(const BiSeries& a) {
    BiSeries r = a;
    for (auto& x : r.grid_) x = -x;
    return r;
  }

  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

  friend BiSeries operator*(const Rational& k, const BiSeries& a) {
    BiSeries r = a;
    for (auto& x : r.grid_) x *= k;
    return r;
  }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_t_, b.order_t_), std::min(a.order_y_, b.order_y_));
    for (std::size_t i = 0; i <= r.order_t_; ++i)
      for (std::size_t j = 0; j <= r.order_y_; ++j) {
        const Rational& x = a(i, j);
        if (x == 0) continue;
        for (std::size_t m = i; m <= r.order_t_; ++m)
          for (std::size_t l = j; l <= r.order_y_; ++l) {
            const Rational& z = b(m - i, l - j);
            if (z != 0) r.at(m, l) += x * z;
          }
      }
    return r;
  }

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.order_t_ == b.order_t_ && a.order_y_ == b.order_y_ && a.grid_ == b.grid_;
  }

  Rational& at(std::size_t m, std::size_t l) {
    check(m, l);
    return grid_[m * (order_y_ + 1) + l];
  }

 private:
  void check(std::size_t m, std::size_t l) const {
    if (m > order_t_ || l > order_y_)
      throw IndexBeyondTruncation("BiSeries index beyond truncation");
  }

  std::size_t order_t_;
  std::size_t order_y_;
  std::vector<Rational> grid_;
};

inline BiSeries add(const BiSeries& a, const BiSeries& b) { return a + b; }
inline BiSeries mul(const BiSeries& a, const BiSeries& b) { return a * b; }

/// q with q*b == a; b needs a nonzero constant coefficient.
inline BiSeries div(const BiSeries& a, const BiSeries& b) {
  const Rational& lead = b(0, 0);
  if (lead == 0) throw DivisionZeroConstant("BiSeries division: zero constant coefficient");
  BiSeries q(std::min(a.order_t(), b.order_t()), std::min(a.order_y(), b.order_y()));
  for (std::size_t m = 0; m <= q.order_t(); ++m)
    for (std::size_t l = 0; l <= q.order_y(); ++l) {
      Rational acc = a(m, l);
      for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= l; ++j) {
          if (i == 0 && j == 0) continue;
          const Rational& z = b(i, j);
          if (z != 0) acc -= z * q(m - i, l - j);
        }
      q.at(m, l) = acc / lead;
    }
  return q;
}

inline BiSeries pow(const BiSeries& a, std::int64_t e) {
  if (e < 0)
    return div(BiSeries::constant(1, a.order_t(), a.order_y()), pow(a, -e));
  BiSeries result = BiSeries::constant(1, a.order_t(), a.order_y());
  for (std::int64_t i = 0; i < e; ++i) result = result * a;
  return result;
}

/// e^{a t + b y} with both truncation orders equal to T.
inline BiSeries biseries_exp(std::int64_t a, std::int64_t b, std::size_t order) {
  BiSeries r(order, order);
  Series et = exp_scaled(Rational(static_cast<long>(a)), order);
  Series ey = exp_scaled(Rational(static_cast<long>(b)), order);
  for (std::size_t m = 0; m <= order; ++m)
    for (std::size_t l = 0; l <= order; ++l) r.at(m, l) = et[m] * ey[l];
  return r;
}

/// m! l! c_{m,l}.
inline Rational biseries_egf_coefficient(const BiSeries& s, std::size_t m, std::size_t l) {
  if (m > s.order_t() || l > s.order_y())
    throw IndexBeyondTruncation("biseries_egf_coefficient: index beyond truncation");
  return s(m, l) * Rational(factorial(static_cast<std::int64_t>(m)) *
                            factorial(static_cast<std::int64_t>(l)));
}

/// d/dy by index shift; the y-order drops by one.
inline BiSeries partial_y(const BiSeries& s) {
  if (s.order_y() == 0) return BiSeries(s.order_t(), 0);
  BiSeries r(s.order_t(), s.order_y() - 1);
  for (std::size_t m = 0; m <= s.order_t(); ++m)
    for (std::size_t l = 0; l + 1 <= s.order_y(); ++l)
      r.at(m, l) = s(m, l + 1) * static_cast<long>(l + 1);
  return r;
}

/// s(-t, y).
inline BiSeries reflect_t(const BiSeries& s) {
  BiSeries r = s;
  for (std::size_t m = 1; m <= s.order_t(); m += 2)
    for (std::size_t l = 0; l <= s.order_y(); ++l) r.at(m, l) = -s(m, l);
  return r;
}

/// s(t, -y).
inline BiSeries reflect_y(const BiSeries& s) {
  BiSeries r = s;
  for (std::size_t m = 0; m <= s.order_t(); ++m)
    for (std::size_t l = 1; l <= s.order_y(); l += 2) r.at(m, l) = -s(m, l);
  return r;
}

/// Swaps the roles of t and y.
inline BiSeries transpose(const BiSeries& s) {
  BiSeries r(s.order_y(), s.order_t());
  for (std::size_t m = 0; m <= s.order_t(); ++m)
    for (std::size_t l = 0; l <= s.order_y(); ++l) r.at(l, m) = s(m, l);
  return r;
}

}  // namespace polyseq
