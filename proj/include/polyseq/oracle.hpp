#pragma once

// Compares every closed-form route for a family against coefficient
// extraction from its generating function.

#include <polyseq/families.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyseq {

struct OracleMismatch {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string method;
  Rational closed;
  Rational series;
};

struct OracleDiff {
  Family family;
  std::size_t cells = 0;
  std::size_t comparisons = 0;
  bool single_method = false;
  std::optional<OracleMismatch> mismatch;

  bool agree() const { return !mismatch; }
};

using Method = std::pair<std::string, std::function<Rational(std::int64_t, std::int64_t)>>;

/// Closed-form routes for a family (empty for series-only families).
inline std::vector<Method> closed_form_methods(Family family) {
  switch (family) {
    case Family::PolyB_B:
    case Family::PolyB_C: {
      auto v = family == Family::PolyB_B ? PolyBernoulliVariant::B : PolyBernoulliVariant::C;
      return {{"closed_form", [v](auto n, auto k) { return poly_bernoulli(v, n, k); }}};
    }
    case Family::Cosecant:
      return {{"explicit_sum",
               [](auto n, auto k) { return polycosecant(n, k, CosecantMethod::explicit_sum); }},
              {"sasaki", [](auto n, auto k) { return polycosecant(n, k, CosecantMethod::sasaki); }},
              {"from_cotangent",
               [](auto n, auto k) { return n % 2 ? Rational(0) : cosecant_from_cotangent(n, k); }},
              {"k_shift", [](auto n, auto k) { return k_shift_recurrence(n, k + 1); }}};
    case Family::Cotangent:
      return {{"explicit_sum",
               [](auto n, auto k) { return polycotangent(n, k, CotangentMethod::explicit_sum); }},
              {"stirling_negk",
               [](auto n, auto k) { return polycotangent(n, k, CotangentMethod::stirling_negk); }},
              {"from_cosecant",
               [](auto n, auto k) { return polycotangent(n, k, CotangentMethod::from_cosecant); }}};
    case Family::TildeD: return {};
  }
  return {};
}

inline Rational series_extraction(Family family, std::int64_t n, std::int64_t k) {
  switch (family) {
    case Family::PolyB_B:
      return poly_bernoulli(PolyBernoulliVariant::B, n, k, PolyBernoulliMethod::series);
    case Family::PolyB_C:
      return poly_bernoulli(PolyBernoulliVariant::C, n, k, PolyBernoulliMethod::series);
    case Family::Cosecant: return polycosecant(n, k, CosecantMethod::series);
    case Family::Cotangent: return polycotangent(n, k, CotangentMethod::series);
    case Family::TildeD: return tilde_cosecant(n, k);
  }
  throw Error("series_extraction: unknown family");
}

/// Stops at the first disagreement. Methods outside their domain are skipped.
inline OracleDiff oracle_diff(Family family, std::int64_t nmax, std::int64_t kmin,
                              std::int64_t kmax) {
  OracleDiff out;
  out.family = family;
  auto methods = closed_form_methods(family);
  out.single_method = methods.empty();
  for (std::int64_t n = 0; n <= nmax; ++n)
    for (std::int64_t k = kmin; k <= kmax; ++k) {
      Rational reference = series_extraction(family, n, k);
      ++out.cells;
      for (const auto& [name, f] : methods) {
        Rational closed;
        try {
          closed = f(n, k);
        } catch (const MethodDomain&) {
          continue;
        }
        ++out.comparisons;
        if (closed != reference) {
          out.mismatch = OracleMismatch{n, k, name, closed, reference};
          return out;
        }
      }
    }
  return out;
}

}  // namespace polyseq
