#pragma once

// Registry of verifiable identities: dualities, conversion formulas,
// Stirling-first vanishing sums, Kummer-type and sum congruences, period
// congruences, 2-adic orders and Clausen-von Staudt type statements.
//
// Each registry entry turns a parameter record into a list of Instances
// (lhs, rhs, relation). Parameters outside the statement's hypotheses raise
// HypothesisViolation; they are never reported as failures.

#include <polyseq/congruence.hpp>
#include <polyseq/symmetrized.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace polyseq {

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class MissingParameter : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

using Params = std::map<std::string, std::int64_t>;

enum class Relation {
  equal,       // lhs == rhs exactly
  congruent,   // lhs == rhs mod modulus, both reducible
  p_integral,  // lhs in Z_(p), p = modulus
  integral,    // lhs in Z
};

struct Instance {
  std::string label;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::equal;
  Integer modulus = 0;
  std::string branch;
};

struct Witness {
  std::string instance;
  std::string lhs;
  std::string rhs;
  std::optional<std::string> modulus;
  std::string branch;
  bool holds = false;
};

struct Report {
  std::string identity;
  Params params;
  bool pass = false;
  std::vector<Witness> witnesses;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& w : witnesses) n += !w.holds;
    return n;
  }
};

struct VerifyOptions {
  /// Shifts the lhs of this instance before comparing (harness self-test):
  /// by 1, or by 1/p resp. 1/2 for membership relations.
  std::optional<std::size_t> perturb;
};

inline bool holds(const Instance& in) {
  switch (in.relation) {
    case Relation::equal: return in.lhs == in.rhs;
    case Relation::congruent:
      try {
        return reduce_modulo(in.lhs, in.modulus) == reduce_modulo(in.rhs, in.modulus);
      } catch (const NotPIntegral&) {
        return false;
      }
    case Relation::p_integral: return is_p_integral(in.lhs, in.modulus.get_si());
    case Relation::integral: return is_integer(in.lhs);
  }
  return false;
}

inline Witness make_witness(const Instance& in) {
  Witness w;
  w.instance = in.label;
  w.branch = in.branch;
  w.holds = holds(in);
  auto show = [&](const Rational& q) {
    if (in.relation != Relation::congruent) return to_string(q);
    try {
      return to_string(reduce_modulo(q, in.modulus).value);
    } catch (const NotPIntegral&) {
      return to_string(q) + " (not reducible)";
    }
  };
  w.lhs = show(in.lhs);
  switch (in.relation) {
    case Relation::equal:
    case Relation::congruent: w.rhs = show(in.rhs); break;
    case Relation::p_integral: w.rhs = "Z_(" + to_string(in.modulus) + ")"; break;
    case Relation::integral: w.rhs = "Z"; break;
  }
  if (in.relation == Relation::congruent || in.relation == Relation::p_integral)
    w.modulus = to_string(in.modulus);
  return w;
}

namespace detail::identities {

inline std::int64_t req(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw MissingParameter("missing parameter '" + name + "'");
  return it->second;
}

inline std::optional<std::int64_t> opt(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) return std::nullopt;
  return it->second;
}

inline void hyp(bool ok, const std::string& what) {
  if (!ok) throw HypothesisViolation("hypothesis violated: " + what);
}

inline void odd_prime(std::int64_t p) { hyp(p >= 3 && is_prime(p), "p must be an odd prime"); }

inline bool divides(std::int64_t d, std::int64_t n) { return d != 0 && n % d == 0; }

inline std::string idx(std::string_view sym, std::int64_t n, std::int64_t k) {
  return std::string(sym) + "_" + std::to_string(n) + "^(" + std::to_string(k) + ")";
}

inline Integer modulus_of(std::int64_t p, std::int64_t N) {
  return ipow(Integer(static_cast<long>(p)), N);
}

inline Instance congruence(std::string label, Rational lhs, Rational rhs, Integer modulus,
                           std::string branch = {}) {
  return {std::move(label), std::move(lhs), std::move(rhs), Relation::congruent,
          std::move(modulus), std::move(branch)};
}

inline Instance equality(std::string label, Rational lhs, Rational rhs, std::string branch = {}) {
  return {std::move(label), std::move(lhs), std::move(rhs), Relation::equal, 0, std::move(branch)};
}

inline Rational B(std::int64_t n, std::int64_t k) {
  return poly_bernoulli(PolyBernoulliVariant::B, n, k);
}
inline Rational C(std::int64_t n, std::int64_t k) {
  return poly_bernoulli(PolyBernoulliVariant::C, n, k);
}
inline Rational D(std::int64_t n, std::int64_t k) { return polycosecant(n, k); }
inline Rational Beta(std::int64_t n, std::int64_t k) { return polycotangent(n, k); }

// Pairs (l, m) from either explicit l,m or a square grid 0..lmax.
inline std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const Params& p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (auto lmax = opt(p, "lmax")) {
    hyp(*lmax >= 0, "lmax >= 0");
    for (std::int64_t l = 0; l <= *lmax; ++l)
      for (std::int64_t m = 0; m <= *lmax; ++m) out.emplace_back(l, m);
    return out;
  }
  std::int64_t l = req(p, "l"), m = req(p, "m");
  hyp(l >= 0 && m >= 0, "l, m >= 0");
  out.emplace_back(l, m);
  return out;
}

inline std::vector<std::int64_t> levels(const Params& p) {
  std::vector<std::int64_t> out;
  if (auto nmax = opt(p, "nmax")) {
    hyp(*nmax >= 0, "nmax >= 0");
    for (std::int64_t n = 0; n <= *nmax; ++n) out.push_back(n);
    return out;
  }
  std::int64_t n = req(p, "n");
  hyp(n >= 0, "n >= 0");
  out.push_back(n);
  return out;
}

using Generator = std::function<std::vector<Instance>(const Params&)>;

struct Entry {
  std::string description;
  std::vector<std::string> params;
  Generator generate;
};

// -- Kummer-type congruences -------------------------------------------------

inline std::vector<Instance> kummer_bernoulli(const Params& ps) {
  auto p = req(ps, "p"), N = req(ps, "N"), m = req(ps, "m"), n = req(ps, "n");
  odd_prime(p);
  hyp(m >= 1 && n >= 1 && N >= 1, "m, n, N >= 1");
  auto M = modulus_of(p, N);
  hyp(divides(totient(M.get_si()), m - n), "m == n mod phi(p^N)");
  hyp(!divides(p - 1, n), "(p-1) does not divide n");
  auto side = [&](std::int64_t i) -> Rational {
    return (Rational(1) - pow_signed(Integer(static_cast<long>(p)), i - 1)) * bernoulli(i) /
           Rational(static_cast<long>(i));
  };
  return {congruence("(1-p^(m-1))B_m/m vs (1-p^(n-1))B_n/n", side(m), side(n), M)};
}

inline std::vector<Instance> kummer_polyb(const Params& ps, bool variant_b) {
  auto p = req(ps, "p"), N = req(ps, "N"), m = req(ps, "m"), n = req(ps, "n"), k = req(ps, "k");
  odd_prime(p);
  hyp(m >= 1 && n >= 1 && N >= 1, "m, n, N >= 1");
  hyp(k >= 0, "k >= 0");
  auto M = modulus_of(p, N);
  hyp(divides(totient(M.get_si()), m - n), "m == n mod phi(p^N)");
  hyp(m >= N && n >= N, "m, n >= N");
  auto f = variant_b ? B : C;
  std::string s = variant_b ? "B" : "C";
  return {congruence(idx(s, n, -k) + " vs " + idx(s, m, -k), f(n, -k), f(m, -k), M)};
}

inline std::vector<Instance> sum_polyb(const Params& ps) {
  auto p = req(ps, "p"), N = req(ps, "N"), n = req(ps, "n"), k = req(ps, "k");
  odd_prime(p);
  // Terms with p | (m+1) only vanish mod p^N once the exponent k reaches N;
  // k = 0, N = 1 already fails (B_2^(0) + B_2^(-1) = 5 at p = 3).
  hyp(k >= N, "k >= N");
  hyp(n >= 1 && N >= 1 && n >= N, "n, N >= 1 and n >= N");
  auto M = modulus_of(p, N);
  Rational sum = 0;
  for (std::int64_t i = 0; i < totient(M.get_si()); ++i) sum += B(n, -k - i);
  return {congruence("sum_i B_n^(-k-i)", sum, 0, M)};
}

inline std::vector<Instance> kummer_cose_odd(const Params& ps) {
  auto p = req(ps, "p"), N = req(ps, "N"), m = req(ps, "m"), n = req(ps, "n"), k = req(ps, "k");
  hyp(is_prime(p), "p prime");
  hyp(k >= 1 && m >= 1 && n >= 1 && N >= 1, "k, m, n, N >= 1");
  auto M = modulus_of(p, N);
  hyp(divides(totient(M.get_si()), 2 * m - 2 * n), "2m == 2n mod phi(p^N)");
  hyp(2 * m >= N && 2 * n >= N, "2m, 2n >= N");
  return {congruence(idx("D", 2 * m, -2 * k + 1) + " vs " + idx("D", 2 * n, -2 * k + 1),
                     D(2 * m, -2 * k + 1), D(2 * n, -2 * k + 1), M)};
}

inline std::vector<Instance> kummer_level_two(const Params& ps, bool cosecant) {
  auto p = req(ps, "p"), N = req(ps, "N"), m = req(ps, "m"), n = req(ps, "n"), k = req(ps, "k");
  odd_prime(p);
  hyp(k >= 1 && m >= 1 && n >= 1 && N >= 1, "k, m, n, N >= 1");
  auto M = modulus_of(p, N);
  hyp(divides(totient(M.get_si()), 2 * m - 2 * n), "2m == 2n mod phi(p^N)");
  hyp(2 * m >= N && 2 * n >= N, "2m, 2n >= N");
  auto f = cosecant ? D : Beta;
  std::string s = cosecant ? "D" : "beta";
  return {congruence(idx(s, 2 * m, -k) + " vs " + idx(s, 2 * n, -k), f(2 * m, -k), f(2 * n, -k), M)};
}

inline std::vector<Instance> kummer_cose_remark(const Params& ps) {
  auto p = req(ps, "p"), N = req(ps, "N"), m = req(ps, "m"), n = req(ps, "n");
  odd_prime(p);
  hyp(m >= 1 && n >= 1 && N >= 1, "m, n, N >= 1");
  std::int64_t period = (p - 1) * ipow(Integer(static_cast<long>(p)), N - 1).get_si();
  hyp(divides(period, 2 * n - 2 * m), "2n == 2m mod (p-1)p^(N-1)");
  hyp(!divides(p - 1, 2 * n), "(p-1) does not divide 2n");
  auto M = modulus_of(p, N);
  auto side = [&](auto f, std::int64_t i) -> Rational {
    return (Rational(1) - pow_signed(Integer(static_cast<long>(p)), 2 * i - 1)) * f(2 * i, 1) /
           Rational(static_cast<long>(2 * i));
  };
  return {congruence("(1-p^(2n-1))D_2n^(1)/2n vs m", side(D, n), side(D, m), M),
          congruence("(1-p^(2n-1))beta_2n^(1)/2n vs m", side(Beta, n), side(Beta, m), M)};
}

// -- 2-adic orders -----------------------------------------------------------

inline std::vector<Instance> two_order_cose(const Params& ps) {
  auto n = req(ps, "n"), k = req(ps, "k");
  hyp(n >= 1 && k >= 1, "n, k >= 1");
  return {congruence(idx("D", 2 * n, -2 * k) + " mod 2^(2n)", D(2 * n, -2 * k), 0,
                     ipow(2, 2 * n))};
}

inline std::vector<Instance> two_order_cota(const Params& ps) {
  auto n = req(ps, "n"), k = req(ps, "k");
  hyp(n >= 1 && k >= 0, "n >= 1, k >= 0");
  return {congruence(idx("beta", 2 * n, -2 * k - 1) + " mod 2^(2n-1)", Beta(2 * n, -2 * k - 1), 0,
                     ipow(2, 2 * n - 1))};
}

// -- Period congruences mod p ------------------------------------------------

inline std::vector<Instance> period_b(const Params& ps) {
  auto p = req(ps, "p"), k = req(ps, "k");
  odd_prime(p);
  hyp(k >= 0, "k >= 0");
  bool generic = k == 0 || !divides(p - 1, k);
  Rational expect = generic ? 1 : 2;
  std::string branch = generic ? "k=0 or (p-1)!|k" : "k!=0 and (p-1)|k";
  Integer P = p;
  return {congruence(idx("B", p - 1, -k), B(p - 1, -k), expect, P, branch),
          congruence(idx("B", k, -p + 1) + " (dual)", B(k, -p + 1), expect, P, branch)};
}

inline std::vector<Instance> period_c(const Params& ps) {
  auto p = req(ps, "p"), k = req(ps, "k");
  odd_prime(p);
  hyp(k >= 0, "k >= 0");
  bool div = divides(p - 1, k);
  Rational expect = div ? 1 : 0;
  std::string branch = div ? "(p-1)|k" : "(p-1)!|k";
  Integer P = p;
  return {congruence(idx("C", p - 2, -k - 1), C(p - 2, -k - 1), expect, P, branch),
          congruence(idx("C", k, -p + 1) + " (dual)", C(k, -p + 1), expect, P, branch)};
}

inline std::vector<Instance> period_cpk(const Params& ps) {
  auto p = req(ps, "p"), k = req(ps, "k");
  odd_prime(p);
  hyp(k >= 0, "k >= 0");
  Integer P = p;
  return {congruence(idx("C", p - 1, -k - 1), C(p - 1, -k - 1), 1, P),
          congruence(idx("C", k, -p) + " (dual)", C(k, -p), 1, P)};
}

inline std::vector<Instance> period_cose_odd(const Params& ps) {
  auto p = req(ps, "p"), k = req(ps, "k");
  odd_prime(p);
  hyp(k >= 0, "k >= 0");
  Integer P = p;
  std::vector<Instance> out{
      congruence(idx("D", p - 1, -2 * k - 1), D(p - 1, -2 * k - 1), 1, P),
      congruence(idx("D", 2 * k, -p) + " (dual)", D(2 * k, -p), 1, P)};
  if (k >= 1) out.push_back(congruence(idx("D", p - 1, -k), D(p - 1, -k), 1, P));
  return out;
}

inline std::vector<Instance> period_cose_p1(const Params& ps) {
  auto p = req(ps, "p"), n = req(ps, "n");
  odd_prime(p);
  hyp(n >= 0, "n >= 0");
  bool div = divides(p - 1, 2 * n);
  return {congruence(idx("D", 2 * n, -p + 1), D(2 * n, -p + 1), div ? 1 : 0, p,
                     div ? "(p-1)|2n" : "(p-1)!|2n")};
}

inline std::vector<Instance> period_cota_p1(const Params& ps) {
  auto p = req(ps, "p"), n = req(ps, "n");
  odd_prime(p);
  hyp(n >= 0, "n >= 0");
  bool generic = n == 0 || !divides(p - 1, 2 * n);
  return {congruence(idx("beta", 2 * n, -p + 1), Beta(2 * n, -p + 1), generic ? 1 : 2, p,
                     generic ? "2n=0 or (p-1)!|2n" : "2n!=0 and (p-1)|2n")};
}

// -- Sum congruences ---------------------------------------------------------

inline std::vector<Instance> sum_level_two(const Params& ps, bool cosecant) {
  auto p = req(ps, "p"), N = req(ps, "N"), n = req(ps, "n"), k = req(ps, "k");
  odd_prime(p);
  hyp(n >= 0, "n >= 0");
  hyp(k >= 1 && N >= 1 && k >= N, "k, N >= 1 and k >= N");
  auto M = modulus_of(p, N);
  std::int64_t phi = totient(M.get_si());
  Rational sum = 0;
  for (std::int64_t i = 0; i < phi; ++i) sum += cosecant ? D(2 * n, -k - i) : Beta(2 * n, -k - i);
  Integer tangent_factor = cosecant ? Integer(sign_power(n) * tangent(TangentKind::T, 2 * n + 1))
                                    : tangent(TangentKind::tilde, 2 * n);
  std::string s = cosecant ? "D" : "beta";
  std::vector<Instance> out{congruence("2^(2n) sum_i " + idx(s, 2 * n, -k) + "...",
                                       Rational(ipow(2, 2 * n)) * sum,
                                       Rational(tangent_factor * phi), M)};
  if (N >= 2)
    out.push_back(congruence("sum_i " + idx(s, 2 * n, -k) + "... mod p^(N-1)", sum, 0,
                             modulus_of(p, N - 1)));
  return out;
}

inline std::vector<Instance> sum_c(const Params& ps) {
  auto p = req(ps, "p"), N = req(ps, "N"), n = req(ps, "n"), k = req(ps, "k");
  odd_prime(p);
  hyp(n >= 0, "n >= 0");
  hyp(k >= 1 && N >= 1 && k >= N, "k, N >= 1 and k >= N");
  auto M = modulus_of(p, N);
  std::int64_t phi = totient(M.get_si());
  Rational sum = 0;
  for (std::int64_t i = 0; i < phi; ++i) sum += C(n, -k - i);
  return {congruence("sum_i C_n^(-k-i)", sum, Rational(sign_power(n) * phi), M)};
}

// -- Denominators ------------------------------------------------------------

inline std::vector<Instance> cvs_bernoulli(const Params& ps) {
  auto n = req(ps, "n");
  hyp(n == 1 || (n >= 2 && n % 2 == 0), "n = 1 or n even positive");
  Rational corrected = bernoulli(n);
  Integer product = 1;
  for (auto p : primes_up_to(n + 1))
    if (divides(p - 1, n)) {
      corrected += make_rational(1, p);
      product *= p;
    }
  return {Instance{"B_n + sum_{(p-1)|n} 1/p", corrected, 0, Relation::integral, 0, {}},
          equality("denominator of B_n", Rational(bernoulli(n).get_den()), Rational(product))};
}

inline std::vector<Instance> cvs_polyb(const Params& ps) {
  auto p = req(ps, "p"), k = req(ps, "k"), n = req(ps, "n");
  hyp(is_prime(p), "p prime");
  hyp(k >= 2 && n >= 1, "k >= 2, n >= 1");
  hyp(k + 2 <= p && p <= n + 1, "k+2 <= p <= n+1");
  Integer P = p;
  Rational value = poly_bernoulli(PolyBernoulliVariant::B, n, k);
  if (divides(p - 1, n)) {
    Rational scaled = Rational(ipow(P, k)) * value;
    return {Instance{"p^k B_n^(k)", scaled, 0, Relation::p_integral, P, "(p-1)|n"},
            congruence("p^k B_n^(k)", scaled, -1, P, "(p-1)|n")};
  }
  Rational scaled = Rational(ipow(P, k - 1)) * value;
  Rational stir = make_rational(stirling2(n, p - 1), P);
  Rational expect = n % (p - 1) == 1 % (p - 1)
                        ? Rational(stir - make_rational(n, ipow(2, k)))
                        : Rational(Rational(sign_power(n - 1)) * stir);
  return {Instance{"p^(k-1) B_n^(k)", scaled, 0, Relation::p_integral, P, "(p-1)!|n"},
          congruence("p^(k-1) B_n^(k)", scaled, expect, P, "(p-1)!|n")};
}

// Right-hand side shared by D and beta when (p-1) does not divide 2n.
inline Rational cvs_level_two_base(std::int64_t p, std::int64_t n) {
  const std::int64_t alpha = (2 * n) % (p - 1);
  Rational inner = 0;
  for (std::int64_t j = 0; j <= alpha - 1; ++j)
    inner += make_rational(sign_power(j) * factorial(j) * stirling2(alpha, j + 1), ipow(2, j + 1));
  Rational acc = -make_rational(stirling2(2 * n, p - 1), p);
  for (std::int64_t l = p; l <= 2 * n; ++l)
    if ((l - 1) % (p - 1) == 0) acc += Rational(binomial(2 * n + 1, l)) * inner;
  return acc;
}

// Extra beta term: sum_{j=p-1}^{gamma} (-1)^j/2^{j+1} (j+2)!/p S(2n,j+2) C(j+1,p),
// the p-part of beta - D from the explicit formula.
inline Rational cvs_cotangent_extra(std::int64_t p, std::int64_t n) {
  const std::int64_t gamma = std::min(2 * n, 2 * p - 3);
  Rational acc = 0;
  for (std::int64_t j = p - 1; j <= gamma; ++j)
    acc += make_rational(sign_power(j) * factorial(j + 2) * stirling2(2 * n, j + 2) *
                             binomial(j + 1, p),
                         ipow(2, j + 1) * p);
  return acc;
}

inline std::vector<Instance> cvs_level_two(const Params& ps, bool cosecant) {
  auto p = req(ps, "p"), k = req(ps, "k"), n = req(ps, "n");
  odd_prime(p);
  hyp(k >= 2 && n >= 1, "k >= 2, n >= 1");
  hyp(k + 2 <= p && p <= 2 * n + 1, "k+2 <= p <= 2n+1");
  Integer P = p;
  Rational value = cosecant ? D(2 * n, k) : Beta(2 * n, k);
  std::string s = cosecant ? "D_2n^(k)" : "beta_2n^(k)";
  if (divides(p - 1, 2 * n)) {
    Rational scaled = Rational(ipow(P, k)) * value;
    return {Instance{"p^k " + s, scaled, 0, Relation::p_integral, P, "(p-1)|2n"},
            congruence("p^k " + s, scaled, -1, P, "(p-1)|2n")};
  }
  Rational scaled = Rational(ipow(P, k - 1)) * value;
  Rational expect = cvs_level_two_base(p, n);
  if (!cosecant) expect += cvs_cotangent_extra(p, n);
  return {Instance{"p^(k-1) " + s, scaled, 0, Relation::p_integral, P, "(p-1)!|2n"},
          congruence("p^(k-1) " + s, scaled, expect, P, "(p-1)!|2n")};
}

inline std::vector<Instance> denom_order(const Params& ps) {
  auto p = req(ps, "p"), n = req(ps, "n");
  odd_prime(p);
  hyp(n >= 1, "n >= 1");
  ValuationReport r = valuation_report(p, n);
  return {equality("ord_p d(2n) vs ord_p b(2n)", r.ord_d, r.ord_b),
          equality("ord_p beta-hat(2n) vs ord_p b(2n)", r.ord_beta_hat, r.ord_b)};
}

// -- Dualities ---------------------------------------------------------------
// Each side uses a route that is not manifestly symmetric in (l, m).

inline std::vector<Instance> duality(const Params& ps, Family family) {
  std::vector<Instance> out;
  for (auto [l, m] : pairs(ps)) {
    switch (family) {
      case Family::PolyB_B:
        out.push_back(equality(idx("B", m, -l) + " = " + idx("B", l, -m), B(m, -l), B(l, -m)));
        break;
      case Family::PolyB_C:
        out.push_back(equality(idx("C", m, -l - 1) + " = " + idx("C", l, -m - 1), C(m, -l - 1),
                               C(l, -m - 1)));
        break;
      case Family::Cosecant: {
        auto f = [](std::int64_t a, std::int64_t b) {
          return polycosecant(2 * a, -2 * b - 1, CosecantMethod::explicit_sum);
        };
        out.push_back(equality(idx("D", 2 * m, -2 * l - 1) + " = " + idx("D", 2 * l, -2 * m - 1),
                               f(m, l), f(l, m)));
        break;
      }
      case Family::Cotangent: {
        auto f = [](std::int64_t a, std::int64_t b) {
          return polycotangent(2 * a, -2 * b, CotangentMethod::explicit_sum);
        };
        out.push_back(equality(idx("beta", 2 * m, -2 * l) + " = " + idx("beta", 2 * l, -2 * m),
                               f(m, l), f(l, m)));
        break;
      }
      default: throw Error("duality: unsupported family");
    }
  }
  return out;
}

inline std::vector<Instance> duality_sym_b(const Params& ps) {
  std::vector<Instance> out;
  for (auto n : levels(ps))
    for (auto [l, m] : pairs(ps)) {
      auto f = [n](std::int64_t a, std::int64_t b) {
        return sym_poly_bernoulli(a, b, n, SymBernoulliMethod::definition);
      };
      out.push_back(equality("sB_" + std::to_string(m) + "^(-" + std::to_string(l) + ")(" +
                                 std::to_string(n) + ") = swapped",
                             f(m, l), f(l, m)));
    }
  return out;
}

inline std::vector<Instance> duality_sym_cose(const Params& ps) {
  std::vector<Instance> out;
  for (auto n : levels(ps))
    for (auto [l, m] : pairs(ps)) {
      auto f = [n](std::int64_t a, std::int64_t b) {
        return sym_polycosecant(2 * a, 2 * b, n, SymCosecantMethod::definition);
      };
      out.push_back(equality("sD_" + std::to_string(2 * m) + "^(-" + std::to_string(2 * l) + ")(" +
                                 std::to_string(n) + ") = swapped",
                             f(m, l), f(l, m)));
    }
  return out;
}

// -- Stirling-first vanishing sums and recurrences ---------------------------

inline Rational stirling_first_sum(std::int64_t m, const std::function<Rational(std::int64_t)>& f) {
  Rational acc = 0;
  for (std::int64_t j = 0; j <= m; ++j) acc += Rational(sign_power(j) * stirling1(m + 1, j + 1)) * f(j);
  return acc;
}

inline std::vector<Instance> vanish_b(const Params& ps) {
  auto k = req(ps, "k"), n = req(ps, "n"), m = req(ps, "m");
  hyp(n >= 0 && m >= n + 1, "0 <= n < m");
  return {equality("sum_j (-1)^j s(m+1,j+1) B_n^(-k-j)",
                   stirling_first_sum(m, [&](std::int64_t j) { return B(n, -k - j); }), 0)};
}

inline std::vector<Instance> recur_polyb(const Params& ps) {
  auto k = req(ps, "k"), n = req(ps, "n"), m = req(ps, "m");
  hyp(n >= 1 && m >= n, "m >= n >= 1");
  Rational first = 0;
  for (std::int64_t j = 0; j <= m; ++j)
    for (std::int64_t i = 0; i <= j; ++i)
      first += Rational(sign_power(i) * stirling1(m + 2, i + 1)) * B(n, -k - j);
  return {equality("sum_{m>=j>=i>=0} (-1)^i s(m+2,i+1) B_n^(-k-j)", first, 0),
          equality("sum_j (-1)^j s(m+1,j+1) C_{n-1}^(-k-j)",
                   stirling_first_sum(m, [&](std::int64_t j) { return C(n - 1, -k - j); }), 0)};
}

inline std::vector<Instance> vanish_level_two(const Params& ps, bool cosecant) {
  auto k = req(ps, "k"), n = req(ps, "n"), m = req(ps, "m");
  hyp(n >= 1 && m >= 2 * n + 1, "n >= 1, m >= 2n+1");
  auto f = cosecant ? D : Beta;
  std::string s = cosecant ? "D" : "beta";
  return {equality("sum_j (-1)^j s(m+1,j+1) " + s + "_2n^(-k-j)",
                   stirling_first_sum(m, [&](std::int64_t j) { return f(2 * n, -k - j); }), 0)};
}

// -- Conversion formulas -----------------------------------------------------

inline std::vector<Instance> conv_eq5(const Params& ps) {
  auto n = req(ps, "n"), k = req(ps, "k");
  hyp(n >= 0, "n >= 0");
  return {equality(idx("beta", 2 * n, k) + " = sum C(2n,2i) D_2i",
                   polycotangent(2 * n, k),
                   polycotangent(2 * n, k, CotangentMethod::from_cosecant))};
}

inline std::vector<Instance> conv_eq6(const Params& ps) {
  auto n = req(ps, "n"), k = req(ps, "k");
  hyp(n >= 0, "n >= 0");
  return {equality(idx("D", 2 * n, k) + " = sum C(2n,2i) E beta_2i", polycosecant(2 * n, k),
                   cosecant_from_cotangent(2 * n, k))};
}

inline std::vector<Instance> kshift(const Params& ps) {
  auto n = req(ps, "n"), k = req(ps, "k");
  hyp(n >= 0, "n >= 0");
  return {equality(idx("D", n, k - 1) + " = sum C(n+1,2m+1) D_{n-2m}^(k)", polycosecant(n, k - 1),
                   k_shift_recurrence(n, k))};
}

// -- Generating-function identities ------------------------------------------

inline std::vector<Instance> gf_bivariate(const Params& ps) {
  auto nmax = req(ps, "nmax"), kmax = req(ps, "kmax");
  hyp(nmax >= 0 && kmax >= 0, "nmax, kmax >= 0");
  auto order = static_cast<std::size_t>(std::max(nmax, kmax));
  BiSeries f = polycosecant_bivariate_series(order);
  std::vector<Instance> out;
  for (std::int64_t n = 0; n <= nmax; ++n)
    for (std::int64_t k = 0; k <= kmax; ++k)
      out.push_back(equality("f(t,y) coefficient = " + idx("D", n, -k),
                             biseries_egf_coefficient(f, n, k), polycosecant(n, -k)));
  return out;
}

inline std::vector<Instance> gf_sym_b(const Params& ps) {
  auto n = req(ps, "n"), mmax = req(ps, "mmax");
  hyp(n >= 0 && mmax >= 0, "n, mmax >= 0");
  BiSeries g = sym_poly_bernoulli_bivariate(n, static_cast<std::size_t>(mmax));
  std::vector<Instance> out;
  for (std::int64_t l = 0; l <= mmax; ++l)
    for (std::int64_t m = 0; m <= mmax; ++m)
      out.push_back(equality("KST coefficient (l,m)=(" + std::to_string(l) + "," +
                                 std::to_string(m) + ")",
                             biseries_egf_coefficient(g, l, m),
                             sym_poly_bernoulli(m, l, n, SymBernoulliMethod::closed_form)));
  return out;
}

inline std::vector<Instance> gf_sym_cose(const Params& ps) {
  auto n = req(ps, "n"), mmax = req(ps, "mmax");
  hyp(n >= 0 && mmax >= 0, "n, mmax >= 0");
  BiSeries g = sym_polycosecant_bivariate(n, static_cast<std::size_t>(mmax));
  std::vector<Instance> out;
  for (std::int64_t m = 0; m <= mmax; ++m)
    for (std::int64_t l = 0; l <= mmax; ++l)
      out.push_back(equality("f1+f2 coefficient (m,l)=(" + std::to_string(m) + "," +
                                 std::to_string(l) + ")",
                             biseries_egf_coefficient(g, m, l),
                             sym_polycosecant(m, l, n, SymCosecantMethod::definition)));
  return out;
}

// f_{i,n} = (e^{+-t}+1)^{-n} sum_j s(n,j) d^j/dy^j f_{i,0}
inline std::vector<Instance> lemma_fncosym(const Params& ps) {
  auto n = req(ps, "n"), T = req(ps, "T");
  hyp(n >= 0 && T >= n, "n >= 0, T >= n");
  auto order = static_cast<std::size_t>(T);
  std::vector<Instance> out;
  for (int sign : {1, -1}) {
    BiSeries lhs = sym_cosecant_component(n, sign, order);
    BiSeries base = sym_cosecant_component(0, sign, order);
    BiSeries sum(order, order - static_cast<std::size_t>(n));
    BiSeries deriv = base;
    for (std::int64_t j = 0; j <= n; ++j) {
      Integer s = stirling1(n, j);
      if (s != 0) sum = sum + Rational(s) * deriv;
      if (j < n) deriv = partial_y(deriv);
    }
    Series et = exp_scaled(sign, order) + Series::constant(1, order);
    BiSeries rhs = BiSeries::from_t(pow(et, -n), sum.order_y()) * sum;
    std::string name = sign > 0 ? "f_1" : "f_2";
    for (std::size_t m = 0; m <= rhs.order_t(); ++m)
      for (std::size_t l = 0; l <= rhs.order_y(); ++l)
        out.push_back(equality(name + " coefficient (" + std::to_string(m) + "," +
                                   std::to_string(l) + ")",
                               lhs(m, l), rhs(m, l)));
  }
  return out;
}

// 1 + f_{1,0}(t,+-y) + f_{2,0}(t,+-y) = sum (beta_2m^(-2l) + D_2m^(-2l) + D_2l^(-2m)) ...
inline std::vector<Instance> sym_cose_n0(const Params& ps) {
  auto mmax = req(ps, "mmax");
  hyp(mmax >= 0, "mmax >= 0");
  auto order = static_cast<std::size_t>(2 * mmax);
  BiSeries g = sym_polycosecant_bivariate(0, order);
  BiSeries lhs = BiSeries::constant(1, order, order) + g + reflect_y(g);
  std::vector<Instance> out;
  for (std::int64_t a = 0; a <= 2 * mmax; ++a)
    for (std::int64_t b = 0; b <= 2 * mmax; ++b) {
      Rational rhs = 0;
      if (a % 2 == 0 && b % 2 == 0) rhs = Beta(a, -b) + D(a, -b) + D(b, -a);
      out.push_back(equality("n=0 coefficient (" + std::to_string(a) + "," + std::to_string(b) + ")",
                             biseries_egf_coefficient(lhs, a, b), rhs));
    }
  return out;
}

inline std::vector<Instance> sym_cose_n1(const Params& ps) {
  std::vector<Instance> out;
  for (auto [l, m] : pairs(ps))
    out.push_back(equality("sD_" + std::to_string(2 * m) + "^(-" + std::to_string(l) +
                               ")(1) = D/2",
                           sym_polycosecant(2 * m, l, 1, SymCosecantMethod::definition),
                           make_rational(1, 2) * D(2 * m, -l - 1)));
  return out;
}

inline std::vector<Instance> sym_cose_n2(const Params& ps) {
  auto side = [](std::int64_t m, std::int64_t l) {
    Rational acc = 0;
    for (std::int64_t j = 0; j <= 2 * m; ++j) {
      Rational e = euler_polynomial(j, 0);
      if (e == 0) continue;
      acc += Rational(binomial(2 * m, j)) * e *
             (tilde_cosecant(2 * m - j, -2 * l - 1) + tilde_cosecant(2 * m - j, -2 * l - 2));
    }
    return acc;
  };
  std::vector<Instance> out;
  for (auto [l, m] : pairs(ps))
    out.push_back(equality("n=2 tilde-D sum (m,l)=(" + std::to_string(m) + "," +
                               std::to_string(l) + ") symmetric",
                           side(m, l), side(l, m)));
  return out;
}

inline std::vector<Instance> sym_b_cases(const Params& ps) {
  std::vector<Instance> out;
  for (auto [l, m] : pairs(ps)) {
    out.push_back(equality("sB_m^(-l)(0) = B_m^(-l)",
                           sym_poly_bernoulli(m, l, 0, SymBernoulliMethod::definition), B(m, -l)));
    out.push_back(equality("sB_m^(-l)(1) = C_m^(-l-1)",
                           sym_poly_bernoulli(m, l, 1, SymBernoulliMethod::definition),
                           C(m, -l - 1)));
  }
  return out;
}

inline std::vector<Instance> sym_b_explicit(const Params& ps) {
  std::vector<Instance> out;
  for (auto n : levels(ps))
    for (auto [l, m] : pairs(ps)) {
      Rational closed = sym_poly_bernoulli(m, l, n, SymBernoulliMethod::closed_form);
      out.push_back(equality("sB definition = closed form",
                             sym_poly_bernoulli(m, l, n, SymBernoulliMethod::definition), closed));
      out.push_back(equality("sB biseries = closed form",
                             sym_poly_bernoulli(m, l, n, SymBernoulliMethod::biseries), closed));
    }
  return out;
}

inline std::vector<Instance> sym_cose_explicit(const Params& ps) {
  std::vector<Instance> out;
  for (auto n : levels(ps))
    for (auto [l, m] : pairs(ps)) {
      Rational closed = sym_polycosecant(2 * m, l, n, SymCosecantMethod::closed_form);
      out.push_back(equality("sD definition = closed form",
                             sym_polycosecant(2 * m, l, n, SymCosecantMethod::definition), closed));
      Rational scaled = closed * Rational(ipow(2, n + 1)) / Rational(factorial(n));
      out.push_back(Instance{"2^(n+1)/n! sD in Z", scaled, 0, Relation::integral, 0, {}});
    }
  return out;
}

// -- Stirling lemmas ---------------------------------------------------------

inline std::vector<Instance> stirling_mod_p(const Params& ps) {
  auto p = req(ps, "p"), a = req(ps, "a"), n = req(ps, "n");
  hyp(is_prime(p), "p prime");
  hyp(n >= 1 && a >= 1, "n, a >= 1");
  Integer expect = 0;
  std::string branch = "otherwise";
  if ((n - (a - 1)) % (p - 1) == 0) {
    std::int64_t c = (n - (a - 1)) / (p - 1);
    if (c >= a) {
      expect = binomial(c - 1, a - 1);
      branch = "n=a-1+c(p-1), c>=a";
    }
  }
  return {congruence("S(n, ap-1)", Rational(stirling2(n, a * p - 1)), Rational(expect), p, branch)};
}

inline std::vector<Instance> stirling_cong(const Params& ps) {
  auto p = req(ps, "p"), N = req(ps, "N"), n = req(ps, "n"), m = req(ps, "m"), j = req(ps, "j");
  hyp(is_prime(p), "p prime");
  hyp(n >= 1 && m >= 1 && N >= 1 && j >= 0, "n, m, N >= 1, j >= 0");
  auto M = modulus_of(p, N);
  hyp(divides(totient(M.get_si()), n - m), "n == m mod phi(p^N)");
  hyp(n >= N && m >= N, "n, m >= N");
  return {congruence("j! S(n,j) vs j! S(m,j)", Rational(factorial(j) * stirling2(n, j)),
                     Rational(factorial(j) * stirling2(m, j)), M)};
}

inline const std::map<std::string, Entry, std::less<>>& table() {
  static const std::map<std::string, Entry, std::less<>> entries = {
      {"KUMMER_BERNOULLI", {"(1-p^(m-1))B_m/m == (1-p^(n-1))B_n/n mod p^N", {"p", "N", "m", "n"}, kummer_bernoulli}},
      {"KUMMER_POLYB_B", {"B_n^(-k) == B_m^(-k) mod p^N", {"p", "N", "m", "n", "k"},
                          [](const Params& p) { return kummer_polyb(p, true); }}},
      {"KUMMER_POLYB_C", {"C_n^(-k) == C_m^(-k) mod p^N", {"p", "N", "m", "n", "k"},
                          [](const Params& p) { return kummer_polyb(p, false); }}},
      {"SUM_POLYB", {"sum_{i<phi(p^N)} B_n^(-k-i) == 0 mod p^N", {"p", "N", "n", "k"}, sum_polyb}},
      {"KUMMER_COSE_ODD", {"D_2m^(-2k+1) == D_2n^(-2k+1) mod p^N", {"p", "N", "m", "n", "k"}, kummer_cose_odd}},
      {"KUMMER_COSE", {"D_2m^(-k) == D_2n^(-k) mod p^N", {"p", "N", "m", "n", "k"},
                       [](const Params& p) { return kummer_level_two(p, true); }}},
      {"KUMMER_COTA", {"beta_2m^(-k) == beta_2n^(-k) mod p^N", {"p", "N", "m", "n", "k"},
                       [](const Params& p) { return kummer_level_two(p, false); }}},
      {"KUMMER_COSE_REMARK", {"weighted D^(1), beta^(1) Kummer congruences", {"p", "N", "m", "n"}, kummer_cose_remark}},
      {"TWO_ORDER_COSE", {"D_2n^(-2k) == 0 mod 2^(2n)", {"n", "k"}, two_order_cose}},
      {"TWO_ORDER_COTA", {"beta_2n^(-2k-1) == 0 mod 2^(2n-1)", {"n", "k"}, two_order_cota}},
      {"PERIOD_B", {"B_{p-1}^(-k) == 1 or 2 mod p, with dual form", {"p", "k"}, period_b}},
      {"PERIOD_C", {"C_{p-2}^(-k-1) == 0 or 1 mod p, with dual form", {"p", "k"}, period_c}},
      {"PERIOD_CPK", {"C_{p-1}^(-k-1) == 1 mod p, with dual form", {"p", "k"}, period_cpk}},
      {"PERIOD_COSE_ODD", {"D_{p-1}^(-2k-1) == 1 mod p, with dual form", {"p", "k"}, period_cose_odd}},
      {"PERIOD_COSE_P1", {"D_2n^(-p+1) == 0 or 1 mod p", {"p", "n"}, period_cose_p1}},
      {"PERIOD_COTA_P1", {"beta_2n^(-p+1) == 1 or 2 mod p", {"p", "n"}, period_cota_p1}},
      {"SUM_COSE", {"2^(2n) sum D_2n^(-k-i) == (-1)^n T_{2n+1} phi(p^N) mod p^N", {"p", "N", "n", "k"},
                    [](const Params& p) { return sum_level_two(p, true); }}},
      {"SUM_COTA", {"2^(2n) sum beta_2n^(-k-i) == tilde-T_2n phi(p^N) mod p^N", {"p", "N", "n", "k"},
                    [](const Params& p) { return sum_level_two(p, false); }}},
      {"SUM_C", {"sum C_n^(-k-i) == (-1)^n phi(p^N) mod p^N", {"p", "N", "n", "k"}, sum_c}},
      {"CVS_BERNOULLI", {"B_n + sum_{(p-1)|n} 1/p is an integer", {"n"}, cvs_bernoulli}},
      {"CVS_POLYB", {"Clausen-von Staudt type theorem for B_n^(k)", {"p", "k", "n"}, cvs_polyb}},
      {"CVS_COSE", {"Clausen-von Staudt type theorem for D_2n^(k)", {"p", "k", "n"},
                    [](const Params& p) { return cvs_level_two(p, true); }}},
      {"CVS_COTA", {"Clausen-von Staudt type theorem for beta_2n^(k)", {"p", "k", "n"},
                    [](const Params& p) { return cvs_level_two(p, false); }}},
      {"DENOM_ORDER", {"ord_p d(2n) = ord_p beta-hat(2n) = ord_p b(2n)", {"p", "n"}, denom_order}},
      {"DUALITY_B", {"B_m^(-l) = B_l^(-m)", {"l", "m", "lmax"},
                     [](const Params& p) { return duality(p, Family::PolyB_B); }}},
      {"DUALITY_C", {"C_m^(-l-1) = C_l^(-m-1)", {"l", "m", "lmax"},
                     [](const Params& p) { return duality(p, Family::PolyB_C); }}},
      {"DUALITY_COSE", {"D_2m^(-2l-1) = D_2l^(-2m-1)", {"l", "m", "lmax"},
                        [](const Params& p) { return duality(p, Family::Cosecant); }}},
      {"DUALITY_COTA", {"beta_2m^(-2l) = beta_2l^(-2m)", {"l", "m", "lmax"},
                        [](const Params& p) { return duality(p, Family::Cotangent); }}},
      {"DUALITY_SYM_B", {"sB_m^(-l)(n) = sB_l^(-m)(n)", {"l", "m", "lmax", "n", "nmax"}, duality_sym_b}},
      {"DUALITY_SYM_COSE", {"sD_2m^(-2l)(n) = sD_2l^(-2m)(n)", {"l", "m", "lmax", "n", "nmax"}, duality_sym_cose}},
      {"VANISH_S1_B", {"sum_j (-1)^j s(m+1,j+1) B_n^(-k-j) = 0, n < m", {"k", "n", "m"}, vanish_b}},
      {"RECUR_POLYB", {"Stirling-first recurrences for B_n and C_{n-1}, m >= n >= 1", {"k", "n", "m"}, recur_polyb}},
      {"VANISH_S1_COSE", {"sum_j (-1)^j s(m+1,j+1) D_2n^(-k-j) = 0, m > 2n", {"k", "n", "m"},
                          [](const Params& p) { return vanish_level_two(p, true); }}},
      {"VANISH_S1_COTA", {"sum_j (-1)^j s(m+1,j+1) beta_2n^(-k-j) = 0, m > 2n", {"k", "n", "m"},
                          [](const Params& p) { return vanish_level_two(p, false); }}},
      {"CONV_EQ5", {"beta_2n^(k) = sum C(2n,2i) D_2i^(k)", {"n", "k"}, conv_eq5}},
      {"CONV_EQ6", {"D_2n^(k) = sum C(2n,2i) E_{2n-2i} beta_2i^(k)", {"n", "k"}, conv_eq6}},
      {"KSHIFT", {"D_n^(k-1) = sum C(n+1,2m+1) D_{n-2m}^(k)", {"n", "k"}, kshift}},
      {"GF_BIVARIATE", {"two-variable generating function of D_n^(-k)", {"nmax", "kmax"}, gf_bivariate}},
      {"GF_SYM_B", {"two-variable generating function of sB_m^(-l)(n)", {"n", "mmax"}, gf_sym_b}},
      {"GF_SYM_COSE", {"f_{1,n} + f_{2,n} generates sD_m^(-l)(n)", {"n", "mmax"}, gf_sym_cose}},
      {"LEMMA_FNCOSYM", {"f_{i,n} = (e^{+-t}+1)^(-n) sum_j s(n,j) d^j/dy^j f_{i,0}", {"n", "T"}, lemma_fncosym}},
      {"SYM_COSE_N0", {"n=0 four-term generating identity", {"mmax"}, sym_cose_n0}},
      {"SYM_COSE_N1", {"sD_2m^(-l)(1) = D_2m^(-l-1)/2", {"l", "m", "lmax"}, sym_cose_n1}},
      {"SYM_COSE_N2", {"n=2 tilde-D / Euler polynomial symmetry", {"l", "m", "lmax"}, sym_cose_n2}},
      {"SYM_B_CASES", {"sB(0) = B, sB(1) = C", {"l", "m", "lmax"}, sym_b_cases}},
      {"SYM_B_EXPLICIT", {"sB definition, closed form and generating function agree", {"l", "m", "lmax", "n", "nmax"}, sym_b_explicit}},
      {"SYM_COSE_EXPLICIT", {"sD definition = closed form; 2^(n+1)/n! sD integral", {"l", "m", "lmax", "n", "nmax"}, sym_cose_explicit}},
      {"STIRLING_MOD_P", {"S(n, ap-1) mod p", {"p", "a", "n"}, stirling_mod_p}},
      {"STIRLING_CONG", {"j! S(n,j) == j! S(m,j) mod p^N", {"p", "N", "n", "m", "j"}, stirling_cong}},
  };
  return entries;
}

inline const Entry& entry(std::string_view id) {
  const auto& t = table();
  auto it = t.find(id);
  if (it == t.end()) throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
  return it->second;
}

}  // namespace detail::identities

struct IdentityInfo {
  std::string id;
  std::string description;
  std::vector<std::string> params;
};

inline std::vector<IdentityInfo> registry() {
  std::vector<IdentityInfo> out;
  for (const auto& [id, e] : detail::identities::table())
    out.push_back({id, e.description, e.params});
  return out;
}

/// Evaluates both sides of every instance; throws HypothesisViolation,
/// MissingParameter or UnknownIdentity instead of reporting a failure.
inline std::vector<Instance> instances(std::string_view id, const Params& params) {
  return detail::identities::entry(id).generate(params);
}

inline Report evaluate(std::string_view id, const Params& params, std::vector<Instance> list,
                       const VerifyOptions& options = {}) {
  if (options.perturb && *options.perturb < list.size()) {
    Instance& in = list[*options.perturb];
    switch (in.relation) {
      case Relation::p_integral: in.lhs += Rational(1) / Rational(in.modulus); break;
      case Relation::integral: in.lhs += make_rational(1, 2); break;
      default: in.lhs += 1;
    }
  }
  Report r;
  r.identity = std::string(id);
  r.params = params;
  r.pass = true;
  for (const auto& in : list) {
    r.witnesses.push_back(make_witness(in));
    r.pass = r.pass && r.witnesses.back().holds;
  }
  if (list.empty()) r.pass = false;
  return r;
}

inline Report verify(std::string_view id, const Params& params, const VerifyOptions& options = {}) {
  return evaluate(id, params, instances(id, params), options);
}

using Grid = std::map<std::string, std::vector<std::int64_t>>;

inline std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

struct SweepResult {
  std::string identity;
  std::size_t points = 0;     // lattice points evaluated
  std::size_t skipped = 0;    // lattice points outside the hypotheses
  std::size_t instances = 0;
  std::set<std::string> branches;
  std::vector<Report> failures;

  bool pass() const { return points > 0 && failures.empty(); }
};

/// Verifies every lattice point of the grid's cartesian product, skipping
/// points that violate the identity's hypotheses.
inline SweepResult sweep(std::string_view id, const Grid& grid) {
  SweepResult out;
  out.identity = std::string(id);
  std::vector<std::pair<std::string, const std::vector<std::int64_t>*>> axes;
  for (const auto& [name, values] : grid) {
    if (values.empty()) return out;
    axes.emplace_back(name, &values);
  }
  std::vector<std::size_t> cursor(axes.size(), 0);
  while (true) {
    Params params;
    for (std::size_t a = 0; a < axes.size(); ++a) params[axes[a].first] = (*axes[a].second)[cursor[a]];
    try {
      Report r = verify(id, params);
      ++out.points;
      out.instances += r.witnesses.size();
      for (const auto& w : r.witnesses)
        if (!w.branch.empty()) out.branches.insert(w.branch);
      if (!r.pass) out.failures.push_back(std::move(r));
    } catch (const HypothesisViolation&) {
      ++out.skipped;
    }
    std::size_t a = 0;
    for (; a < axes.size(); ++a) {
      if (++cursor[a] < axes[a].second->size()) break;
      cursor[a] = 0;
    }
    if (a == axes.size()) break;
  }
  return out;
}

}  // namespace polyseq
