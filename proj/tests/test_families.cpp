#include <polyseq/polyseq.hpp>

#include <gtest/gtest.h>

using namespace polyseq;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// Number of n x k 0/1 matrices determined by their row and column sums
// (no 2x2 submatrix equal to a permutation matrix). Equals B_n^(-k).
long lonesum_count(int n, int k) {
  long count = 0;
  const int cells = n * k;
  for (long mask = 0; mask < (1L << cells); ++mask) {
    auto at = [&](int r, int c) { return (mask >> (r * k + c)) & 1; };
    bool ok = true;
    for (int r1 = 0; r1 < n && ok; ++r1)
      for (int r2 = r1 + 1; r2 < n && ok; ++r2)
        for (int c1 = 0; c1 < k && ok; ++c1)
          for (int c2 = c1 + 1; c2 < k && ok; ++c2) {
            int a = at(r1, c1), b = at(r1, c2), c = at(r2, c1), d = at(r2, c2);
            if (a == d && b == c && a != b) ok = false;
          }
    count += ok;
  }
  return count;
}

bool passes(const std::string& id, const Params& params) { return verify(id, params).pass; }

}  // namespace

TEST(PolyBernoulli, Examples) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(poly_bernoulli(PolyBernoulliVariant::B, n, 0), 1);
  EXPECT_EQ(poly_bernoulli(PolyBernoulliVariant::C, 2, 1), q("1/6"));
  EXPECT_EQ(poly_bernoulli(PolyBernoulliVariant::B, 3, -2), poly_bernoulli(PolyBernoulliVariant::B, 2, -3));
}

TEST(PolyBernoulli, WeightOneIsBernoulli) {
  for (int n = 0; n <= 16; ++n) {
    EXPECT_EQ(poly_bernoulli(PolyBernoulliVariant::C, n, 1), bernoulli(n)) << n;
    EXPECT_EQ(Rational(sign_power(n)) * poly_bernoulli(PolyBernoulliVariant::B, n, 1), bernoulli(n)) << n;
  }
}

TEST(PolyBernoulli, CountsLonesumMatrices) {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      EXPECT_EQ(poly_bernoulli(PolyBernoulliVariant::B, n, -k), Rational(lonesum_count(n, k))) << n << "," << k;
}

TEST(PolyBernoulli, ClosedFormMatchesSeries) {
  for (auto v : {PolyBernoulliVariant::B, PolyBernoulliVariant::C})
    for (int n = 0; n <= 12; ++n)
      for (int k = -6; k <= 4; ++k)
        EXPECT_EQ(poly_bernoulli(v, n, k), poly_bernoulli(v, n, k, PolyBernoulliMethod::series)) << n << "," << k;
}

TEST(PolyBernoulliPolynomial, AtZeroAndConstantTerm) {
  for (int n = 0; n <= 8; ++n)
    for (int k = -4; k <= 4; ++k)
      EXPECT_EQ(poly_bernoulli_polynomial(n, k, 0), poly_bernoulli(PolyBernoulliVariant::B, n, k));
  for (int k = -4; k <= 4; ++k)
    for (auto x : {q("0"), q("1"), q("-5/3"), q("7")}) EXPECT_EQ(poly_bernoulli_polynomial(0, k, x), 1);
}

// e^{-t}/(1-e^{-t}) = 1/(e^t-1): B_n^(k)(1) = C_n^(k).
TEST(PolyBernoulliPolynomial, AtOneIsC) {
  for (int n = 0; n <= 8; ++n)
    for (int k = -4; k <= 4; ++k)
      EXPECT_EQ(poly_bernoulli_polynomial(n, k, 1), poly_bernoulli(PolyBernoulliVariant::C, n, k));
  // sB_2^(-1)(1) = B_2^(-2)(1) = C_2^(-2); the weight shifts with the
  // symmetrization, so B_2^(-1)(1) itself is C_2^(-1), a different number.
  EXPECT_EQ(poly_bernoulli_polynomial(2, -2, 1), poly_bernoulli(PolyBernoulliVariant::C, 2, -2));
  EXPECT_NE(poly_bernoulli_polynomial(2, -1, 1), poly_bernoulli(PolyBernoulliVariant::C, 2, -2));
}

TEST(Polycosecant, Examples) {
  EXPECT_EQ(polycosecant(4, -2), 16);
  EXPECT_EQ(polycosecant(4, 2), q("176/225"));
  for (int k = -6; k <= 6; ++k) EXPECT_EQ(polycosecant(0, k), 1) << k;
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(polycosecant(2 * n, -2), Rational(ipow(4, n))) << n;
}

TEST(Polycosecant, OddOrderVanishes) {
  for (int n = 1; n <= 15; n += 2)
    for (int k = -5; k <= 5; ++k) {
      EXPECT_EQ(polycosecant(n, k), 0);
      EXPECT_EQ(polycosecant(n, k, CosecantMethod::explicit_sum), 0);
      EXPECT_EQ(polycosecant(n, k, CosecantMethod::series), 0);
    }
}

TEST(Polycosecant, MethodDomain) {
  EXPECT_THROW(polycosecant(4, 0, CosecantMethod::sasaki), MethodDomain);
  EXPECT_THROW(polycosecant(4, 3, CosecantMethod::sasaki), MethodDomain);
  EXPECT_THROW(polycosecant(3, -2, CosecantMethod::sasaki), MethodDomain);
}

TEST(Polycotangent, Examples) {
  EXPECT_EQ(polycotangent(4, -2), 41);
  EXPECT_EQ(polycotangent(4, 2), q("-199/225"));
  for (int k = -6; k <= 6; ++k) EXPECT_EQ(polycotangent(0, k), 1) << k;
}

TEST(Polycotangent, MethodDomain) {
  EXPECT_THROW(polycotangent(4, 0, CotangentMethod::stirling_negk), MethodDomain);
  EXPECT_THROW(polycotangent(5, -1, CotangentMethod::stirling_negk), MethodDomain);
}

TEST(MethodAgreement, AllRoutesOnTheBox) {
  for (int n = 0; n <= 12; n += 2)
    for (int k = -6; k <= 4; ++k) {
      Rational d = polycosecant(n, k, CosecantMethod::series);
      EXPECT_EQ(polycosecant(n, k, CosecantMethod::explicit_sum), d) << n << "," << k;
      if (k <= -1) { EXPECT_EQ(polycosecant(n, k, CosecantMethod::sasaki), d) << n << "," << k; }
      EXPECT_EQ(cosecant_from_cotangent(n, k), d) << n << "," << k;
      Rational b = polycotangent(n, k, CotangentMethod::series);
      EXPECT_EQ(polycotangent(n, k, CotangentMethod::explicit_sum), b) << n << "," << k;
      EXPECT_EQ(polycotangent(n, k, CotangentMethod::from_cosecant), b) << n << "," << k;
      if (k <= -1) { EXPECT_EQ(polycotangent(n, k, CotangentMethod::stirling_negk), b) << n << "," << k; }
    }
}

TEST(MethodAgreement, OracleDiffReportsAgreement) {
  for (Family f : {Family::Cosecant, Family::Cotangent, Family::PolyB_B, Family::PolyB_C}) {
    OracleDiff d = oracle_diff(f, 12, -6, 4);
    EXPECT_TRUE(d.agree()) << family_name(f);
    EXPECT_FALSE(d.single_method);
  }
  OracleDiff t = oracle_diff(Family::TildeD, 8, -4, 0);
  EXPECT_TRUE(t.agree());
  EXPECT_TRUE(t.single_method);
}

TEST(Conversion, CosecantFromCotangent) {
  EXPECT_EQ(cosecant_from_cotangent(4, -3), 121);
  EXPECT_EQ(cosecant_from_cotangent(6, -3), 1093);
  for (int k = -4; k <= 4; ++k) EXPECT_EQ(cosecant_from_cotangent(0, k), 1);
  EXPECT_THROW(cosecant_from_cotangent(3, 1), IndexParity);
}

TEST(Conversion, KShift) {
  EXPECT_EQ(k_shift_recurrence(4, 0), 1);
  EXPECT_EQ(k_shift_recurrence(6, -2), 1093);
  for (int k = -4; k <= 4; ++k) EXPECT_EQ(k_shift_recurrence(0, k), 1);
  for (int n = 0; n <= 10; ++n)
    for (int k = -4; k <= 4; ++k) EXPECT_TRUE(passes("KSHIFT", {{"n", n}, {"k", k}})) << n << "," << k;
}

TEST(Conversion, RegistryEquations) {
  for (int n = 0; n <= 6; ++n)
    for (int k = -5; k <= 4; ++k) {
      EXPECT_TRUE(passes("CONV_EQ5", {{"n", n}, {"k", k}})) << n << "," << k;
      EXPECT_TRUE(passes("CONV_EQ6", {{"n", n}, {"k", k}})) << n << "," << k;
    }
}

TEST(TildeCosecant, ConstantTermAndDomain) {
  EXPECT_EQ(tilde_cosecant(0, 0), q("1/2"));
  EXPECT_THROW(tilde_cosecant(2, 1), MethodDomain);
}

// A_k(z) = Li_k(z) - Li_k(-z) makes D_m^(-k) = (1 + (-1)^m) tilde-D_m^(-k).
TEST(TildeCosecant, HalvesEvenCosecant) {
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= 5; ++k) {
      Rational expect = m % 2 == 0 ? Rational(2) * tilde_cosecant(m, -k) : Rational(0);
      EXPECT_EQ(polycosecant(m, -k), expect) << m << "," << k;
    }
}

TEST(Duality, AllFourFamilies) {
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= 6; ++m) {
      EXPECT_EQ(poly_bernoulli(PolyBernoulliVariant::B, m, -l), poly_bernoulli(PolyBernoulliVariant::B, l, -m));
      EXPECT_EQ(poly_bernoulli(PolyBernoulliVariant::C, m, -l - 1),
                poly_bernoulli(PolyBernoulliVariant::C, l, -m - 1));
      EXPECT_EQ(polycosecant(2 * m, -2 * l - 1, CosecantMethod::explicit_sum),
                polycosecant(2 * l, -2 * m - 1, CosecantMethod::explicit_sum));
      EXPECT_EQ(polycotangent(2 * m, -2 * l, CotangentMethod::explicit_sum),
                polycotangent(2 * l, -2 * m, CotangentMethod::explicit_sum));
    }
}

// Duality fails off the stated parity classes, so the checks above are not vacuous.
TEST(Duality, WrongParityIsNotSymmetric) {
  EXPECT_NE(polycosecant(4, -2), polycosecant(2, -4));
  EXPECT_NE(polycotangent(4, -1), polycotangent(2, -3));
}

TEST(Integrality, NegativeWeightsAreNonnegativeIntegers) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) {
      Rational d = polycosecant(2 * n, -k), b = polycotangent(2 * n, -k);
      EXPECT_TRUE(is_integer(d) && d >= 0) << n << "," << k;
      EXPECT_TRUE(is_integer(b) && b >= 0) << n << "," << k;
    }
}

TEST(Integrality, WeightOneAgainstBernoulli) {
  for (int n = 0; n <= 8; ++n) {
    Rational b2n = bernoulli(2 * n);
    EXPECT_EQ(polycosecant(2 * n, 1), Rational(2 - ipow(2, 2 * n)) * b2n) << n;
    EXPECT_EQ(polycotangent(2 * n, 1), Rational(ipow(2, 2 * n)) * b2n) << n;
  }
}

TEST(Bivariate, ReproducesCosecantTable) {
  EXPECT_TRUE(passes("GF_BIVARIATE", {{"nmax", 8}, {"kmax", 8}}));
}

TEST(VanishingSums, CosecantWorkedExample) {
  // j = 0..5 terms for (k, 2n, m) = (-2, 4, 5)
  const std::vector<Rational> terms{q("1408/15"), q("-1918/15"), 0, -85, 240, -121};
  Rational sum = 0;
  for (int j = 0; j <= 5; ++j) {
    Rational t = Rational(sign_power(j) * stirling1(6, j + 1)) * polycosecant(4, 2 - j);
    EXPECT_EQ(t, terms[j]) << j;
    sum += t;
  }
  EXPECT_EQ(sum, 0);
  EXPECT_TRUE(passes("VANISH_S1_COSE", {{"k", -2}, {"n", 2}, {"m", 5}}));
}

TEST(VanishingSums, LevelTwoGrid) {
  for (int k = -2; k <= 2; ++k)
    for (int n = 1; n <= 2; ++n)
      for (int m = 2 * n + 1; m <= 2 * n + 3; ++m) {
        Params p{{"k", k}, {"n", n}, {"m", m}};
        EXPECT_TRUE(passes("VANISH_S1_COSE", p)) << k << "," << n << "," << m;
        EXPECT_TRUE(passes("VANISH_S1_COTA", p)) << k << "," << n << "," << m;
      }
}

// The vanishing needs m > 2n; at m = 2n it fails, so the registry starts at 2n+1.
TEST(VanishingSums, LevelTwoBoundaryFails) {
  auto sum = [](auto f, int k, int n, int m) {
    Rational acc = 0;
    for (int j = 0; j <= m; ++j) acc += Rational(sign_power(j) * stirling1(m + 1, j + 1)) * f(2 * n, -k - j);
    return acc;
  };
  auto d = [](std::int64_t a, std::int64_t b) { return polycosecant(a, b); };
  auto b = [](std::int64_t a, std::int64_t c) { return polycotangent(a, c); };
  EXPECT_NE(sum(d, 0, 1, 2), 0);
  EXPECT_NE(sum(b, 0, 1, 2), 0);
  EXPECT_THROW(verify("VANISH_S1_COSE", {{"k", 0}, {"n", 1}, {"m", 2}}), HypothesisViolation);
}

TEST(VanishingSums, PolyBernoulli) {
  for (int k = -2; k <= 3; ++k)
    for (int n = 0; n <= 5; ++n)
      for (int m = n + 1; m <= n + 3; ++m)
        EXPECT_TRUE(passes("VANISH_S1_B", {{"k", k}, {"n", n}, {"m", m}})) << k << "," << n << "," << m;
  // n = m is outside: the sum no longer vanishes
  Rational acc = 0;
  for (int j = 0; j <= 2; ++j)
    acc += Rational(sign_power(j) * stirling1(3, j + 1)) * poly_bernoulli(PolyBernoulliVariant::B, 2, -j);
  EXPECT_NE(acc, 0);
}

TEST(VanishingSums, PolyBernoulliRecurrences) {
  for (int k = -2; k <= 3; ++k)
    for (int n = 1; n <= 5; ++n)
      for (int m = n; m <= n + 2; ++m)
        EXPECT_TRUE(passes("RECUR_POLYB", {{"k", k}, {"n", n}, {"m", m}})) << k << "," << n << "," << m;
}

TEST(Caches, RepeatedLookupsAreStable) {
  Rational first = polycosecant(10, -3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(polycosecant(10, -3), first);
  EXPECT_EQ(first, 88573);
}
