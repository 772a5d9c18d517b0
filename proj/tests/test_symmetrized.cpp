#include <polyseq/polyseq.hpp>

#include <gtest/gtest.h>

using namespace polyseq;

namespace {

bool passes(const std::string& id, const Params& params) {
  Report r = verify(id, params);
  for (const auto& w : r.witnesses)
    if (!w.holds) ADD_FAILURE() << id << ": " << w.instance << " lhs " << w.lhs << " rhs " << w.rhs;
  return r.pass;
}

}  // namespace

TEST(SymmetrizedBernoulli, SpecialLevels) {
  for (int m = 0; m <= 5; ++m)
    for (int l = 0; l <= 5; ++l) {
      EXPECT_EQ(sym_poly_bernoulli(m, l, 0), poly_bernoulli(PolyBernoulliVariant::B, m, -l));
      EXPECT_EQ(sym_poly_bernoulli(m, l, 1), poly_bernoulli(PolyBernoulliVariant::C, m, -l - 1));
    }
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(sym_poly_bernoulli(0, 0, n), Rational(factorial(n)));
  EXPECT_TRUE(passes("SYM_B_CASES", {{"lmax", 5}}));
}

TEST(SymmetrizedBernoulli, MethodsAgreeAndArePositiveIntegers) {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 5; ++m)
      for (int l = 0; l <= 5; ++l) {
        Rational c = sym_poly_bernoulli(m, l, n, SymBernoulliMethod::closed_form);
        EXPECT_EQ(sym_poly_bernoulli(m, l, n, SymBernoulliMethod::definition), c);
        EXPECT_EQ(sym_poly_bernoulli(m, l, n, SymBernoulliMethod::biseries), c);
        EXPECT_TRUE(is_integer(c) && c >= 1);
      }
}

// With signed first-kind numbers the definition would not match the closed form.
TEST(SymmetrizedBernoulli, NeedsUnsignedFirstKind) {
  const int m = 2, l = 1, n = 2;
  Rational signed_sum = 0;
  for (int j = 0; j <= n; ++j)
    signed_sum += Rational(sign_power(n - j) * stirling1(n, j)) * poly_bernoulli_polynomial(m, -l - j, n);
  EXPECT_NE(signed_sum, sym_poly_bernoulli(m, l, n));
}

TEST(SymmetrizedBernoulli, Duality) {
  EXPECT_TRUE(passes("DUALITY_SYM_B", {{"lmax", 5}, {"nmax", 4}}));
}

TEST(SymmetrizedBernoulli, GeneratingFunction) {
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(passes("GF_SYM_B", {{"n", n}, {"mmax", 5}})) << n;
}

TEST(CopolyHat, OddOrderVanishes) {
  for (int n = 0; n <= 3; ++n)
    for (int m = 1; m <= 9; m += 2)
      for (int l = 0; l <= 3; ++l) EXPECT_EQ(copoly_hat(m, l, n), 0);
}

TEST(CopolyHat, LevelOneIsHalfCosecant) {
  for (int m = 0; m <= 10; m += 2)
    for (int l = 0; l <= 4; ++l)
      EXPECT_EQ(copoly_hat(m, l, 1), make_rational(1, 2) * polycosecant(m, -l)) << m << "," << l;
}

TEST(CopolyHat, LevelZeroConstantTerm) {
  // n = 0: (e^t+1) Li_{-l}(tanh(t/2))/sinh t, symmetrized; at t = 0 this is 2 * 1/2 * (1/2 + 1/2)
  EXPECT_EQ(copoly_hat(0, 0, 0), 1);
}

TEST(SymmetrizedCosecant, Examples) {
  for (int m = 0; m <= 4; ++m)
    for (int l = 0; l <= 4; ++l)
      EXPECT_EQ(sym_polycosecant(2 * m, 2 * l + 1, 1, SymCosecantMethod::definition),
                make_rational(1, 2) * polycosecant(2 * m, -2 * l - 2));
  EXPECT_EQ(sym_polycosecant(4, 3, 1), make_rational(1, 2) * polycosecant(4, -4));
  EXPECT_EQ(sym_polycosecant(0, 0, 0), 1);
  EXPECT_EQ(sym_polycosecant(0, 0, 0, SymCosecantMethod::definition), 1);
  EXPECT_EQ(sym_polycosecant(3, 2, 2), 0);
}

TEST(SymmetrizedCosecant, MethodsAgreeAndScaleToIntegers) {
  EXPECT_TRUE(passes("SYM_COSE_EXPLICIT", {{"lmax", 4}, {"nmax", 4}}));
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int l = 0; l <= 6; ++l) {
        Rational scaled = sym_polycosecant(2 * m, l, n) * Rational(ipow(2, n + 1)) / Rational(factorial(n));
        EXPECT_TRUE(is_integer(scaled) && scaled >= 0);
      }
}

TEST(SymmetrizedCosecant, Duality) {
  EXPECT_TRUE(passes("DUALITY_SYM_COSE", {{"lmax", 4}, {"nmax", 4}}));
}

TEST(SymmetrizedCosecant, LevelZeroFourTermIdentity) {
  EXPECT_TRUE(passes("SYM_COSE_N0", {{"mmax", 4}}));
  for (int m = 0; m <= 4; ++m)
    for (int l = 0; l <= 4; ++l)
      EXPECT_EQ(polycotangent(2 * m, -2 * l), polycotangent(2 * l, -2 * m));
}

TEST(SymmetrizedCosecant, LevelOneGivesOddWeightDuality) {
  EXPECT_TRUE(passes("SYM_COSE_N1", {{"lmax", 4}}));
  for (int m = 0; m <= 4; ++m)
    for (int l = 0; l <= 4; ++l) {
      Rational lhs = Rational(2) * sym_polycosecant(2 * m, 2 * l, 1, SymCosecantMethod::definition);
      Rational rhs = Rational(2) * sym_polycosecant(2 * l, 2 * m, 1, SymCosecantMethod::definition);
      EXPECT_EQ(lhs, polycosecant(2 * m, -2 * l - 1));
      EXPECT_EQ(rhs, polycosecant(2 * l, -2 * m - 1));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(SymmetrizedCosecant, LevelTwoEulerPolynomialIdentity) {
  EXPECT_TRUE(passes("SYM_COSE_N2", {{"lmax", 3}}));
}

TEST(SymmetrizedCosecant, ComponentLemma) {
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(passes("LEMMA_FNCOSYM", {{"n", n}, {"T", 8}})) << n;
}

TEST(SymmetrizedCosecant, GeneratingFunction) {
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(passes("GF_SYM_COSE", {{"n", n}, {"mmax", 6}})) << n;
}

TEST(SymmetrizedCosecant, ComponentsSwapUnderReflection) {
  const std::size_t T = 6;
  for (int n = 0; n <= 2; ++n)
    EXPECT_EQ(sym_cosecant_component(n, -1, T), reflect_t(sym_cosecant_component(n, 1, T)));
}
