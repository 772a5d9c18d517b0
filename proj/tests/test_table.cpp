#include <polyseq/polyseq.hpp>

#include <gtest/gtest.h>

using namespace polyseq;

TEST(Table, CosecantRow) {
  std::string csv = to_csv(make_table(Family::Cosecant, {0, 4}, {-3, 2}));
  EXPECT_NE(csv.find("\n4,121,16,1,0,7/15,176/225\n"), std::string::npos) << csv;
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,k=-3,k=-2,k=-1,k=0,k=1,k=2");
}

TEST(Table, CotangentRow) {
  std::string csv = to_csv(make_table(Family::Cotangent, {4, 4}, {-3, 2}));
  EXPECT_NE(csv.find("\n4,200,41,8,1,-8/15,-199/225\n"), std::string::npos) << csv;
}

TEST(Table, OddOrderZerosAreExplicit) {
  auto t = make_table(Family::Cosecant, {1, 1}, {-5, 5});
  for (const auto& c : t.cells[0]) EXPECT_EQ(c, 0);
  EXPECT_NE(to_csv(t).find("\n1,0,0,0,0,0,0,0,0,0,0,0\n"), std::string::npos);
}

TEST(Table, Caps) {
  EXPECT_THROW(make_table(Family::PolyB_B, {0, 65}, {0, 1}), UsageError);
  EXPECT_THROW(make_table(Family::PolyB_B, {0, 2}, {-33, 0}), UsageError);
  EXPECT_THROW(make_table(Family::TildeD, {0, 2}, {0, 1}), UsageError);
  EXPECT_THROW(parse_range("5..2"), UsageError);
  EXPECT_THROW(parse_range("a..2"), UsageError);
  EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Table, RangeParsing) {
  EXPECT_EQ(parse_range("-3..2"), (IndexRange{-3, 2}));
  EXPECT_EQ(parse_range("7"), (IndexRange{7, 7}));
}

TEST(Table, EncodingsRoundTrip) {
  for (Family f : {Family::PolyB_B, Family::PolyB_C, Family::Cosecant, Family::Cotangent}) {
    auto t = make_table(f, {0, 6}, {-3, 3});
    EXPECT_EQ(parse_csv(f, to_csv(t)), t) << family_name(f);
    EXPECT_EQ(parse_json(to_json(t)), t) << family_name(f);
    EXPECT_EQ(parse_latex(to_latex(t)), t) << family_name(f);
  }
  auto tilde = make_table(Family::TildeD, {0, 5}, {-3, 0});
  EXPECT_EQ(parse_latex(to_latex(tilde)), tilde);
}

TEST(Table, Deterministic) {
  auto a = make_table(Family::Cotangent, {0, 8}, {-4, 4});
  auto b = make_table(Family::Cotangent, {0, 8}, {-4, 4});
  for (auto fmt : {TableFormat::csv, TableFormat::json, TableFormat::latex})
    EXPECT_EQ(render(a, fmt), render(b, fmt));
}

TEST(Table, LatexUsesFractions) {
  std::string tex = to_latex(make_table(Family::Cotangent, {4, 4}, {1, 2}));
  EXPECT_NE(tex.find("-\\frac{8}{15}"), std::string::npos) << tex;
  EXPECT_NE(tex.find("\\begin{tabular}"), std::string::npos);
  EXPECT_NE(tex.find("\\end{tabular}"), std::string::npos);
}

TEST(Table, NoFloatingPoint) {
  std::string json = to_json(make_table(Family::Cosecant, {0, 6}, {-2, 3}));
  EXPECT_EQ(json.find('.'), std::string::npos);
  EXPECT_NE(json.find("\"176/225\""), std::string::npos);
}
