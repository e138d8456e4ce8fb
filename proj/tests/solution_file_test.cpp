#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/metriclang/solution_file.hpp"

namespace {

using namespace lambdavac;
using metriclang::parse_solution_file;
using sym::Number;

constexpr const char* kAnsatz =
    "# space-periodic\n"
    "coords t x y z\n"
    "param Lambda = 1/2\n"
    "param m = 2\n"
    "a = 2 + cos(x)\n";

std::string validation_message(const std::string& text) {
  try {
    (void)parse_solution_file(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "<no error>";
}

TEST(SolutionFile, AnsatzMode) {
  const auto spec = parse_solution_file(kAnsatz);
  ASSERT_TRUE(spec.is_ansatz());
  const auto& mode = std::get<metriclang::AnsatzMode>(spec.mode);
  EXPECT_EQ(mode.lambda, Number::rational(1, 2));
  EXPECT_EQ(mode.m, Number(2));
  EXPECT_EQ(mode.a, metriclang::parse_expression("2 + cos(x)"));
  EXPECT_TRUE(spec.warnings.empty());
}

TEST(SolutionFile, CrlfMatchesLf) {
  std::string crlf;
  for (char c : std::string(kAnsatz)) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  const auto a = parse_solution_file(kAnsatz);
  const auto b = parse_solution_file(crlf);
  EXPECT_EQ(metriclang::serialize_solution(a), metriclang::serialize_solution(b));
}

TEST(SolutionFile, ParametersAreSubstituted) {
  const auto spec = parse_solution_file("coords t x y z\nparam Lambda = 3\nparam m = 1\na = 2 + sin(Lambda*t/6)\n");
  const auto& mode = std::get<metriclang::AnsatzMode>(spec.mode);
  EXPECT_EQ(mode.a, metriclang::parse_expression("2 + sin(t/2)"));
}

TEST(SolutionFile, OverridesReplaceParams) {
  const auto spec = parse_solution_file(kAnsatz, {{"Lambda", Number(2)}, {"m", Number::rational(3, 10)}});
  const auto& mode = std::get<metriclang::AnsatzMode>(spec.mode);
  EXPECT_EQ(mode.lambda, Number(2));
  EXPECT_EQ(mode.m, Number::rational(3, 10));
  ASSERT_EQ(spec.warnings.size(), 1u);
  EXPECT_NE(spec.warnings[0].find("not a positive integer"), std::string::npos);
}

TEST(SolutionFile, MassWarnings) {
  const auto spec = parse_solution_file("coords t x y z\nparam Lambda = 1\nparam m = 0\na = 2/(x + sin(t))\n");
  ASSERT_EQ(spec.warnings.size(), 1u);
  EXPECT_NE(spec.warnings[0].find("conformally flat"), std::string::npos);
}

TEST(SolutionFile, ExplicitMode) {
  const auto spec = parse_solution_file(
      "coords u v y z\n"
      "g 0 0 = 0\ng 0 1 = 1\ng 0 2 = 0\ng 0 3 = 0\ng 1 1 = 0\n"
      "g 1 2 = 0\ng 1 3 = 0\ng 2 2 = -1\ng 2 3 = 0\ng 3 3 = -1\n");
  ASSERT_FALSE(spec.is_ansatz());
  const auto& c = std::get<metriclang::ExplicitMode>(spec.mode).components;
  EXPECT_TRUE(c[metriclang::upper_index(0, 1)].is_one());
  EXPECT_EQ(c[metriclang::upper_index(3, 3)], sym::Expression(-1));
  EXPECT_EQ(spec.coords[0], "u");
}

TEST(SolutionFile, UpperIndexIsRowMajor) {
  EXPECT_EQ(metriclang::upper_index(0, 0), 0u);
  EXPECT_EQ(metriclang::upper_index(0, 3), 3u);
  EXPECT_EQ(metriclang::upper_index(1, 1), 4u);
  EXPECT_EQ(metriclang::upper_index(2, 3), 8u);
  EXPECT_EQ(metriclang::upper_index(3, 3), 9u);
}

TEST(SolutionFile, Validation) {
  EXPECT_NE(validation_message("param Lambda = 1\nparam m = 1\na = x\n").find("missing coords line"),
            std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\nparam m = 1\na = x\n").find("Lambda is required"), std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\nparam Lambda = 1\nparam m = -1\na = x\n").find("m must be >= 0"),
            std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\nparam Lambda = 1\nparam m = 1\na = x + y\n").find("line 4"),
            std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\nparam Lambda = 1\nparam m = 1\na = q\n").find("unknown symbol 'q'"),
            std::string::npos);
  EXPECT_NE(validation_message("coords t x y\n").find("line 1"), std::string::npos);
  EXPECT_NE(validation_message("coords t x x z\n").find("duplicate coordinate"), std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\nparam Lambda = x\n").find("must be a number"), std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\ng 0 0 = 1\n").find("1 of 10"), std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\ng 0 4 = 1\n").find("indices 0..3"), std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\nbogus\n").find("line 2"), std::string::npos);
  EXPECT_NE(validation_message("coords t x y z\n").find("no metric given"), std::string::npos);
}

TEST(SolutionFile, SyntaxErrorsNameTheLine) {
  try {
    (void)parse_solution_file("coords t x y z\nparam Lambda = 1\nparam m = 1\na = 2 + \n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(SolutionFile, SerializeRoundTrip) {
  const auto spec = parse_solution_file(kAnsatz);
  const std::string text = metriclang::serialize_solution(spec);
  EXPECT_EQ(metriclang::serialize_solution(parse_solution_file(text)), text);
}

TEST(SolutionFile, ShippedFilesParse) {
  for (const char* name : {"space_periodic", "regular_periodic", "singular_periodic", "conformal_flat",
                           "lambda_zero", "minkowski", "null_flat"}) {
    std::ifstream f(std::string(LAMBDAVAC_DATA_DIR) + "/metrics/" + name + ".metric");
    ASSERT_TRUE(f) << name;
    std::stringstream s;
    s << f.rdbuf();
    EXPECT_NO_THROW((void)parse_solution_file(s.str())) << name;
  }
}

}  // namespace
