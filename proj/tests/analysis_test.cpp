#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <sstream>

#include "lambdavac/analysis/grid.hpp"
#include "lambdavac/ansatz/catalog.hpp"
#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace {

using namespace lambdavac;
using analysis::Grid2D;
using sym::Expression;

Expression P(const char* text) { return metriclang::parse_expression(text); }

TEST(Grid, Parse) {
  const Grid2D g = Grid2D::parse("0:1:11,-pi:pi/2:4");
  EXPECT_DOUBLE_EQ(g.t1, 1.0);
  EXPECT_EQ(g.nt, 11u);
  EXPECT_DOUBLE_EQ(g.x0, -M_PI);
  EXPECT_DOUBLE_EQ(g.x(3), M_PI / 2);
  EXPECT_DOUBLE_EQ(g.t(10), 1.0);
  EXPECT_DOUBLE_EQ(g.dt(), 0.1);
  EXPECT_EQ(g.size(), 44u);
  EXPECT_EQ(g.index(2, 3), 11u);
}

TEST(Grid, ParseRejectsBadSpecs) {
  for (const char* bad : {"0:1:10", "0:1:1,0:1:5", "1:0:5,0:1:5", "0:1:5,0:1", "0:1:x,0:1:5", "0:1:2.5,0:1:5",
                          "0:q:5,0:1:5"}) {
    EXPECT_THROW((void)Grid2D::parse(bad), std::exception) << bad;
  }
}

TEST(Grid, ParallelForCoversRangeOnce) {
  std::vector<std::atomic<int>> hits(1000);
  analysis::parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) hits[k]++;
  });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(SignMap, MatchesClosedForm) {
  const auto sol = ansatz::builtin("singular_periodic", 1, 1);
  const Grid2D grid = Grid2D::parse("0.1:12:37,-3:3:41");
  const auto report = analysis::g00_sign_map(sol, grid);
  ASSERT_EQ(report.values.size(), grid.size());
  EXPECT_EQ(report.field, "sign_g00");
  for (std::size_t i = 0; i < grid.nt; ++i) {
    for (std::size_t j = 0; j < grid.nx; ++j) {
      const double t = grid.t(i), x = grid.x(j);
      const double a = std::cos(x) * std::sin(t / 6);
      const double g00 = std::cos(x) * std::cos(t / 6) / 3 + a * a / 3 + 1 / a;
      const double v = report.at(i, j);
      if (std::isnan(v)) continue;
      EXPECT_EQ(v, g00 > 0 ? 1.0 : -1.0) << t << ", " << x;
    }
  }
}

TEST(SignMap, UndefinedWhereAVanishes) {
  const auto sol = ansatz::builtin("singular_periodic", 1, 1);
  const auto report = analysis::g00_sign_map(sol, Grid2D::parse("0:1:2,-1:1:3"));
  EXPECT_TRUE(std::isnan(report.at(0, 1)));  // t = 0
  EXPECT_EQ(report.undefined_count(), 3u);
}

TEST(NullField, MatchesClosedForm) {
  const auto sol = ansatz::builtin("space_periodic", 1, 1);
  const Grid2D grid = Grid2D::parse("0:1:2,-3:3:61");
  const auto report = analysis::null_slope_field(sol, grid);
  EXPECT_EQ(report.field, "slope_dt_dx");
  for (std::size_t j = 0; j < grid.nx; ++j) {
    const double x = grid.x(j), a = 2 + std::cos(x);
    EXPECT_NEAR(report.at(1, j), 6 * std::sin(x) * a / (a * a * a + 3), 1e-13);
  }
  EXPECT_TRUE(sym::is_zero_identity(analysis::null_slope(sol.metric) - P("6*sin(x)*(2 + cos(x))/((2 + cos(x))^3 + 3)")));
}

TEST(Singularities, SpacePeriodicHasNone) {
  const auto loci = analysis::singularity_scan(ansatz::builtin("space_periodic", 1, 1), Grid2D::parse("0:10:50,-pi:pi:51"));
  EXPECT_EQ(loci.count(analysis::Locus::Kind::kPhysical), 0u);
  EXPECT_GT(loci.count(analysis::Locus::Kind::kChart), 0u);  // sin x = 0
}

TEST(Singularities, SingularPeriodicPeaksNearZerosOfA) {
  const auto sol = ansatz::builtin("singular_periodic", 1, 1);
  const Grid2D grid = Grid2D::parse("1:20:200,-2:2:200");
  const auto loci = analysis::singularity_scan(sol, grid);
  ASSERT_GT(loci.count(analysis::Locus::Kind::kPhysical), 0u);
  for (const auto& l : loci.loci) {
    if (l.kind != analysis::Locus::Kind::kPhysical) continue;
    const bool near_x = std::abs(std::abs(l.x) - M_PI / 2) <= grid.dx();
    const bool near_t = std::abs(l.t - 6 * M_PI) <= grid.dt();
    EXPECT_TRUE(near_x || near_t) << l.t << ", " << l.x;
    EXPECT_GT(l.value, loci.k_threshold);
  }
}

TEST(Singularities, ThresholdsAreRespected) {
  const auto sol = ansatz::builtin("singular_periodic", 1, 1);
  const Grid2D grid = Grid2D::parse("1:20:200,-2:2:200");
  const auto loose = analysis::singularity_scan(sol, grid, 1e3);
  const auto strict = analysis::singularity_scan(sol, grid, 1e12);
  EXPECT_GE(loose.count(analysis::Locus::Kind::kPhysical), strict.count(analysis::Locus::Kind::kPhysical));
  for (const auto& l : strict.loci) {
    if (l.kind == analysis::Locus::Kind::kPhysical) EXPECT_GT(l.value, 1e12);
  }
}

TEST(Slice, TimeSliceOfSpacePeriodic) {
  const auto sol = ansatz::builtin("space_periodic", 1, 1);
  const auto slice = analysis::induced_slice(sol, {{"t", Expression(0)}});
  EXPECT_EQ(slice.coords(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_TRUE(slice(0, 0).is_zero());
  EXPECT_TRUE(sym::is_zero_identity(slice(1, 1) + P("(2 + cos(x))^2")));
  EXPECT_THROW((void)analysis::induced_slice(sol, {{"w", Expression(0)}}), ValidationError);
  EXPECT_THROW((void)analysis::induced_slice(sol, {}), ValidationError);
}

TEST(Slice, FixedXKeepsTimeComponent) {
  const auto sol = ansatz::builtin("singular_periodic", 1, 1);
  const auto slice = analysis::induced_slice(sol, {{"x", Expression(0)}});
  EXPECT_TRUE(sym::is_zero_identity(slice(0, 0) - sym::substitute(sol.b, "x", Expression(0))));
  EXPECT_TRUE(sym::is_zero_identity(slice(1, 1) + P("sin(t/6)^2")));
}

TEST(Csv, Layout) {
  const auto sol = ansatz::builtin("singular_periodic", 1, 1);
  const auto report = analysis::g00_sign_map(sol, Grid2D::parse("0:1:2,0:0.5:2"));
  std::ostringstream s;
  analysis::write_csv(s, report);
  EXPECT_EQ(s.str(), "t,x,sign_g00\n0,0,nan\n0,0.5,nan\n1,0,1\n1,0.5,1\n");
}

}  // namespace
