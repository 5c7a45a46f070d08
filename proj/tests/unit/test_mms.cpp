#include <gtest/gtest.h>

#include <cmath>

#include "mixflow/mms.hpp"

using namespace mixflow;

namespace {

struct SourceCase {
  Frame frame;
  double coord;
  double t;
  std::vector<double> expected;
};

// Evaluated symbolically by tests/oracles/mms_sources.py from the pressure form of
// the continuum equations, independently of the hand-written sources.
const std::vector<SourceCase> frozen{
    {Frame::Eulerian, 0.1, 0.0, {0.76391643342606508, 2.4830122250852535, 1.9462337741435853}},
    {Frame::Eulerian, 0.37, 0.2, {0.026251070316476006, -1.022160922593236, -2.275502915251193}},
    {Frame::Eulerian, 0.8, 0.45, {-0.10661645372568848, 1.4311511479471488, 0.57549270565994848}},
    {Frame::Lagrangian, 0.2, 0.0, {0.78609018403368136, 2.6288559730653942, 2.3212370059932388}},
    {Frame::Lagrangian, 0.74, 0.2, {0.2673131735211659, -1.2128904888173062, -2.5997679514479186}},
    {Frame::Lagrangian, 1.6, 0.45, {-0.075868819383220945, 1.2264705820271034, 0.35481723360184775}},
};

}  // namespace

TEST(MmsSource, MatchesSymbolicOracle) {
  const MixtureParams p = mms::default_params();
  for (const auto& c : frozen) {
    const auto s = mms::source(c.frame, p, c.coord, c.t);
    ASSERT_EQ(s.size(), c.expected.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      EXPECT_NEAR(s[i], c.expected[i], 1e-12 * (1.0 + std::abs(c.expected[i])))
          << to_string(c.frame) << " x=" << c.coord << " t=" << c.t << " i=" << i;
  }
}

TEST(MmsExact, WallsAndShape) {
  for (Frame f : {Frame::Eulerian, Frame::Lagrangian}) {
    const State s = mms::exact_state(f, 32, 3, 0.3);
    EXPECT_EQ(s.frame, f);
    EXPECT_EQ(s.velocity.size(), 3u);
    EXPECT_DOUBLE_EQ(s.grid.length, f == Frame::Eulerian ? 1.0 : mms::mms_mass_length);
    for (const auto& u : s.velocity) {
      EXPECT_NEAR(u.front(), 0.0, 1e-15);
      EXPECT_NEAR(u.back(), 0.0, 1e-15);
    }
    for (double r : s.rho) EXPECT_GE(r, 1.5);
  }
  EXPECT_DOUBLE_EQ(mms::amplitude(0), 0.5);
  EXPECT_DOUBLE_EQ(mms::amplitude(1), -0.3);
}

TEST(MmsOrder, ObservedOrderOfPowerLaw) {
  const std::vector<double> h{0.1, 0.05, 0.025};
  EXPECT_NEAR(mms::observed_order(h, {3e-2, 7.5e-3, 1.875e-3}), 2.0, 1e-12);
  EXPECT_NEAR(mms::observed_order(h, {1.0, 0.5, 0.25}), 1.0, 1e-12);
}

TEST(MmsStudy, CentralEulerianReachesDesignOrder) {
  SchemeConfig cfg;
  cfg.advection = Advection::Central2;
  const auto st = mms::mms_study(mms::default_params(), cfg, Frame::Eulerian, {16, 32, 64}, 0.1);
  EXPECT_EQ(st.design_order, 2.0);
  ASSERT_EQ(st.levels.size(), 3u);
  EXPECT_GT(st.levels[0].error, st.levels[2].error);
  EXPECT_GE(st.order, 1.7);
  EXPECT_TRUE(st.pass);
  EXPECT_NE(mms::to_table(st).find("64"), std::string::npos);
}

TEST(MmsStudy, UpwindDesignOrderIsOne) {
  const auto st = mms::mms_study(mms::default_params(), SchemeConfig{}, Frame::Lagrangian, {16, 32}, 0.05);
  EXPECT_EQ(st.design_order, 1.0);
}
