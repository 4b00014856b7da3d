// Copyright 2026 The swgeo Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swgeo/measure1d.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace swgeo {
namespace {

// 0.5 uniform(-1, 1) + 0.5 delta_0.2
Measure1D half_atom() {
  return MeasureBuilder().add_uniform(-1.0, 1.0, 0.5).add_atom(0.2, 0.5).build();
}

// Random discrete mixture: a few pieces on a partition plus a few atoms.
Measure1D random_mixture(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> cuts = {-2.0, -1.0 + u(gen), 0.5 + u(gen), 3.0};
  std::vector<double> w(6);
  for (double& x : w) x = 0.1 + u(gen);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  MeasureBuilder b;
  for (int i = 0; i < 3; ++i) b.add_uniform(cuts[i], cuts[i + 1], w[i] / total);
  b.add_atom(-3.0 + 6.0 * u(gen), w[3] / total);
  b.add_atom(cuts[1], w[4] / total);
  b.add_atom(4.0, w[5] / total);
  return b.build();
}

TEST(CdfEval, UniformIsOneHalfAtZero) {
  EXPECT_DOUBLE_EQ(cdf_eval(Measure1D::uniform(-1.0, 1.0), 0.0), 0.5);
}

TEST(CdfEval, AtomIsExcludedAtItsOwnPosition) {
  const Measure1D m = half_atom();
  EXPECT_NEAR(cdf_eval(m, 0.2), 0.3, 1e-15);
  EXPECT_NEAR(cdf_eval(m, 0.2 + 1e-12), 0.8, 1e-12);
  EXPECT_DOUBLE_EQ(m.atom_mass(0.2), 0.5);
}

TEST(CdfEval, ArcsineIsSymmetric) {
  const Measure1D a = Measure1D::arcsine();
  EXPECT_NEAR(cdf_eval(a, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(cdf_eval(a, std::sin(std::numbers::pi / 4)), 0.75, 1e-14);
  EXPECT_DOUBLE_EQ(cdf_eval(a, -1.0), 0.0);
  EXPECT_DOUBLE_EQ(cdf_eval(a, 1.5), 1.0);
}

TEST(Quantile, UniformIsAffine) {
  const QuantileFn q = quantile(Measure1D::uniform(-1.0, 1.0));
  for (int k = 0; k <= 100; ++k) {
    const double s = k / 100.0;
    EXPECT_NEAR(q(s), 2.0 * s - 1.0, 1e-15);
  }
}

TEST(Quantile, AtomBecomesFlatSegment) {
  const QuantileFn q = quantile(half_atom());
  for (double s : {0.0, 0.1, 0.25, 0.29}) EXPECT_NEAR(q(s), -1.0 + 4.0 * s, 1e-14);
  for (double s : {0.3, 0.5, 0.8}) EXPECT_NEAR(q(s), 0.2, 1e-14);
  for (double s : {0.81, 0.9, 1.0}) EXPECT_NEAR(q(s), -1.0 + 4.0 * (s - 0.5), 1e-14);
}

TEST(Quantile, ArcsineCatalogFormula) {
  const QuantileFn q = quantile(Measure1D::arcsine());
  EXPECT_NEAR(q(0.75), 0.7071067811865, 1e-12);
  EXPECT_NEAR(q(0.5), 0.0, 1e-15);
  for (int k = 0; k <= 20; ++k) {
    const double s = k / 20.0;
    EXPECT_NEAR(q(s), std::sin(std::numbers::pi * (s - 0.5)), 1e-14);
  }
}

TEST(Quantile, MixtureWithArcsineInvertsTheCdf) {
  const Measure1D m =
      MeasureBuilder().add_atom(0.0, 0.3).add_arcsine(0.0, 1.0, 0.7).build();
  const QuantileFn q = quantile(m);
  // Below the atom: 0.7 F_arcsine(x) = s.
  EXPECT_NEAR(q(0.2), std::sin(std::numbers::pi * (0.2 / 0.7 - 0.5)), 1e-10);
  EXPECT_NEAR(q(0.5), 0.0, 1e-12);
  EXPECT_NEAR(q(0.9), std::sin(std::numbers::pi * ((0.9 - 0.3) / 0.7 - 0.5)), 1e-10);
}

TEST(Quantile, OverlappingArcsinesPieceAtomAndGap) {
  const Measure1D m = MeasureBuilder()
                          .add_arcsine(0.0, 1.0, 0.3)
                          .add_arcsine(0.5, 1.0, 0.2)
                          .add_uniform(-0.5, 0.25, 0.1)
                          .add_atom(0.8, 0.15)
                          .add_arcsine(3.0, 0.5, 0.25)
                          .build();
  const QuantileFn q = quantile(m);
  auto closed = [&](double x) { return cdf_eval(m, x) + m.atom_mass(x); };
  double previous = -kInfinity;
  for (int k = 1; k < 2000; ++k) {
    const double s = k / 2000.0;
    const double x = q(s);
    const double y = q.left_limit(s);
    EXPECT_GE(y, previous);
    EXPECT_GE(x, y - 1e-12);
    previous = x;
    EXPECT_LE(cdf_eval(m, x), s + 1e-12);
    EXPECT_GT(cdf_eval(m, x + 1e-9), s - 1e-12);
    EXPECT_GE(closed(y), s - 1e-12);
    EXPECT_LT(closed(y - 1e-9), s + 1e-12);
  }
  // The atom at 0.8 is a flat run, the gap (1.5, 2.5) a jump at its level.
  const double below_atom = cdf_eval(m, 0.8);
  EXPECT_DOUBLE_EQ(q(below_atom + 0.05), 0.8);
  EXPECT_DOUBLE_EQ(q(0.75), 2.5);
  EXPECT_NEAR(q.left_limit(0.75), 1.5, 1e-12);
}

TEST(Quantile, RoundTripOnRandomMixtures) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Measure1D m = random_mixture(gen);
    const QuantileFn q = quantile(m);
    const auto breaks = q.breakpoints();
    double previous = -kInfinity;
    for (int k = 0; k <= 1000; ++k) {
      const double s = k / 1000.0;
      const double x = q(s);
      EXPECT_GE(x, previous);
      previous = x;
      EXPECT_LE(cdf_eval(m, x), s + 1e-12);
      bool near_break = false;
      for (const auto& b : breaks) near_break |= std::abs(b.s - s) < 1e-6;
      if (!near_break && s < 1.0) EXPECT_GT(cdf_eval(m, x + 1e-9), s);
    }
  }
}

TEST(Measure1D, CanonicalizesAtomsAndPieces) {
  const Measure1D m({{0.5, 0.1}, {0.5, 0.1}, {-0.5, 0.0}},
                    {{0.0, 1.0, 0.4}, {-1.0, 0.0, 0.4}});
  ASSERT_EQ(m.atoms().size(), 1u);
  EXPECT_DOUBLE_EQ(m.atoms()[0].mass, 0.2);
  // Pieces are split at the interior atom.
  ASSERT_EQ(m.pieces().size(), 2u);
  EXPECT_DOUBLE_EQ(m.pieces()[0].hi, 0.5);
  EXPECT_DOUBLE_EQ(m.pieces()[1].lo, 0.5);
  EXPECT_NEAR(m.total_mass(), 1.0, 1e-15);
}

TEST(Measure1D, RejectsBadMassAndOverlaps) {
  EXPECT_THROW(Measure1D({{0.0, 0.9}}, {}), std::invalid_argument);
  EXPECT_THROW(Measure1D({}, {{0.0, 1.0, 0.5}, {0.5, 1.5, 0.5}}),
               std::invalid_argument);
  EXPECT_THROW(Measure1D({{0.0, -0.1}, {1.0, 1.1}}, {}), std::invalid_argument);
  EXPECT_THROW(Measure1D({}, {{1.0, 0.0, 1.0}}), std::invalid_argument);
  EXPECT_NO_THROW(Measure1D({{0.0, 1.0 + 5e-13}}, {}));
}

TEST(Pushforward, DilationOfUniform) {
  const Measure1D m = pushforward_pwl(Measure1D::uniform(-1.0, 1.0),
                                      PiecewiseLinearMap::affine(2.0, 0.0));
  ASSERT_EQ(m.pieces().size(), 1u);
  EXPECT_DOUBLE_EQ(m.pieces()[0].lo, -2.0);
  EXPECT_DOUBLE_EQ(m.pieces()[0].hi, 2.0);
  EXPECT_DOUBLE_EQ(m.pieces()[0].density, 0.25);
}

TEST(Pushforward, FlatSegmentBecomesAnAtom) {
  // T = 2x + 1 on [-1, -0.5], 0 on [-0.5, 0.5], 2x - 1 on [0.5, 1]
  const PiecewiseLinearMap map({{-1.0, -1.0}, {-0.5, 0.0}, {0.5, 0.0}, {1.0, 1.0}});
  const Measure1D m = pushforward_pwl(Measure1D::uniform(-1.0, 1.0), map);
  const Measure1D expected =
      MeasureBuilder().add_uniform(-1.0, 1.0, 0.5).add_atom(0.0, 0.5).build();
  EXPECT_TRUE(approx_equal(m, expected, 1e-14));
  EXPECT_NEAR(m.total_mass(), 1.0, 1e-12);
}

TEST(Pushforward, IdentityIsExact) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Measure1D m = random_mixture(gen);
    const Measure1D back = pushforward_pwl(m, PiecewiseLinearMap::identity());
    ASSERT_EQ(back.atoms().size(), m.atoms().size());
    ASSERT_EQ(back.pieces().size(), m.pieces().size());
    for (std::size_t i = 0; i < m.atoms().size(); ++i) {
      EXPECT_EQ(back.atoms()[i].position, m.atoms()[i].position);
      EXPECT_NEAR(back.atoms()[i].mass, m.atoms()[i].mass, 1e-15);
    }
    for (std::size_t i = 0; i < m.pieces().size(); ++i) {
      EXPECT_EQ(back.pieces()[i].lo, m.pieces()[i].lo);
      EXPECT_EQ(back.pieces()[i].hi, m.pieces()[i].hi);
      EXPECT_NEAR(back.pieces()[i].density, m.pieces()[i].density, 1e-15);
    }
    EXPECT_NEAR(back.total_mass(), 1.0, 1e-12);
  }
}

TEST(Pushforward, AffineWithNegativeScaleReflects) {
  const Measure1D m = affine_pushforward(half_atom(), -1.0, 1.0);
  EXPECT_DOUBLE_EQ(m.atom_mass(0.8), 0.5);
  EXPECT_NEAR(m.support_min(), 0.0, 1e-15);
  EXPECT_NEAR(m.support_max(), 2.0, 1e-15);
  const Measure1D arc = affine_pushforward(Measure1D::arcsine(), 3.0, 1.0);
  EXPECT_NEAR(cdf_eval(arc, 1.0), 0.5, 1e-15);
  EXPECT_NEAR(arc.support_max(), 4.0, 1e-15);
}

TEST(PiecewiseLinearMap, RejectsDecreasingPoints) {
  EXPECT_THROW(PiecewiseLinearMap({{0.0, 1.0}, {1.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(PiecewiseLinearMap({{0.0, 0.0}, {1.0, 1.0}}, -1.0), std::invalid_argument);
}

TEST(Sample, UniformMeanWithinFourSigma) {
  const std::size_t n = 100000;
  const auto xs = sample(Measure1D::uniform(-1.0, 1.0), n, 3);
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  EXPECT_LT(std::abs(mean), 4.0 * std::sqrt(1.0 / 3.0) / std::sqrt(double(n)));
}

TEST(Sample, DiracIsConstant) {
  for (double x : sample(Measure1D::dirac(0.2), 1000, 5)) EXPECT_EQ(x, 0.2);
}

TEST(Sample, ArcsineEmpiricalCdfAtZero) {
  const std::size_t n = 100000;
  const auto xs = sample(Measure1D::arcsine(), n, 9);
  const double below = std::count_if(xs.begin(), xs.end(), [](double x) { return x < 0; });
  EXPECT_NEAR(below / n, 0.5, 0.01);
}

TEST(Sample, SameSeedSameStream) {
  EXPECT_EQ(sample(half_atom(), 100, 42), sample(half_atom(), 100, 42));
  EXPECT_NE(sample(half_atom(), 100, 42), sample(half_atom(), 100, 43));
}

TEST(TextFormat, RoundTrip) {
  const Measure1D m = MeasureBuilder()
                          .add_uniform(-1.0, 1.0, 0.4)
                          .add_atom(0.2, 0.3)
                          .add_arcsine(2.0, 0.5, 0.3)
                          .build();
  std::ostringstream os;
  write_measure_text(os, m);
  const Measure1D back = parse_measure_text(os.str());
  EXPECT_TRUE(approx_equal(m, back, 1e-15));
  ASSERT_EQ(back.arcsines().size(), 1u);
  EXPECT_DOUBLE_EQ(back.arcsines()[0].half_width, 0.5);
}

TEST(TextFormat, ReportsLineNumbers) {
  try {
    parse_measure_text("# comment\natom 0 0.5\npiece 0 1\n");
    FAIL() << "expected a parse error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_measure_text("blob 1 2\n"), std::runtime_error);
  EXPECT_THROW(read_measure_file("/nonexistent/measure.txt"), std::runtime_error);
}

TEST(TextFormat, ReadsFixture) {
  const Measure1D m = read_measure_file(SWGEO_FIXTURE_DIR "/half_atom.txt");
  EXPECT_TRUE(approx_equal(m, half_atom(), 1e-15));
}

}  // namespace
}  // namespace swgeo
