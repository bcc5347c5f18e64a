#include <gtest/gtest.h>

#include <random>

#include "coxwalls/errors.hpp"
#include "coxwalls/systems.hpp"
#include "coxwalls/tracking.hpp"
#include "support/oracles.hpp"

namespace coxwalls {
namespace {

Wall wall(const CoxeterSystem& sys, std::string_view r) { return wall_from_reflection(sys, normal_form(sys, r)); }
Element el(const CoxeterSystem& sys, std::string_view w) { return normal_form(sys, w); }
EdgePath path(const CoxeterSystem& sys, std::string_view letters, std::string_view start = "") {
  return make_path(sys, start, letters);
}

// Smallest tracking distance achievable by any geodesic between p's endpoints.
std::size_t best_possible_tracking(const CoxeterSystem& sys, const EdgePath& p) {
  const Element step = multiply(sys, inverse(sys, p.start), end_vertex(sys, p));
  std::size_t best = SIZE_MAX;
  for (const Word& w : all_reduced_words(sys, step)) {
    best = std::min(best, tracking_distance(sys, p, EdgePath{p.start, w}));
  }
  return best;
}

TEST(Tracking, ProjectionExamples) {
  const auto comm = systems::dihedral(2);
  const auto on = project_vertex(comm, Element(), el(comm, "st"), el(comm, "s"));
  EXPECT_EQ(on.projected, el(comm, "s"));
  EXPECT_EQ(on.steps, 0u);
  EXPECT_TRUE(on.reflections_used.empty());

  const auto moved = project_vertex(comm, Element(), el(comm, "t"), el(comm, "s"));
  EXPECT_EQ(moved.projected, Element());
  EXPECT_EQ(moved.reflections_used, std::vector<Wall>{wall(comm, "s")});
  EXPECT_EQ(moved.steps, 1u);

  const auto dinf = systems::infinite_dihedral();
  const auto d = project_vertex(dinf, Element(), el(dinf, "ts"), el(dinf, "s"));
  EXPECT_EQ(d.projected, Element());
  EXPECT_EQ(d.reflections_used, std::vector<Wall>{wall(dinf, "s")});
}

TEST(Tracking, ApproximationExamples) {
  const auto dinf = systems::infinite_dihedral();
  const auto geo = geodesic_approximation(dinf, path(dinf, "tsts"));
  EXPECT_EQ(geo.approx, path(dinf, "tsts"));
  EXPECT_EQ(geo.L_achieved, 0u);

  const auto comm = systems::dihedral(2);
  const auto a = geodesic_approximation(comm, path(comm, "sts"));
  EXPECT_LE(a.L_achieved, 1u);
  EXPECT_EQ(end_vertex(comm, a.approx), el(comm, "t"));

  const auto grid = systems::grid();
  const auto g = geodesic_approximation(grid, path(grid, "aca"));
  EXPECT_LE(g.L_achieved, 1u);
  for (const Element& v : vertices(grid, g.approx)) EXPECT_EQ(defect(grid, Element(), v, el(grid, "c")), 0u);
  EXPECT_EQ(g.segment_boundaries.size(), 4u);
  EXPECT_EQ(g.segment_boundaries.back(), g.approx.size());
}

TEST(Tracking, StraightenExamples) {
  const auto dinf = systems::infinite_dihedral();
  const auto geo = straighten(dinf, path(dinf, "tst"));
  EXPECT_EQ(geo.geodesic, path(dinf, "tst"));
  EXPECT_EQ(geo.K_achieved, 0u);

  const auto comm = systems::dihedral(2);
  const auto s = straighten(comm, path(comm, "sts"));
  EXPECT_EQ(s.geodesic, path(comm, "t"));
  EXPECT_EQ(s.K_achieved, 1u);
  EXPECT_EQ(s.K_achieved, best_possible_tracking(comm, path(comm, "sts")));

  const auto grid = systems::grid();
  const auto g = straighten(grid, path(grid, "aca"));
  EXPECT_EQ(g.geodesic, path(grid, "c"));
  EXPECT_EQ(g.K_achieved, 1u);
}

TEST(Tracking, StraightenClosedPathIsEmpty) {
  const auto dinf = systems::infinite_dihedral();
  const auto r = straighten(dinf, path(dinf, "stts", "t"));
  EXPECT_EQ(r.geodesic, path(dinf, "", "t"));
  EXPECT_EQ(r.K_achieved, 2u);
}

TEST(Tracking, StraightenUsesSplicesOnRecrossedChains) {
  // Right, up, left, right in the grid recrosses the vertical wall; the
  // recrossing stretch is replaced by a geodesic.
  const auto grid = systems::grid();
  const EdgePath p = path(grid, "acab");
  const auto r = straighten(grid, p);
  EXPECT_TRUE(is_geodesic(grid, r.geodesic));
  EXPECT_EQ(end_vertex(grid, r.geodesic), end_vertex(grid, p));
}

TEST(Tracking, StraightenRespectsDepthCap) {
  Limits limits;
  limits.recursion_depth = 0;
  const auto grid = systems::grid().with_limits(limits);
  // Needs one recursive splice: the geodesic approximation of this path
  // recrosses a wall of one chain.
  bool capped = false;
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200 && !capped; ++trial) {
    try {
      straighten(grid, testing::random_path(grid, rng, 14));
    } catch (const CapExceeded&) {
      capped = true;
    }
  }
  EXPECT_TRUE(capped);
}

TEST(Tracking, StraightenAgainstBruteForce) {
  std::mt19937_64 rng(21);
  for (const auto& [name, sys] : testing::standard_systems()) {
    for (int trial = 0; trial < 60; ++trial) {
      const EdgePath p = testing::random_path(sys, rng, 10);
      const auto r = straighten(sys, p);
      ASSERT_TRUE(is_geodesic(sys, r.geodesic)) << name;
      ASSERT_EQ(r.geodesic.start, p.start);
      ASSERT_EQ(end_vertex(sys, r.geodesic), end_vertex(sys, p));
      EXPECT_EQ(r.K_achieved, tracking_distance(sys, p, r.geodesic));
      EXPECT_GE(r.K_achieved, best_possible_tracking(sys, p)) << name;
    }
  }
}

TEST(Tracking, DoubleTrackingBoundValues) {
  EXPECT_EQ(double_tracking_bound(1, 0, 0), Rational(1));
  EXPECT_EQ(double_tracking_bound(1, 0, 2), Rational(7));
  EXPECT_EQ(double_tracking_bound(2, 3, 1), Rational(10));
  EXPECT_EQ(double_tracking_bound(Rational(3, 2), Rational(1, 2), 1), Rational(6));
}

TEST(Tracking, CorrespondenceExamples) {
  const auto dinf = systems::infinite_dihedral();
  const EdgePath p = path(dinf, "stst");
  const auto same = std::get<CorrespondenceReport>(tracking_correspondence(dinf, p, p, 0, {1, 0}));
  EXPECT_EQ(same.a_of, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(same.reverse_distance, 0u);
  EXPECT_TRUE(same.bound_holds);

  const auto comm = systems::dihedral(2);
  const auto r = std::get<CorrespondenceReport>(
      tracking_correspondence(comm, path(comm, "t"), path(comm, "sts"), 0, {1, 0}));
  EXPECT_EQ(r.a_of, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(r.reverse_distance, 1u);
  EXPECT_TRUE(r.bound_holds);

  const auto bad = tracking_correspondence(dinf, p, reverse(dinf, p), 0, {1, 0});
  ASSERT_TRUE(std::holds_alternative<Infeasible>(bad));
  EXPECT_EQ(std::get<Infeasible>(bad).vertex, 0u);
}

TEST(Tracking, PeriodicPathExamples) {
  const auto dinf = systems::infinite_dihedral();
  EXPECT_EQ(periodic_path(dinf, el(dinf, "st"), 0), path(dinf, ""));
  const EdgePath p = periodic_path(dinf, el(dinf, "st"), 3);
  EXPECT_EQ(p, path(dinf, "ststst"));
  EXPECT_TRUE(is_geodesic(dinf, p));
  EXPECT_THROW(periodic_path(dinf, Element(), 2), InvalidInput);

  const auto grid = systems::grid();
  const EdgePath g = periodic_path(grid, el(grid, "abcd"), 2);
  EXPECT_EQ(g, path(grid, "abcdabcd"));
  const Rational eps = minimal_epsilon(grid, g, 1);
  EXPECT_TRUE(is_quasi_geodesic(grid, g, {1, eps}).ok);
}

TEST(Tracking, SpiralShape) {
  const auto grid = systems::grid();
  const auto arms = spiral_arm_lengths({1, 4.0, 1.7});
  EXPECT_EQ(arms, (std::vector<std::size_t>{7, 8, 9, 10}));
  const EdgePath one = spiral_path(grid, {1, 4.0, 1.7});
  EXPECT_EQ(one.size(), 34u);
  // Arms alternate the generators of one factor, so every arm is a geodesic.
  std::size_t offset = 0;
  for (std::size_t len : arms) {
    EXPECT_TRUE(is_geodesic(grid, subpath(grid, one, offset, offset + len)));
    offset += len;
  }
  EXPECT_THROW(spiral_path(grid, {0, 4.0, 1.7}), InvalidInput);
  EXPECT_THROW(spiral_path(systems::affine_a2(), {1, 4.0, 1.7}), InvalidInput);
}

TEST(Tracking, SpiralEpsilonMatchesPairOracle) {
  const auto grid = systems::grid();
  const EdgePath p = spiral_path(grid, {1, 4.0, 1.7});
  const auto vs = vertices(grid, p);
  std::vector<std::vector<std::size_t>> d(vs.size(), std::vector<std::size_t>(vs.size()));
  for (std::size_t s = 0; s < vs.size(); ++s) {
    for (std::size_t t = s + 1; t < vs.size(); ++t) d[s][t] = testing::oracle_distance(grid, vs[s].word(), vs[t].word());
  }
  for (int lambda : {1, 2, 3}) {
    Rational worst(0);
    for (std::size_t s = 0; s < vs.size(); ++s) {
      for (std::size_t t = s + 1; t < vs.size(); ++t) {
        const Rational excess =
            Rational(static_cast<std::int64_t>(t - s)) - Rational(lambda) * Rational(static_cast<std::int64_t>(d[s][t]));
        worst = std::max(worst, excess);
      }
    }
    EXPECT_EQ(minimal_epsilon(grid, p, lambda), worst) << lambda;
  }
}

}  // namespace
}  // namespace coxwalls
