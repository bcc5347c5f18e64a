#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "coxwalls/errors.hpp"
#include "coxwalls/systems.hpp"
#include "coxwalls/walls.hpp"
#include "support/oracles.hpp"

namespace coxwalls {
namespace {

Wall wall(const CoxeterSystem& sys, std::string_view r) { return wall_from_reflection(sys, normal_form(sys, r)); }
Element el(const CoxeterSystem& sys, std::string_view w) { return normal_form(sys, w); }

TEST(Walls, EdgeWallExamples) {
  const auto dinf = systems::infinite_dihedral();
  EXPECT_EQ(edge_wall(dinf, Element(), 0), wall(dinf, "s"));
  EXPECT_EQ(edge_wall(dinf, el(dinf, "t"), 0), wall(dinf, "tst"));
  const auto comm = systems::dihedral(2);
  EXPECT_EQ(edge_wall(comm, el(comm, "st"), 0), wall(comm, "s"));
}

TEST(Walls, RejectsNonReflections) {
  const auto dinf = systems::infinite_dihedral();
  EXPECT_THROW(wall(dinf, "st"), InvalidInput);
  EXPECT_THROW(wall(dinf, ""), InvalidInput);
  const auto a2 = systems::dihedral(3);
  EXPECT_NO_THROW(wall(a2, "sts"));
}

TEST(Walls, SideExamples) {
  const auto dinf = systems::infinite_dihedral();
  const Wall s = wall(dinf, "s");
  EXPECT_EQ(side_of(dinf, s, Element()), Side::IdentitySide);
  EXPECT_EQ(side_of(dinf, s, el(dinf, "s")), Side::FarSide);
  EXPECT_EQ(side_of(dinf, s, el(dinf, "ts")), Side::IdentitySide);
}

TEST(Walls, SeparationExamples) {
  const auto dinf = systems::infinite_dihedral();
  EXPECT_TRUE(separates(dinf, wall(dinf, "s"), Element(), el(dinf, "s")));
  EXPECT_FALSE(separates(dinf, wall(dinf, "s"), Element(), el(dinf, "ts")));
  EXPECT_TRUE(separates(dinf, wall(dinf, "tst"), Element(), el(dinf, "ts")));
  EXPECT_EQ(walls_separating(dinf, Element(), el(dinf, "s")), std::vector<Wall>{wall(dinf, "s")});
  EXPECT_EQ(walls_separating(dinf, Element(), el(dinf, "ts")), (std::vector<Wall>{wall(dinf, "t"), wall(dinf, "tst")}));

  const auto grid = systems::grid();
  auto ws = walls_separating(grid, Element(), el(grid, "ac"));
  std::sort(ws.begin(), ws.end());
  EXPECT_EQ(ws, (std::vector<Wall>{wall(grid, "a"), wall(grid, "c")}));
}

TEST(Walls, CrossingExamples) {
  const auto comm = systems::dihedral(2);
  EXPECT_EQ(crosses(comm, wall(comm, "s"), wall(comm, "t")), Crossing::Cross);
  const auto dinf = systems::infinite_dihedral();
  EXPECT_EQ(crosses(dinf, wall(dinf, "s"), wall(dinf, "t")), Crossing::Parallel);
  EXPECT_EQ(crosses(dinf, wall(dinf, "s"), wall(dinf, "tst")), Crossing::Parallel);
  // Affine walls meet at infinity: |cos| is exactly 1.
  EXPECT_NEAR(std::fabs(root_cosine(dinf, wall(dinf, "s"), wall(dinf, "tst"))), 1.0L, 1e-12L);
  EXPECT_THROW(crosses(dinf, wall(dinf, "s"), wall(dinf, "s")), InvalidInput);
}

TEST(Walls, LowOrderCapIsUndetermined) {
  // A2's walls s and t cross with (st)^3 = 1; a cap of 2 cannot see it.
  const auto a2 = systems::dihedral(3);
  EXPECT_EQ(crosses(a2, wall(a2, "s"), wall(a2, "t"), 2), Crossing::Undetermined);
  EXPECT_EQ(crosses(a2, wall(a2, "s"), wall(a2, "t")), Crossing::Cross);
}

TEST(Walls, SupportExamples) {
  const auto dinf = systems::infinite_dihedral();
  EXPECT_EQ(wall_support_in_ball(dinf, wall(dinf, "s"), 1), (std::vector<Element>{Element(), el(dinf, "s")}));
  EXPECT_EQ(wall_distance(dinf, el(dinf, "t"), wall(dinf, "s"), 3), std::optional<std::size_t>(1));
  const auto comm = systems::dihedral(2);
  EXPECT_EQ(wall_support_in_ball(comm, wall(comm, "s"), 2),
            (std::vector<Element>{Element(), el(comm, "s"), el(comm, "t"), el(comm, "st")}));
  const auto [u, t] = support_edge(dinf, wall(dinf, "tst"));
  EXPECT_EQ(edge_wall(dinf, u, t), wall(dinf, "tst"));
}

TEST(Walls, ChainOrderExamples) {
  const auto dinf = systems::infinite_dihedral();
  EXPECT_TRUE(chain_leq(dinf, wall(dinf, "t"), wall(dinf, "tst"), Element()));
  EXPECT_FALSE(chain_leq(dinf, wall(dinf, "tst"), wall(dinf, "t"), Element()));
  EXPECT_TRUE(chain_leq(dinf, wall(dinf, "s"), wall(dinf, "s"), Element()));
  const auto grid = systems::grid();
  EXPECT_FALSE(chain_leq(grid, wall(grid, "a"), wall(grid, "c"), Element()));
}

TEST(Walls, DilworthExamples) {
  const auto dinf = systems::infinite_dihedral();
  EXPECT_EQ(dilworth_partition(dinf, Element(), el(dinf, "s")).chains.size(), 1u);
  const auto three = dilworth_partition(dinf, Element(), el(dinf, "tst"));
  ASSERT_EQ(three.chains.size(), 1u);
  EXPECT_EQ(three.chains[0].size(), 3u);

  const auto grid = systems::grid();
  const auto two = dilworth_partition(grid, Element(), el(grid, "ac"));
  ASSERT_EQ(two.chains.size(), 2u);
  EXPECT_EQ(two.chains[0], std::vector<Wall>{wall(grid, "a")});
  EXPECT_EQ(two.chains[1], std::vector<Wall>{wall(grid, "c")});
}

TEST(Walls, AntichainExamples) {
  const auto dinf = systems::infinite_dihedral();
  const auto parallel = walls_separating(dinf, Element(), el(dinf, "ststs"));
  EXPECT_EQ(max_antichain(dinf, parallel), 1u);
  const auto grid = systems::grid();
  EXPECT_EQ(max_antichain(grid, walls_separating(grid, Element(), el(grid, "ac"))), 2u);
  const auto cube = systems::right_angled_finite(3);
  EXPECT_EQ(max_antichain(cube, walls_separating(cube, Element(), el(cube, "stu"))), 3u);
}

TEST(Walls, ParallelWallEstimates) {
  for (const auto& [name, sys] : testing::standard_systems()) {
    EXPECT_LE(estimate_parallel_wall_constant(sys, 1, 1).estimate, 2u) << name;
    for (std::size_t r = 1; r <= 5; ++r) {
      EXPECT_LE(estimate_parallel_wall_constant(sys, 1, r).estimate, r + 1) << name;
    }
  }
  // Values found by the exhaustive radius-6 search.
  EXPECT_EQ(estimate_parallel_wall_constant(systems::infinite_dihedral(), 1, 6).estimate, 1u);
  EXPECT_EQ(estimate_parallel_wall_constant(systems::affine_a2(), 1, 6).estimate, 2u);
  EXPECT_EQ(estimate_parallel_wall_constant(systems::grid(), 1, 6).estimate, 1u);
}

TEST(Walls, SidesMatchBraidOracle) {
  for (const auto& [name, sys] : testing::standard_systems()) {
    const auto vertices = ball(sys, 4);
    const auto supports = wall_supports(sys, ball(sys, 2));
    for (const auto& [q, support] : supports) {
      for (const Element& v : vertices) {
        const bool identity_side = testing::oracle_identity_side(sys, q.reflection().word(), v.word());
        EXPECT_EQ(side_of(sys, q, v) == Side::IdentitySide, identity_side) << name;
        EXPECT_NE(side_of(sys, q, v), side_of(sys, q, multiply(sys, q.reflection(), v))) << name;
      }
    }
  }
}

TEST(Walls, SeparatingMatchesBraidOracle) {
  for (const auto& [name, sys] : testing::standard_systems()) {
    for (const Element& w : ball(sys, 5)) {
      std::set<Word> got;
      for (const Wall& q : walls_separating(sys, Element(), w)) got.insert(q.reflection().word());
      EXPECT_EQ(got, testing::oracle_separating_from_identity(sys, w.word())) << name << " " << sys.format(w.word());
    }
  }
}

TEST(Walls, CrossingMatchesQuadrantOracle) {
  // Walls through the radius-2 ball of a Euclidean or finite system that
  // cross do so within the radius-8 ball; parallel walls never show four
  // quadrants anywhere.
  for (const auto& [name, sys] : testing::standard_systems()) {
    const auto region = testing::bfs_ball(sys, 8);
    std::vector<Wall> walls;
    for (const auto& [q, support] : wall_supports(sys, ball(sys, 2))) walls.push_back(q);
    for (std::size_t i = 0; i < walls.size(); ++i) {
      for (std::size_t j = i + 1; j < walls.size(); ++j) {
        const Crossing verdict = crosses(sys, walls[i], walls[j]);
        ASSERT_NE(verdict, Crossing::Undetermined) << name;
        EXPECT_EQ(crosses(sys, walls[j], walls[i]), verdict);
        const bool quadrants = testing::oracle_quadrants_meet(sys, walls[i].reflection().word(),
                                                              walls[j].reflection().word(), region);
        EXPECT_EQ(verdict == Crossing::Cross, quadrants) << name << " " << sys.format(walls[i].reflection().word())
                                                         << " / " << sys.format(walls[j].reflection().word());
      }
    }
  }
}

TEST(Walls, ChainOrderIsAPartialOrderAndDilworthIsOptimal) {
  std::mt19937_64 rng(3);
  for (const auto& [name, sys] : testing::standard_systems()) {
    const auto elements = ball(sys, 6);
    for (int trial = 0; trial < 40; ++trial) {
      const Element& a = elements[rng() % elements.size()];
      const Element& b = elements[rng() % elements.size()];
      const auto walls = walls_separating(sys, a, b);
      const std::size_t n = walls.size();
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n)), cross(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          leq[i][j] = chain_leq(sys, walls[i], walls[j], a);
          cross[i][j] = i != j && crosses(sys, walls[i], walls[j]) == Crossing::Cross;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(leq[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) {
            EXPECT_FALSE(leq[i][j] && leq[j][i]) << name;
            EXPECT_EQ(!leq[i][j] && !leq[j][i], cross[i][j]) << name;
            // Walls come in crossing order, so the chain order refines index order.
            if (leq[i][j]) EXPECT_LT(i, j);
          }
          for (std::size_t k = 0; k < n; ++k) {
            if (leq[i][j] && leq[j][k]) EXPECT_TRUE(leq[i][k]) << name;
          }
        }
      }
      const auto partition = dilworth_partition(sys, a, b);
      std::size_t covered = 0;
      for (const auto& chain : partition.chains) {
        covered += chain.size();
        for (std::size_t x = 0; x + 1 < chain.size(); ++x) EXPECT_TRUE(chain_leq(sys, chain[x], chain[x + 1], a));
      }
      EXPECT_EQ(covered, n);
      EXPECT_EQ(partition.chains.size(), max_antichain(sys, walls)) << name;
      if (n <= 16) EXPECT_EQ(partition.chains.size(), testing::brute_max_antichain(cross)) << name;
    }
  }
}

}  // namespace
}  // namespace coxwalls
