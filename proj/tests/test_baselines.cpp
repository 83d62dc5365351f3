#include <gtest/gtest.h>

#include <set>

#include "ndthin/baselines.hpp"
#include "ndthin/errors.hpp"
#include "ndthin/metrics.hpp"
#include "ndthin/shapes.hpp"
#include "test_support.hpp"

using namespace ndthin;
using ndthin::test::from_rows;
using ndthin::test::random_pattern;
using ndthin::test::to_rows;

namespace {

using Rows = std::vector<std::string>;

NeighborRing ring_from_bits(unsigned bits) {
  NeighborRing r;
  r.p[1] = 1;
  for (int i = 2; i <= 9; ++i) r.p[i] = (bits >> (i - 2)) & 1u;
  return r;
}

/// 8-connected groups among the ring cells, by flood fill over positions.
int ring_groups(const NeighborRing& r) {
  static const int pos[10][2] = {{0, 0},  {0, 0}, {-1, 0}, {-1, 1}, {0, 1},
                                 {1, 1},  {1, 0}, {1, -1}, {0, -1}, {-1, -1}};
  std::set<int> unseen;
  for (int i = 2; i <= 9; ++i) {
    if (r.p[i]) unseen.insert(i);
  }
  int groups = 0;
  while (!unseen.empty()) {
    ++groups;
    std::vector<int> stack{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (auto it = unseen.begin(); it != unseen.end();) {
        const int dr = std::abs(pos[a][0] - pos[*it][0]);
        const int dc = std::abs(pos[a][1] - pos[*it][1]);
        if (std::max(dr, dc) == 1) {
          stack.push_back(*it);
          it = unseen.erase(it);
        } else {
          ++it;
        }
      }
    }
  }
  return groups;
}

}  // namespace

TEST(ZSContext, CountsAndTransitions) {
  // Horizontal line interior: P4 and P8 set.
  const ZSContext line(NeighborRing::at(from_rows({"000", "111", "000"}), 1, 1));
  EXPECT_EQ(line.bp, 2);
  EXPECT_EQ(line.ap, 2);
  for (unsigned bits = 0; bits < 256; ++bits) {
    const ZSContext z(ring_from_bits(bits));
    EXPECT_GE(z.bp, 0);
    EXPECT_LE(z.bp, 8);
    EXPECT_GE(z.ap, 0);
    EXPECT_LE(z.ap, 4);
  }
}

TEST(GHContext, ConnectivityNumberCountsRingGroups) {
  for (unsigned bits = 0; bits < 256; ++bits) {
    const auto r = ring_from_bits(bits);
    const GHContext g(r);
    EXPECT_EQ(g.np, std::min(g.np1, g.np2));
    EXPECT_LE(std::max(g.np1, g.np2), 4);
    const bool interior = r.p[2] && r.p[4] && r.p[6] && r.p[8];
    EXPECT_EQ(g.cp, interior ? 0 : ring_groups(r)) << bits;
  }
}

TEST(NeighborRing, LayoutFollowsCompassPoints) {
  const auto p = from_rows({"100", "001", "010"});
  const auto r = NeighborRing::at(p, 1, 1);
  EXPECT_EQ(r.p[9], 1);  // north-west
  EXPECT_EQ(r.p[4], 1);  // east
  EXPECT_EQ(r.p[6], 1);  // south
  EXPECT_EQ(r.p[2] + r.p[3] + r.p[5] + r.p[7] + r.p[8] + r.p[1], 0);
}

TEST(ZhangSuen, EliminatesIsolatedTwoByTwo) {
  const auto p = from_rows({"0000", "0110", "0110", "0000"});
  const auto r = zs_thin(p);
  EXPECT_EQ(r.skeleton.foreground_count(), 0u);
  EXPECT_EQ(r.iterations, 2u);
}

TEST(ZhangSuen, SinglePixelAndLineAreFixed) {
  const auto dot = from_rows({"000", "010", "000"});
  EXPECT_EQ(zs_thin(dot).skeleton, dot);
  EXPECT_EQ(zs_thin(dot).iterations, 1u);
  const auto line = from_rows({"0000000", "0111110", "0000000"});
  EXPECT_EQ(zs_thin(line).skeleton, line);
}

TEST(ZhangSuen, FourByFourSquare) {
  // Golden value from tests/oracle/thinning_oracle.py.
  const auto p = from_rows({"000000", "011110", "011110", "011110", "011110", "000000"});
  const auto r = zs_thin(p);
  EXPECT_EQ(r.skeleton.foreground(), (std::vector<Coord>{{2, 2}}));
  EXPECT_EQ(r.iterations, 3u);
}

TEST(GuoHall, SinglePixelAndLineAreFixed) {
  const auto dot = from_rows({"000", "010", "000"});
  EXPECT_EQ(gh_thin(dot).skeleton, dot);
  const auto line = from_rows({"0000000", "0111110", "0000000"});
  EXPECT_EQ(gh_thin(line).skeleton, line);
}

TEST(GuoHall, FourByFourSquare) {
  // Golden value from tests/oracle/thinning_oracle.py.
  const auto p = from_rows({"000000", "011110", "011110", "011110", "011110", "000000"});
  const auto r = gh_thin(p);
  EXPECT_EQ(r.skeleton.foreground(), (std::vector<Coord>{{3, 2}}));
  EXPECT_EQ(r.iterations, 3u);
}

TEST(GuoHall, LinesInEveryOrientationAreFixed) {
  for (Index len = 3; len <= 12; ++len) {
    BinaryPattern h(Shape{3, static_cast<std::size_t>(len + 2)});
    BinaryPattern v(Shape{static_cast<std::size_t>(len + 2), 3});
    BinaryPattern d(Shape{static_cast<std::size_t>(len + 2), static_cast<std::size_t>(len + 2)});
    BinaryPattern a = d;
    for (Index i = 1; i <= len; ++i) {
      h.set({1, i}, true);
      v.set({i, 1}, true);
      d.set({i, i}, true);
      a.set({i, len + 1 - i}, true);
    }
    for (const auto* p : {&h, &v, &d, &a}) EXPECT_EQ(gh_thin(*p).skeleton, *p) << len;
  }
}

TEST(Baselines, RejectNon2D) {
  const BinaryPattern cube(Shape{3, 3, 3});
  EXPECT_THROW(zs_thin(cube), DimensionError);
  EXPECT_THROW(gh_thin(cube), DimensionError);
}

TEST(Baselines, AntiGrowthIdempotenceDeterminism) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto p = random_pattern({18, 15}, 0.3 + 0.01 * static_cast<double>(seed % 40), seed);
    for (auto algo : {&zs_thin, &gh_thin}) {
      const auto r = algo(p);
      EXPECT_TRUE(r.skeleton.subset_of(p));
      const auto again = algo(r.skeleton);
      EXPECT_EQ(again.skeleton, r.skeleton);
      EXPECT_EQ(again.iterations, 1u);
      EXPECT_EQ(algo(p).skeleton, r.skeleton);
    }
  }
}

TEST(Baselines, MarkingIgnoresScanOrder) {
  // Marking reads only the frozen pattern, so scan order cannot matter.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = random_pattern({12, 13}, 0.6, 500 + seed);
    std::set<Coord> forward;
    std::set<Coord> reverse;
    for (Index r = 0; r < 12; ++r) {
      for (Index c = 0; c < 13; ++c) {
        if (p.at({r, c}) && ZSContext(NeighborRing::at(p, r, c)).deletable(0)) forward.insert({r, c});
      }
    }
    for (Index r = 11; r >= 0; --r) {
      for (Index c = 12; c >= 0; --c) {
        if (p.at({r, c}) && ZSContext(NeighborRing::at(p, r, c)).deletable(0)) reverse.insert({r, c});
      }
    }
    EXPECT_EQ(forward, reverse);
  }
}

TEST(Baselines, GuoHallConvergesAtLeastAsWellAsZhangSuenOnShapes) {
  std::vector<BinaryPattern> corpus;
  corpus.push_back(generate({ShapeKind::square, {19, 19}, 15}));
  corpus.push_back(generate({ShapeKind::rectangle, {21, 31}, 0, 25, 15}));
  corpus.push_back(generate({ShapeKind::disc, {21, 21}, 0, 0, 0, 8}));
  corpus.push_back(generate({ShapeKind::triangle, {21, 21}, 17}));
  for (const auto& p : corpus) {
    const auto zs = zs_thin(p).skeleton;
    const auto gh = gh_thin(p).skeleton;
    ASSERT_GT(zs.foreground_count(), 0u);
    ASSERT_GT(gh.foreground_count(), 0u);
    EXPECT_GE(measure_mt(gh), measure_mt(zs));
  }
  // Pixel counts favour Guo-Hall on the square and the triangle.
  EXPECT_LE(gh_thin(corpus[0]).skeleton.foreground_count(),
            zs_thin(corpus[0]).skeleton.foreground_count());
  EXPECT_LE(gh_thin(corpus[3]).skeleton.foreground_count(),
            zs_thin(corpus[3]).skeleton.foreground_count());
}

TEST(Baselines, ZhangSuenCollapsesRoundSolidsFurther) {
  // Zhang-Suen shrinks a disc to a single pixel while Guo-Hall keeps a short
  // stroke, so "fewer pixels" is not a universal ordering between the two.
  // Counts agree with tests/oracle/thinning_oracle.py.
  const auto disc = generate({ShapeKind::disc, {21, 21}, 0, 0, 0, 8});
  EXPECT_EQ(zs_thin(disc).skeleton.foreground_count(), 1u);
  EXPECT_EQ(gh_thin(disc).skeleton.foreground_count(), 3u);
  const auto rect = generate({ShapeKind::rectangle, {21, 31}, 0, 25, 15});
  EXPECT_EQ(zs_thin(rect).skeleton.foreground_count(), 10u);
  EXPECT_EQ(gh_thin(rect).skeleton.foreground_count(), 11u);
}
