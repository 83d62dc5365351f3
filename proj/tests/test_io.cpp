#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "ndthin/errors.hpp"
#include "ndthin/io.hpp"
#include "test_support.hpp"

using namespace ndthin;
using ndthin::test::from_rows;
using ndthin::test::random_pattern;

TEST(Pbm, ReadExample) {
  const auto p = read_pbm("P1\n2 2\n1 1\n1 1\n");
  EXPECT_EQ(p, from_rows({"11", "11"}));
}

TEST(Pbm, WriteExample) {
  EXPECT_EQ(write_pbm(BinaryPattern(Shape{1, 1})), "P1\n1 1\n0\n");
  EXPECT_EQ(write_pbm(from_rows({"101", "010"})), "P1\n3 2\n1 0 1\n0 1 0\n");
}

TEST(Pbm, WidthIsTheColumnCount) {
  const auto p = read_pbm("P1\n3 1\n0 0 1\n");
  EXPECT_EQ(p.shape(), (Shape{1, 3}));
  EXPECT_TRUE(p.at({0, 2}));
}

TEST(Pbm, AcceptsCommentsAndPackedDigits) {
  const auto p = read_pbm("P1 # made by hand\n# size\n3 2\n101\n01 0\n");
  EXPECT_EQ(p, from_rows({"101", "010"}));
}

TEST(Pbm, Errors) {
  try {
    read_pbm("P5\n1 1\n\x01");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 0u);
  }
  try {
    read_pbm("P1\n2 2\n1 1\n1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  try {
    read_pbm("P1\n2 2\n1 1\n1 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 13u);
  }
  EXPECT_THROW(read_pbm("P1\n99999999999 2\n"), ParseError);
  EXPECT_THROW(read_pbm("P1\n100000 100000\n"), ParseError);
  EXPECT_THROW(read_pbm("P1\n0 2\n"), ParseError);
  EXPECT_THROW(read_pbm("P1\n1 1\n1 1\n"), ParseError);
  EXPECT_THROW(read_pbm("P12\n1 1\n1\n"), ParseError);
  EXPECT_THROW(read_pbm(""), ParseError);
  EXPECT_THROW(write_pbm(BinaryPattern(Shape{2, 2, 2})), DimensionError);
}

TEST(Ndbin, Examples) {
  const auto p = read_ndbin("NDBIN\n2\n1 3\n1 0 1\n");
  EXPECT_EQ(p, from_rows({"101"}));

  BinaryPattern cube(Shape{2, 2, 2});
  for (auto& c : cube.cells()) c = 1;
  EXPECT_EQ(write_ndbin(cube), "NDBIN\n3\n2 2 2\n1 1\n1 1\n1 1\n1 1\n");
}

TEST(Ndbin, Errors) {
  try {
    read_ndbin("NDBIN\n2\n2 2\n1 0 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 18u);
    EXPECT_NE(std::string(e.what()).find("mismatch"), std::string::npos);
  }
  EXPECT_THROW(read_ndbin("NDBIN\n2\n1 2\n1 0 1\n"), ParseError);
  EXPECT_THROW(read_ndbin("NDBIN\n1\n3\n1 0 1\n"), ParseError);
  EXPECT_THROW(read_ndbin("NDBIN\n2\n1 2\n10\n"), ParseError);
  EXPECT_THROW(read_ndbin("NDBX\n2\n1 1\n1\n"), ParseError);
}

TEST(VoxelCsv, Examples) {
  EXPECT_EQ(export_voxels_csv(BinaryPattern(Shape{3, 3})), "x0,x1\n");
  BinaryPattern p(Shape{3, 3});
  p.set({1, 2}, true);
  EXPECT_EQ(export_voxels_csv(p), "x0,x1\n1,2\n");
  BinaryPattern v(Shape{2, 2, 2});
  v.set({1, 1, 1}, true);
  v.set({0, 0, 0}, true);
  EXPECT_EQ(export_voxels_csv(v), "x0,x1,x2\n0,0,0\n1,1,1\n");
}

TEST(RoundTrip, RandomPatternsSurviveBothFormats) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const bool three = i % 2;
    Shape shape{1 + rng() % 9, 1 + rng() % 9};
    if (three) shape.push_back(1 + rng() % 5);
    const auto p = random_pattern(shape, 0.5, rng());
    const auto nd = write_ndbin(p);
    EXPECT_EQ(read_ndbin(nd), p);
    EXPECT_EQ(write_ndbin(read_ndbin(nd)), nd);
    if (!three) {
      const auto pbm = write_pbm(p);
      EXPECT_EQ(read_pbm(pbm), p);
      EXPECT_EQ(write_pbm(read_pbm(pbm)), pbm);
    }
  }
}

TEST(Formats, DispatchByExtension) {
  EXPECT_EQ(format_from_path("a/b.pbm"), FileFormat::pbm);
  EXPECT_EQ(format_from_path("x.ndbin"), FileFormat::ndbin);
  EXPECT_EQ(format_from_path("x.csv"), FileFormat::csv);
  EXPECT_FALSE(format_from_path("x.png").has_value());
  EXPECT_FALSE(format_from_path("noext").has_value());
}

TEST(Formats, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "ndthin_test_io";
  std::filesystem::create_directories(dir);
  const auto p = random_pattern({4, 5, 3}, 0.5, 11);
  save_pattern(dir / "p.ndbin", p, FileFormat::ndbin);
  EXPECT_EQ(load_pattern(dir / "p.ndbin", FileFormat::ndbin), p);
  EXPECT_THROW(load_pattern(dir / "missing.pbm", FileFormat::pbm), IoError);
  EXPECT_THROW(load_pattern(dir / "p.ndbin", FileFormat::csv), UsageError);
  std::filesystem::remove_all(dir);
}
