#include <gtest/gtest.h>

#include "chordal/weights.hpp"

using namespace chordal;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
}  // namespace

TEST(Partition, TrailingZerosAreTrimmed) {
  EXPECT_EQ(P("310"), P("31"));
  EXPECT_EQ(P("000"), Partition());
  EXPECT_EQ(P("3,1,1"), P("311"));
  EXPECT_EQ(P("12,3").part(0), 12);
  EXPECT_EQ(P("21").compact(3), "210");
  EXPECT_EQ(P("12,3").compact(), "12,3");
  EXPECT_EQ(P("311").size(), 5);
}

TEST(Partition, RejectsIncreasingParts) {
  EXPECT_THROW(P("13"), std::invalid_argument);
  EXPECT_THROW(Partition({1, -1}), std::invalid_argument);
}

TEST(WeightVec, DominantRepresentative) {
  EXPECT_EQ(dominant_representative(WeightVec({0, -1, 2})), P("21"));
  EXPECT_EQ(dominant_representative(WeightVec({1, 1, 1})), P("111"));
  EXPECT_EQ(dominant_representative(WeightVec({-1, -1, -1})), P("111"));
}

TEST(WeightVec, Dominance) {
  EXPECT_TRUE(WeightVec({2, 1, 0}).is_dominant());
  EXPECT_FALSE(WeightVec({1, 2, 0}).is_dominant());
  EXPECT_FALSE(WeightVec({1, 0, -1}).is_dominant());
  EXPECT_THROW(WeightVec({0, 1}).to_partition(), std::invalid_argument);
  EXPECT_EQ(WeightVec::from_partition(P("2"), 3), WeightVec({2, 0, 0}));
  EXPECT_THROW(WeightVec::from_partition(P("111"), 2), std::invalid_argument);
}

TEST(RootSystem, SimpleRoots) {
  for (RootType t : {RootType::B, RootType::C})
    for (int r = 1; r <= 4; ++r) {
      RootSystemData d = root_system(t, r);
      ASSERT_EQ(d.simple_roots.size(), static_cast<std::size_t>(r));
      for (const WeightVec& a : d.simple_roots) EXPECT_EQ(a.rank(), r);
    }
  EXPECT_EQ(root_system(RootType::B, 2).simple_roots[1], WeightVec({0, 1}));
  EXPECT_EQ(root_system(RootType::C, 2).simple_roots[1], WeightVec({0, 2}));
  EXPECT_EQ(root_system(RootType::C, 2).simple_roots[0], WeightVec({1, -1}));
}

TEST(Combine, UnionIsRowwiseSum) {
  EXPECT_EQ(union_parts(P("21"), P("11")), P("32"));
  EXPECT_EQ(union_parts(P("21"), Partition()), P("21"));
  EXPECT_EQ(union_parts(P("1"), P("1")), P("2"));
}

TEST(Combine, IntersectAndJoin) {
  EXPECT_EQ(intersect_parts(P("21"), P("11")), P("11"));
  EXPECT_EQ(intersect_parts(P("311"), P("311")), P("311"));
  EXPECT_EQ(intersect_parts(union_parts(P("1"), P("1")), union_parts(P("2"), P("2"))), P("2"));
  EXPECT_EQ(join_parts(P("3"), P("111")), P("311"));
}

TEST(Combine, Strips) {
  EXPECT_TRUE(contains(P("32"), P("21")));
  EXPECT_FALSE(contains(P("32"), P("111")));
  EXPECT_TRUE(is_vertical_strip(P("11"), P("22")));
  EXPECT_FALSE(is_vertical_strip(P("1"), P("3")));
  EXPECT_TRUE(is_horizontal_strip(P("1"), P("3")));
  EXPECT_TRUE(is_horizontal_strip(P("1"), P("11")));
  EXPECT_FALSE(is_horizontal_strip(P(""), P("11")));
}

TEST(Combine, AddBox) {
  EXPECT_EQ(add_box(P("1"), 2), P("11"));
  EXPECT_EQ(add_box(P("21"), 1, -1), P("11"));
  EXPECT_THROW(add_box(P("1"), 3), std::invalid_argument);
  EXPECT_THROW(add_box(P("11"), 1, -1), std::invalid_argument);
}

TEST(StepClassify, Examples) {
  EXPECT_EQ(step_classify(P("11"), P("21")), (StepRelation{StepKind::add_box, 1}));
  EXPECT_EQ(step_classify(P("21"), P("11")), (StepRelation{StepKind::remove_box, 1}));
  EXPECT_EQ(step_classify(P("11"), P("22")).kind, StepKind::vertical_strip);
  EXPECT_EQ(step_classify(P("1"), P("3")).kind, StepKind::horizontal_strip);
  EXPECT_EQ(step_classify(P("31"), P("31")).kind, StepKind::equal);
  EXPECT_EQ(step_classify(P("3"), P("11")).kind, StepKind::other);
}
