#include <gtest/gtest.h>

#include "abelslab/abels.hpp"

using namespace abelslab;

TEST(SubgroupSpec, Cardinalities) {
  Ring R3 = make_ring("zmod:3"), R2 = make_ring("zmod:2");
  EXPECT_EQ(*abels_group(4, R3).cardinality(), 2916u);  // 3^6 * 2^2
  EXPECT_EQ(*unipotent_subgroup(5, R2).cardinality(), 1024u);
  EXPECT_EQ(*torus_subgroup(4, R3).cardinality(), 4u);
  EXPECT_EQ(*center_subgroup(4, R3).cardinality(), 3u);
  EXPECT_EQ(*horospherical(4, R3, 4).cardinality(), 108u);
  EXPECT_FALSE(abels_group(4, make_ring("z")).cardinality().has_value());
}

TEST(SubgroupSpec, MembershipFollowsThePattern) {
  Ring R = make_ring("zmod:3");
  auto A = abels_group(4, R);
  EXPECT_TRUE(A.contains(elementary(R, 4, 1, 4, R.from_int(2))));
  EXPECT_TRUE(A.contains(diagonal(R, {R.one(), R.from_int(2), R.one(), R.one()})));
  EXPECT_FALSE(A.contains(diagonal(R, {R.from_int(2), R.one(), R.one(), R.one()})));
  EXPECT_FALSE(A.contains(elementary(R, 4, 2, 1, R.one())));
  for (auto const& g : A.generators()) EXPECT_TRUE(A.contains(g));
}

TEST(SubgroupSpec, ClosureMatchesPattern) {
  for (std::string d : {"zmod:2", "zmod:3", "polyq:2:0,0,1"}) {
    Ring R = make_ring(d);
    for (auto const& S : horospherical_family(4, R)) EXPECT_EQ(check_closure(S).status, Status::pass) << S.name() << " " << d;
    for (auto const& S : contracting_family(4, R)) EXPECT_EQ(check_closure(S).status, Status::pass) << S.name() << " " << d;
  }
}

TEST(SubgroupSpec, EnumerationRespectsBudget) {
  Ring R = make_ring("zmod:3");
  std::size_t seen = 0;
  EXPECT_FALSE(abels_group(4, R).for_each_element([&](Matrix const&) { ++seen; }, 100));
  EXPECT_TRUE(unipotent_subgroup(3, R).for_each_element([&](Matrix const&) { ++seen; }, 100));
}

TEST(SubgroupSpec, IntersectionAndLookup) {
  Ring R = make_ring("zmod:2");
  auto U = unipotent_subgroup(4, R);
  auto H1 = horospherical(4, R, 1);
  auto U1 = H1.intersect(U, "U1");
  EXPECT_TRUE(U1.is_unipotent());
  EXPECT_EQ(subgroup_by_name("U1", 4, R).cardinality(), U1.cardinality());
  EXPECT_THROW(subgroup_by_name("nope", 4, R), Error);
}

TEST(Abels, CenterIsTheCornerSubgroup) {
  for (std::string d : {"zmod:2", "zmod:3"}) {
    auto rec = center_check(4, make_ring(d));
    EXPECT_EQ(rec.status, Status::pass) << d;
    EXPECT_EQ(rec.details["center_order"], rec.details["expected_order"]);
  }
}

TEST(Abels, StructuralChecks) {
  for (std::string d : {"zmod:2", "zmod:3", "polyq:2:0,0,1"}) {
    Ring R = make_ring(d);
    EXPECT_EQ(check_semidirect(4, R).status, Status::pass) << d;
    EXPECT_EQ(check_torus_invariance(4, R).status, Status::pass) << d;
    EXPECT_EQ(check_abels_retraction(4, R).status, Status::pass) << d;
    EXPECT_EQ(check_contracting_structure(4, R).status, Status::pass) << d;
  }
}

TEST(Abels, H4FiberProduct) {
  auto rec = check_h4_fiber_product(make_ring("zmod:3"));
  EXPECT_EQ(rec.status, Status::pass) << rec.counterexample;
  EXPECT_EQ(rec.details["h4_order"].get<std::size_t>(), 108u);
  EXPECT_EQ(rec.details["fiber_order"], rec.details["h4_order"]);
}

TEST(Abels, RetractionIsAHomomorphism) {
  Ring R = make_ring("zmod:3");
  Matrix a = elementary(R, 4, 2, 3, R.one()) * diagonal(R, {R.one(), R.from_int(2), R.one(), R.one()});
  Matrix b = elementary(R, 4, 1, 3, R.from_int(2)) * diagonal(R, {R.one(), R.one(), R.from_int(2), R.one()});
  EXPECT_EQ(abels_retraction(a * b), abels_retraction(a) * abels_retraction(b));
}
