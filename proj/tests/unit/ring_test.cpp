#include <gtest/gtest.h>

#include "abelslab/ring.hpp"

using namespace abelslab;

TEST(Ring, DescriptorsRoundTrip) {
  for (std::string d : {"z", "zmod:6", "gf:5", "polyq:2:0,0,1", "zloc:6"}) {
    EXPECT_EQ(parse_descriptor(d).to_string(), make_ring(d).descriptor().to_string());
    EXPECT_EQ(parse_descriptor(parse_descriptor(d).to_string()), parse_descriptor(d));
  }
}

TEST(Ring, RejectsMalformedDescriptors) {
  for (std::string d : {"", "zmod", "zmod:1", "gf:6", "polyq:2:1,0", "polyq:4:1,1", "q", "zmod:x"}) {
    try {
      make_ring(d);
      ADD_FAILURE() << d;
    } catch (Error const& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_descriptor) << d;
    }
  }
}

TEST(Ring, ModularArithmetic) {
  Ring R = make_ring("zmod:6");
  EXPECT_EQ(R.size(), 6);
  EXPECT_EQ(R.add(R.from_int(4), R.from_int(5)), R.from_int(3));
  EXPECT_EQ(R.mul(R.from_int(4), R.from_int(5)), R.from_int(2));
  EXPECT_EQ(R.neg(R.from_int(1)), R.from_int(5));
  EXPECT_EQ(R.from_int(-1), R.from_int(5));
  EXPECT_EQ(R.enumerate_units().size(), 2u);
  EXPECT_FALSE(R.is_unit(R.from_int(3)));
  EXPECT_EQ(R.inverse(R.from_int(5)), R.from_int(5));
  EXPECT_THROW(R.inverse(R.from_int(2)), Error);
}

TEST(Ring, PrimeFieldInverses) {
  Ring F = make_ring("gf:7");
  for (auto const& u : F.enumerate_units()) EXPECT_TRUE(F.is_one(F.mul(u, F.inverse(u))));
  EXPECT_EQ(F.enumerate_units().size(), 6u);
}

TEST(Ring, DualNumbersOverF2) {
  Ring R = make_ring("polyq:2:0,0,1");
  EXPECT_EQ(R.size(), 4);
  EXPECT_EQ(R.characteristic(), 2);
  auto elems = R.enumerate_elements();
  std::size_t nilpotent = 0;
  for (auto const& a : elems) nilpotent += R.is_zero(R.mul(a, a));
  EXPECT_EQ(nilpotent, 2u);  // 0 and x
  EXPECT_EQ(R.enumerate_units().size(), 2u);
  for (auto const& a : elems) {
    for (auto const& b : elems) EXPECT_EQ(R.mul(a, b), R.mul(b, a));
  }
}

TEST(Ring, LocalizationAllowsListedDenominators) {
  Ring R = make_ring("zloc:6");
  EXPECT_FALSE(R.is_finite());
  EXPECT_EQ(R.characteristic(), 0);
  RingElement h = R.from_fraction(1, 2);
  EXPECT_TRUE(R.is_one(R.mul(h, R.from_int(2))));
  EXPECT_TRUE(R.is_unit(R.from_int(3)));
  EXPECT_FALSE(R.is_unit(R.from_int(5)));
  EXPECT_THROW(R.from_fraction(1, 5), Error);
  EXPECT_THROW(R.enumerate_elements(), Error);
}

TEST(Ring, IntegersHaveTwoUnits) {
  Ring Z = make_ring("z");
  EXPECT_TRUE(Z.is_unit(Z.from_int(-1)));
  EXPECT_FALSE(Z.is_unit(Z.from_int(2)));
  EXPECT_EQ(Z.pow(Z.from_int(-2), 3), Z.from_int(-8));
}

TEST(Ring, AdditivePresentationsAreSound) {
  for (std::string d : {"zmod:2", "zmod:4", "gf:5", "polyq:2:0,0,1", "polyq:3:1,0,1", "z"}) {
    Ring R = make_ring(d);
    auto p = R.additive_presentation();
    auto audit = audit_additive_presentation(R, p);
    EXPECT_TRUE(audit.contains_one) << d;
    EXPECT_TRUE(audit.unit_law) << d;
    EXPECT_TRUE(audit.symmetric) << d;
    EXPECT_TRUE(R.is_one(p.generators[0])) << d;
  }
}

TEST(Ring, UnitGeneratorsGenerateTheUnitGroup) {
  for (std::string d : {"zmod:8", "zmod:9", "gf:7", "polyq:2:0,0,1"}) {
    Ring R = make_ring(d);
    auto gens = R.unit_generators();
    std::set<RingElement> reached{R.one()};
    for (bool grew = true; grew;) {
      grew = false;
      for (auto a : std::vector<RingElement>(reached.begin(), reached.end())) {
        for (auto g : gens) grew |= reached.insert(R.mul(a, g)).second;
      }
    }
    EXPECT_EQ(reached.size(), R.enumerate_units().size()) << d;
  }
}
