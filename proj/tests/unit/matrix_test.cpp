#include <gtest/gtest.h>

#include "abelslab/matrix.hpp"

using namespace abelslab;

TEST(Matrix, ElementaryMatricesAddParameters) {
  Ring R = make_ring("zmod:5");
  Matrix a = elementary(R, 3, 1, 3, R.from_int(2));
  Matrix b = elementary(R, 3, 1, 3, R.from_int(4));
  EXPECT_EQ(a * b, elementary(R, 3, 1, 3, R.from_int(1)));
  EXPECT_TRUE(elementary(R, 3, 2, 1, R.zero()).is_identity());
  EXPECT_EQ(a.at(0, 2), R.from_int(2));
  EXPECT_THROW(elementary(R, 3, 2, 2, R.one()), Error);
  EXPECT_THROW(elementary(R, 3, 1, 4, R.one()), Error);
}

TEST(Matrix, InverseAndDeterminant) {
  Ring R = make_ring("zmod:7");
  Matrix m = elementary(R, 3, 1, 2, R.from_int(3)) * elementary(R, 3, 3, 1, R.from_int(5)) *
             diagonal(R, {R.from_int(2), R.from_int(3), R.one()});
  EXPECT_EQ(determinant(m), R.from_int(6));
  EXPECT_TRUE((m * inverse(m)).is_identity());
  EXPECT_TRUE((inverse(m) * m).is_identity());
  Matrix singular(R, 2);
  singular.set(0, 0, R.one());
  EXPECT_THROW(inverse(singular), Error);
}

TEST(Matrix, CommutatorOfAdjacentElementaries) {
  Ring R = make_ring("zmod:9");
  RingElement r = R.from_int(2), s = R.from_int(4);
  EXPECT_EQ(commutator(elementary(R, 4, 1, 2, r), elementary(R, 4, 2, 4, s)), elementary(R, 4, 1, 4, R.mul(r, s)));
  EXPECT_TRUE(commutator(elementary(R, 4, 1, 2, r), elementary(R, 4, 3, 4, s)).is_identity());
}

TEST(Matrix, DiagonalConjugationScalesEntries) {
  Ring R = make_ring("zmod:7");
  Matrix d = diagonal(R, {R.from_int(3), R.from_int(5), R.one()});
  Matrix e = elementary(R, 3, 1, 2, R.one());
  RingElement f = R.mul(R.from_int(3), R.inverse(R.from_int(5)));
  EXPECT_EQ(d * e * inverse(d), elementary(R, 3, 1, 2, f));
  EXPECT_EQ(conjugate_by_diagonal(d, e), elementary(R, 3, 1, 2, f));
}

TEST(Matrix, PowersAndHall) {
  Ring R = make_ring("zmod:4");
  Matrix e = elementary(R, 3, 1, 3, R.one());
  EXPECT_TRUE(power(e, 4).is_identity());
  EXPECT_FALSE(power(e, 2).is_identity());
  EXPECT_EQ(power(e, -1), inverse(e));
  Matrix a = elementary(R, 3, 1, 2, R.one()), b = elementary(R, 3, 2, 3, R.from_int(3)), c = elementary(R, 3, 2, 1, R.one());
  EXPECT_TRUE(hall_identity_check(a, b, c));
}

TEST(Matrix, MismatchedOperandsThrow) {
  Ring R = make_ring("zmod:3"), S = make_ring("zmod:5");
  EXPECT_THROW(Matrix::identity(R, 2) * Matrix::identity(R, 3), Error);
  EXPECT_THROW(Matrix::identity(R, 2) * Matrix::identity(S, 2), Error);
}

TEST(Matrix, PolynomialQuotientEntries) {
  Ring R = make_ring("polyq:2:0,0,1");
  RingElement x = R.from_code(2);
  Matrix a = elementary(R, 3, 1, 2, x), b = elementary(R, 3, 2, 3, x);
  EXPECT_TRUE(commutator(a, b).is_identity());  // x * x = 0
  EXPECT_TRUE(a.is_upper_triangular());
  EXPECT_TRUE(transpose(a).is_lower_triangular());
}
