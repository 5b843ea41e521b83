#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace ah;
using ah::test::kind_of;

TEST_CASE("Vec parse and print") {
  const Vec v = Vec::parse("-2,0,5");
  CHECK(v.size() == 3);
  CHECK(v[0] == -2);
  CHECK(v.str() == "-2,0,5");
  CHECK(Vec::parse(" 3 ").str() == "3");
  CHECK(kind_of([] { Vec::parse("1,x"); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { Vec::parse("1,2,3,4,5,6,7,8,9"); }) == ErrorKind::MalformedInput);
}

TEST_CASE("pairing checks dimensions") {
  CHECK(dot(Vec{1, 2}, Vec{3, -1}) == 1);
  CHECK(kind_of([] { dot(Vec{1}, Vec{1, 2}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("floor and ceil division round toward the right side") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 2) == -3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(0, 3) == 0);
}

TEST_CASE("Smith form") {
  IntMatrix m(2, 2);
  m(0, 0) = 2; m(0, 1) = 4;
  m(1, 0) = 6; m(1, 1) = 8;
  const SmithForm s = smith_form(m);
  CHECK(s.diagonal == std::vector<std::int64_t>{2, 4});
  CHECK(s.left * m * s.right == [&] {
    IntMatrix d(2, 2);
    d(0, 0) = 2; d(1, 1) = 4;
    return d;
  }());
  CHECK(std::abs(determinant(s.left)) == 1);
  CHECK(std::abs(determinant(s.right)) == 1);

  IntMatrix r(1, 2);
  r(0, 0) = 1; r(0, 1) = -1;
  CHECK(smith_form(r).diagonal == std::vector<std::int64_t>{1});
}

TEST_CASE("determinant and definiteness") {
  IntMatrix a2(2, 2);
  a2(0, 0) = 2; a2(0, 1) = -1; a2(1, 0) = -1; a2(1, 1) = 2;
  CHECK(determinant(a2) == 3);
  CHECK(positive_definite(a2));
  IntMatrix affine(2, 2);
  affine(0, 0) = 2; affine(0, 1) = -2; affine(1, 0) = -2; affine(1, 1) = 2;
  CHECK(determinant(affine) == 0);
  CHECK_FALSE(positive_definite(affine));
  CHECK(determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("lattice membership") {
  const std::vector<Vec> gens{Vec{2, 1}, Vec{0, 3}};
  const LatticeBasis b(gens, 2);
  CHECK(b.rank() == 2);
  CHECK(b.contains(Vec{2, 4}));
  CHECK(b.contains(Vec{0, 0}));
  CHECK(b.contains(Vec{-4, 1}));
  CHECK_FALSE(b.contains(Vec{1, 0}));
  CHECK_FALSE(b.contains(Vec{2, 2}));
}
