#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "ah/oracle/oracle.hpp"
#include "support.hpp"

using namespace ah;
using ah::test::kind_of;

TEST_CASE("A1 characters") {
  const auto d = load_preset("A1_adj");
  SatakeCharacters sc(d);
  CHECK(sc.character(Vec{0}) == WeightMultiset{{Vec{0}, 1}});
  CHECK(sc.character(Vec{2}) == WeightMultiset{{Vec{-2}, 1}, {Vec{0}, 1}, {Vec{2}, 1}});
  CHECK(sc.dimension(Vec{5}) == 6);
  CHECK(kind_of([&] { sc.character(Vec{-1}); }) == ErrorKind::NotDominant);
  CHECK(kind_of([&] { sc.character(Vec{1, 1}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("rank 2 characters match Kostant and Weyl") {
  for (const char* p : {"A2_adj", "B2_adj", "A1xA1_adj"}) {
    CAPTURE(p);
    const auto d = load_preset(p);
    SatakeCharacters sc(d);
    for (std::int64_t i = 0; i <= 3; ++i)
      for (std::int64_t j = 0; j <= 3; ++j) {
        const Vec mu = d->lift(Vec{i, j});
        CAPTURE(mu.str());
        CHECK(sc.character(mu) == oracle::kostant_character(*d, mu));
        CHECK(sc.dimension(mu) == oracle::weyl_dimension(*d, mu));
      }
  }
}

TEST_CASE("A2 adjoint representation") {
  const auto d = load_preset("A2_adj");
  SatakeCharacters sc(d);
  const Vec theta = d->simple_coroots()[0] + d->simple_coroots()[1];
  const auto& ch = sc.character(theta);
  CHECK(sc.dimension(theta) == 8);
  CHECK(ch.at(Vec{0, 0}) == 2);
  CHECK(ch.size() == 7);
  const auto& dom = sc.dominant_character(theta);
  CHECK(dom == WeightMultiset{{Vec{0, 0}, 2}, {theta, 1}});
}
