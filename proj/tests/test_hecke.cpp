#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "ah/oracle/oracle.hpp"
#include "support.hpp"

using namespace ah;
using ah::test::kind_of;
using ah::test::World;

namespace {
Laurent v(int e) { return Laurent::monomial(e); }
}  // namespace

TEST_CASE("Laurent arithmetic") {
  const Laurent p = v(-1) - v(1);
  CHECK(p.str() == "1*v^-1-1*v^1");
  CHECK(Laurent().str() == "0");
  CHECK(Laurent::parse(p.str()) == p);
  CHECK(Laurent::parse("1*v^0-1*v^2") == Laurent(1) - v(2));
  CHECK(p * p == v(-2) - Laurent(2) + v(2));
  CHECK(p.bar() == -p);
  CHECK((v(3) + v(1)).eval(-1) == -2);
  CHECK((p - p).is_zero());
  CHECK(kind_of([] { Laurent::parse("1*x^2"); }) == ErrorKind::MalformedInput);
}

TEST_CASE("Hecke relations") {
  World a("A1_adj");
  Hecke h(a.g);
  const HeckeElement hs = h.standard(a("s1"));
  HeckeElement expect = h.standard(a("e"));
  add_to(expect, a("s1"), v(-1) - v(1));
  CHECK(h.mul(hs, hs) == expect);
  CHECK(h.mul(h.standard(a("e")), h.standard(a("s0 s1"))) == h.standard(a("s0 s1")));
  CHECK(h.mul(hs, h.standard(a("s0 s1"))) == h.standard(a("s1 s0 s1")));
}

TEST_CASE("KL basis in A1") {
  World a("A1_adj");
  Hecke h(a.g);
  const Element x = a("s1 s0 s1 s0");
  CHECK(h.kl_poly(x, x) == Laurent(1));
  CHECK(h.kl_poly(a("e"), x) == v(4));
  CHECK(h.kl_poly(a("s0 s1"), x) == v(2));
  CHECK(h.bar(*h.kl_basis(x)) == *h.kl_basis(x));
  // different Omega-components never meet
  CHECK(h.kl_poly(a("s1 : -1"), x).is_zero());
}

TEST_CASE("KL basis agrees with the bar-invariance solver in B2") {
  World b("B2_adj");
  Hecke h(b.g);
  const oracle::Ball ball(b.g, 5);
  for (const auto& lit : {"s1 s2 s1 s2 : 0,0", "s0a s2 s1 : 0,0", "s1 s0a : 1,1", "s2 s1 s0a : 0,0"}) {
    const Element x = b(lit);
    if (!ball.contains(x)) continue;
    const auto col = h.kl_basis(x);
    CHECK(std::map<Element, Laurent>(col->begin(), col->end()) == oracle::kl_column_by_bar_invariance(b.g, ball, x));
  }
}

TEST_CASE("spherical polynomials") {
  World a("A1_adj");
  Hecke h(a.g);
  const Element e = a("e"), s0 = a("s0");
  CHECK(h.spherical_m(e, e) == Laurent(1));
  CHECK(h.spherical_m(e, s0) == h.kl_poly(a("s1"), a("s0 s1")));
  CHECK(h.inverse_m(s0, s0) == Laurent(1));
  CHECK(h.inverse_m(triangle(a.g, e), e) == v(1));
  CHECK(kind_of([&] { h.spherical_m(a("s1"), e); }) == ErrorKind::NotSpherical);
  CHECK(kind_of([&] { h.inverse_m(e, a("s1 : 3")); }) == ErrorKind::NotSpherical);
}

TEST_CASE("m^{w^tri, w} in A2") {
  World a("A2_adj");
  Hecke h(a.g);
  for (const auto& w : enumerate_WextS(a.g, 5)) CHECK(h.inverse_m(triangle(a.g, w), w) == v(3));
}

TEST_CASE("LRU cache capacity") {
  World a("A1_adj");
  Hecke small(a.g, 3);
  for (const auto& w : enumerate_WextS(a.g, 8)) small.kl_basis(w);
  CHECK(small.cache_size() <= 3);
  CHECK(small.cache_capacity() == 3);
  // evicted columns are recomputed identically
  Hecke big(a.g, 1000);
  for (const auto& w : enumerate_WextS(a.g, 8)) CHECK(*small.kl_basis(w) == *big.kl_basis(w));

  ::setenv("ALCOVE_HECKE_CACHE_CAP", "17", 1);
  CHECK(Hecke::default_cache_capacity() == 17);
  ::setenv("ALCOVE_HECKE_CACHE_CAP", "abc", 1);
  CHECK(kind_of([] { Hecke::default_cache_capacity(); }) == ErrorKind::MalformedInput);
  ::unsetenv("ALCOVE_HECKE_CACHE_CAP");
  CHECK(Hecke::default_cache_capacity() == 100000);
}
