#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace ah;
using ah::test::kind_of;
using ah::test::World;

TEST_CASE("periodic order examples") {
  World a("A1_adj");
  PeriodicOrder o(a.g);
  CHECK(o.leq(a("e"), a("e")));
  CHECK(o.leq(a("e"), a("s0")));
  CHECK_FALSE(o.leq(a("s0"), a("e")));
  CHECK(o.leq(a("s1 : -1"), a("e : -1")));
  CHECK(o.min_pushdown(a("e")) == 0);
  CHECK(o.min_pushdown(a("e : 2")) == 2);
  CHECK(o.min_pushdown(a("s1 : 0")) == 1);
}

TEST_CASE("periodic order is translation invariant and pushdown independent") {
  World b("B2_adj");
  PeriodicOrder o(b.g);
  const std::vector<Element> xs{b("e"), b("s1 s0a : 1,-1"), b("s2 : 2,0"), b("s0a s1 s2 : -1,3"), b("s1 s2 s1 : 0,0")};
  const Vec mu{2, -1};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(o.leq(x, y) == o.leq(b.g.shift(x, mu), b.g.shift(y, mu)));
      const std::int64_t n = std::max(o.min_pushdown(x), o.min_pushdown(y));
      CHECK(o.leq_at(x, y, n) == o.leq_at(x, y, n + 3));
    }
}

TEST_CASE("make_parabolic") {
  World a("A1_adj");
  const Parabolic none(a.g, {});
  CHECK(none.size() == 1);
  CHECK(none.longest() == a("e"));
  CHECK(none.empty_subset());
  const Parabolic s = Parabolic::parse(a.g, "s1");
  CHECK(s.size() == 2);
  CHECK(s.longest() == a("s1"));
  CHECK(kind_of([&] { Parabolic::parse(a.g, "s1,s0"); }) == ErrorKind::NotFinitary);
  CHECK(kind_of([&] { Parabolic::parse(a.g, "s7"); }) == ErrorKind::MalformedInput);

  World b("B2_adj");
  CHECK(Parabolic::parse(b.g, "s1,s2").size() == 8);
  CHECK(Parabolic::parse(b.g, "s2,s0a").size() == 8);
  CHECK(Parabolic::parse(b.g, "s1,s0a").size() == 4);
  CHECK(kind_of([&] { Parabolic::parse(b.g, "s1,s2,s0a"); }) == ErrorKind::NotFinitary);
  World c("A2_adj");
  CHECK(Parabolic::parse(c.g, "s1,s0a").size() == 6);
  CHECK(kind_of([&] { Parabolic::parse(c.g, "s0a,s1,s2"); }) == ErrorKind::NotFinitary);
}

TEST_CASE("parabolic membership") {
  World a("A1_adj");
  const Parabolic s = Parabolic::parse(a.g, "s1");
  CHECK_FALSE(s.in_AWextS(a("e")));
  CHECK(s.in_AWextRes(a("s1 : -1")));
  CHECK(s.in_AWext(a("s1")));
  CHECK(s.min_rep(a("e")) == a("s1"));
  CHECK(s.min_rep(a("s1")) == a("s1"));
  const auto coset = s.coset(a("e : 2"));
  CHECK(coset.size() == 2);
  int members = 0;
  for (const auto& u : coset) members += s.in_AWext(u);
  CHECK(members == 1);
  const Parabolic none(a.g, {});
  CHECK(none.min_rep(a("s1 : 4")) == a("s1 : 4"));
}

TEST_CASE("min_rep is unique across a window") {
  World b("B2_adj");
  for (const char* gens : {"s1", "s2,s0a", "s1,s2"}) {
    const Parabolic p = Parabolic::parse(b.g, gens);
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j)
        for (std::uint32_t w = 0; w < b.d->weyl_size(); ++w) {
          const Element x{w, Vec{i, j}};
          int members = 0;
          for (const auto& u : p.coset(x)) members += p.in_AWext(u);
          REQUIRE(members == 1);
          CHECK(p.in_AWext(p.min_rep(x)));
        }
  }
}
