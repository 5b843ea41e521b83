#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "ah/oracle/oracle.hpp"
#include "support.hpp"

using namespace ah;
using ah::test::kind_of;
using ah::test::World;

TEST_CASE("literals and group law") {
  World a("A1_adj");
  CHECK(a.g.format(a("e")) == "e : 0");
  CHECK(a.g.format(a("s0")) == "s1 : -2");
  CHECK(a("s0") == a("s0a"));
  CHECK(a("s1 s1") == a("e"));
  CHECK(a("s1 : 3") == a.g.mul(a("s1"), a("e : 3")));
  // (w1 t1)(w2 t2) = w1 w2 t_{w2^{-1} t1 + t2}
  CHECK(a.g.mul(a("e : 1"), a("s1 : 0")) == a("s1 : -1"));
  CHECK(a.g.inverse(a("s1 : 2")) == a("s1 : 2"));
  CHECK(a.g.inverse(a("e : 2")) == a("e : -2"));
  CHECK(kind_of([&] { a("s3 : 0"); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([&] { a("s1 : 0,0"); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { a("s1 : "); }) == ErrorKind::MalformedInput);
}

TEST_CASE("A1 lengths") {
  World a("A1_adj");
  CHECK(a.g.length(a("e")) == 0);
  for (int n = -5; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(a.g.length(a("e : " + std::to_string(n))) == std::abs(n));
    CHECK(a.g.length(a("s1 : " + std::to_string(n))) == std::abs(1 + n));
  }
  const Element tw0 = a.g.mul(a("e : 1"), a("s1"));
  CHECK(a.g.length(tw0) == 0);
  CHECK(a.g.is_omega(tw0));
}

TEST_CASE("length fault hook changes lengths") {
  World a("A1_adj");
  a.g.set_length_fault(true);
  CHECK(a.g.length(a("s1 : 1")) == 0);
  CHECK(a.g.length(a("s1 : -1")) == 2);
}

TEST_CASE("Omega") {
  CHECK(World("A1_adj").g.enumerate_omega(3).size() == 2);
  World a2("A2_adj");
  const auto om = a2.g.enumerate_omega(2);
  CHECK(om.size() == 3);
  for (const auto& w : om) CHECK(a2.g.length(w) == 0);
  CHECK(World("B2_adj").g.enumerate_omega(2).size() == 2);
  CHECK(World("A1xA1_adj").g.enumerate_omega(2).size() == 4);
  CHECK(kind_of([&] { a2.g.enumerate_omega(100000); }) == ErrorKind::BoundsTooLarge);
}

TEST_CASE("reduced expressions") {
  World a("A1_adj");
  const ReducedExpression r = a.g.reduced_expression(a("e : -2"));
  CHECK(a.g.format_word(r.word) == "s1 s0a");
  CHECK(r.omega == a.g.identity());
  const ReducedExpression z = a.g.reduced_expression(a("s1 : -1"));
  CHECK(z.word.empty());
  CHECK(z.omega == a("s1 : -1"));

  World b("B2_adj");
  std::mt19937_64 rng(7);
  for (const auto& lit : {"s1 s0a s2 : 3,-1", "s2 : -4,2", "e : 5,5"}) {
    const Element x = b(lit);
    for (int k = 0; k < 5; ++k) {
      const ReducedExpression rr = b.g.reduced_expression(x, &rng);
      CHECK(static_cast<std::int64_t>(rr.word.size()) == b.g.length(x));
      CHECK(b.g.mul(b.g.word_product(rr.word), rr.omega) == x);
      const OmegaLeftForm f = b.g.omega_left(rr);
      CHECK(b.g.mul(f.omega, b.g.word_product(f.word)) == x);
    }
  }
}

TEST_CASE("Bruhat order") {
  World a("A1_adj");
  CHECK(a.g.bruhat_leq(a("s1 s0"), a("s0 s1 s0")));
  CHECK_FALSE(a.g.bruhat_leq(a("s0 s1 s0"), a("s1 s0")));
  CHECK(a.g.bruhat_leq(a("e"), a("s0")));
  const Element om = a("s1 : -1");
  CHECK_FALSE(a.g.bruhat_leq(a("e"), om));
  CHECK_FALSE(a.g.bruhat_leq(om, a("e")));
  CHECK(a.g.bruhat_leq(om, a.g.mul(a("s1"), om)));
}

TEST_CASE("Bruhat order against subwords in A2") {
  World a("A2_adj");
  const oracle::Ball ball(a.g, 4);
  std::vector<Element> elts;
  for (const auto& [x, l] : ball.lengths()) elts.push_back(x);
  for (const auto& x : elts)
    for (const auto& y : elts) REQUIRE(a.g.bruhat_leq(x, y) == oracle::bruhat_subword(a.g, ball, x, y));
}

TEST_CASE("generators") {
  World a("A1xA1_adj");
  CHECK(a.g.num_generators() == 4);
  CHECK(a.g.generator_name(2) == "s0a");
  CHECK(a.g.generator_name(3) == "s0b");
  for (std::size_t s = 0; s < a.g.num_generators(); ++s) {
    CHECK(a.g.length(a.g.generator(s)) == 1);
    CHECK(a.g.mul(a.g.generator(s), a.g.generator(s)) == a.g.identity());
    CHECK(a.g.generator_index(a.g.generator(s)) == s);
  }
}
