#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace ah;
using ah::test::World;

TEST_CASE("action on points") {
  World a("A1_adj");
  const AlcovePoint p0 = base_point(*a.d);
  CHECK(act(a.g, a("e"), p0) == p0);
  const AlcovePoint moved = act(a.g, a("e : 1"), p0);
  CHECK(moved == AlcovePoint{p0.num + p0.den * a.d->varsigma(), p0.den});
}

TEST_CASE("W_ext^S in A1") {
  World a("A1_adj");
  for (int n = -4; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(in_WextS(a.g, a("e : " + std::to_string(n))) == (n <= 0));
    CHECK(in_WextS(a.g, a("s1 : " + std::to_string(n))) == (n <= -1));
  }
}

TEST_CASE("restricted elements and boxes") {
  World a("A1_adj");
  std::vector<Element> res;
  for (int n = -3; n <= 3; ++n)
    for (const char* w : {"e", "s1"}) {
      const Element x = a(std::string(w) + " : " + std::to_string(n));
      if (in_Wres(a.g, x)) res.push_back(x);
    }
  CHECK(res == std::vector<Element>{a("s1 : -1"), a("e : 0")});
  CHECK(box_of(a.g, a("e : -2")) == 3 * a.d->varsigma());
  CHECK(box_of(a.g, a("e")) == a.d->varsigma());
  for (const char* p : {"A1_adj", "A2_adj", "B2_adj", "A1xA1_adj"}) {
    World w(p);
    const auto r = enumerate_Wres(w.g);
    CHECK(r.size() == w.d->weyl_size());
    for (const auto& x : r) CHECK(in_Wres(w.g, x));
  }
}

TEST_CASE("triangle") {
  World a("A1_adj");
  CHECK(triangle(a.g, a("e")) == a("s0"));
  CHECK(triangle(a.g, a("s1 : -1")) == a("e : -1"));
  World b("B2_adj");
  for (const auto& lit : {"e", "s1 s0a : 2,-3", "s2 s1 : -1,0", "s0a : 4,4"}) {
    const Element x = b(lit);
    CHECK(triangle_inverse(b.g, triangle(b.g, x)) == x);
    CHECK(triangle(b.g, triangle_inverse(b.g, x)) == x);
  }
}

TEST_CASE("res_decompose") {
  World a("A1_adj");
  const ResDecomposition r = res_decompose(a.g, a("e : -2"));
  CHECK(r.y == a("e"));
  CHECK(r.lambda == -2 * a.d->varsigma());
  const ResDecomposition q = res_decompose(a.g, a("s1 : -3"));
  CHECK(q.y == a("s1 : -1"));
  CHECK(q.lambda == -2 * a.d->varsigma());
  for (const auto& x : enumerate_Wres(a.g)) {
    CHECK(res_decompose(a.g, x).y == x);
    CHECK(res_decompose(a.g, x).lambda.is_zero());
  }
  World b("A2_adj");
  for (const auto& lit : {"s1 : 5,-2", "s2 s1 : -3,-3", "e : 1,7"}) {
    const Element x = b(lit);
    const ResDecomposition d = res_decompose(b.g, x);
    CHECK(in_Wres(b.g, d.y));
    CHECK(b.g.shift(d.y, d.lambda) == x);
  }
}

TEST_CASE("W_ext^S enumeration is sorted and complete in A1") {
  World a("A1_adj");
  const auto ws = enumerate_WextS(a.g, 4);
  // t_{-n} has length n, s t_{-n} has length n - 1 for n >= 1
  CHECK(ws.size() == 10);
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(a.g.length(ws[i - 1]) <= a.g.length(ws[i]));
  for (const auto& w : ws) CHECK(in_WextS(a.g, w));
  CHECK(enumerate_antidominant(a.g, 3).size() == 4);
}

TEST_CASE("reductive datum") {
  const auto d = ah::test::datum_from_json(R"({"simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]})");
  ExtWeyl g(d);
  const Element x = g.parse("s1 : 3,5");
  const ResDecomposition r = res_decompose(g, x);
  CHECK(in_Wres(g, r.y));
  CHECK(g.shift(r.y, r.lambda) == x);
  CHECK(d->orthogonal_part(r.lambda).is_zero());
  CHECK(enumerate_Wres(g).size() == 2);
}
