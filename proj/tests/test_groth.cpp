#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace ah;
using ah::test::kind_of;
using ah::test::World;

namespace {
Filtration filt(Flavor f, std::initializer_list<std::pair<Element, std::int64_t>> xs) {
  Filtration out{f, {}};
  for (const auto& [x, m] : xs) out.mults[x] += m;
  return out;
}
}  // namespace

TEST_CASE("phi_of_simple") {
  World a("A1_adj");
  GrothCalc c(a.g);
  const Parabolic none(a.g, {});
  CHECK(c.phi_of_simple(a("e : -2"), none) == ClassVector{{a("e : 2"), 1}, {a("e"), 1}, {a("e : -2"), 1}});
  CHECK(c.phi_of_simple(a("e"), none) == ClassVector{{a("e"), 1}});
  CHECK(c.phi_of_simple(a("s1 : -1"), none) == ClassVector{{a("s1 : -1"), 1}});
  CHECK(kind_of([&] { c.phi_of_simple(a("e : 1"), none); }) == ErrorKind::NotSpherical);
  for (const auto& [z, m] : c.phi_of_simple(a("s1 : -4"), none)) CHECK(c.order().leq(z, a("s1 : -4")));
}

TEST_CASE("grading shift") {
  World a("A1_adj");
  GrothCalc c(a.g);
  const Filtration f = filt(Flavor::CoVerma, {{a("e"), 1}});
  CHECK(c.grading_shift(f, Vec{1}) == filt(Flavor::CoVerma, {{a("e : -1"), 1}}));
  CHECK(c.grading_shift(f, Vec{0}) == f);
  CHECK(c.grading_shift(c.grading_shift(f, Vec{3}), Vec{-3}) == f);
}

TEST_CASE("seed and wall crossing") {
  World a("A1_adj");
  GrothCalc c(a.g);
  const Filtration seed = c.seed_filtration();
  CHECK(seed == filt(Flavor::CoVerma, {{a("e : -1"), 1}, {a("s1 : -1"), 1}}));
  CHECK(c.xi_omega(seed, a("e")) == seed);
  const Element om = a.g.inverse(a.g.mul(a("e : 1"), a("s1")));
  CHECK(c.xi_omega(seed, om) == filt(Flavor::CoVerma, {{a("e"), 1}, {a("s0"), 1}}));
  CHECK(c.xi_s(seed, 0).total() == 4);
  CHECK(kind_of([&] { c.xi_omega(seed, a("s1")); }) == ErrorKind::Internal);

  World b("A2_adj");
  GrothCalc cb(b.g);
  CHECK(cb.seed_filtration().mults.size() == 6);
}

TEST_CASE("projective filtrations") {
  World a("A1_adj");
  GrothCalc c(a.g);
  CHECK(c.projective_filtration(a("e")) == filt(Flavor::CoVerma, {{a("e"), 1}, {a("s0"), 1}}));
  CHECK(c.projective_filtration(a("s1 : -1")) == filt(Flavor::CoVerma, {{a("s1 : -1"), 1}, {a("e : -1"), 1}}));
  CHECK(kind_of([&] { c.projective_filtration(a("e : -2")); }) == ErrorKind::NotRestricted);
  CHECK(c.dimend(a("e")) == 2);

  World b("B2_adj");
  GrothCalc cb(b.g);
  for (const auto& x : enumerate_Wres(b.g)) {
    const Filtration f = cb.projective_filtration(x);
    CHECK(f.mults.at(x) == 1);
    CHECK(f.mults.at(triangle(b.g, x)) == 1);
  }
}

TEST_CASE("averaging") {
  World a("A1_adj");
  GrothCalc c(a.g);
  const Parabolic s = Parabolic::parse(a.g, "s1");
  const Parabolic none(a.g, {});
  const Filtration fe = filt(Flavor::CoVerma, {{a("e"), 1}});
  CHECK(c.av_psi(fe, s) == filt(Flavor::CoVerma, {{a("s1"), 1}}));
  CHECK(c.av_star(filt(Flavor::CoVerma, {{a("s1"), 1}}), s) == filt(Flavor::CoVerma, {{a("s1"), 1}, {a("e"), 1}}));
  CHECK(c.av_shriek(filt(Flavor::CoVerma, {{a("s1"), 1}}), s) == c.av_star(filt(Flavor::CoVerma, {{a("s1"), 1}}), s));
  CHECK(c.av_psi(fe, none) == fe);
  CHECK(c.av_star(fe, none) == fe);
  CHECK(kind_of([&] { c.av_star(fe, s); }) == ErrorKind::MalformedInput);
}

TEST_CASE("dim_hom and duality") {
  World a("A1_adj");
  GrothCalc c(a.g);
  const Filtration z = filt(Flavor::Verma, {{a("s0"), 1}});
  const Filtration zp = filt(Flavor::CoVerma, {{a("s0"), 1}});
  CHECK(c.dim_hom(z, zp) == 1);
  CHECK(c.dim_hom(z, filt(Flavor::CoVerma, {{a("e"), 1}})) == 0);
  CHECK(kind_of([&] { c.dim_hom(zp, zp); }) == ErrorKind::FlavorMismatch);
  CHECK(c.duality(zp) == z);
  CHECK(c.duality(c.duality(zp)) == zp);
  const ClassVector v{{a("e"), 2}};
  CHECK(c.duality(v) == v);
}

TEST_CASE("forget_grading") {
  World a("A1_adj");
  GrothCalc c(a.g);
  for (const auto& x : enumerate_Wres(a.g)) CHECK(c.forget_grading(x) == x);
  CHECK(c.forget_grading(a("e : -2")) == a("e"));
  CHECK(c.forget_grading(a("s1 : 3")) == a("s1 : -1"));

  const auto d = ah::test::datum_from_json(R"({"simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]})");
  ExtWeyl g(d);
  GrothCalc cg(g);
  const Element w = g.parse("s1 : 3,5");
  CHECK(cg.forget_grading(w) == cg.forget_grading(g.shift(w, Vec{2, 2})));
  CHECK(cg.forget_grading(w) == cg.forget_grading(g.shift(w, Vec{1, 0})));
  CHECK(in_Wres(g, cg.forget_grading(w)));
}
