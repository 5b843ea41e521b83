#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace ah;
using ah::test::datum_from_json;
using ah::test::kind_of;

TEST_CASE("A1_adj") {
  const auto d = load_preset("A1_adj");
  CHECK(d->rank() == 1);
  CHECK(d->positive_roots().size() == 1);
  CHECK(d->weyl_size() == 2);
  CHECK(d->w0() == d->simple_reflection(0));
  CHECK(dot(d->simple_roots()[0], d->varsigma()) == 1);
  CHECK(d->two_rho() == d->simple_roots()[0]);
  CHECK(d->coxeter_denominator() == 2);
}

TEST_CASE("rank-2 presets") {
  for (auto [name, roots, order] : {std::tuple{"A2_adj", 3, 6}, std::tuple{"B2_adj", 4, 8}, std::tuple{"A1xA1_adj", 2, 4}}) {
    CAPTURE(name);
    const auto d = load_preset(name);
    CHECK(d->positive_roots().size() == static_cast<std::size_t>(roots));
    CHECK(d->weyl_size() == static_cast<std::size_t>(order));
    CHECK(d->weyl()[d->w0()].length == roots);
    for (const auto& a : d->simple_roots()) CHECK(dot(a, d->varsigma()) == 1);
  }
  CHECK(load_preset("A1xA1_adj")->components().size() == 2);
  CHECK(load_preset("A2_adj")->coxeter_denominator() == 3);
  CHECK(load_preset("B2_adj")->coxeter_denominator() == 4);
}

TEST_CASE("dominance") {
  const auto d = load_preset("A1_adj");
  const Vec zero(1), s = d->varsigma();
  CHECK(d->is_dominant(zero));
  CHECK_FALSE(d->is_strictly_dominant(zero));
  CHECK(d->is_strictly_dominant(s));
  CHECK_FALSE(d->is_dominant(-s));
  const auto [dom, w] = d->dominant_conjugate(-3 * s);
  CHECK(dom == 3 * s);
  CHECK(d->act_y(w, -3 * s) == dom);
}

TEST_CASE("W-invariant form") {
  const auto d = load_preset("B2_adj");
  const Vec a{1, -2}, b{3, 1};
  for (std::uint32_t w = 0; w < d->weyl_size(); ++w) CHECK(d->form_y(d->act_y(w, a), d->act_y(w, b)) == d->form_y(a, b));
}

TEST_CASE("explicit matrices") {
  // SL2: alpha is twice the fundamental weight
  CHECK(kind_of([] { datum_from_json(R"({"simple_roots": [[2]], "simple_coroots": [[1]]})"); }) == ErrorKind::TorsionQuotient);
  // GL2 is reductive and admissible
  const auto gl2 = datum_from_json(R"({"simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]})");
  CHECK(gl2->rank() == 2);
  CHECK(gl2->semisimple_rank() == 1);
  CHECK_FALSE(gl2->is_semisimple());
  CHECK(gl2->orthogonal_part(Vec{3, 3}) == Vec{3, 3});
  CHECK(gl2->orthogonal_part(Vec{1, 0}).is_zero());
  CHECK(datum_from_json(R"({"preset": "B2_adj"})")->name() == "B2_adj");
}

TEST_CASE("malformed descriptors") {
  CHECK(kind_of([] { RootDatumSpec::from_preset("E8_sc"); }) == ErrorKind::UnknownPreset);
  CHECK(kind_of([] { datum_from_json("{"); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { datum_from_json(R"({"simple_roots": [[2, 0]], "simple_coroots": [[1]]})"); }) == ErrorKind::MalformedInput);
  // affine A1 Cartan matrix
  CHECK(kind_of([] { datum_from_json(R"({"simple_roots": [[1, 0], [-1, 0]], "simple_coroots": [[2, 0], [-2, 0]]})"); }) ==
        ErrorKind::CartanNotFiniteType);
  // diagonal entry 1
  CHECK(kind_of([] { datum_from_json(R"({"simple_roots": [[1]], "simple_coroots": [[1]]})"); }) == ErrorKind::CartanNotFiniteType);
}

TEST_CASE("coroot coordinates") {
  const auto d = load_preset("A2_adj");
  const Vec y = 2 * d->simple_coroots()[0] - d->simple_coroots()[1];
  const auto c = d->coroot_coordinates(y);
  REQUIRE(c.has_value());
  CHECK(*c == Vec{2, -1});
  CHECK(d->coroot_coordinates(d->varsigma()) == Vec{1, 1});
  CHECK_FALSE(d->coroot_coordinates(d->lift(Vec{1, 0})).has_value());
}
