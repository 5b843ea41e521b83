#include "ah/groth.hpp"

namespace ah {

std::string_view to_string(Flavor f) { return f == Flavor::Verma ? "Verma" : "coVerma"; }

std::int64_t Filtration::total() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : mults) s += m;
  return s;
}

namespace {

void bump(std::map<Element, std::int64_t>& m, const Element& x, std::int64_t k) {
  if (k == 0) return;
  auto [it, inserted] = m.emplace(x, k);
  if (!inserted && (it->second += k) == 0) m.erase(it);
}

}  // namespace

GrothCalc::GrothCalc(const ExtWeyl& g) : g_(g), order_(g), satake_(g.datum_ptr()) {}

ClassVector GrothCalc::phi_of_simple(const Element& w, const Parabolic& a) {
  if (!a.in_AWextS(w)) throw Error(ErrorKind::NotSpherical, g_.format(w) + " is not in ^A W_ext^S");
  const RootDatum& d = g_.datum();
  const ResDecomposition rd = res_decompose(g_, w);
  const Vec mu = d.act_y(d.w0(), rd.lambda);
  ClassVector out;
  for (const auto& [nu, m] : satake_.character(mu)) bump(out, g_.shift(rd.y, nu), m);
  return out;
}

ClassVector GrothCalc::grading_shift(const ClassVector& v, const Vec& nu) const {
  ClassVector out;
  for (const auto& [w, m] : v) bump(out, g_.shift(w, -nu), m);
  return out;
}

Filtration GrothCalc::grading_shift(const Filtration& f, const Vec& nu) const {
  return {f.flavor, grading_shift(ClassVector(f.mults), nu)};
}

Filtration GrothCalc::seed_filtration() const {
  const RootDatum& d = g_.datum();
  const Vec lambda = d.act_y(d.w0(), d.varsigma());
  Filtration f;
  for (std::uint32_t w = 0; w < d.weyl_size(); ++w) bump(f.mults, {w, lambda}, 1);
  return f;
}

Filtration GrothCalc::xi_s(const Filtration& f, std::size_t s) const {
  Filtration out{f.flavor, f.mults};
  for (const auto& [w, m] : f.mults) bump(out.mults, g_.mul(g_.generator(s), w), m);
  return out;
}

Filtration GrothCalc::xi_omega(const Filtration& f, const Element& omega) const {
  ensure(g_.is_omega(omega), "xi_omega needs a length-zero element");
  Filtration out{f.flavor, {}};
  for (const auto& [w, m] : f.mults) bump(out.mults, g_.mul(omega, w), m);
  return out;
}

Filtration GrothCalc::projective_filtration(const Element& x, std::mt19937_64* rng) {
  if (!in_Wres(g_, x)) throw Error(ErrorKind::NotRestricted, g_.format(x) + " is not restricted");
  const RootDatum& d = g_.datum();
  const Element t_w0 = g_.mul(g_.translation(d.varsigma()), g_.finite(d.w0()));
  const Element y = g_.mul(t_w0, g_.inverse(x));
  const OmegaLeftForm form = g_.omega_left(g_.reduced_expression(y, rng));
  Filtration f = xi_omega(seed_filtration(), g_.inverse(form.omega));
  for (std::size_t s : form.word) f = xi_s(f, s);

  const Element top = triangle(g_, x);
  auto mult = [&](const Element& z) {
    auto it = f.mults.find(z);
    return it == f.mults.end() ? 0 : it->second;
  };
  ensure(mult(x) == 1, "projective filtration: bottom label multiplicity is not 1");
  ensure(mult(top) == 1, "projective filtration: top label multiplicity is not 1");
  for (const auto& [z, m] : f.mults)
    ensure(order_.leq(x, z) && order_.leq(z, top), "projective filtration: label outside the order interval");
  return f;
}

Filtration GrothCalc::av_psi(const Filtration& f, const Parabolic& a) const {
  Filtration out{f.flavor, {}};
  for (const auto& [u, m] : f.mults) bump(out.mults, a.min_rep(u), m);
  return out;
}

Filtration GrothCalc::av_star(const Filtration& f, const Parabolic& a) const {
  Filtration out{f.flavor, {}};
  for (const auto& [w, m] : f.mults) {
    if (!a.in_AWext(w)) throw Error(ErrorKind::MalformedInput, g_.format(w) + " is not in ^A W_ext");
    for (const auto& v : a.elements()) bump(out.mults, g_.mul(v, w), m);
  }
  return out;
}

std::int64_t GrothCalc::dim_hom(const Filtration& verma, const Filtration& coverma) const {
  if (verma.flavor != Flavor::Verma || coverma.flavor != Flavor::CoVerma)
    throw Error(ErrorKind::FlavorMismatch, "dim_hom pairs a Verma filtration with a coVerma filtration");
  std::int64_t s = 0;
  for (const auto& [y, m] : verma.mults) {
    auto it = coverma.mults.find(y);
    if (it != coverma.mults.end()) s += m * it->second;
  }
  return s;
}

std::int64_t GrothCalc::dimend(const Element& x) {
  const Filtration p = projective_filtration(x);
  return dim_hom(duality(p), p);
}

Filtration GrothCalc::duality(const Filtration& f) const {
  return {f.flavor == Flavor::Verma ? Flavor::CoVerma : Flavor::Verma, f.mults};
}

Element GrothCalc::forget_grading(const Element& w) const {
  const Element x = res_decompose(g_, w).y;
  return {x.w, x.t - g_.datum().orthogonal_part(x.t)};
}

}  // namespace ah
