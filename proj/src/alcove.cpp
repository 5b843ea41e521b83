#include "ah/alcove.hpp"

#include <algorithm>

namespace ah {

namespace {

// Calls f(c) for every integer vector c with lo <= c_i <= hi.
template <class F>
void for_box(std::size_t r, std::int64_t lo, std::int64_t hi, F&& f) {
  constexpr std::int64_t kMaxCells = 50'000'000;
  std::int64_t cells = 1;
  for (std::size_t i = 0; i < r && cells <= kMaxCells; ++i) cells *= std::max<std::int64_t>(hi - lo + 1, 0);
  if (hi - lo + 1 > kMaxCells || cells > kMaxCells) throw Error(ErrorKind::BoundsTooLarge, "enumeration window too large");
  Vec c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = lo;
  for (;;) {
    f(c);
    std::size_t i = 0;
    while (i < r && c[i] == hi) c[i++] = lo;
    if (i == r) return;
    ++c[i];
  }
}

}  // namespace

AlcovePoint base_point(const RootDatum& d) { return {d.varsigma(), d.coxeter_denominator()}; }

AlcovePoint act(const ExtWeyl& g, const Element& x, const AlcovePoint& p) {
  const RootDatum& d = g.datum();
  return {d.act_y(x.w, p.num + p.den * x.t), p.den};
}

Vec sample_point(const ExtWeyl& g, const Element& x) {
  const RootDatum& d = g.datum();
  return d.act_y(d.inverse(x.w), d.varsigma()) - d.coxeter_denominator() * x.t;
}

bool in_WextS(const ExtWeyl& g, const Element& x) {
  const Vec p = g.datum().simple_pairings(sample_point(g, x));
  return std::all_of(p.begin(), p.end(), [](auto c) { return c > 0; });
}

bool in_Wres(const ExtWeyl& g, const Element& x) {
  const std::int64_t h = g.datum().coxeter_denominator();
  const Vec p = g.datum().simple_pairings(sample_point(g, x));
  return std::all_of(p.begin(), p.end(), [h](auto c) { return c > 0 && c < h; });
}

Vec box_of(const ExtWeyl& g, const Element& x) {
  const RootDatum& d = g.datum();
  Vec p = d.simple_pairings(sample_point(g, x));
  for (auto& c : p) c = ceil_div(c, d.coxeter_denominator());
  return d.lift(p);
}

Element triangle(const ExtWeyl& g, const Element& x) {
  const Vec mu = box_of(g, x);
  const Element w0 = g.finite(g.datum().w0());
  return g.mul(g.mul(g.shift(x, mu), w0), g.translation(-mu));
}

Element triangle_inverse(const ExtWeyl& g, const Element& v) {
  const Vec nu = box_of(g, v) - g.datum().varsigma();
  const Element w0 = g.finite(g.datum().w0());
  return g.mul(g.mul(g.shift(v, nu), w0), g.translation(-nu));
}

ResDecomposition res_decompose(const ExtWeyl& g, const Element& x) {
  const RootDatum& d = g.datum();
  Vec p = d.simple_pairings(box_of(g, x));
  for (auto& c : p) c = 1 - c;
  const Vec lambda = d.lift(p);
  ResDecomposition out{g.shift(x, -lambda), lambda};
  ensure(in_Wres(g, out.y), "restricted part is not restricted");
  return out;
}

std::vector<Element> enumerate_Wres(const ExtWeyl& g) {
  std::vector<Element> out;
  for (std::uint32_t w = 0; w < g.datum().weyl_size(); ++w) out.push_back(res_decompose(g, g.finite(w)).y);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> enumerate_WextS(const ExtWeyl& g, std::int64_t max_len) {
  const RootDatum& d = g.datum();
  const std::int64_t bound = max_len + static_cast<std::int64_t>(d.positive_roots().size());
  std::vector<std::pair<std::int64_t, Element>> found;
  for_box(d.semisimple_rank(), -bound, bound, [&](const Vec& c) {
    const Vec t = d.lift(c);
    for (std::uint32_t w = 0; w < d.weyl_size(); ++w) {
      const Element x{w, t};
      const std::int64_t len = g.length(x);
      if (len <= max_len && in_WextS(g, x)) found.emplace_back(len, x);
    }
  });
  std::sort(found.begin(), found.end());
  std::vector<Element> out;
  for (auto& [len, x] : found) out.push_back(std::move(x));
  return out;
}

std::vector<Vec> enumerate_antidominant(const ExtWeyl& g, std::int64_t max_len) {
  const RootDatum& d = g.datum();
  std::vector<Vec> out;
  for_box(d.semisimple_rank(), -max_len, 0, [&](const Vec& c) {
    const Vec t = d.lift(c);
    if (g.length(g.translation(t)) <= max_len) out.push_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ah
