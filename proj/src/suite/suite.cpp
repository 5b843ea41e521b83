#include "ah/suite.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "ah/groth.hpp"
#include "ah/oracle/oracle.hpp"
#include "json.hpp"

namespace ah {

namespace {

struct Fail {
  std::string detail;
  std::string args;  // CLI arguments reproducing the failure
};
using Outcome = std::optional<Fail>;

struct Ctx {
  Ctx(const std::string& p, const SuiteOptions& o)
      : preset(p), d(load_preset(p)), g(d), hecke(g), groth(g), opt(o), rng(o.seed) {
    g.set_length_fault(o.fault_length);
    kl_len = o.kl_len.value_or(default_kl_len(p));
  }
  std::string preset;
  RootDatumPtr d;
  ExtWeyl g;
  Hecke hecke;
  GrothCalc groth;
  SuiteOptions opt;
  std::mt19937_64 rng;
  std::int64_t kl_len = 0;
  std::string note;  // reported for passing checks

  PeriodicOrder& order() { return groth.order(); }
  std::string lit(const Element& x) const { return "'" + g.format(x) + "'"; }
  std::int64_t len(const Element& x) const { return g.length(x); }
  Element w0() const { return g.finite(d->w0()); }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }
  Element random_element(std::int64_t span = 3) {
    Vec c(d->semisimple_rank());
    for (auto& x : c) x = uniform(-span, span);
    return {static_cast<std::uint32_t>(uniform(0, static_cast<std::int64_t>(d->weyl_size()) - 1)), d->lift(c)};
  }
  Element random_WextS(std::int64_t span = 3) {
    const Element x = random_element(span);
    return g.shift(x, -order().min_pushdown(x) * d->varsigma());
  }
  std::size_t random_gen() { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(g.num_generators()) - 1)); }

  /// Elements w t_lift(c) with |c_i| <= span.
  std::vector<Element> window(std::int64_t span) const {
    std::vector<Element> out;
    const std::size_t r = d->semisimple_rank();
    Vec c(r);
    for (auto& x : c) x = -span;
    for (;;) {
      for (std::uint32_t w = 0; w < d->weyl_size(); ++w) out.push_back({w, d->lift(c)});
      std::size_t i = 0;
      while (i < r && c[i] == span) c[i++] = -span;
      if (i == r) break;
      ++c[i];
    }
    return out;
  }
};

struct CheckDef {
  std::string name;
  int criterion;
  std::function<Outcome(Ctx&)> run;
};

std::string join_names(const ExtWeyl& g, const std::vector<std::size_t>& gens) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + g.generator_name(gens[i]);
  return s;
}

// ---------------------------------------------------------------- root datum

Outcome datum_reflections(Ctx& c) {
  const RootDatum& d = *c.d;
  std::set<Vec> pos, all;
  for (const auto& b : d.positive_roots()) {
    pos.insert(b.root);
    all.insert(b.root);
    all.insert(-b.root);
  }
  for (const auto& beta : d.positive_roots())
    for (const auto& a : all)
      if (!all.count(a - dot(a, beta.coroot) * beta.root)) return Fail{"s_beta does not preserve R, beta = " + beta.root.str(), "datum check"};
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
    const Vec& ai = d.simple_roots()[i];
    const Vec& ci = d.simple_coroots()[i];
    for (const auto& a : pos) {
      if (a == ai) continue;
      if (!pos.count(a - dot(a, ci) * ai)) return Fail{"s_i does not permute R+ minus alpha_i, i = " + std::to_string(i + 1), "datum check"};
    }
  }
  return std::nullopt;
}

Outcome datum_poincare(Ctx& c) {
  const RootDatum& d = *c.d;
  std::map<int, std::int64_t> lhs;
  for (const auto& w : d.weyl()) lhs[2 * w.length] += 1;
  // exponents from the height partition of the positive roots
  std::map<int, int> by_height;
  int max_h = 0;
  for (const auto& b : d.positive_roots()) {
    ++by_height[b.height];
    max_h = std::max(max_h, b.height);
  }
  std::map<int, std::int64_t> rhs{{0, 1}};
  for (int m = 1; m <= max_h; ++m) {
    const int k = by_height[m] - by_height[m + 1];
    for (int rep = 0; rep < k; ++rep) {
      std::map<int, std::int64_t> next;
      for (auto [e, coef] : rhs)
        for (int j = 0; j <= m; ++j) next[e + 2 * j] += coef;
      rhs = std::move(next);
    }
  }
  if (lhs != rhs) return Fail{"Poincare polynomial of W does not factor by the degrees", "datum check"};
  return std::nullopt;
}

Outcome datum_rho(Ctx& c) {
  const RootDatum& d = *c.d;
  for (const auto& ac : d.simple_coroots())
    if (dot(d.two_rho(), ac) != 2) return Fail{"<2rho, alpha^v> != 2 for a simple coroot", "datum check"};
  if (static_cast<std::size_t>(d.weyl()[d.w0()].length) != d.positive_roots().size())
    return Fail{"l(w0) != |R+|", "datum check"};
  for (const auto& b : d.positive_roots()) {
    const Vec img = -d.act_x(d.w0(), b.root);
    bool found = false;
    for (const auto& a : d.positive_roots()) found = found || a.root == img;
    if (!found) return Fail{"w0(R+) != -R+", "datum check"};
  }
  for (const auto& a : d.simple_roots())
    if (dot(a, d.varsigma()) != 1) return Fail{"<alpha, varsigma> != 1", "datum check"};
  return std::nullopt;
}

// ---------------------------------------------------------------- ext_weyl

Outcome wext_reduced(Ctx& c) {
  for (std::size_t k = 0; k < 2 * c.opt.samples; ++k) {
    const Element x = c.random_element(4);
    const ReducedExpression r = c.g.reduced_expression(x);
    const std::string args = "wext reduce --elt " + c.lit(x);
    if (static_cast<std::int64_t>(r.word.size()) != c.len(x)) return Fail{"reduced word length differs from l(x)", args};
    if (c.g.mul(c.g.word_product(r.word), r.omega) != x) return Fail{"reduced word does not multiply back to x", args};
    const OmegaLeftForm f = c.g.omega_left(r);
    if (c.g.mul(f.omega, c.g.word_product(f.word)) != x) return Fail{"Omega-left form does not multiply back", args};
  }
  return std::nullopt;
}

Outcome wext_bfs(Ctx& c) {
  const std::int64_t radius = c.d->semisimple_rank() == 1 ? 10 : 6;
  const oracle::Ball ball(c.g, radius);
  for (const auto& [x, l] : ball.lengths())
    if (c.len(x) != l) return Fail{"length formula " + std::to_string(c.len(x)) + " vs BFS " + std::to_string(l), "wext len --elt " + c.lit(x)};
  return std::nullopt;
}

Outcome wext_omega(Ctx& c) {
  const auto omegas = c.g.enumerate_omega(2);
  auto geo = oracle::omega_by_alcove(c.g, 2);
  std::sort(geo.begin(), geo.end());
  if (omegas != geo) return Fail{"length-zero elements differ from alcove stabilisers", "wext len --elt 'e : " + c.g.identity().t.str() + "'"};
  for (std::size_t k = 0; k < c.opt.samples; ++k) {
    const Element x = c.random_element();
    const Element& om = omegas[static_cast<std::size_t>(c.uniform(0, static_cast<std::int64_t>(omegas.size()) - 1))];
    if (c.len(c.g.mul(om, x)) != c.len(x) || c.len(c.g.mul(x, om)) != c.len(x))
      return Fail{"l(omega x) or l(x omega) differs from l(x)", "wext mul --lhs " + c.lit(om) + " --rhs " + c.lit(x)};
    const Element y = c.random_element();
    const Element xy = c.g.mul(x, y);
    if (c.len(xy) > c.len(x) + c.len(y)) return Fail{"l(xy) > l(x) + l(y)", "wext mul --lhs " + c.lit(x) + " --rhs " + c.lit(y)};
    if (c.g.mul(x, c.g.inverse(x)) != c.g.identity()) return Fail{"x x^{-1} != e", "wext inv --elt " + c.lit(x)};
  }
  return std::nullopt;
}

Outcome wext_bruhat(Ctx& c) {
  const std::int64_t radius = c.d->semisimple_rank() == 1 ? 7 : 4;
  const oracle::Ball ball(c.g, radius);
  std::vector<Element> elts;
  for (const auto& [x, l] : ball.lengths()) elts.push_back(x);
  for (const auto& x : elts)
    for (const auto& y : elts)
      if (c.g.bruhat_leq(x, y) != oracle::bruhat_subword(c.g, ball, x, y))
        return Fail{"Bruhat recursion disagrees with the subword criterion",
                    "wext bruhat --lhs " + c.lit(x) + " --rhs " + c.lit(y)};
  return std::nullopt;
}

// ---------------------------------------------------------------- alcove

Outcome alcove_group_law(Ctx& c) {
  const AlcovePoint p0 = base_point(*c.d);
  for (std::size_t k = 0; k < c.opt.samples; ++k) {
    const Element x = c.random_element(), y = c.random_element();
    if (!(act(c.g, c.g.mul(x, y), p0) == act(c.g, x, act(c.g, y, p0))))
      return Fail{"act(xy) != act(x) act(y)", "wext mul --lhs " + c.lit(x) + " --rhs " + c.lit(y)};
  }
  return std::nullopt;
}

Outcome alcove_triangle(Ctx& c) {
  for (std::size_t k = 0; k < 2 * c.opt.samples; ++k) {
    const Element x = c.random_element(4);
    const std::string args = "wext triangle --elt " + c.lit(x);
    const Element t = triangle(c.g, x);
    if (triangle_inverse(c.g, t) != x || triangle(c.g, triangle_inverse(c.g, x)) != x)
      return Fail{"triangle and triangle_inverse are not mutually inverse", args};
    Vec lam(c.d->semisimple_rank());
    for (auto& v : lam) v = c.uniform(-3, 3);
    const Vec l = c.d->lift(lam);
    if (triangle(c.g, c.g.shift(x, l)) != c.g.shift(t, l)) return Fail{"triangle(x t_l) != triangle(x) t_l", args};
    if ((c.len(x) + c.len(t) + c.len(c.w0())) % 2 != 0) return Fail{"l(x) + l(x^tri) + l(w0) is odd", args};
  }
  return std::nullopt;
}

Outcome alcove_ws_wres(Ctx& c) {
  for (const auto& x : c.window(3)) {
    const ResDecomposition rd = res_decompose(c.g, x);
    const bool anti = c.d->is_dominant(-rd.lambda);
    const std::string args = "wext res-decompose --elt " + c.lit(x);
    if (in_WextS(c.g, x) != anti) return Fail{"in_WextS(x) differs from antidominance of the res translation", args};
    if (in_WextS(c.g, x) && !in_WextS(c.g, triangle(c.g, x))) return Fail{"triangle leaves W_ext^S", "wext triangle --elt " + c.lit(x)};
  }
  return std::nullopt;
}

Outcome alcove_res_oracle(Ctx& c) {
  // restricted elements found by scanning, then x = y t_lambda solved by search
  std::vector<Element> restricted;
  for (const auto& x : c.window(3))
    if (in_Wres(c.g, x)) restricted.push_back(x);
  if (c.d->is_semisimple() && restricted.size() != c.d->weyl_size())
    return Fail{"|W_ext^res| != |W|", "wext in-wres --elt " + c.lit(c.g.identity())};
  for (std::size_t k = 0; k < c.opt.samples; ++k) {
    const Element x = c.random_element(6);
    std::vector<ResDecomposition> hits;
    for (const auto& y : restricted)
      if (y.w == x.w && c.d->orthogonal_part(x.t - y.t).is_zero()) hits.push_back({y, x.t - y.t});
    const ResDecomposition rd = res_decompose(c.g, x);
    if (hits.size() != 1 || hits[0].y != rd.y || hits[0].lambda != rd.lambda)
      return Fail{"res_decompose differs from exhaustive search", "wext res-decompose --elt " + c.lit(x)};
  }
  return std::nullopt;
}

Outcome alcove_proj_prep(Ctx& c) {
  const Element tw0 = c.g.mul(c.g.translation(c.d->varsigma()), c.w0());
  for (const auto& x : enumerate_Wres(c.g)) {
    const Element y = c.g.mul(tw0, c.g.inverse(x));
    const Element xt = triangle(c.g, x);
    const Element yxt = c.g.mul(y, xt);
    const std::string args = "wext triangle --elt " + c.lit(x);
    if (c.len(c.g.mul(y, x)) != c.len(y) + c.len(x)) return Fail{"l(yx) != l(y) + l(x)", args};
    if (c.len(yxt) != c.len(xt) - c.len(y)) return Fail{"l(y x^tri) != l(x^tri) - l(y)", args};
    if (yxt.w != c.d->identity()) return Fail{"y x^tri is not a translation", args};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 3

Outcome res_complement(Ctx& c) {
  const RootDatum& d = *c.d;
  const Element tw0 = c.g.mul(c.g.translation(d.varsigma()), c.w0());
  const std::int64_t expect = dot(d.two_rho(), d.varsigma()) - static_cast<std::int64_t>(d.positive_roots().size());
  if (c.len(tw0) != expect)
    return Fail{"l(t_varsigma w0) = " + std::to_string(c.len(tw0)) + ", expected <2rho,varsigma> - l(w0) = " + std::to_string(expect),
                "wext len --elt " + c.lit(tw0)};
  for (const auto& x : enumerate_Wres(c.g)) {
    const Element y = c.g.mul(tw0, c.g.inverse(x));
    if (c.len(x) + c.len(y) != c.len(tw0))
      return Fail{"l(x) + l(y) != l(t_varsigma w0) with y = " + c.g.format(y), "wext len --elt " + c.lit(x)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 4

Outcome lengths_add(Ctx& c) {
  const std::int64_t bound = 10;
  const oracle::Ball ball(c.g, bound + 1);
  std::vector<Element> ws;
  for (const auto& [x, l] : ball.lengths())
    if (l <= bound && ball.minimal_in_coset(x) && c.d->orthogonal_part(x.t).is_zero()) ws.push_back(x);
  std::sort(ws.begin(), ws.end());
  const std::vector<Element> engine = [&] {
    auto v = enumerate_WextS(c.g, bound);
    std::sort(v.begin(), v.end());
    return v;
  }();
  if (ws != engine)
    return Fail{"W_ext^S (length <= 10) from BFS differs from the alcove test (" + std::to_string(ws.size()) + " vs " +
                    std::to_string(engine.size()) + ")",
                "wext in-wexts --elt " + c.lit(c.g.identity())};
  const auto lambdas = enumerate_antidominant(c.g, bound);
  for (const auto& w : ws)
    for (const auto& l : lambdas) {
      const Element tl = c.g.translation(l);
      if (c.len(c.g.shift(w, l)) != ball.length(w) + c.len(tl))
        return Fail{"l(w t_lambda) != l(w) + l(t_lambda), lambda = " + l.str(), "wext mul --lhs " + c.lit(w) + " --rhs " + c.lit(tl)};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 5

std::string porder_args(Ctx& c, const Element& x, const Element& y) {
  return "wext porder --lhs " + c.lit(x) + " --rhs " + c.lit(y);
}

// random walk down the periodic order from y
Element walk_down(Ctx& c, Element y, int steps) {
  for (int k = 0; k < steps; ++k) {
    std::vector<Element> below;
    for (std::size_t s = 0; s < c.g.num_generators(); ++s) {
      const Element sy = c.g.mul(c.g.generator(s), y);
      if (c.order().leq(sy, y)) below.push_back(sy);
    }
    if (below.empty()) break;
    y = below[static_cast<std::size_t>(c.uniform(0, static_cast<std::int64_t>(below.size()) - 1))];
  }
  return y;
}

Outcome porder_1(Ctx& c) {
  for (std::size_t k = 0; k < c.opt.samples; ++k) {
    const Element w = c.random_element();
    const Element sw = c.g.mul(c.g.generator(c.random_gen()), w);
    if (!c.order().leq(sw, w) && !c.order().leq(w, sw)) return Fail{"sw and w incomparable", porder_args(c, sw, w)};
  }
  return std::nullopt;
}

Outcome porder_2(Ctx& c) {
  for (std::size_t k = 0; k < c.opt.samples; ++k) {
    const Element y = c.random_element();
    const Element yp = (k % 2) ? walk_down(c, y, 3) : c.random_element();
    Vec m(c.d->semisimple_rank());
    for (auto& v : m) v = c.uniform(-3, 3);
    const Vec mu = c.d->lift(m);
    if (c.order().leq(y, yp) != c.order().leq(c.g.shift(y, mu), c.g.shift(yp, mu)))
      return Fail{"order not invariant under right translation by " + mu.str(), porder_args(c, y, yp)};
    if (c.order().leq(yp, y) != c.order().leq(c.g.shift(yp, mu), c.g.shift(y, mu)))
      return Fail{"order not invariant under right translation by " + mu.str(), porder_args(c, yp, y)};
  }
  return std::nullopt;
}

Outcome porder_3(Ctx& c) {
  for (std::size_t k = 0; k < c.opt.samples; ++k) {
    const Element y = c.random_WextS();
    Element yp = (k % 2) ? c.random_WextS() : walk_down(c, y, 2);
    if (!in_WextS(c.g, yp)) yp = c.g.shift(yp, -c.order().min_pushdown(yp) * c.d->varsigma());
    if (c.order().leq(yp, y) != c.g.bruhat_leq(yp, y)) return Fail{"periodic order differs from Bruhat order on W_ext^S", porder_args(c, yp, y)};
    if (c.order().leq(y, yp) != c.g.bruhat_leq(y, yp)) return Fail{"periodic order differs from Bruhat order on W_ext^S", porder_args(c, y, yp)};
  }
  return std::nullopt;
}

Outcome porder_4(Ctx& c) {
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < c.opt.samples && attempt < 50 * c.opt.samples; ++attempt) {
    const Element yp = c.random_element();
    const Element y = walk_down(c, yp, static_cast<int>(c.uniform(1, 4)));
    const Element& s = c.g.generator(c.random_gen());
    const Element sy = c.g.mul(s, y);
    if (y == yp || !c.order().leq(y, yp) || !c.order().leq(sy, y)) continue;
    ++done;
    const Element syp = c.g.mul(s, yp);
    if (!c.order().leq(sy, yp) || !c.order().leq(sy, syp))
      return Fail{"property (4) fails for y = " + c.g.format(y) + ", s = " + c.g.format(s), porder_args(c, sy, syp)};
  }
  if (done < c.opt.samples) return Fail{"too few instances with the premise of (4)", "suite run"};
  return std::nullopt;
}

Outcome porder_5(Ctx& c) {
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < c.opt.samples && attempt < 50 * c.opt.samples; ++attempt) {
    const Element yp = c.random_element();
    const Element y = walk_down(c, yp, static_cast<int>(c.uniform(1, 4)));
    const Element& s = c.g.generator(c.random_gen());
    const Element syp = c.g.mul(s, yp);
    if (y == yp || !c.order().leq(y, yp) || !c.order().leq(yp, syp)) continue;
    ++done;
    const Element sy = c.g.mul(s, y);
    if (!c.order().leq(y, syp) || !c.order().leq(sy, syp))
      return Fail{"property (5) fails for y = " + c.g.format(y) + ", s = " + c.g.format(s), porder_args(c, sy, syp)};
  }
  if (done < c.opt.samples) return Fail{"too few instances with the premise of (5)", "suite run"};
  return std::nullopt;
}

Outcome porder_lambda(Ctx& c) {
  for (std::size_t k = 0; k < std::max<std::size_t>(200, c.opt.samples / 2); ++k) {
    const Element x = c.random_element();
    const Element y = (k % 2) ? walk_down(c, x, 3) : c.random_element();
    const std::int64_t n = std::max(c.order().min_pushdown(x), c.order().min_pushdown(y));
    if (c.order().leq_at(y, x, n) != c.order().leq_at(y, x, n + 1 + c.uniform(0, 3)))
      return Fail{"periodic order depends on the pushdown", porder_args(c, y, x)};
  }
  return std::nullopt;
}

Outcome porder_weights(Ctx& c) {
  const auto res = enumerate_Wres(c.g);
  const RootDatum& d = *c.d;
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < c.opt.samples && attempt < 50 * c.opt.samples; ++attempt) {
    Vec n(d.semisimple_rank());
    for (auto& v : n) v = c.uniform(0, 2);
    const Vec nu = d.lift(n);
    Vec mu = nu;
    for (int k = static_cast<int>(c.uniform(0, 3)); k > 0; --k)
      mu += d.positive_roots()[static_cast<std::size_t>(c.uniform(0, static_cast<std::int64_t>(d.positive_roots().size()) - 1))].coroot;
    if (!d.is_dominant(mu)) continue;
    ++done;
    const Element& y = res[static_cast<std::size_t>(c.uniform(0, static_cast<std::int64_t>(res.size()) - 1))];
    const Element a = c.g.shift(y, d.act_y(d.w0(), nu)), b = c.g.shift(y, d.act_y(d.w0(), mu));
    if (!c.order().leq(a, b)) return Fail{"y t_{w0 nu} not below y t_{w0 mu}", porder_args(c, a, b)};
  }
  return std::nullopt;
}

Outcome porder_partial(Ctx& c) {
  std::vector<Element> elts;
  for (int k = 0; k < 30; ++k) elts.push_back(c.random_element(2));
  for (int k = 0; k < 30; ++k) elts.push_back(walk_down(c, elts[static_cast<std::size_t>(k)], 2));
  for (const auto& x : elts)
    for (const auto& y : elts) {
      if (x != y && c.order().leq(x, y) && c.order().leq(y, x)) return Fail{"antisymmetry fails", porder_args(c, x, y)};
      if (!c.order().leq(x, y)) continue;
      for (const auto& z : elts)
        if (c.order().leq(y, z) && !c.order().leq(x, z)) return Fail{"transitivity fails via " + c.g.format(y), porder_args(c, x, z)};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 6

std::vector<Parabolic> test_subsets(Ctx& c) {
  std::vector<Parabolic> out;
  out.emplace_back(c.g, std::vector<std::size_t>{});
  out.emplace_back(c.g, std::vector<std::size_t>{0});
  if (c.preset == "B2_adj") {
    // prefer a pair involving the affine reflection
    std::optional<Parabolic> pick;
    for (std::size_t a = c.g.num_generators(); a-- > 0 && !pick;)
      for (std::size_t b = 0; b < a && !pick; ++b) {
        try {
          pick.emplace(c.g, std::vector<std::size_t>{b, a});
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotFinitary) throw;
        }
      }
    ensure(pick.has_value(), "no finitary pair");
    out.push_back(*pick);
  }
  return out;
}

Outcome parabolic_structure(Ctx& c) {
  for (const auto& a : test_subsets(c)) {
    std::map<std::int64_t, std::int64_t> count;
    for (const auto& v : a.elements()) count[c.len(v)] += 1;
    const std::int64_t top = c.len(a.longest());
    for (auto [l, k] : count)
      if (count[top - l] != k) return Fail{"length distribution of W_A not symmetric", "parabolic list --gens " + a.describe()};
    if (count[top] != 1) return Fail{"w_A not unique", "parabolic list --gens " + a.describe()};
  }
  for (const auto& comp : c.d->components()) {
    std::vector<std::size_t> all(comp.begin(), comp.end());
    all.push_back(c.g.num_finite_generators() + static_cast<std::size_t>(&comp - c.d->components().data()));
    try {
      Parabolic p(c.g, all);
      return Fail{"full affine component accepted as finitary", "parabolic list --gens " + join_names(c.g, all)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFinitary) throw;
    }
  }
  return std::nullopt;
}

Outcome parabolic_reps(Ctx& c) {
  for (const auto& a : test_subsets(c)) {
    const std::string gens = "--gens '" + a.describe() + "'";
    std::map<Element, Element> rep_of_coset;  // smallest coset element -> representative
    std::set<Element> reps;
    for (const auto& x : c.window(2)) {
      const Element r = a.min_rep(x);
      const std::string args = "parabolic rep " + gens + " --elt " + c.lit(x);
      const auto coset = a.coset(x);
      const Element key = *std::min_element(coset.begin(), coset.end());
      for (const auto& u : coset) {
        if (a.min_rep(u) != r) return Fail{"min_rep not constant on the coset", args};
        if (!c.order().leq(r, u)) return Fail{"min_rep is not the order-minimum of its coset", args};
      }
      if (auto it = rep_of_coset.find(key); it == rep_of_coset.end()) {
        if (!reps.insert(r).second) return Fail{"two cosets share a representative", args};
        rep_of_coset.emplace(key, r);
      }
      const ResDecomposition rd = res_decompose(c.g, x);
      if (a.in_AWextS(x) != (a.in_AWext(x) && c.d->is_dominant(-rd.lambda)))
        return Fail{"in_AWextS differs from in_AWext with antidominant translation", args};
    }
  }
  return std::nullopt;
}

Outcome parabolic_tri(Ctx& c) {
  for (const auto& a : test_subsets(c)) {
    const std::string gens = "--gens '" + a.describe() + "'";
    std::map<Element, Element> image;
    for (const auto& w : c.window(4)) {
      if (!a.in_AWext(w)) continue;
      const Element t = c.g.mul(a.longest(), triangle(c.g, w));
      const std::string args = "wext triangle --elt " + c.lit(w);
      if (!a.in_AWext(t)) return Fail{"w_A w^tri not in ^A W_ext (A = " + a.describe() + ")", args};
      if (!image.emplace(t, w).second) return Fail{"w -> w_A w^tri not injective (A = " + a.describe() + ")", args};
    }
    for (const auto& u : c.window(1))
      if (a.in_AWext(u) && !image.count(u))
        return Fail{"element of ^A W_ext not in the image of w -> w_A w^tri", "parabolic rep " + gens + " --elt " + c.lit(u)};
    // per-order-coset
    std::vector<Element> members;
    for (const auto& x : c.window(2))
      if (a.in_AWext(x)) members.push_back(x);
    for (std::size_t k = 0; k < c.opt.samples && !members.empty(); ++k) {
      const auto pick = [&] { return members[static_cast<std::size_t>(c.uniform(0, static_cast<std::int64_t>(members.size()) - 1))]; };
      const Element y = pick(), yp = pick();
      if (c.order().leq(y, yp) != c.order().leq(c.g.mul(a.longest(), y), c.g.mul(a.longest(), yp)))
        return Fail{"y <= y' differs from w_A y <= w_A y'", porder_args(c, y, yp)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- hecke

std::string kl_args(Ctx& c, const Element& y, const Element& x) { return "hecke kl --y " + c.lit(y) + " --x " + c.lit(x); }

Outcome hecke_relations(Ctx& c) {
  Hecke& h = c.hecke;
  for (std::size_t s = 0; s < c.g.num_generators(); ++s) {
    const Element& gen = c.g.generator(s);
    HeckeElement expect{{c.g.identity(), Laurent(1)}};
    add_to(expect, gen, Laurent::monomial(-1) - Laurent::monomial(1));
    if (h.mul(h.standard(gen), h.standard(gen)) != expect) return Fail{"H_s^2 relation fails", "hecke kl --y 'e' --x " + c.lit(gen)};
  }
  for (std::size_t k = 0; k < c.opt.samples / 5; ++k) {
    const Element x = c.random_element(2), y = c.random_element(2);
    const Element xy = c.g.mul(x, y);
    if (c.len(xy) == c.len(x) + c.len(y) && h.mul(h.standard(x), h.standard(y)) != h.standard(xy))
      return Fail{"H_x H_y != H_xy although lengths add", "wext mul --lhs " + c.lit(x) + " --rhs " + c.lit(y)};
  }
  return std::nullopt;
}

Outcome hecke_bar(Ctx& c) {
  const std::int64_t radius = c.d->semisimple_rank() == 1 ? 8 : 5;
  const oracle::Ball ball(c.g, radius);
  std::vector<Element> elts;
  for (const auto& [x, l] : ball.lengths()) elts.push_back(x);
  const std::size_t n = std::min<std::size_t>(elts.size(), 60);
  for (std::size_t k = 0; k < n; ++k) {
    const Element& x = elts[static_cast<std::size_t>(c.uniform(0, static_cast<std::int64_t>(elts.size()) - 1))];
    const auto col = c.hecke.kl_basis(x);
    if (c.hecke.bar(*col) != *col) return Fail{"KL basis element not bar-invariant", kl_args(c, x, x)};
    const auto ref = oracle::kl_column_by_bar_invariance(c.g, ball, x);
    std::map<Element, Laurent> mine(col->begin(), col->end());
    if (mine != ref) return Fail{"KL column differs from the bar-invariance solver", kl_args(c, x, x)};
  }
  return std::nullopt;
}

Outcome hecke_omega(Ctx& c) {
  const auto omegas = c.g.enumerate_omega(2);
  for (std::size_t k = 0; k < c.opt.samples / 10; ++k) {
    const Element x = c.random_WextS(1);
    if (c.len(x) > 8) continue;
    const Element& om = omegas[static_cast<std::size_t>(c.uniform(0, static_cast<std::int64_t>(omegas.size()) - 1))];
    const auto col = c.hecke.kl_basis(x);
    const Element ox = c.g.mul(om, x);
    for (const auto& [y, p] : *col)
      if (c.hecke.kl_poly(c.g.mul(om, y), ox) != p) return Fail{"h_{omega y, omega x} != h_{y,x}", kl_args(c, y, x)};
  }
  return std::nullopt;
}

// Positivity is not a claim being tested; the check records what was seen.
Outcome hecke_positivity(Ctx& c) {
  bool nonneg = true;
  for (const auto& w : enumerate_WextS(c.g, std::min<std::int64_t>(c.kl_len, 6)))
    for (const auto& [y, p] : *c.hecke.kl_basis(c.g.mul(w, c.w0())))
      for (auto [e, coef] : p.terms()) nonneg = nonneg && coef >= 0;
  c.note = nonneg ? "all computed KL coefficients nonnegative" : "negative KL coefficient observed";
  return std::nullopt;
}

Outcome hecke_inverse_matrix(Ctx& c) {
  const auto ws = enumerate_WextS(c.g, std::min<std::int64_t>(c.kl_len, 6));
  for (const auto& x : ws) {
    const auto row = c.hecke.inverse_m_row(x);
    for (const auto& y : c.hecke.spherical_lower_set(x)) {
      Laurent sum;
      for (const auto& [z, mxz] : row) {
        const Laurent t = mxz * c.hecke.spherical_m(y, z);
        if ((c.len(z) + c.len(x)) % 2 == 0) sum += t; else sum -= t;
      }
      if (sum != Laurent(x == y ? 1 : 0))
        return Fail{"sum_z (-1)^{l(z)+l(x)} m^{x,z} m_{y,z} != delta", "hecke inverse-m --x " + c.lit(x) + " --y " + c.lit(y)};
    }
  }
  return std::nullopt;
}

Outcome hecke_zeta(Ctx& c) {
  const Element w0 = c.w0();
  const auto cw0 = c.hecke.kl_basis(w0);
  for (const auto& w : enumerate_WextS(c.g, std::min<std::int64_t>(c.kl_len, 5))) {
    HeckeElement spherical;
    for (const auto& y : c.hecke.spherical_lower_set(w)) add_to(spherical, y, c.hecke.spherical_m(y, w));
    const HeckeElement image = c.hecke.mul(spherical, *cw0);
    if (image != *c.hecke.kl_basis(c.g.mul(w, w0)))
      return Fail{"zeta(underline-M_w) != underline-H_{w w0}", "hecke kl --y 'e' --x " + c.lit(c.g.mul(w, w0))};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- criteria 1, 2, 11

Outcome m_triangle(Ctx& c) {
  const Laurent expect = Laurent::monomial(static_cast<int>(c.len(c.w0())));
  for (const auto& w : enumerate_WextS(c.g, c.kl_len)) {
    const Element t = triangle(c.g, w);
    const Laurent m = c.hecke.inverse_m(t, w);
    if (m != expect)
      return Fail{"m^{w^tri, w} = " + m.str() + ", expected " + expect.str(), "hecke inverse-m --x " + c.lit(t) + " --y " + c.lit(w)};
  }
  return std::nullopt;
}

Outcome mult_triangle(Ctx& c) {
  for (const auto& w : enumerate_WextS(c.g, c.kl_len)) {
    const Element t = triangle(c.g, w);
    const std::int64_t val = c.hecke.inverse_m(t, w).eval(-1);
    const std::int64_t sign = (c.len(w) + c.len(t)) % 2 == 0 ? 1 : -1;
    const std::string args = "hecke inverse-m --x " + c.lit(t) + " --y " + c.lit(w);
    if (sign * val != 1) return Fail{"(-1)^{l(w)+l(w^tri)} m^{w^tri,w}(-1) = " + std::to_string(sign * val), args};
    if ((c.len(w) + c.len(t) + c.len(c.w0())) % 2 != 0) return Fail{"l(w) + l(w^tri) + l(w0) is odd", args};
  }
  return std::nullopt;
}

Outcome dihedral_kl(Ctx& c) {
  const std::int64_t bound = 10;
  const oracle::Ball ball(c.g, bound);
  for (const auto& [x, lx] : ball.lengths()) {
    const auto ref = oracle::kl_column_by_bar_invariance(c.g, ball, x);
    const auto col = c.hecke.kl_basis(x);
    if (std::map<Element, Laurent>(col->begin(), col->end()) != ref)
      return Fail{"KL column differs from the bar-invariance solver", kl_args(c, x, x)};
    for (const auto& [y, ly] : ball.lengths()) {
      if (ly > lx) continue;
      const bool below = oracle::bruhat_subword(c.g, ball, y, x);
      const Laurent expect = below ? Laurent::monomial(static_cast<int>(lx - ly)) : Laurent();
      auto it = ref.find(y);
      const Laurent got = it == ref.end() ? Laurent() : it->second;
      if (got != expect) return Fail{"h_{y,x} = " + got.str() + ", closed form " + expect.str(), kl_args(c, y, x)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 9

std::vector<Vec> dominant_sweep(const RootDatum& d) {
  const std::int64_t k = d.semisimple_rank() == 1 ? 8 : 3;
  std::vector<Vec> out;
  Vec c(d.semisimple_rank());
  for (;;) {
    out.push_back(d.lift(c));
    std::size_t i = 0;
    while (i < c.size() && c[i] == k) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

Outcome freudenthal(Ctx& c) {
  const RootDatum& d = *c.d;
  for (const auto& mu : dominant_sweep(d)) {
    const auto& mine = c.groth.satake().character(mu);
    const auto ref = oracle::kostant_character(d, mu);
    const std::string args = "satake char --mu " + mu.str();
    if (mine != ref) return Fail{"Freudenthal multiplicities differ from the Kostant oracle", args};
    if (c.groth.satake().dimension(mu) != oracle::weyl_dimension(d, mu)) return Fail{"dimension differs from the Weyl formula", args};
    if (mine.at(mu) != 1) return Fail{"highest weight multiplicity != 1", args};
    for (const auto& [nu, m] : mine)
      for (std::uint32_t w = 0; w < d.weyl_size(); ++w) {
        auto it = mine.find(d.act_y(w, nu));
        if (it == mine.end() || it->second != m) return Fail{"character not W-invariant", args};
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- groth

std::string filt_args(Ctx& c, const Element& x) { return "groth proj-filtration --elt " + c.lit(x); }

Outcome proj_filtration(Ctx& c) {
  const Element tw0 = c.g.mul(c.g.translation(c.d->varsigma()), c.w0());
  for (const auto& x : enumerate_Wres(c.g)) {
    const Filtration f = c.groth.projective_filtration(x);
    const Element top = triangle(c.g, x);
    const std::string args = filt_args(c, x);
    auto mult = [&](const Element& z) { auto it = f.mults.find(z); return it == f.mults.end() ? 0 : it->second; };
    if (mult(x) != 1) return Fail{"multiplicity at x is " + std::to_string(mult(x)), args};
    if (mult(top) != 1) return Fail{"multiplicity at x^tri is " + std::to_string(mult(top)), args};
    for (const auto& [z, m] : f.mults)
      if (!c.order().leq(x, z) || !c.order().leq(z, top)) return Fail{"label " + c.g.format(z) + " outside [x, x^tri]", args};
    const std::int64_t ly = c.len(c.g.mul(tw0, c.g.inverse(x)));
    if (f.total() != static_cast<std::int64_t>(c.d->weyl_size()) << ly) return Fail{"total multiplicity is not |W| 2^{l(y)}", args};
    if (c.groth.duality(f).mults != f.mults || c.groth.duality(f).flavor != Flavor::Verma)
      return Fail{"duality changed labels or kept the flavor", args};
  }
  return std::nullopt;
}

Outcome proj_word_independence(Ctx& c) {
  for (const auto& x : enumerate_Wres(c.g)) {
    const Filtration a = c.groth.projective_filtration(x);
    for (int trial = 0; trial < 4; ++trial) {
      std::mt19937_64 rng(c.opt.seed * 7919 + static_cast<std::uint64_t>(trial) + 1);
      const Filtration b = c.groth.projective_filtration(x, &rng);
      if (a != b) return Fail{"filtration depends on the reduced expression", filt_args(c, x)};
      if (c.groth.dim_hom(c.groth.duality(a), a) != c.groth.dim_hom(c.groth.duality(b), b))
        return Fail{"dim End depends on the reduced expression", "groth dimend --elt " + c.lit(x)};
    }
  }
  return std::nullopt;
}

Outcome phi_simple(Ctx& c) {
  const Parabolic none(c.g, {});
  for (const auto& w : enumerate_WextS(c.g, c.d->semisimple_rank() == 1 ? 12 : 6)) {
    const ClassVector v = c.groth.phi_of_simple(w, none);
    const std::string args = "groth phi-simple --elt " + c.lit(w);
    std::int64_t total = 0;
    for (const auto& [z, m] : v) {
      total += m;
      if (!c.order().leq(z, w)) return Fail{"label " + c.g.format(z) + " not below the input", args};
    }
    const Vec lambda = res_decompose(c.g, w).lambda;
    const Vec mu = c.d->act_y(c.d->w0(), lambda);
    if (total != oracle::weyl_dimension(*c.d, mu)) return Fail{"total multiplicity differs from dim V(mu)", args};
  }
  return std::nullopt;
}

Outcome groth_seed(Ctx& c) {
  const Filtration s = c.groth.seed_filtration();
  if (s.mults.size() != c.d->weyl_size() || s.total() != static_cast<std::int64_t>(c.d->weyl_size()))
    return Fail{"seed does not have |W| distinct labels", "groth seed"};
  for (std::size_t k = 0; k < 50; ++k) {
    const Vec nu = c.random_element().t;
    if (c.groth.grading_shift(c.groth.grading_shift(s, nu), -nu) != s) return Fail{"grading shift not invertible", "groth seed"};
    for (const auto& [w, m] : c.groth.grading_shift(s, nu).mults) {
      const Element f = c.groth.forget_grading(w);
      if (f != c.groth.forget_grading(c.g.shift(w, nu))) return Fail{"forget_grading not shift-invariant", "groth seed"};
      if (!in_Wres(c.g, f) || c.groth.forget_grading(f) != f) return Fail{"forget_grading is not a restricted representative", "groth seed"};
    }
    const std::size_t gen = c.random_gen();
    if (c.groth.xi_s(s, gen).total() != 2 * s.total()) return Fail{"xi_s does not double the total", "groth seed"};
  }
  return std::nullopt;
}

Outcome groth_averaging(Ctx& c) {
  for (const auto& a : test_subsets(c)) {
    for (const auto& w : c.window(1)) {
      if (!a.in_AWext(w)) continue;
      const Filtration f{Flavor::CoVerma, {{w, 1}}};
      const Filtration spread = c.groth.av_star(f, a);
      const std::string args = "groth avstar --gens '" + a.describe() + "' --elt " + c.lit(w);
      if (spread.total() != static_cast<std::int64_t>(a.size())) return Fail{"av_star total != |W_A|", args};
      std::set<Element> support;
      for (const auto& u : a.coset(w)) support.insert(u);
      for (const auto& [u, m] : spread.mults)
        if (!support.count(u)) return Fail{"av_star support outside W_A w", args};
      const Filtration back = c.groth.av_psi(spread, a);
      if (back.mults.size() != 1 || back.mults.begin()->first != w) return Fail{"av_psi(av_star(w)) not supported at w", args};
    }
  }
  return std::nullopt;
}

// After av_psi every multiplicity is a multiple of |W_A|; the reduced filtration has
// the endpoints x and w_A x^tri once each and is sandwiched between them.
Outcome groth_whittaker(Ctx& c) {
  for (const auto& a : test_subsets(c)) {
    const auto k = static_cast<std::int64_t>(a.size());
    std::size_t seen = 0;
    for (const auto& x : enumerate_Wres(c.g)) {
      if (!a.in_AWext(x)) continue;
      ++seen;
      const Filtration f = c.groth.av_psi(c.groth.projective_filtration(x), a);
      const Element top = c.g.mul(a.longest(), triangle(c.g, x));
      const std::string args = "groth avpsi --gens '" + a.describe() + "' --elt " + c.lit(x);
      if (a.min_rep(triangle(c.g, x)) != top) return Fail{"min_rep(x^tri) != w_A x^tri", args};
      for (const auto& [z, m] : f.mults) {
        if (m % k != 0) return Fail{"multiplicity of " + c.g.format(z) + " not divisible by |W_A|", args};
        if (!c.order().leq(x, z) || !c.order().leq(z, top)) return Fail{"label " + c.g.format(z) + " outside [x, w_A x^tri]", args};
      }
      auto mult = [&](const Element& z) { auto it = f.mults.find(z); return it == f.mults.end() ? 0 : it->second / k; };
      if (mult(x) != 1 || mult(top) != 1) return Fail{"reduced endpoint multiplicities are not 1", args};
    }
    if (seen == 0) return Fail{"no restricted element in ^A W_ext for A = " + a.describe(), "parabolic list --gens '" + a.describe() + "'"};
  }
  return std::nullopt;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = {
      {"datum.reflections_permute_positive_roots", 0, datum_reflections},
      {"datum.poincare_polynomial", 0, datum_poincare},
      {"datum.rho_and_w0", 0, datum_rho},
      {"wext.reduced_expression_roundtrip", 0, wext_reduced},
      {"wext.length_vs_bfs", 0, wext_bfs},
      {"wext.omega_and_length_laws", 0, wext_omega},
      {"wext.bruhat_vs_subwords", 0, wext_bruhat},
      {"alcove.action_group_law", 0, alcove_group_law},
      {"alcove.triangle_inverse_translation_parity", 0, alcove_triangle},
      {"alcove.WS_iff_antidominant_res_part", 0, alcove_ws_wres},
      {"alcove.res_decompose_vs_search", 0, alcove_res_oracle},
      {"alcove.projective_preparation_lengths", 0, alcove_proj_prep},
      {"orders.pushdown_independence", 0, porder_lambda},
      {"orders.weights_sum_of_positive_coroots", 0, porder_weights},
      {"orders.antisymmetry_transitivity", 0, porder_partial},
      {"parabolic.structure_and_not_finitary", 0, parabolic_structure},
      {"hecke.defining_relations", 0, hecke_relations},
      {"hecke.bar_invariance_vs_solver", 0, hecke_bar},
      {"hecke.omega_equivariance", 0, hecke_omega},
      {"hecke.positivity_logged", 0, hecke_positivity},
      {"hecke.inverse_matrix_identity", 0, hecke_inverse_matrix},
      {"hecke.spherical_zeta", 0, hecke_zeta},
      {"groth.seed_shift_forget", 0, groth_seed},
      {"groth.averaging_roundtrip", 0, groth_averaging},
      {"groth.whittaker_sandwich", 0, groth_whittaker},
      {"m_triangle", 1, m_triangle},
      {"mult_triangle_parity", 2, mult_triangle},
      {"res_complement", 3, res_complement},
      {"lengths_add_Wres", 4, lengths_add},
      {"porder_property_1", 5, porder_1},
      {"porder_property_2", 5, porder_2},
      {"porder_property_3", 5, porder_3},
      {"porder_property_4", 5, porder_4},
      {"porder_property_5", 5, porder_5},
      {"AWext_representatives", 6, parabolic_reps},
      {"tri_bijection", 6, parabolic_tri},
      {"projective_filtration", 7, proj_filtration},
      {"reduced_word_independence", 8, proj_word_independence},
      {"freudenthal_vs_kostant", 9, freudenthal},
      {"phi_of_simple_order_and_dimension", 10, phi_simple},
      {"dihedral_kl_closed_form", 11, dihedral_kl},
  };
  return checks;
}

std::string tsv_escape(std::string s) {
  for (auto& ch : s)
    if (ch == '\t' || ch == '\n') ch = ' ';
  return s;
}

}  // namespace

std::int64_t default_kl_len(const std::string& preset) {
  if (preset == "A1_adj") return 12;
  if (preset == "A2_adj") return 8;
  return 6;
}

std::int64_t max_kl_len(const std::string& preset) { return preset == "A1_adj" ? 24 : 10; }

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::tsv(bool with_timing) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << preset << '\t' << c.name << '\t' << (c.passed ? "pass" : "fail");
    if (with_timing) os << '\t' << c.micros;
    if (!c.passed) os << '\t' << tsv_escape(c.detail) << '\t' << tsv_escape(c.counterexample);
    os << '\n';
  }
  return os.str();
}

std::string SuiteReport::json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["preset"] = preset;
  j["seed"] = seed;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["criterion"] = c.criterion;
    e["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) {
      e["detail"] = c.detail;
      e["counterexample"] = c.counterexample;
    }
    if (with_timing) e["micros"] = c.micros;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

SuiteReport run_suite(const std::string& preset, const SuiteOptions& options) {
  RootDatumSpec::from_preset(preset);  // UnknownPreset
  if (options.kl_len && (*options.kl_len < 0 || *options.kl_len > max_kl_len(preset)))
    throw Error(ErrorKind::BoundsTooLarge, "KL sweep length " + std::to_string(*options.kl_len) + " exceeds " +
                                               std::to_string(max_kl_len(preset)) + " for " + preset);
  if (options.samples > 100000) throw Error(ErrorKind::BoundsTooLarge, "sample count too large");
  if (options.criterion < 0 || options.criterion > 11) throw Error(ErrorKind::MalformedInput, "criterion must be in 0..11");

  SuiteReport report{preset, options.seed, {}};
  std::uint64_t index = 0;
  for (const auto& def : registry()) {
    ++index;
    if (options.criterion != 0 && def.criterion != options.criterion) continue;
    if (!options.only.empty() && def.name != options.only) continue;
    if (def.criterion == 11 && preset != "A1_adj") continue;
    // every check gets its own engine and RNG stream so results do not depend on selection
    SuiteOptions opt = options;
    opt.seed = options.seed * 1000003u + index;
    Ctx ctx(preset, opt);
    CheckResult r{def.name, def.criterion, false, {}, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome out = def.run(ctx);
      r.passed = !out.has_value();
      if (out) {
        r.detail = out->detail;
        r.counterexample = "ahcalc --preset " + preset + (options.fault_length ? " --fault-length " : " ") + out->args;
      }
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
      r.counterexample = "ahcalc --preset " + preset + " --seed " + std::to_string(options.seed) +
                         (options.fault_length ? " --fault-length" : "") + " suite run --only " + def.name +
                         " --samples " + std::to_string(options.samples);
    }
    if (r.passed) r.detail = ctx.note;
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace ah
