#include "ah/oracle/oracle.hpp"

#include <deque>
#include <set>

namespace ah::oracle {

std::vector<Element> omega_by_alcove(const ExtWeyl& g, std::int64_t bound) {
  const RootDatum& d = g.datum();
  const std::int64_t h = d.coxeter_denominator();
  const std::size_t n = d.rank();
  std::vector<Element> out;
  Vec t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = -bound;
  for (;;) {
    for (std::uint32_t w = 0; w < d.weyl_size(); ++w) {
      // numerators over h of x·p0 = w(p0 + t)
      const Vec p = d.act_y(w, d.varsigma() + h * t);
      bool inside = true;
      for (const auto& beta : d.positive_roots()) {
        const std::int64_t c = dot(beta.root, p);
        if (c <= 0 || c >= h) inside = false;
      }
      if (inside) out.push_back({w, t});
    }
    std::size_t i = 0;
    while (i < n && t[i] == bound) t[i++] = -bound;
    if (i == n) break;
    ++t[i];
  }
  return out;
}

Ball::Ball(const ExtWeyl& g, std::int64_t radius, std::int64_t omega_bound) : g_(g), radius_(radius) {
  std::deque<Element> queue;
  for (const auto& w : omega_by_alcove(g, omega_bound)) {
    len_.emplace(w, 0);
    queue.push_back(w);
  }
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    const std::int64_t lx = len_.at(x);
    if (lx == radius_) continue;
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      Element y = g.mul(g.generator(s), x);
      if (len_.emplace(y, lx + 1).second) {
        parent_.emplace(y, std::make_pair(s, x));
        queue.push_back(std::move(y));
      }
    }
  }
}

std::int64_t Ball::length(const Element& x) const {
  auto it = len_.find(x);
  ensure(it != len_.end(), "element outside the oracle ball");
  return it->second;
}

std::pair<std::vector<std::size_t>, Element> Ball::reduced_word(const Element& x) const {
  std::vector<std::size_t> word;
  Element cur = x;
  for (;;) {
    auto it = parent_.find(cur);
    if (it == parent_.end()) break;
    word.push_back(it->second.first);
    cur = it->second.second;
  }
  ensure(len_.count(cur) && len_.at(cur) == 0, "parent chain does not end in Omega");
  return {word, cur};
}

bool Ball::minimal_in_coset(const Element& x) const {
  const std::int64_t lx = length(x);
  for (std::size_t i = 0; i < g_.num_finite_generators(); ++i) {
    auto it = len_.find(g_.mul(x, g_.generator(i)));
    if (it != len_.end() && it->second < lx) return false;
  }
  return true;
}

namespace {

std::set<Element> subword_products(const ExtWeyl& g, const std::vector<std::size_t>& word, const Element& omega) {
  std::set<Element> t{omega};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<Element> add;
    for (const auto& z : t) add.push_back(g.mul(g.generator(*it), z));
    t.insert(add.begin(), add.end());
  }
  return t;
}

using HElt = std::map<Element, Laurent>;

void acc(HElt& a, const Element& x, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, ins] = a.emplace(x, c);
  if (!ins && (it->second += c).is_zero()) a.erase(it);
}

// Length from the ball; anything outside is longer than everything inside.
std::int64_t ball_len(const Ball& b, const Element& x) {
  auto it = b.lengths().find(x);
  return it == b.lengths().end() ? b.radius() + 1 : it->second;
}

HElt times_generator(const ExtWeyl& g, const Ball& b, std::size_t s, const HElt& a) {
  HElt out;
  const Laurent q = Laurent::monomial(-1) - Laurent::monomial(1);
  for (const auto& [y, c] : a) {
    const Element sy = g.mul(g.generator(s), y);
    acc(out, sy, c);
    if (ball_len(b, sy) < ball_len(b, y)) acc(out, y, q * c);
  }
  return out;
}

HElt bar_standard(const ExtWeyl& g, const Ball& b, const Element& y) {
  const auto [word, omega] = b.reduced_word(y);
  const Laurent q = Laurent::monomial(1) - Laurent::monomial(-1);
  HElt e{{omega, Laurent(1)}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    HElt next = times_generator(g, b, *it, e);
    for (const auto& [z, c] : e) acc(next, z, q * c);
    e = std::move(next);
  }
  return e;
}

}  // namespace

bool bruhat_subword(const ExtWeyl& g, const Ball& ball, const Element& x, const Element& y) {
  const auto [word, omega] = ball.reduced_word(y);
  return subword_products(g, word, omega).count(x) != 0;
}

std::map<Element, Laurent> kl_column_by_bar_invariance(const ExtWeyl& g, const Ball& ball, const Element& x) {
  const auto [word, omega] = ball.reduced_word(x);
  std::vector<std::pair<std::int64_t, Element>> lower;
  for (const auto& z : subword_products(g, word, omega)) lower.emplace_back(ball.length(z), z);
  std::sort(lower.begin(), lower.end(), [](const auto& a, const auto& b) { return a > b; });

  std::map<Element, HElt> bars;  // bars[y] = bar(H_y)
  for (const auto& [l, y] : lower) bars.emplace(y, bar_standard(g, ball, y));

  std::map<Element, Laurent> h{{x, Laurent(1)}};
  for (const auto& [lz, z] : lower) {
    if (z == x) continue;
    Laurent p;
    for (const auto& [y, hy] : h) {
      if (ball.length(y) <= lz) continue;
      auto it = bars.at(y).find(z);
      if (it != bars.at(y).end()) p += hy.bar() * it->second;
    }
    // h_z - bar(h_z) = p with h_z in vZ[v]
    ensure(p.coeff(0) == 0 && p.bar() == -p, "bar-invariance system is inconsistent");
    Laurent hz;
    for (auto [e, c] : p.terms())
      if (e > 0) hz.add_term(e, c);
    if (!hz.is_zero()) h.emplace(z, hz);
  }
  return h;
}

namespace {

std::int64_t partitions(const std::vector<Vec>& parts, std::size_t k, const Vec& c,
                        std::map<std::pair<std::size_t, Vec>, std::int64_t>& memo) {
  if (c.is_zero()) return 1;
  if (k == parts.size()) return 0;
  const auto key = std::make_pair(k, c);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t total = 0;
  Vec cur = c;
  for (;;) {
    total += partitions(parts, k + 1, cur, memo);
    cur -= parts[k];
    if (std::any_of(cur.begin(), cur.end(), [](auto x) { return x < 0; })) break;
  }
  memo.emplace(key, total);
  return total;
}

std::int64_t kostant_partition(const RootDatum& d, const Vec& y) {
  const auto c = d.coroot_coordinates(y);
  if (!c || std::any_of(c->begin(), c->end(), [](auto x) { return x < 0; })) return 0;
  std::vector<Vec> parts;
  for (const auto& beta : d.positive_roots()) parts.push_back(beta.coroot_coeffs);
  std::map<std::pair<std::size_t, Vec>, std::int64_t> memo;
  return partitions(parts, 0, *c, memo);
}

}  // namespace

std::int64_t kostant_multiplicity(const RootDatum& d, const Vec& mu, const Vec& nu) {
  std::int64_t m = 0;
  for (std::uint32_t w = 0; w < d.weyl_size(); ++w) {
    Vec shift = d.act_y(w, d.two_rho_dual()) - d.two_rho_dual();
    for (auto& x : shift) {
      ensure(x % 2 == 0, "w(2 rho) - 2 rho not divisible by 2");
      x /= 2;
    }
    const std::int64_t p = kostant_partition(d, d.act_y(w, mu) - nu + shift);
    m += (d.weyl()[w].length % 2 == 0) ? p : -p;
  }
  return m;
}

WeightMultiset kostant_character(const RootDatum& d, const Vec& mu) {
  if (!d.is_dominant(mu)) throw Error(ErrorKind::NotDominant, "highest weight not dominant");
  const auto span = d.coroot_coordinates(mu - d.act_y(d.w0(), mu));
  ensure(span.has_value(), "mu - w0 mu outside the coroot lattice");
  const std::size_t r = d.semisimple_rank();
  WeightMultiset out;
  Vec c(r);
  for (;;) {
    Vec nu = mu;
    for (std::size_t i = 0; i < r; ++i) nu -= c[i] * d.simple_coroots()[i];
    if (const std::int64_t m = kostant_multiplicity(d, mu, nu); m != 0) out.emplace(nu, m);
    std::size_t i = 0;
    while (i < r && c[i] == (*span)[i]) c[i++] = 0;
    if (i == r) break;
    ++c[i];
  }
  return out;
}

std::int64_t weyl_dimension(const RootDatum& d, const Vec& mu) {
  __int128 num = 1, den = 1;
  for (const auto& beta : d.positive_roots()) {
    num *= dot(beta.root, 2 * mu + d.two_rho_dual());
    den *= dot(beta.root, d.two_rho_dual());
  }
  ensure(num % den == 0, "Weyl dimension not integral");
  return static_cast<std::int64_t>(num / den);
}

}  // namespace ah::oracle
