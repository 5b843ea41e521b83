#include "ah/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ah {

void add_to(HeckeElement& acc, const Element& x, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(x, c);
  if (!inserted && (it->second += c).is_zero()) acc.erase(it);
}

std::size_t Hecke::default_cache_capacity() {
  if (const char* env = std::getenv("ALCOVE_HECKE_CACHE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || env[0] == '-')
      throw Error(ErrorKind::MalformedInput, std::string("ALCOVE_HECKE_CACHE_CAP must be a positive integer, got '") + env + "'");
    return static_cast<std::size_t>(v);
  }
  return 100000;
}

Hecke::Hecke(const ExtWeyl& g, std::size_t cache_capacity) : g_(g), capacity_(std::max<std::size_t>(1, cache_capacity)) {}

HeckeElement Hecke::mul_generator(std::size_t s, const HeckeElement& a) const {
  const Element& gen = g_.generator(s);
  const Laurent q = Laurent::monomial(-1) - Laurent::monomial(1);
  HeckeElement out;
  for (const auto& [y, c] : a) {
    const Element sy = g_.mul(gen, y);
    add_to(out, sy, c);
    if (g_.length(sy) < g_.length(y)) add_to(out, y, q * c);
  }
  return out;
}

HeckeElement Hecke::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [x, c] : a) {
    const ReducedExpression r = g_.reduced_expression(x);
    HeckeElement term;
    for (const auto& [y, d] : b) add_to(term, g_.mul(r.omega, y), c * d);
    for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) term = mul_generator(*it, term);
    for (const auto& [y, d] : term) add_to(out, y, d);
  }
  return out;
}

HeckeElement Hecke::bar(const HeckeElement& a) const {
  // bar(H_s) = H_s + (v - v^{-1}), bar(H_omega) = H_omega
  const Laurent q = Laurent::monomial(1) - Laurent::monomial(-1);
  HeckeElement out;
  for (const auto& [x, c] : a) {
    const ReducedExpression r = g_.reduced_expression(x);
    HeckeElement term{{r.omega, c.bar()}};
    for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) {
      HeckeElement next = mul_generator(*it, term);
      for (const auto& [y, d] : term) add_to(next, y, q * d);
      term = std::move(next);
    }
    for (const auto& [y, d] : term) add_to(out, y, d);
  }
  return out;
}

std::shared_ptr<const HeckeElement> Hecke::kl_basis(const Element& x) {
  if (auto it = cache_.find(x); it != cache_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second.second);
    return it->second.first;
  }
  auto result = std::make_shared<HeckeElement>();
  const std::int64_t len = g_.length(x);
  if (len == 0) {
    result->emplace(x, Laurent(1));
  } else {
    const std::size_t s = g_.first_left_descent(x);
    ensure(s < g_.num_generators(), "no left descent");
    const Element& gen = g_.generator(s);
    const Element xp = g_.mul(gen, x);
    const Column prev = kl_basis(xp);
    // (H_s + v) C_{x'}
    *result = mul_generator(s, *prev);
    for (const auto& [y, c] : *prev) add_to(*result, y, Laurent::monomial(1) * c);
    for (const auto& [z, c] : *prev) {
      if (z == xp) continue;
      const std::int64_t mu = c.coeff(1);
      if (mu == 0 || g_.length(g_.mul(gen, z)) > g_.length(z)) continue;
      const Column cz = kl_basis(z);
      for (const auto& [y, d] : *cz) add_to(*result, y, -(Laurent(mu) * d));
    }
  }
  ensure(result->count(x) && result->at(x) == Laurent(1), "KL element not normalized");
  for (const auto& [y, c] : *result)
    ensure(y == x || c.min_exp() >= 1, "KL polynomial outside vZ[v]");

  Column col = result;
  lru_.push_front(x);
  cache_.emplace(x, std::make_pair(col, lru_.begin()));
  while (cache_.size() > capacity_) {
    cache_.erase(lru_.back());
    lru_.pop_back();
  }
  return col;
}

Laurent Hecke::kl_poly(const Element& y, const Element& x) {
  const Column col = kl_basis(x);
  auto it = col->find(y);
  return it == col->end() ? Laurent() : it->second;
}

void Hecke::require_spherical(const Element& x) const {
  if (!in_WextS(g_, x)) throw Error(ErrorKind::NotSpherical, g_.format(x) + " is not in W_ext^S");
}

Laurent Hecke::spherical_m(const Element& y, const Element& w) {
  require_spherical(y);
  require_spherical(w);
  const Element w0 = g_.finite(g_.datum().w0());
  const Element ww0 = g_.mul(w, w0);
  const Laurent m = kl_poly(g_.mul(y, w0), ww0);
  const int l0 = static_cast<int>(g_.length(w0));
  // the minimal coset representative sees the same polynomial shifted by v^{l(w0)}
  ensure(kl_poly(y, ww0) == Laurent::monomial(l0) * m, "spherical KL polynomial depends on the coset representative");
  if (!m.is_zero()) {
    const std::int64_t bound = g_.length(w) + l0;
    ensure(-m.min_exp() <= bound && m.max_exp() <= bound, "spherical exponent bound exceeded");
  }
  return m;
}

std::vector<Element> Hecke::spherical_lower_set(const Element& x) const {
  const ReducedExpression r = g_.reduced_expression(x);
  std::set<Element> t{r.omega};
  for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) {
    std::vector<Element> add;
    for (const auto& z : t) add.push_back(g_.mul(g_.generator(*it), z));
    t.insert(add.begin(), add.end());
  }
  std::vector<Element> out;
  for (const auto& z : t)
    if (in_WextS(g_, z)) out.push_back(z);
  return out;
}

std::map<Element, Laurent> Hecke::inverse_m_row(const Element& x) {
  require_spherical(x);
  if (auto it = inverse_rows_.find(x); it != inverse_rows_.end()) return it->second;
  std::vector<std::pair<std::int64_t, Element>> lower;
  for (const auto& z : spherical_lower_set(x)) lower.emplace_back(g_.length(z), z);
  std::sort(lower.begin(), lower.end(), [](const auto& a, const auto& b) { return a > b; });
  std::map<Element, Laurent> row{{x, Laurent(1)}};
  for (const auto& [ly, y] : lower) {
    if (y == x) continue;
    Laurent acc;
    for (const auto& [z, mxz] : row) {
      const std::int64_t lz = g_.length(z);
      if (lz <= ly) continue;
      const Laurent m = spherical_m(y, z);
      if (m.is_zero()) continue;
      const Laurent term = mxz * m;
      if ((lz + ly) % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    if (!acc.is_zero()) {
      const std::int64_t bound = g_.length(x) + g_.length(g_.finite(g_.datum().w0()));
      ensure(-acc.min_exp() <= bound && acc.max_exp() <= bound, "inverse spherical exponent bound exceeded");
      row.emplace(y, std::move(acc));
    }
  }
  if (inverse_rows_.size() > 10000) inverse_rows_.clear();
  inverse_rows_.emplace(x, row);
  return row;
}

Laurent Hecke::inverse_m(const Element& x, const Element& y) {
  require_spherical(y);
  const auto row = inverse_m_row(x);
  auto it = row.find(y);
  return it == row.end() ? Laurent() : it->second;
}

}  // namespace ah
