#include "ah/satake.hpp"

#include <algorithm>
#include <set>

namespace ah {

const WeightMultiset& SatakeCharacters::dominant_character(const Vec& mu) {
  const RootDatum& d = *d_;
  if (mu.size() != d.rank()) throw Error(ErrorKind::DimensionMismatch, "highest weight has wrong rank");
  if (!d.is_dominant(mu)) throw Error(ErrorKind::NotDominant, mu.str() + " is not dominant");
  if (auto it = dominant_memo_.find(mu); it != dominant_memo_.end()) return it->second;

  // every weight nu satisfies w0(mu) <= nu <= mu
  const auto span = d.coroot_coordinates(mu - d.act_y(d.w0(), mu));
  ensure(span.has_value(), "mu - w0(mu) not in the coroot lattice");
  const std::size_t r = d.semisimple_rank();
  std::vector<std::pair<std::int64_t, Vec>> candidates;  // (depth, coefficient vector)
  Vec c(r);
  for (;;) {
    Vec nu = mu;
    std::int64_t depth = 0;
    for (std::size_t i = 0; i < r; ++i) {
      nu -= c[i] * d.simple_coroots()[i];
      depth += c[i];
    }
    if (d.is_dominant(nu)) candidates.emplace_back(depth, c);
    std::size_t i = 0;
    while (i < r && c[i] == (*span)[i]) c[i++] = 0;
    if (i == r) break;
    ++c[i];
  }
  std::sort(candidates.begin(), candidates.end());

  WeightMultiset dom;
  auto lookup = [&](const Vec& xi) -> std::int64_t {
    auto it = dom.find(d.dominant_conjugate(xi).first);
    return it == dom.end() ? 0 : it->second;
  };
  const std::int64_t mu_norm = d.form_y(mu, mu);
  const Vec& two_rho = d.two_rho_dual();
  for (const auto& [depth, coeffs] : candidates) {
    Vec nu = mu;
    for (std::size_t i = 0; i < r; ++i) nu -= coeffs[i] * d.simple_coroots()[i];
    if (depth == 0) {
      dom.emplace(nu, 1);
      continue;
    }
    std::int64_t numer = 0;
    for (const auto& beta : d.positive_roots()) {
      Vec cur = coeffs;
      Vec xi = nu;
      for (;;) {
        cur -= beta.coroot_coeffs;
        xi += beta.coroot;
        if (std::any_of(cur.begin(), cur.end(), [](auto k) { return k < 0; })) break;
        numer += d.form_y(xi, beta.coroot) * lookup(xi);
      }
    }
    numer *= 2;
    const std::int64_t denom = mu_norm - d.form_y(nu, nu) + d.form_y(mu - nu, two_rho);
    ensure(denom > 0, "Freudenthal denominator not positive");
    ensure(numer % denom == 0, "Freudenthal quotient not integral");
    if (numer != 0) dom.emplace(nu, numer / denom);
  }
  return dominant_memo_.emplace(mu, std::move(dom)).first->second;
}

const WeightMultiset& SatakeCharacters::character(const Vec& mu) {
  if (auto it = full_memo_.find(mu); it != full_memo_.end()) return it->second;
  const RootDatum& d = *d_;
  WeightMultiset full;
  for (const auto& [nu, m] : dominant_character(mu))
    for (std::uint32_t w = 0; w < d.weyl_size(); ++w) full.emplace(d.act_y(w, nu), m);
  return full_memo_.emplace(mu, std::move(full)).first->second;
}

std::int64_t SatakeCharacters::dimension(const Vec& mu) {
  std::int64_t s = 0;
  for (const auto& [nu, m] : character(mu)) s += m;
  return s;
}

}  // namespace ah
