#include "ah/ext_weyl.hpp"

#include <cstdlib>
#include <sstream>

namespace ah {

ExtWeyl::ExtWeyl(RootDatumPtr datum) : datum_(std::move(datum)) {
  const RootDatum& d = *datum_;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
    gens_.push_back(finite(d.simple_reflection(i)));
    names_.push_back("s" + std::to_string(i + 1));
  }
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    // maximal short coroot: minimal squared length, then maximal height
    const Root* best = nullptr;
    std::int64_t best_norm = 0, best_height = 0;
    for (const auto& beta : d.positive_roots()) {
      if (beta.component != c) continue;
      const std::int64_t norm = d.form_y(beta.coroot, beta.coroot);
      std::int64_t height = 0;
      for (auto k : beta.coroot_coeffs) height += k;
      if (!best || norm < best_norm || (norm == best_norm && height > best_height)) {
        best = &beta;
        best_norm = norm;
        best_height = height;
      }
    }
    ensure(best != nullptr, "component without roots");
    IntMatrix refl = IntMatrix::identity(d.rank());
    for (std::size_t a = 0; a < d.rank(); ++a)
      for (std::size_t b = 0; b < d.rank(); ++b) refl(a, b) -= best->coroot[a] * best->root[b];
    const auto w = d.find(refl);
    ensure(w.has_value(), "reflection of the maximal short coroot not in W");
    // t_{theta^v} s_theta = s_theta t_{-theta^v}
    gens_.push_back({*w, -best->coroot});
    names_.push_back("s0" + std::string(1, static_cast<char>('a' + c)));
    theta_dual_.push_back(best->coroot);
  }
}

Element ExtWeyl::mul(const Element& a, const Element& b) const {
  const RootDatum& d = *datum_;
  return {d.mul(a.w, b.w), d.act_y(d.inverse(b.w), a.t) + b.t};
}

Element ExtWeyl::inverse(const Element& a) const {
  const RootDatum& d = *datum_;
  return {d.inverse(a.w), -d.act_y(a.w, a.t)};
}

std::int64_t ExtWeyl::length(const Element& x) const {
  const RootDatum& d = *datum_;
  const auto& flips = d.weyl()[x.w].flips;
  const auto& roots = d.positive_roots();
  std::int64_t len = 0;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const std::int64_t p = dot(roots[k].root, x.t);
    if (!flips[k])
      len += std::llabs(p);
    else
      len += fault_ ? std::llabs(1 - p) : std::llabs(1 + p);
  }
  return len;
}

std::vector<Element> ExtWeyl::enumerate_omega(std::int64_t bound) const {
  const RootDatum& d = *datum_;
  const std::size_t n = d.rank();
  constexpr std::int64_t kMaxCells = 50'000'000;
  std::int64_t cells = static_cast<std::int64_t>(d.weyl_size());
  const bool wide = bound < 0 || bound > kMaxCells;
  for (std::size_t i = 0; i < n && !wide && cells <= kMaxCells; ++i) cells *= 2 * bound + 1;
  if (wide || cells > kMaxCells)
    throw Error(ErrorKind::BoundsTooLarge, "omega enumeration window too large");
  std::vector<Element> out;
  Vec t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = -bound;
  for (;;) {
    for (std::uint32_t w = 0; w < d.weyl_size(); ++w)
      if (length({w, t}) == 0) out.push_back({w, t});
    std::size_t i = 0;
    while (i < n && t[i] == bound) t[i++] = -bound;
    if (i == n) break;
    ++t[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ExtWeyl::parse_generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  if (name == "s0" && gens_.size() > num_finite_generators()) return num_finite_generators();
  throw Error(ErrorKind::MalformedInput, "unknown generator '" + std::string(name) + "'");
}

std::optional<std::size_t> ExtWeyl::generator_index(const Element& g) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == g) return i;
  return std::nullopt;
}

Element ExtWeyl::word_product(const std::vector<std::size_t>& word) const {
  Element x = identity();
  for (std::size_t s : word) x = mul(x, gens_.at(s));
  return x;
}

bool ExtWeyl::is_left_descent(std::size_t s, const Element& x) const {
  return length(mul(gens_[s], x)) < length(x);
}

std::size_t ExtWeyl::first_left_descent(const Element& x) const {
  for (std::size_t s = 0; s < gens_.size(); ++s)
    if (is_left_descent(s, x)) return s;
  return gens_.size();
}

ReducedExpression ExtWeyl::reduced_expression(const Element& x, std::mt19937_64* rng) const {
  ReducedExpression out;
  Element cur = x;
  std::int64_t len = length(cur);
  std::vector<std::size_t> descents;
  while (len > 0) {
    descents.clear();
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      if (length(mul(gens_[s], cur)) < len) {
        descents.push_back(s);
        if (!rng) break;
      }
    }
    ensure(!descents.empty(), "element of positive length without a left descent");
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(*rng);
    const std::size_t s = descents[pick];
    out.word.push_back(s);
    cur = mul(gens_[s], cur);
    const std::int64_t next = length(cur);
    ensure(next == len - 1, "left descent did not lower length by one");
    len = next;
  }
  out.omega = cur;
  return out;
}

OmegaLeftForm ExtWeyl::omega_left(const ReducedExpression& r) const {
  OmegaLeftForm out{r.omega, {}};
  const Element inv = inverse(r.omega);
  for (std::size_t s : r.word) {
    const auto idx = generator_index(mul(mul(inv, gens_[s]), r.omega));
    ensure(idx.has_value(), "Omega does not permute the affine generators");
    out.word.push_back(*idx);
  }
  return out;
}

bool ExtWeyl::same_omega_class(const Element& x, const Element& y) const {
  return datum_->in_coroot_lattice(x.t - y.t);
}

bool ExtWeyl::bruhat_leq(const Element& x, const Element& y) const {
  if (x == y) return true;
  const std::int64_t lx = length(x), ly = length(y);
  if (lx >= ly) return false;
  if (!same_omega_class(x, y)) return false;
  if (lx == 0) {
    // x ≤ y iff x is the Omega part of y
    return reduced_expression(y).omega == x;
  }
  const auto key = std::make_pair(x, y);
  if (auto it = bruhat_memo_.find(key); it != bruhat_memo_.end()) return it->second;
  const std::size_t s = first_left_descent(y);
  ensure(s < gens_.size(), "no left descent");
  const Element sy = mul(gens_[s], y);
  const Element sx = mul(gens_[s], x);
  const bool result = length(sx) < lx ? bruhat_leq(sx, sy) : bruhat_leq(x, sy);
  if (bruhat_memo_.size() > 4'000'000) bruhat_memo_.clear();
  bruhat_memo_.emplace(key, result);
  return result;
}

Element ExtWeyl::parse(std::string_view literal) const {
  const RootDatum& d = *datum_;
  std::string_view word_part = literal, t_part;
  if (const auto colon = literal.find(':'); colon != std::string_view::npos) {
    word_part = literal.substr(0, colon);
    t_part = literal.substr(colon + 1);
  }
  Element x = identity();
  std::istringstream is{std::string(word_part)};
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    x = mul(x, gens_[parse_generator(tok)]);
  }
  if (!t_part.empty()) {
    const Vec t = Vec::parse(t_part);
    if (t.size() != d.rank()) throw Error(ErrorKind::DimensionMismatch, "translation has wrong rank");
    x = shift(x, t);
  }
  return x;
}

std::string ExtWeyl::format_word(const std::vector<std::size_t>& word) const {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += names_.at(word[i]);
  }
  return out;
}

std::string ExtWeyl::format(const Element& x) const {
  const auto& word = datum_->weyl()[x.w].word;
  std::vector<std::size_t> w(word.begin(), word.end());
  return format_word(w) + " : " + x.t.str();
}

}  // namespace ah
