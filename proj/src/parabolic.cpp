#include "ah/parabolic.hpp"

#include <set>

namespace ah {

Parabolic::Parabolic(const ExtWeyl& g, std::vector<std::size_t> gens) : g_(&g), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  const RootDatum& d = g.datum();
  // gradients of the reflecting hyperplanes; W_A is finite iff their Gram matrix is definite
  std::vector<Vec> grad;
  for (std::size_t s : gens_) {
    if (s >= g.num_generators()) throw Error(ErrorKind::MalformedInput, "generator index out of range");
    grad.push_back(s < g.num_finite_generators() ? d.simple_coroots()[s]
                                                  : -g.max_short_coroots()[s - g.num_finite_generators()]);
  }
  IntMatrix gram(grad.size(), grad.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    for (std::size_t j = 0; j < grad.size(); ++j) gram(i, j) = d.form_y(grad[i], grad[j]);
  if (!positive_definite(gram)) throw Error(ErrorKind::NotFinitary, "W_A is infinite for A = {" + describe() + "}");

  std::set<Element> seen{g.identity()};
  elements_.push_back(g.identity());
  for (std::size_t k = 0; k < elements_.size(); ++k)
    for (std::size_t s : gens_) {
      Element next = g.mul(g.generator(s), elements_[k]);
      if (seen.insert(next).second) elements_.push_back(std::move(next));
    }
  std::vector<std::pair<std::int64_t, Element>> keyed;
  for (auto& e : elements_) keyed.emplace_back(g.length(e), e);
  std::sort(keyed.begin(), keyed.end());
  elements_.clear();
  for (auto& [len, e] : keyed) elements_.push_back(e);
  longest_ = keyed.back().second;
  longest_len_ = keyed.back().first;
  ensure(keyed.size() == 1 || keyed[keyed.size() - 2].first < longest_len_, "longest element of W_A not unique");
}

Parabolic Parabolic::parse(const ExtWeyl& g, std::string_view names) {
  std::vector<std::size_t> gens;
  std::size_t pos = 0;
  while (pos < names.size()) {
    std::size_t comma = names.find(',', pos);
    if (comma == std::string_view::npos) comma = names.size();
    std::string_view tok = names.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) gens.push_back(g.parse_generator(tok));
    pos = comma + 1;
  }
  return Parabolic(g, std::move(gens));
}

bool Parabolic::in_AWextS(const Element& x) const {
  const Element w0 = g_->finite(g_->datum().w0());
  const std::int64_t lhs = g_->length(g_->mul(g_->mul(longest_, x), w0));
  return lhs == longest_len_ + g_->length(x) + g_->length(w0);
}

bool Parabolic::in_AWextRes(const Element& x) const { return in_Wres(*g_, x) && in_AWextS(x); }

bool Parabolic::in_AWext(const Element& x) const { return in_AWextRes(res_decompose(*g_, x).y); }

std::vector<Element> Parabolic::coset(const Element& x) const {
  std::vector<Element> out;
  for (const auto& v : elements_) out.push_back(g_->mul(v, x));
  return out;
}

Element Parabolic::min_rep(const Element& x) const {
  std::optional<Element> hit;
  for (const auto& u : coset(x)) {
    if (!in_AWext(u)) continue;
    if (hit) throw Error(ErrorKind::Unrepresentable, "coset of " + g_->format(x) + " has two representatives");
    hit = u;
  }
  if (!hit) throw Error(ErrorKind::Unrepresentable, "coset of " + g_->format(x) + " has no representative");
  return *hit;
}

std::string Parabolic::describe() const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ',';
    out += g_->generator_name(gens_[i]);
  }
  return out;
}

}  // namespace ah
