#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ah/root_datum.hpp"

namespace ah {

/// Element w * t_lambda of the extended affine Weyl group W ⋉ Y.
struct Element {
  std::uint32_t w = 0;  // index into RootDatum::weyl()
  Vec t;                // translation lambda in Y

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.t <=> b.t;
  }
  std::size_t hash() const noexcept { return t.hash() * 31 + w; }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};
struct ElementPairHash {
  std::size_t operator()(const std::pair<Element, Element>& p) const noexcept {
    return p.first.hash() * 1000003u ^ p.second.hash();
  }
};

/// x = gens[word[0]] * ... * gens[word.back()] * omega.
struct ReducedExpression {
  std::vector<std::size_t> word;
  Element omega;
};

/// x = omega * gens[word[0]] * ... * gens[word.back()].
struct OmegaLeftForm {
  Element omega;
  std::vector<std::size_t> word;
};

/// Arithmetic, length, generators and Bruhat order of W_ext for a fixed datum.
///
/// Holds a Bruhat memo table; an instance must stay confined to one thread.
class ExtWeyl {
 public:
  explicit ExtWeyl(RootDatumPtr datum);

  const RootDatum& datum() const noexcept { return *datum_; }
  const RootDatumPtr& datum_ptr() const noexcept { return datum_; }

  Element identity() const { return {datum_->identity(), Vec(datum_->rank())}; }
  Element translation(const Vec& t) const { return {datum_->identity(), t}; }
  Element finite(std::uint32_t w) const { return {w, Vec(datum_->rank())}; }

  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  /// Right multiplication by t_lambda.
  Element shift(const Element& a, const Vec& lambda) const { return {a.w, a.t + lambda}; }

  std::int64_t length(const Element& x) const;
  bool is_omega(const Element& x) const { return length(x) == 0; }
  /// Length-zero elements whose translation has all coordinates in [-bound, bound].
  std::vector<Element> enumerate_omega(std::int64_t bound) const;

  /// Affine simple reflections: finite s_1..s_r first, then one affine reflection per component.
  std::size_t num_generators() const noexcept { return gens_.size(); }
  std::size_t num_finite_generators() const noexcept { return datum_->semisimple_rank(); }
  const Element& generator(std::size_t i) const { return gens_.at(i); }
  const std::string& generator_name(std::size_t i) const { return names_.at(i); }
  std::size_t parse_generator(std::string_view name) const;
  /// Index of g if g is an affine simple reflection.
  std::optional<std::size_t> generator_index(const Element& g) const;
  /// Maximal short coroot of each component.
  const std::vector<Vec>& max_short_coroots() const noexcept { return theta_dual_; }

  Element word_product(const std::vector<std::size_t>& word) const;

  /// Peels left descents; picks the smallest descent, or a uniformly random one if rng is given.
  ReducedExpression reduced_expression(const Element& x, std::mt19937_64* rng = nullptr) const;
  OmegaLeftForm omega_left(const ReducedExpression& r) const;
  std::size_t first_left_descent(const Element& x) const;
  bool is_left_descent(std::size_t s, const Element& x) const;

  bool same_omega_class(const Element& x, const Element& y) const;
  bool bruhat_leq(const Element& x, const Element& y) const;

  /// Literal "s1 s0a : -2,0" (word, colon, translation); "e" is the empty word.
  Element parse(std::string_view literal) const;
  /// Canonical literal: reduced finite word of w, then the translation.
  std::string format(const Element& x) const;
  std::string format_word(const std::vector<std::size_t>& word) const;

  /// Test hook: replaces |1 + <lambda, alpha>| by |1 - <lambda, alpha>| in the length formula.
  void set_length_fault(bool on) { fault_ = on; bruhat_memo_.clear(); }

 private:
  RootDatumPtr datum_;
  std::vector<Element> gens_;
  std::vector<std::string> names_;
  std::vector<Vec> theta_dual_;
  bool fault_ = false;
  mutable std::unordered_map<std::pair<Element, Element>, bool, ElementPairHash> bruhat_memo_;
};

}  // namespace ah

template <>
struct std::hash<ah::Element> {
  std::size_t operator()(const ah::Element& e) const noexcept { return e.hash(); }
};
