#pragma once

#include <vector>

#include "ah/alcove.hpp"

namespace ah {

/// Finitary subset A of the affine generators, with W_A enumerated and its longest element.
class Parabolic {
 public:
  /// Throws NotFinitary if W_A is infinite.
  Parabolic(const ExtWeyl& g, std::vector<std::size_t> gens);
  static Parabolic parse(const ExtWeyl& g, std::string_view comma_separated_names);

  const std::vector<std::size_t>& gens() const noexcept { return gens_; }
  /// W_A sorted by (length, element).
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& longest() const noexcept { return longest_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty_subset() const noexcept { return gens_.empty(); }

  bool in_AWextS(const Element& x) const;
  bool in_AWextRes(const Element& x) const;
  bool in_AWext(const Element& x) const;
  /// {v x : v in W_A}
  std::vector<Element> coset(const Element& x) const;
  /// The unique element of W_A x lying in ^A W_ext; throws Unrepresentable otherwise.
  Element min_rep(const Element& x) const;

  std::string describe() const;

 private:
  const ExtWeyl* g_;
  std::vector<std::size_t> gens_;
  std::vector<Element> elements_;
  Element longest_;
  std::int64_t longest_len_ = 0;
};

}  // namespace ah
