#pragma once

// Independent reference computations used only by tests and the suite runner.
// Lengths come from breadth-first search over generator words instead of the
// closed length formula; KL polynomials come from solving bar-invariance directly.

#include <map>

#include "ah/ext_weyl.hpp"
#include "ah/laurent.hpp"
#include "ah/satake.hpp"

namespace ah::oracle {

/// Length-zero elements characterised geometrically: x maps the fundamental alcove to itself.
std::vector<Element> omega_by_alcove(const ExtWeyl& g, std::int64_t bound);

/// All elements of length <= radius, found by BFS from Omega.
class Ball {
 public:
  Ball(const ExtWeyl& g, std::int64_t radius, std::int64_t omega_bound = 3);

  std::int64_t radius() const noexcept { return radius_; }
  const std::map<Element, std::int64_t>& lengths() const noexcept { return len_; }
  /// Throws Internal if x is outside the ball.
  std::int64_t length(const Element& x) const;
  bool contains(const Element& x) const { return len_.count(x) != 0; }
  /// x = gens[word[0]] ... gens[word.back()] * omega, with word length = length(x).
  std::pair<std::vector<std::size_t>, Element> reduced_word(const Element& x) const;
  /// Minimal length in x W (finite right coset).
  bool minimal_in_coset(const Element& x) const;

 private:
  const ExtWeyl& g_;
  std::int64_t radius_;
  std::map<Element, std::int64_t> len_;
  std::map<Element, std::pair<std::size_t, Element>> parent_;  // x = gens[first] * second
};

/// Subword criterion for the Bruhat order.
bool bruhat_subword(const ExtWeyl& g, const Ball& ball, const Element& x, const Element& y);

/// KL polynomials h_{y,x} for all y, by solving bar(C_x) = C_x with its own Hecke arithmetic.
std::map<Element, Laurent> kl_column_by_bar_invariance(const ExtWeyl& g, const Ball& ball, const Element& x);

/// Weight multiplicities via Kostant's partition function and Weyl's alternating sum.
std::int64_t kostant_multiplicity(const RootDatum& d, const Vec& mu, const Vec& nu);
WeightMultiset kostant_character(const RootDatum& d, const Vec& mu);
/// prod <alpha, mu + rho^v> / <alpha, rho^v>
std::int64_t weyl_dimension(const RootDatum& d, const Vec& mu);

}  // namespace ah::oracle
