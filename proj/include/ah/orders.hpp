#pragma once

#include <unordered_map>

#include "ah/alcove.hpp"

namespace ah {

/// Periodic order: push both elements by t_{-N varsigma} into W_ext^S and compare in Bruhat order.
/// Memoized; confine an instance to one thread.
class PeriodicOrder {
 public:
  explicit PeriodicOrder(const ExtWeyl& g) : g_(g) {}

  bool leq(const Element& x, const Element& y) const;
  /// Smallest N >= 0 with x t_{-N varsigma} in W_ext^S.
  std::int64_t min_pushdown(const Element& x) const;
  /// Comparison after an explicit pushdown N (must be admissible for both elements).
  bool leq_at(const Element& x, const Element& y, std::int64_t n) const;

  const ExtWeyl& group() const noexcept { return g_; }

 private:
  const ExtWeyl& g_;
  mutable std::unordered_map<std::pair<Element, Element>, bool, ElementPairHash> memo_;
};

}  // namespace ah
