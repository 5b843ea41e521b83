#include "ah/orders.hpp"

namespace ah {

std::int64_t PeriodicOrder::min_pushdown(const Element& x) const {
  const RootDatum& d = g_.datum();
  const Vec p = d.simple_pairings(sample_point(g_, x));
  std::int64_t n = 0;
  for (auto c : p) n = std::max(n, floor_div(-c, d.coxeter_denominator()) + 1);
  return n;
}

bool PeriodicOrder::leq_at(const Element& x, const Element& y, std::int64_t n) const {
  const Vec lambda = -n * g_.datum().varsigma();
  const Element xs = g_.shift(x, lambda), ys = g_.shift(y, lambda);
  ensure(in_WextS(g_, xs) && in_WextS(g_, ys), "pushdown does not reach W_ext^S");
  return g_.bruhat_leq(xs, ys);
}

bool PeriodicOrder::leq(const Element& x, const Element& y) const {
  if (x == y) return true;
  const auto key = std::make_pair(x, y);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool r = leq_at(x, y, std::max(min_pushdown(x), min_pushdown(y)));
  if (memo_.size() > 4'000'000) memo_.clear();
  memo_.emplace(key, r);
  return r;
}

}  // namespace ah
