#pragma once

#include <list>
#include <map>
#include <memory>
#include <unordered_map>

#include "ah/alcove.hpp"
#include "ah/laurent.hpp"

namespace ah {

/// Coordinates in the standard basis H_x.
using HeckeElement = std::map<Element, Laurent>;

void add_to(HeckeElement& acc, const Element& x, const Laurent& c);

/// Hecke algebra of W_ext with H_s^2 = 1 + (v^{-1} - v) H_s, its Kazhdan-Lusztig basis
/// and the polynomials of the left spherical module.
///
/// KL columns live in an LRU cache; an instance must stay confined to one thread.
class Hecke {
 public:
  /// Capacity from ALCOVE_HECKE_CACHE_CAP, default 100000.
  static std::size_t default_cache_capacity();

  explicit Hecke(const ExtWeyl& g, std::size_t cache_capacity = default_cache_capacity());

  const ExtWeyl& group() const noexcept { return g_; }

  HeckeElement standard(const Element& x) const { return {{x, Laurent(1)}}; }
  /// H_s * a
  HeckeElement mul_generator(std::size_t s, const HeckeElement& a) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement bar(const HeckeElement& a) const;

  /// Kazhdan-Lusztig basis element: H_x + sum_{y<x} h_{y,x} H_y.
  std::shared_ptr<const HeckeElement> kl_basis(const Element& x);
  Laurent kl_poly(const Element& y, const Element& x);

  /// m_{y,w} = h_{y w0, w w0} for y, w in W_ext^S.
  Laurent spherical_m(const Element& y, const Element& w);
  /// m^{x,y}: inverse of the spherical KL matrix, with signs (-1)^{l(x)+l(y)}.
  Laurent inverse_m(const Element& x, const Element& y);
  /// Nonzero entries m^{x,y} for all y.
  std::map<Element, Laurent> inverse_m_row(const Element& x);

  /// Elements of W_ext^S below x in Bruhat order.
  std::vector<Element> spherical_lower_set(const Element& x) const;

  std::size_t cache_size() const noexcept { return cache_.size(); }
  std::size_t cache_capacity() const noexcept { return capacity_; }

 private:
  void require_spherical(const Element& x) const;

  const ExtWeyl& g_;
  std::size_t capacity_;
  using Column = std::shared_ptr<const HeckeElement>;
  std::list<Element> lru_;
  std::unordered_map<Element, std::pair<Column, std::list<Element>::iterator>, ElementHash> cache_;
  std::map<Element, std::map<Element, Laurent>> inverse_rows_;
};

}  // namespace ah
