#pragma once

// Alcove model: an element x is located by the point x^{-1}·p0, where
// p0 = varsigma / h is an interior point of the fundamental alcove.

#include <vector>

#include "ah/ext_weyl.hpp"

namespace ah {

/// Point of V = Y ⊗ Q with coordinates num / den.
struct AlcovePoint {
  Vec num;
  std::int64_t den = 1;
  friend bool operator==(const AlcovePoint& a, const AlcovePoint& b) {
    // cross-multiplied comparison
    return a.num.size() == b.num.size() && b.den * a.num == a.den * b.num;
  }
};

AlcovePoint base_point(const RootDatum& d);
/// (w t_lambda)·p = w(p) + w(lambda)
AlcovePoint act(const ExtWeyl& g, const Element& x, const AlcovePoint& p);
/// Numerators over h of x^{-1}·p0.
Vec sample_point(const ExtWeyl& g, const Element& x);

bool in_WextS(const ExtWeyl& g, const Element& x);
bool in_Wres(const ExtWeyl& g, const Element& x);
Vec box_of(const ExtWeyl& g, const Element& x);

/// x^△ = x t_mu w0 t_{-mu}, mu = box_of(x).
Element triangle(const ExtWeyl& g, const Element& x);
/// v t_{nu - varsigma} w0 t_{varsigma - nu}, nu = box_of(v).
Element triangle_inverse(const ExtWeyl& g, const Element& v);

struct ResDecomposition {
  Element y;   // restricted part
  Vec lambda;  // x = y t_lambda
};
ResDecomposition res_decompose(const ExtWeyl& g, const Element& x);

/// All restricted elements with zero root-orthogonal translation part (|W| of them).
std::vector<Element> enumerate_Wres(const ExtWeyl& g);

/// Elements of W_ext^S of length <= max_len whose translation has zero root-orthogonal part,
/// sorted by (length, element).
std::vector<Element> enumerate_WextS(const ExtWeyl& g, std::int64_t max_len);

/// Antidominant coweights lambda (zero orthogonal part) with length(t_lambda) <= max_len.
std::vector<Vec> enumerate_antidominant(const ExtWeyl& g, std::int64_t max_len);

}  // namespace ah
