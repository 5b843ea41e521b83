#pragma once

#include <map>
#include <random>

#include "ah/hecke.hpp"
#include "ah/orders.hpp"
#include "ah/parabolic.hpp"
#include "ah/satake.hpp"

namespace ah {

enum class Flavor { Verma, CoVerma };

std::string_view to_string(Flavor f);

/// Multiplicities of a baby (co-)Verma filtration.
struct Filtration {
  Flavor flavor = Flavor::CoVerma;
  std::map<Element, std::int64_t> mults;

  std::int64_t total() const;
  friend bool operator==(const Filtration&, const Filtration&) = default;
};

/// Classes in the Grothendieck group, in the basis of simples.
using ClassVector = std::map<Element, std::int64_t>;

/// Multiplicity-level calculator for graded modules; works over one ExtWeyl instance.
class GrothCalc {
 public:
  explicit GrothCalc(const ExtWeyl& g);

  const ExtWeyl& group() const noexcept { return g_; }
  PeriodicOrder& order() noexcept { return order_; }
  SatakeCharacters& satake() noexcept { return satake_; }

  /// Simple decomposition of Phi(L_w) (characteristic-0 character semantics). Throws NotSpherical.
  ClassVector phi_of_simple(const Element& w, const Parabolic& a);

  ClassVector grading_shift(const ClassVector& v, const Vec& nu) const;
  Filtration grading_shift(const Filtration& f, const Vec& nu) const;

  /// {w t_{w0(varsigma)} : w in W}, coVerma flavor.
  Filtration seed_filtration() const;
  /// F + sF
  Filtration xi_s(const Filtration& f, std::size_t s) const;
  /// relabel w -> omega w
  Filtration xi_omega(const Filtration& f, const Element& omega) const;

  /// Constructive projective-injective object for x in W_ext^res. Throws NotRestricted.
  /// With rng, the reduced expression of t_varsigma w0 x^{-1} uses random descents.
  Filtration projective_filtration(const Element& x, std::mt19937_64* rng = nullptr);

  Filtration av_psi(const Filtration& f, const Parabolic& a) const;
  Filtration av_star(const Filtration& f, const Parabolic& a) const;
  /// Multiplicity shadow of Av_!: identical to av_star.
  Filtration av_shriek(const Filtration& f, const Parabolic& a) const { return av_star(f, a); }

  /// sum_y F(y) G(y) for F Verma and G coVerma. Throws FlavorMismatch.
  std::int64_t dim_hom(const Filtration& verma, const Filtration& coverma) const;
  std::int64_t dimend(const Element& x);

  ClassVector duality(const ClassVector& v) const { return v; }
  Filtration duality(const Filtration& f) const;

  /// Class of the restricted part x of w = x t_lambda, modulo root-orthogonal translations.
  Element forget_grading(const Element& w) const;

 private:
  const ExtWeyl& g_;
  PeriodicOrder order_;
  SatakeCharacters satake_;
};

}  // namespace ah
