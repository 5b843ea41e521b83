#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ah/lattice.hpp"

namespace ah {

/// A positive root together with its coroot, both with coordinates and
/// coefficients in the simple (co)root bases.
struct Root {
  Vec root;            // in X
  Vec coroot;          // in Y
  Vec coeffs;          // root = sum coeffs[i] * simple_root[i]
  Vec coroot_coeffs;   // coroot = sum coroot_coeffs[i] * simple_coroot[i]
  int height = 0;      // sum of coeffs
  std::size_t component = 0;
};

/// Finite Weyl group element with cached actions.
struct WeylElement {
  std::vector<int> word;    // reduced word in simple reflection indices (0-based)
  IntMatrix on_y;           // action on Y
  IntMatrix on_x;           // action on X
  std::vector<bool> flips;  // flips[k]: w(positive_roots[k]) is negative
  int length = 0;
};

/// Descriptor accepted by load_root_datum: either a preset name or explicit matrices.
struct RootDatumSpec {
  std::optional<std::string> preset;
  std::vector<std::vector<std::int64_t>> simple_roots;    // in X coordinates
  std::vector<std::vector<std::int64_t>> simple_coroots;  // in Y coordinates

  static RootDatumSpec from_preset(std::string name);
  /// Parses {"preset": "..."} or {"simple_roots": [[..]], "simple_coroots": [[..]]}.
  static RootDatumSpec from_json(const std::string& text);
};

/// Based root datum (X, Y, R, R^v) with the finite Weyl group enumerated eagerly.
/// Immutable after construction.
class RootDatum {
 public:
  std::size_t rank() const noexcept { return rank_; }
  std::size_t semisimple_rank() const noexcept { return simple_roots_.size(); }
  bool is_semisimple() const noexcept { return rank_ == simple_roots_.size(); }
  const std::string& name() const noexcept { return name_; }

  const std::vector<Vec>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<Vec>& simple_coroots() const noexcept { return simple_coroots_; }
  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  /// C_ij = <alpha_i, alpha_j^v>
  const IntMatrix& cartan() const noexcept { return cartan_; }
  /// Connected components of the Dynkin diagram, as lists of simple indices.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }

  const std::vector<WeylElement>& weyl() const noexcept { return weyl_; }
  std::size_t weyl_size() const noexcept { return weyl_.size(); }
  std::uint32_t identity() const noexcept { return 0; }
  std::uint32_t w0() const noexcept { return w0_; }
  std::uint32_t simple_reflection(std::size_t i) const { return simple_refl_.at(i); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * weyl_.size() + b]; }
  std::uint32_t inverse(std::uint32_t a) const noexcept { return inv_[a]; }
  /// Index of the Weyl element acting on Y by the given matrix.
  std::optional<std::uint32_t> find(const IntMatrix& on_y) const;

  Vec act_y(std::uint32_t w, const Vec& y) const { return weyl_[w].on_y.apply(y); }
  Vec act_x(std::uint32_t w, const Vec& x) const { return weyl_[w].on_x.apply(x); }

  const Vec& two_rho() const noexcept { return two_rho_; }
  /// Sum of positive coroots (2 rho^v, in Y).
  const Vec& two_rho_dual() const noexcept { return two_rho_dual_; }
  const Vec& varsigma() const noexcept { return varsigma_; }
  /// 1 + maximal height of a positive root.
  std::int64_t coxeter_denominator() const noexcept { return h_; }

  /// <alpha_i, y> for all simple i.
  Vec simple_pairings(const Vec& y) const;
  /// Fixed section Z^{S} -> Y of the restriction map: <alpha_i, lift(c)> = c_i.
  Vec lift(const Vec& pairings) const;
  /// Component of y orthogonal to all roots relative to the fixed section.
  Vec orthogonal_part(const Vec& y) const { return y - lift(simple_pairings(y)); }

  bool is_dominant(const Vec& y) const;
  bool is_strictly_dominant(const Vec& y) const;
  /// Dominant element of the W-orbit of y, together with a Weyl element carrying y there.
  std::pair<Vec, std::uint32_t> dominant_conjugate(const Vec& y) const;

  /// Coroot lattice Z R^v, for Omega-class comparisons.
  bool in_coroot_lattice(const Vec& y) const { return coroot_lattice_.contains(y); }
  /// Coefficients c with y = sum c_i alpha_i^v, if y lies in Z R^v.
  std::optional<Vec> coroot_coordinates(const Vec& y) const;

  /// W-invariant integer form on Y: (a, b) = sum over positive roots of <alpha,a><alpha,b>.
  std::int64_t form_y(const Vec& a, const Vec& b) const;

  friend std::shared_ptr<const RootDatum> load_root_datum(const RootDatumSpec& spec);

 private:
  RootDatum() = default;
  void validate_cartan();
  void build_roots();
  void build_weyl();
  void build_section();

  std::string name_;
  std::size_t rank_ = 0;
  std::vector<Vec> simple_roots_, simple_coroots_;
  IntMatrix cartan_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<Root> positive_roots_;
  std::vector<WeylElement> weyl_;
  std::vector<std::uint32_t> mul_, inv_, simple_refl_;
  std::uint32_t w0_ = 0;
  Vec two_rho_, two_rho_dual_, varsigma_;
  std::vector<Vec> section_;  // section_[i] pairs to e_i
  std::int64_t h_ = 1;
  LatticeBasis coroot_lattice_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

RootDatumPtr load_root_datum(const RootDatumSpec& spec);
inline RootDatumPtr load_preset(const std::string& name) { return load_root_datum(RootDatumSpec::from_preset(name)); }

const std::vector<std::string>& preset_names();

}  // namespace ah
