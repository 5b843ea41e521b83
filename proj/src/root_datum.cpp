#include "ah/root_datum.hpp"

#include <deque>
#include <map>
#include <numeric>

#include "json.hpp"

namespace ah {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::CartanNotFiniteType: return "CartanNotFiniteType";
    case ErrorKind::TorsionQuotient: return "TorsionQuotient";
    case ErrorKind::NoVarsigma: return "NoVarsigma";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotFinitary: return "NotFinitary";
    case ErrorKind::NotSpherical: return "NotSpherical";
    case ErrorKind::NotRestricted: return "NotRestricted";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::Unrepresentable: return "Unrepresentable";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kMaxWeylOrder = 4096;
constexpr std::size_t kMaxRoots = 2048;

struct PresetData {
  const char* name;
  std::vector<std::vector<std::int64_t>> roots, coroots;
};

// Adjoint data: X is the root lattice (simple roots = standard basis), so the
// coroots are the columns of the Cartan matrix.
const std::vector<PresetData>& presets() {
  static const std::vector<PresetData> table = {
      {"A1_adj", {{1}}, {{2}}},
      {"A2_adj", {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}},
      {"B2_adj", {{1, 0}, {0, 1}}, {{2, -1}, {-2, 2}}},
      {"A1xA1_adj", {{1, 0}, {0, 1}}, {{2, 0}, {0, 2}}},
  };
  return table;
}

struct Rational {
  std::int64_t num = 0, den = 1;
};

Rational reduce(std::int64_t n, std::int64_t d) {
  if (d < 0) n = -n, d = -d;
  const std::int64_t g = std::gcd(n, d);
  return g ? Rational{n / g, d / g} : Rational{0, 1};
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : presets()) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

RootDatumSpec RootDatumSpec::from_preset(std::string name) {
  for (const auto& p : presets())
    if (name == p.name) return RootDatumSpec{std::move(name), p.roots, p.coroots};
  throw Error(ErrorKind::UnknownPreset, "no preset named '" + name + "'");
}

RootDatumSpec RootDatumSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("datum descriptor is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::MalformedInput, "datum descriptor must be an object");
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) throw Error(ErrorKind::MalformedInput, "preset must be a string");
    return from_preset(j["preset"].get<std::string>());
  }
  if (!j.contains("simple_roots") || !j.contains("simple_coroots"))
    throw Error(ErrorKind::MalformedInput, "descriptor needs 'preset' or 'simple_roots' + 'simple_coroots'");
  RootDatumSpec spec;
  try {
    spec.simple_roots = j["simple_roots"].get<std::vector<std::vector<std::int64_t>>>();
    spec.simple_coroots = j["simple_coroots"].get<std::vector<std::vector<std::int64_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("matrices must be integer arrays: ") + e.what());
  }
  return spec;
}

RootDatumPtr load_root_datum(const RootDatumSpec& spec) {
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->name_ = spec.preset.value_or("custom");
  const auto& rs = spec.simple_roots;
  const auto& cs = spec.simple_coroots;
  if (rs.empty()) throw Error(ErrorKind::MalformedInput, "at least one simple root is required");
  if (rs.size() != cs.size()) throw Error(ErrorKind::MalformedInput, "number of simple roots and coroots differ");
  d->rank_ = rs.front().size();
  if (d->rank_ == 0 || d->rank_ > kMaxRank) throw Error(ErrorKind::MalformedInput, "rank out of range");
  if (rs.size() > d->rank_) throw Error(ErrorKind::MalformedInput, "more simple roots than the rank");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].size() != d->rank_ || cs[i].size() != d->rank_)
      throw Error(ErrorKind::MalformedInput, "all vectors must have length equal to the rank");
    d->simple_roots_.emplace_back(std::span<const std::int64_t>(rs[i]));
    d->simple_coroots_.emplace_back(std::span<const std::int64_t>(cs[i]));
  }
  d->validate_cartan();
  d->build_section();
  d->build_roots();
  d->build_weyl();
  return d;
}

void RootDatum::validate_cartan() {
  const std::size_t r = simple_roots_.size();
  auto& cartan = cartan_;
  cartan = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan(i, j) = dot(simple_roots_[i], simple_coroots_[j]);

  for (std::size_t i = 0; i < r; ++i) {
    if (cartan(i, i) != 2) throw Error(ErrorKind::CartanNotFiniteType, "diagonal entry is not 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan(i, j) > 0) throw Error(ErrorKind::CartanNotFiniteType, "positive off-diagonal entry");
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
        throw Error(ErrorKind::CartanNotFiniteType, "asymmetric zero pattern");
      if (cartan(i, j) * cartan(j, i) > 3) throw Error(ErrorKind::CartanNotFiniteType, "bond of infinite type");
    }
  }

  // components and a symmetrizing diagonal d with d_i C_ij = d_j C_ji
  auto& comps = components_;
  comps.clear();
  std::vector<Rational> d(r);
  std::vector<bool> seen(r, false);
  for (std::size_t root = 0; root < r; ++root) {
    if (seen[root]) continue;
    comps.emplace_back();
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    d[root] = {1, 1};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      comps.back().push_back(i);
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i || cartan(i, j) == 0) continue;
        const Rational dj = reduce(d[i].num * cartan(i, j), d[i].den * cartan(j, i));
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          queue.push_back(j);
        } else if (dj.num != d[j].num || dj.den != d[j].den) {
          throw Error(ErrorKind::CartanNotFiniteType, "Cartan matrix is not symmetrizable");
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  std::int64_t l = 1;
  for (const auto& x : d) l = std::lcm(l, x.den);
  IntMatrix sym(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sym(i, j) = d[i].num * (l / d[i].den) * cartan(i, j);
  if (!positive_definite(sym)) throw Error(ErrorKind::CartanNotFiniteType, "symmetrized Cartan matrix is not positive definite");
}

void RootDatum::build_section() {
  const std::size_t r = simple_roots_.size(), n = rank_;
  IntMatrix roots(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) roots(i, j) = simple_roots_[i][j];
  const SmithForm sf = smith_form(roots);
  for (std::int64_t x : sf.diagonal) {
    if (x == 0) throw Error(ErrorKind::MalformedInput, "simple roots are linearly dependent");
    if (x != 1) throw Error(ErrorKind::TorsionQuotient, "X / ZR has torsion (invariant factor " + std::to_string(x) + ")");
  }
  // roots * Q = P^{-1} [I | 0]  =>  roots * (Q[:, :r] * P) = I
  IntMatrix qhead(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) qhead(i, j) = sf.right(i, j);
  const IntMatrix sec = qhead * sf.left;
  section_.assign(r, Vec(n));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) section_[j][i] = sec(i, j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (dot(simple_roots_[i], section_[j]) != (i == j ? 1 : 0))
        throw Error(ErrorKind::NoVarsigma, "restriction Y -> Hom(ZR, Z) is not surjective");
  Vec ones(r);
  for (std::size_t i = 0; i < r; ++i) ones[i] = 1;
  varsigma_ = lift(ones);
  coroot_lattice_ = LatticeBasis(simple_coroots_, n);
}

void RootDatum::build_roots() {
  const std::size_t r = simple_roots_.size();
  std::map<Vec, std::size_t> index;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < r; ++i) {
    Root root;
    root.root = simple_roots_[i];
    root.coroot = simple_coroots_[i];
    root.coeffs = Vec(r);
    root.coeffs[i] = 1;
    root.coroot_coeffs = root.coeffs;
    root.height = 1;
    index.emplace(root.coeffs, positive_roots_.size());
    queue.push_back(positive_roots_.size());
    positive_roots_.push_back(root);
  }
  while (!queue.empty()) {
    const Root beta = positive_roots_[queue.front()];
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      const std::int64_t a = dot(beta.root, simple_coroots_[i]);
      const std::int64_t b = dot(simple_roots_[i], beta.coroot);
      Root next = beta;
      next.root -= a * simple_roots_[i];
      next.coeffs[i] -= a;
      next.coroot -= b * simple_coroots_[i];
      next.coroot_coeffs[i] -= b;
      if (next.coeffs.is_zero() || std::any_of(next.coeffs.begin(), next.coeffs.end(), [](auto c) { return c < 0; }))
        continue;
      if (index.contains(next.coeffs)) continue;
      next.height = static_cast<int>(std::accumulate(next.coeffs.begin(), next.coeffs.end(), std::int64_t{0}));
      index.emplace(next.coeffs, positive_roots_.size());
      queue.push_back(positive_roots_.size());
      positive_roots_.push_back(next);
      if (positive_roots_.size() > kMaxRoots) throw Error(ErrorKind::CartanNotFiniteType, "root closure does not terminate");
    }
  }
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [](const Root& a, const Root& b) { return a.height < b.height; });
  for (auto& beta : positive_roots_) {
    for (std::size_t c = 0; c < components_.size(); ++c)
      if (beta.coeffs[components_[c].front()] != 0) beta.component = c;
  }
  two_rho_ = Vec(rank_);
  two_rho_dual_ = Vec(rank_);
  std::int64_t max_height = 0;
  for (const auto& beta : positive_roots_) {
    two_rho_ += beta.root;
    two_rho_dual_ += beta.coroot;
    max_height = std::max<std::int64_t>(max_height, beta.height);
  }
  h_ = 1 + max_height;
}

void RootDatum::build_weyl() {
  const std::size_t r = simple_roots_.size(), n = rank_;
  std::vector<IntMatrix> sy(r), sx(r);
  for (std::size_t i = 0; i < r; ++i) {
    sy[i] = IntMatrix::identity(n);
    sx[i] = IntMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        sy[i](a, b) -= simple_coroots_[i][a] * simple_roots_[i][b];
        sx[i](a, b) -= simple_roots_[i][a] * simple_coroots_[i][b];
      }
  }
  std::map<std::vector<std::int64_t>, std::uint32_t> index;
  WeylElement e{{}, IntMatrix::identity(n), IntMatrix::identity(n), {}, 0};
  index.emplace(e.on_y.data(), 0);
  weyl_.push_back(std::move(e));
  for (std::size_t k = 0; k < weyl_.size(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix my = weyl_[k].on_y * sy[i];
      if (index.contains(my.data())) continue;
      WeylElement w;
      w.word = weyl_[k].word;
      w.word.push_back(static_cast<int>(i));
      w.on_x = weyl_[k].on_x * sx[i];
      w.on_y = std::move(my);
      index.emplace(w.on_y.data(), static_cast<std::uint32_t>(weyl_.size()));
      weyl_.push_back(std::move(w));
      if (weyl_.size() > kMaxWeylOrder) throw Error(ErrorKind::MalformedInput, "Weyl group too large for eager enumeration");
    }
  }
  std::map<Vec, std::size_t> root_index;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) root_index.emplace(positive_roots_[k].root, k);
  for (auto& w : weyl_) {
    w.flips.assign(positive_roots_.size(), false);
    for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
      const Vec image = w.on_x.apply(positive_roots_[k].root);
      if (root_index.contains(image)) continue;
      ensure(root_index.contains(-image), "Weyl image of a root is not a root");
      w.flips[k] = true;
      ++w.length;
    }
    ensure(static_cast<std::size_t>(w.length) == w.word.size(), "BFS word is not reduced");
  }
  const std::size_t order = weyl_.size();
  mul_.assign(order * order, 0);
  inv_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const auto it = index.find((weyl_[a].on_y * weyl_[b].on_y).data());
      ensure(it != index.end(), "Weyl group not closed under multiplication");
      mul_[a * order + b] = it->second;
      if (it->second == 0) inv_[a] = static_cast<std::uint32_t>(b);
    }
  simple_refl_.resize(r);
  for (std::size_t i = 0; i < r; ++i) simple_refl_[i] = index.at(sy[i].data());
  w0_ = 0;
  for (std::size_t a = 0; a < order; ++a)
    if (weyl_[a].length > weyl_[w0_].length) w0_ = static_cast<std::uint32_t>(a);
}

std::optional<std::uint32_t> RootDatum::find(const IntMatrix& on_y) const {
  for (std::size_t a = 0; a < weyl_.size(); ++a)
    if (weyl_[a].on_y == on_y) return static_cast<std::uint32_t>(a);
  return std::nullopt;
}

Vec RootDatum::simple_pairings(const Vec& y) const {
  if (y.size() != rank_) throw Error(ErrorKind::DimensionMismatch, "coweight has wrong rank");
  Vec out(simple_roots_.size());
  for (std::size_t i = 0; i < simple_roots_.size(); ++i) out[i] = dot(simple_roots_[i], y);
  return out;
}

Vec RootDatum::lift(const Vec& pairings) const {
  if (pairings.size() != simple_roots_.size()) throw Error(ErrorKind::DimensionMismatch, "pairing vector has wrong length");
  Vec out(rank_);
  for (std::size_t i = 0; i < pairings.size(); ++i) out += pairings[i] * section_[i];
  return out;
}

bool RootDatum::is_dominant(const Vec& y) const {
  const Vec p = simple_pairings(y);
  return std::all_of(p.begin(), p.end(), [](auto c) { return c >= 0; });
}

bool RootDatum::is_strictly_dominant(const Vec& y) const {
  const Vec p = simple_pairings(y);
  return std::all_of(p.begin(), p.end(), [](auto c) { return c > 0; });
}

std::pair<Vec, std::uint32_t> RootDatum::dominant_conjugate(const Vec& y) const {
  Vec cur = y;
  std::uint32_t w = identity();
  for (;;) {
    std::size_t i = 0;
    while (i < simple_roots_.size() && dot(simple_roots_[i], cur) >= 0) ++i;
    if (i == simple_roots_.size()) return {cur, w};
    cur -= dot(simple_roots_[i], cur) * simple_coroots_[i];
    w = mul(simple_refl_[i], w);
  }
}

std::optional<Vec> RootDatum::coroot_coordinates(const Vec& y) const {
  // C c = p with p_i = <alpha_i, y>, solved by Cramer's rule
  const Vec p = simple_pairings(y);
  const std::size_t r = p.size();
  const std::int64_t det = determinant(cartan_);
  Vec c(r);
  for (std::size_t j = 0; j < r; ++j) {
    IntMatrix m = cartan_;
    for (std::size_t i = 0; i < r; ++i) m(i, j) = p[i];
    const std::int64_t num = determinant(m);
    if (num % det != 0) return std::nullopt;
    c[j] = num / det;
  }
  Vec back(rank_);
  for (std::size_t j = 0; j < r; ++j) back += c[j] * simple_coroots_[j];
  if (back != y) return std::nullopt;
  return c;
}

std::int64_t RootDatum::form_y(const Vec& a, const Vec& b) const {
  std::int64_t s = 0;
  for (const auto& beta : positive_roots_) s += dot(beta.root, a) * dot(beta.root, b);
  return s;
}

}  // namespace ah
