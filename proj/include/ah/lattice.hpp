#pragma once

// Integer vectors of small fixed capacity and the exact integer linear algebra
// used by the root datum (Smith form, lattice membership, determinants).

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ah/error.hpp"

namespace ah {

inline constexpr std::size_t kMaxRank = 8;

/// Integer vector with inline storage; used for weights (X) and coweights (Y).
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
    if (n > kMaxRank) throw Error(ErrorKind::MalformedInput, "rank exceeds kMaxRank");
  }
  Vec(std::initializer_list<std::int64_t> xs) : Vec(xs.size()) {
    std::copy(xs.begin(), xs.end(), c_.begin());
  }
  explicit Vec(std::span<const std::int64_t> xs) : Vec(xs.size()) {
    std::copy(xs.begin(), xs.end(), c_.begin());
  }

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }
  std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
  const std::int64_t* begin() const noexcept { return c_.data(); }
  const std::int64_t* end() const noexcept { return c_.data() + n_; }
  std::int64_t* begin() noexcept { return c_.data(); }
  std::int64_t* end() noexcept { return c_.data() + n_; }

  bool is_zero() const noexcept {
    return std::all_of(begin(), end(), [](std::int64_t x) { return x == 0; });
  }

  Vec& operator+=(const Vec& o) noexcept {
    for (std::size_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) noexcept {
    for (std::size_t i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(std::int64_t k) noexcept {
    for (std::size_t i = 0; i < n_; ++i) c_[i] *= k;
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) noexcept { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) noexcept { return a -= b; }
  friend Vec operator*(std::int64_t k, Vec a) noexcept { return a *= k; }
  friend Vec operator-(Vec a) noexcept { return a *= -1; }

  friend bool operator==(const Vec& a, const Vec& b) noexcept {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend auto operator<=>(const Vec& a, const Vec& b) noexcept {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i)
      h ^= std::hash<std::int64_t>{}(c_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  /// Comma-separated coordinates, e.g. "-2,0".
  std::string str() const;
  static Vec parse(std::string_view text);

 private:
  std::array<std::int64_t, kMaxRank> c_{};
  std::uint8_t n_ = 0;
};

inline std::int64_t dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different rank");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

  Vec apply(const Vec& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  const std::vector<std::int64_t>& data() const noexcept { return a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// Result of a Smith normal form computation P * M * Q = diag(d).
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // nonnegative, d_i | d_{i+1}
  IntMatrix left;                      // P (rows x rows), unimodular
  IntMatrix right;                     // Q (cols x cols), unimodular
};

SmithForm smith_form(const IntMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& m);

/// True iff the symmetric integer matrix is positive definite (all leading minors > 0).
bool positive_definite(const IntMatrix& sym);

/// Row-style Hermite basis of the lattice spanned by `gens`; supports membership tests.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  LatticeBasis(std::span<const Vec> gens, std::size_t dim);
  bool contains(Vec v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::size_t dim_ = 0;
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace ah

template <>
struct std::hash<ah::Vec> {
  std::size_t operator()(const ah::Vec& v) const noexcept { return v.hash(); }
};
