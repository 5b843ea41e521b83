#include "ah/lattice.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace ah {

std::string Vec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

Vec Vec::parse(std::string_view text) {
  std::vector<std::int64_t> xs;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::MalformedInput, "empty vector literal");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim(text.substr(pos, comma - pos));
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw Error(ErrorKind::MalformedInput, "bad integer in vector literal '" + std::string(text) + "'");
    xs.push_back(x);
    pos = comma + 1;
  }
  return Vec(std::span<const std::int64_t>(xs));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec IntMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix/vector size mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] -= k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= k * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= k * m(i, src);
}

}  // namespace

SmithForm smith_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix p = IntMatrix::identity(r), q = IntMatrix::identity(c);
  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (bi == r || std::llabs(a(i, j)) < std::llabs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == r) break;
      swap_rows(a, t, bi);
      swap_rows(p, t, bi);
      swap_cols(a, t, bj);
      swap_cols(q, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const std::int64_t k = floor_div(a(i, t), a(t, t));
        add_row(a, i, t, k);
        add_row(p, i, t, k);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const std::int64_t k = floor_div(a(t, j), a(t, t));
        add_col(a, j, t, k);
        add_col(q, j, t, k);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the rest of the block by the pivot
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      add_row(a, t, bad, -1);
      add_row(p, t, bad, -1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < r; ++j) p(t, j) = -p(t, j);
    }
  }
  SmithForm out{{}, std::move(p), std::move(q)};
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
  return out;
}

std::int64_t determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool positive_definite(const IntMatrix& sym) {
  const std::size_t n = sym.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = sym(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

LatticeBasis::LatticeBasis(std::span<const Vec> gens, std::size_t dim) : dim_(dim) {
  std::vector<Vec> rows(gens.begin(), gens.end());
  std::size_t next = 0;
  for (std::size_t col = 0; col < dim && next < rows.size(); ++col) {
    // Euclid on column `col` among rows [next, end)
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = next; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[next], rows[best]);
      bool done = true;
      for (std::size_t i = next + 1; i < rows.size(); ++i) {
        const std::int64_t k = floor_div(rows[i][col], rows[next][col]);
        if (k != 0) rows[i] -= k * rows[next];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[next][col] == 0) continue;
    if (rows[next][col] < 0) rows[next] = -rows[next];
    rows_.push_back(rows[next]);
    pivots_.push_back(col);
    ++next;
  }
}

bool LatticeBasis::contains(Vec v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "lattice membership dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t col = pivots_[i];
    // entries left of the pivot are already zero in v
    if (v[col] % rows_[i][col] != 0) return false;
    v -= (v[col] / rows_[i][col]) * rows_[i];
  }
  return v.is_zero();
}

}  // namespace ah
