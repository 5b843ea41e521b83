#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace ah {

/// Integer Laurent polynomial in v; zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(std::int64_t c) { add_term(0, c); }  // NOLINT: constants convert implicitly
  static Laurent monomial(int exp, std::int64_t coeff = 1) {
    Laurent p;
    p.add_term(exp, coeff);
    return p;
  }

  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }
  const std::map<int, std::int64_t>& terms() const noexcept { return c_; }
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }

  void add_term(int exp, std::int64_t coeff);
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) { return Laurent() - a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// v -> v^{-1}
  Laurent bar() const;
  /// Value at v = x (x = ±1 in practice).
  std::int64_t eval(std::int64_t x) const;

  /// "c_k*v^k" terms in ascending exponent order, e.g. "1*v^0-1*v^2"; "0" for zero.
  std::string str() const;
  static Laurent parse(std::string_view text);

 private:
  std::map<int, std::int64_t> c_;
};

}  // namespace ah
