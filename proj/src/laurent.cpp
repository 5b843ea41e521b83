#include "ah/laurent.hpp"

#include <charconv>

#include "ah/error.hpp"

namespace ah {

void Laurent::add_term(int exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = c_.emplace(exp, coeff);
  if (!inserted && (it->second += coeff) == 0) c_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto [e, c] : o.c_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto [e, c] : o.c_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (auto [ea, ca] : a.c_)
    for (auto [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
  return out;
}

Laurent Laurent::bar() const {
  Laurent out;
  for (auto [e, c] : c_) out.c_.emplace(-e, c);
  return out;
}

std::int64_t Laurent::eval(std::int64_t x) const {
  if (x != 1 && x != -1) throw Error(ErrorKind::MalformedInput, "evaluation only at v = 1 or v = -1");
  std::int64_t s = 0;
  for (auto [e, c] : c_) s += (x == -1 && (e % 2 != 0)) ? -c : c;
  return s;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : c_) {
    if (!first && c > 0) out += '+';
    out += std::to_string(c) + "*v^" + std::to_string(e);
    first = false;
  }
  return out;
}

Laurent Laurent::parse(std::string_view text) {
  Laurent out;
  if (text == "0") return out;
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorKind::MalformedInput, "bad Laurent polynomial '" + std::string(text) + "'"); };
  while (pos < text.size()) {
    std::int64_t c = 0;
    int e = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    if (*begin == '+') ++begin;
    auto r1 = std::from_chars(begin, end, c);
    if (r1.ec != std::errc() || std::string_view(r1.ptr, std::min<std::size_t>(3, end - r1.ptr)) != "*v^") fail();
    auto r2 = std::from_chars(r1.ptr + 3, end, e);
    if (r2.ec != std::errc()) fail();
    out.add_term(e, c);
    pos = static_cast<std::size_t>(r2.ptr - text.data());
  }
  return out;
}

}  // namespace ah
