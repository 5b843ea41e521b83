#pragma once

#include <optional>

#include "ah/groth.hpp"
#include "doctest.h"

namespace ah::test {

// One datum with the engines built on top of it.
struct World {
  explicit World(const std::string& preset) : d(load_preset(preset)), g(d) {}
  RootDatumPtr d;
  ExtWeyl g;
  Element operator()(std::string_view literal) const { return g.parse(literal); }
};

inline RootDatumPtr datum_from_json(const std::string& text) { return load_root_datum(RootDatumSpec::from_json(text)); }

/// Kind of the ah::Error thrown by f, or nullopt if nothing is thrown.
template <class F>
std::optional<ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace ah::test
