#pragma once

#include <map>

#include "ah/root_datum.hpp"

namespace ah {

using WeightMultiset = std::map<Vec, std::int64_t>;

/// Weight multiplicities of the irreducible dual-group module of highest weight mu (in Y),
/// by Freudenthal's recursion over the dual root system. Memoized per mu.
class SatakeCharacters {
 public:
  explicit SatakeCharacters(RootDatumPtr d) : d_(std::move(d)) {}

  /// Throws NotDominant.
  const WeightMultiset& character(const Vec& mu);
  /// Multiplicities of the dominant weights only.
  const WeightMultiset& dominant_character(const Vec& mu);
  std::int64_t dimension(const Vec& mu);

 private:
  RootDatumPtr d_;
  std::map<Vec, WeightMultiset> dominant_memo_, full_memo_;
};

}  // namespace ah
