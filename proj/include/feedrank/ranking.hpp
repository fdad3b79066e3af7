#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "feedrank/features.hpp"

namespace feedrank {

// Four non-negative fixed-point weights over scale 10^p that sum exactly to
// the scale, so the weights sum to 1 in exact integer arithmetic.
struct WeightVector {
  std::array<std::int64_t, 4> units{};
  std::int64_t scale = 1;

  // Validates units >= 0, sum == scale and scale == 10^p with p in [0, 9].
  static WeightVector from_units(std::array<std::int64_t, 4> units,
                                 std::int64_t scale);

  double weight(std::size_t i) const {
    return static_cast<double>(units[i]) / static_cast<double>(scale);
  }
  int precision() const;  // p such that scale == 10^p

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// 10^p for p in [0, 9].
std::int64_t scale_for_precision(int precision);

struct RankedEntry {
  std::string id;
  double score = 0.0;
  std::size_t position = 0;  // 1-based
};

// Reviews ordered by descending score; ties broken by ascending id. The
// weights/mode are unset when the list was loaded from CSV rather than
// produced by rank().
struct RankedList {
  std::vector<RankedEntry> entries;
  std::optional<WeightVector> weights;
  std::optional<FactorMode> mode;
  bool mitigated = false;
};

// Weighted score of one review: sum over i of (units[i]/scale) * f_i,
// accumulated in feature order. The accumulation order is part of the
// contract; search results are reproducible only if every evaluation path
// performs the identical float operations.
double score(const WeightVector& weights, const FactorRow& factors);

RankedList rank(const WeightVector& weights, const FactorTable& table);

std::string ranking_to_csv(const RankedList& ranked);
RankedList ranking_from_csv(std::string_view text);
RankedList load_ranking(const std::string& path);
void save_ranking(const std::string& path, const RankedList& ranked);

}  // namespace feedrank
