#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "feedrank/review.hpp"

namespace feedrank {

// The fourth ranking factor is either normalized text length or normalized
// Shannon entropy; exactly one of the two is active in a table.
enum class FactorMode { RevLen, Entropy };

FactorMode parse_factor_mode(std::string_view text);  // "revlen" | "entropy"
std::string_view factor_mode_name(FactorMode mode);

// Shannon entropy in bits over the distribution of Unicode scalar values in
// `text`; 0 for the empty string.
double shannon_entropy(std::string_view text);

// Text length in Unicode scalar values.
std::size_t review_length(std::string_view text);

double category_factor(Category category);   // bug 1, feature_request 0.5, other 0
double sentiment_factor(int sentiment);      // 1 / (sentiment + 3)
double score_factor(int stars);              // 1 / stars

struct FactorRow {
  double f1 = 0;  // category
  double f2 = 0;  // sentiment
  double f3 = 0;  // stars
  double f4 = 0;  // length or entropy, normalized by the corpus maximum
};

// Per-review ranking factors in corpus order, built once and read many
// times. All factors lie in [0, 1].
struct FactorTable {
  std::vector<std::string> ids;
  std::vector<FactorRow> rows;  // parallel to ids
  FactorMode mode = FactorMode::RevLen;
  std::size_t max_length = 0;   // corpus maximum text length
  double max_entropy = 0.0;     // corpus maximum entropy, bits

  std::size_t size() const { return ids.size(); }
  std::size_t index_of(std::string_view id) const;  // throws if unknown
  const FactorRow& row(std::string_view id) const;
};

// Throws if the corpus is empty or the normalization maximum for `mode`
// would be 0 (e.g. every review degenerate).
FactorTable build_factor_table(const Corpus& corpus, FactorMode mode);

std::string factors_to_csv(const FactorTable& table);
FactorTable factors_from_csv(std::string_view text);

}  // namespace feedrank
