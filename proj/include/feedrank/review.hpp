#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace feedrank {

enum class Category { BugReport, FeatureRequest, Other };

// Accepts "bug", "feature_request" and "other", case-insensitively.
Category parse_category(std::string_view text);
std::string_view category_name(Category category);

struct Review {
  std::string id;
  std::string country;
  std::string app;
  std::string text;  // UTF-8; empty text marks the review degenerate
  Category category = Category::Other;
  int sentiment = 0;  // -2 (very negative) .. 2 (very positive)
  int stars = 1;      // 1 .. 5
  std::optional<int> relevance;  // expert annotation, 0 .. 3

  bool degenerate() const { return text.empty(); }
};

bool operator==(const Review& a, const Review& b);

// An ordered, validated set of reviews. Ids are unique; `countries` holds
// the distinct country labels in sorted order.
struct Corpus {
  std::vector<Review> reviews;
  std::vector<std::string> countries;

  // Validates field ranges, id uniqueness and non-emptiness; derives
  // `countries`. Throws std::runtime_error on violation.
  static Corpus from_reviews(std::vector<Review> reviews);

  const Review* find(std::string_view id) const;
  std::size_t size() const { return reviews.size(); }
};

}  // namespace feedrank
