#include "feedrank/review.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace feedrank {

Category parse_category(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "bug") return Category::BugReport;
  if (lower == "feature_request") return Category::FeatureRequest;
  if (lower == "other") return Category::Other;
  throw std::runtime_error("unknown category: '" + std::string(text) + "'");
}

std::string_view category_name(Category category) {
  switch (category) {
    case Category::BugReport: return "bug";
    case Category::FeatureRequest: return "feature_request";
    case Category::Other: return "other";
  }
  throw std::logic_error("invalid category value");
}

bool operator==(const Review& a, const Review& b) {
  return a.id == b.id && a.country == b.country && a.app == b.app &&
         a.text == b.text && a.category == b.category &&
         a.sentiment == b.sentiment && a.stars == b.stars &&
         a.relevance == b.relevance;
}

Corpus Corpus::from_reviews(std::vector<Review> reviews) {
  if (reviews.empty()) throw std::runtime_error("corpus is empty");
  std::unordered_set<std::string> seen;
  seen.reserve(reviews.size());
  std::vector<std::string> countries;
  for (const Review& r : reviews) {
    if (r.id.empty()) throw std::runtime_error("review with empty id");
    if (!seen.insert(r.id).second)
      throw std::runtime_error("duplicate review id: '" + r.id + "'");
    if (r.country.empty())
      throw std::runtime_error("review '" + r.id + "' has empty country");
    if (r.sentiment < -2 || r.sentiment > 2)
      throw std::runtime_error("review '" + r.id + "' has sentiment out of [-2, 2]");
    if (r.stars < 1 || r.stars > 5)
      throw std::runtime_error("review '" + r.id + "' has stars out of [1, 5]");
    if (r.relevance && (*r.relevance < 0 || *r.relevance > 3))
      throw std::runtime_error("review '" + r.id + "' has relevance out of [0, 3]");
    countries.push_back(r.country);
  }
  std::sort(countries.begin(), countries.end());
  countries.erase(std::unique(countries.begin(), countries.end()),
                  countries.end());
  Corpus corpus;
  corpus.reviews = std::move(reviews);
  corpus.countries = std::move(countries);
  return corpus;
}

const Review* Corpus::find(std::string_view id) const {
  for (const Review& r : reviews)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace feedrank
