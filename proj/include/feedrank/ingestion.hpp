#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "feedrank/review.hpp"

namespace feedrank {

// Fixed interchange schema for review corpora. The relevance field is left
// blank when the review is not annotated.
inline constexpr std::string_view kReviewSchema =
    "id,country,app,text,category,sentiment,stars,relevance";

// Schema violation with the offending data row (1-based, header excluded)
// and column name.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& what, std::size_t row, std::string column);
  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

Corpus load_reviews(const std::string& path);
Corpus reviews_from_csv(std::string_view text);
std::string reviews_to_csv(const Corpus& corpus);
void save_reviews(const std::string& path, const Corpus& corpus);

// Joins expert annotations onto the full-text corpus. The result carries one
// review per annotation, in annotation order, with the text taken from
// `full` and every other shared field checked for agreement. Throws on
// unmatched annotation ids and on conflicting field values.
Corpus join_annotations(const Corpus& annotations, const Corpus& full);

}  // namespace feedrank
