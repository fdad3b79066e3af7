#include "feedrank/ingestion.hpp"

#include <unordered_map>

#include "feedrank/csv.hpp"
#include "feedrank/format.hpp"
#include "feedrank/unicode.hpp"

namespace feedrank {

namespace {

constexpr std::size_t kColumns = 8;
const char* kColumnNames[kColumns] = {"id",       "country",   "app",
                                      "text",     "category",  "sentiment",
                                      "stars",    "relevance"};

int parse_bounded_int(const std::string& field, int lo, int hi,
                      std::size_t row, const char* column) {
  long long value;
  try {
    value = parse_int(field);
  } catch (const std::exception&) {
    throw SchemaError("row " + std::to_string(row) + ", column " + column +
                          ": not an integer: '" + field + "'",
                      row, column);
  }
  if (value < lo || value > hi)
    throw SchemaError("row " + std::to_string(row) + ", column " + column +
                          ": value " + std::to_string(value) + " out of [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]",
                      row, column);
  return static_cast<int>(value);
}

}  // namespace

SchemaError::SchemaError(const std::string& what, std::size_t row,
                         std::string column)
    : std::runtime_error(what), row_(row), column_(std::move(column)) {}

Corpus reviews_from_csv(std::string_view text) {
  auto rows = csv::parse(text);
  if (rows.empty()) throw SchemaError("empty file", 0, "");
  const csv::Row expected = csv::parse(std::string(kReviewSchema) + "\n")[0];
  if (rows[0] != expected)
    throw SchemaError("header does not match schema '" +
                          std::string(kReviewSchema) + "'",
                      0, "");

  std::vector<Review> reviews;
  reviews.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (row.size() != kColumns)
      throw SchemaError("row " + std::to_string(r) + ": expected " +
                            std::to_string(kColumns) + " fields, got " +
                            std::to_string(row.size()),
                        r, "");
    Review review;
    review.id = row[0];
    if (review.id.empty())
      throw SchemaError("row " + std::to_string(r) + ", column id: empty", r,
                        "id");
    review.country = row[1];
    if (review.country.empty())
      throw SchemaError("row " + std::to_string(r) + ", column country: empty",
                        r, "country");
    review.app = row[2];
    review.text = row[3];
    if (!is_valid_utf8(review.text))
      throw SchemaError("row " + std::to_string(r) +
                            ", column text: malformed UTF-8",
                        r, "text");
    try {
      review.category = parse_category(row[4]);
    } catch (const std::exception&) {
      throw SchemaError("row " + std::to_string(r) + ", column category: '" +
                            row[4] + "' is not bug/feature_request/other",
                        r, "category");
    }
    review.sentiment = parse_bounded_int(row[5], -2, 2, r, "sentiment");
    review.stars = parse_bounded_int(row[6], 1, 5, r, "stars");
    if (!row[7].empty())
      review.relevance = parse_bounded_int(row[7], 0, 3, r, "relevance");
    reviews.push_back(std::move(review));
  }

  std::unordered_map<std::string, std::size_t> first_row;
  for (std::size_t i = 0; i < reviews.size(); ++i) {
    auto [it, inserted] = first_row.emplace(reviews[i].id, i + 1);
    if (!inserted)
      throw SchemaError("row " + std::to_string(i + 1) +
                            ", column id: duplicate id '" + reviews[i].id +
                            "' (first seen on row " + std::to_string(it->second) +
                            ")",
                        i + 1, "id");
  }
  return Corpus::from_reviews(std::move(reviews));
}

Corpus load_reviews(const std::string& path) {
  return reviews_from_csv(csv::read_file(path));
}

std::string reviews_to_csv(const Corpus& corpus) {
  std::string out = std::string(kReviewSchema) + "\n";
  for (const Review& r : corpus.reviews) {
    csv::Row row = {r.id,
                    r.country,
                    r.app,
                    r.text,
                    std::string(category_name(r.category)),
                    std::to_string(r.sentiment),
                    std::to_string(r.stars),
                    r.relevance ? std::to_string(*r.relevance) : ""};
    out += csv::format_row(row);
  }
  return out;
}

void save_reviews(const std::string& path, const Corpus& corpus) {
  csv::write_file(path, reviews_to_csv(corpus));
}

Corpus join_annotations(const Corpus& annotations, const Corpus& full) {
  std::unordered_map<std::string_view, const Review*> by_id;
  by_id.reserve(full.reviews.size());
  for (const Review& r : full.reviews) by_id.emplace(r.id, &r);

  std::vector<Review> joined;
  joined.reserve(annotations.reviews.size());
  for (const Review& a : annotations.reviews) {
    auto it = by_id.find(a.id);
    if (it == by_id.end())
      throw std::runtime_error("annotation id '" + a.id +
                               "' not found in the full corpus");
    const Review& f = *it->second;
    auto conflict = [&](const char* field) {
      throw std::runtime_error("conflicting " + std::string(field) +
                               " for id '" + a.id + "'");
    };
    if (a.country != f.country) conflict("country");
    if (a.app != f.app) conflict("app");
    if (a.category != f.category) conflict("category");
    if (a.sentiment != f.sentiment) conflict("sentiment");
    if (a.stars != f.stars) conflict("stars");
    if (!a.text.empty() && a.text != f.text) conflict("text");
    if (a.relevance && f.relevance && *a.relevance != *f.relevance)
      conflict("relevance");

    Review r = a;
    r.text = f.text;
    if (!r.relevance) r.relevance = f.relevance;
    if (!r.relevance)
      throw std::runtime_error("annotation id '" + a.id +
                               "' carries no relevance");
    joined.push_back(std::move(r));
  }
  return Corpus::from_reviews(std::move(joined));
}

}  // namespace feedrank
