#include "feedrank/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "feedrank/csv.hpp"
#include "feedrank/format.hpp"
#include "feedrank/unicode.hpp"

namespace feedrank {

FactorMode parse_factor_mode(std::string_view text) {
  if (text == "revlen") return FactorMode::RevLen;
  if (text == "entropy") return FactorMode::Entropy;
  throw std::runtime_error("unknown factor mode: '" + std::string(text) +
                           "' (expected revlen or entropy)");
}

std::string_view factor_mode_name(FactorMode mode) {
  return mode == FactorMode::RevLen ? "revlen" : "entropy";
}

double shannon_entropy(std::string_view text) {
  if (text.empty()) return 0.0;
  std::unordered_map<char32_t, std::size_t> counts;
  auto scalars = decode_utf8(text);
  for (char32_t c : scalars) ++counts[c];
  const double n = static_cast<double>(scalars.size());
  double entropy = 0.0;
  for (const auto& [symbol, count] : counts) {
    const double p = static_cast<double>(count) / n;
    entropy -= p * std::log2(p);
  }
  // A single-symbol distribution can leave a -0.0 behind.
  return entropy == 0.0 ? 0.0 : entropy;
}

std::size_t review_length(std::string_view text) { return utf8_length(text); }

double category_factor(Category category) {
  switch (category) {
    case Category::BugReport: return 1.0;
    case Category::FeatureRequest: return 0.5;
    case Category::Other: return 0.0;
  }
  throw std::logic_error("invalid category value");
}

double sentiment_factor(int sentiment) {
  if (sentiment < -2 || sentiment > 2)
    throw std::runtime_error("sentiment out of [-2, 2]: " +
                             std::to_string(sentiment));
  return 1.0 / (sentiment + 3);
}

double score_factor(int stars) {
  if (stars < 1 || stars > 5)
    throw std::runtime_error("stars out of [1, 5]: " + std::to_string(stars));
  return 1.0 / stars;
}

std::size_t FactorTable::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return i;
  throw std::runtime_error("unknown review id in factor table: '" +
                           std::string(id) + "'");
}

const FactorRow& FactorTable::row(std::string_view id) const {
  return rows[index_of(id)];
}

FactorTable build_factor_table(const Corpus& corpus, FactorMode mode) {
  if (corpus.reviews.empty()) throw std::runtime_error("corpus is empty");

  std::vector<std::size_t> lengths(corpus.size());
  std::vector<double> entropies(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string& text = corpus.reviews[i].text;
    lengths[i] = review_length(text);
    entropies[i] = shannon_entropy(text);
  }

  FactorTable table;
  table.mode = mode;
  table.max_length = *std::max_element(lengths.begin(), lengths.end());
  table.max_entropy = *std::max_element(entropies.begin(), entropies.end());

  if (mode == FactorMode::RevLen && table.max_length == 0)
    throw std::runtime_error(
        "cannot normalize lengths: every review is degenerate");
  if (mode == FactorMode::Entropy && table.max_entropy == 0.0)
    throw std::runtime_error(
        "cannot normalize entropies: corpus maximum entropy is 0");

  table.ids.reserve(corpus.size());
  table.rows.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Review& r = corpus.reviews[i];
    FactorRow row;
    row.f1 = category_factor(r.category);
    row.f2 = sentiment_factor(r.sentiment);
    row.f3 = score_factor(r.stars);
    row.f4 = mode == FactorMode::RevLen
                 ? static_cast<double>(lengths[i]) /
                       static_cast<double>(table.max_length)
                 : entropies[i] / table.max_entropy;
    table.ids.push_back(r.id);
    table.rows.push_back(row);
  }
  return table;
}

std::string factors_to_csv(const FactorTable& table) {
  std::string out = "id,f1,f2,f3,f4,mode\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const FactorRow& row = table.rows[i];
    out += csv::format_row({table.ids[i], format_double(row.f1),
                            format_double(row.f2), format_double(row.f3),
                            format_double(row.f4),
                            std::string(factor_mode_name(table.mode))});
  }
  return out;
}

FactorTable factors_from_csv(std::string_view text) {
  auto rows = csv::parse(text);
  if (rows.empty() || rows[0] != csv::Row{"id", "f1", "f2", "f3", "f4", "mode"})
    throw std::runtime_error("factor csv: bad header");
  if (rows.size() < 2) throw std::runtime_error("factor csv: no rows");

  FactorTable table;
  table.mode = parse_factor_mode(rows[1].back());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (row.size() != 6)
      throw std::runtime_error("factor csv: row " + std::to_string(r) +
                               ": expected 6 fields");
    if (parse_factor_mode(row[5]) != table.mode)
      throw std::runtime_error("factor csv: row " + std::to_string(r) +
                               ": mixed modes");
    FactorRow factors{parse_double(row[1]), parse_double(row[2]),
                      parse_double(row[3]), parse_double(row[4])};
    for (double f : {factors.f1, factors.f2, factors.f3, factors.f4})
      if (!(f >= 0.0 && f <= 1.0))
        throw std::runtime_error("factor csv: row " + std::to_string(r) +
                                 ": factor out of [0, 1]");
    table.ids.push_back(row[0]);
    table.rows.push_back(factors);
  }
  return table;
}

}  // namespace feedrank
