#include "feedrank/unicode.hpp"

#include <stdexcept>

namespace feedrank {

namespace {

// Decodes one scalar value starting at text[i]; advances i past it.
// Returns false on malformed input.
bool decode_one(std::string_view text, std::size_t& i, char32_t& out) {
  const auto byte = [&](std::size_t k) {
    return static_cast<std::uint8_t>(text[k]);
  };
  std::uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    out = b0;
    i += 1;
    return true;
  }
  std::size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return false;
  }
  if (i + len > text.size()) return false;
  for (std::size_t k = 1; k < len; ++k) {
    std::uint8_t b = byte(i + k);
    if ((b & 0xC0) != 0x80) return false;
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len]) return false;                  // overlong
  if (cp >= 0xD800 && cp <= 0xDFFF) return false;    // surrogate
  if (cp > 0x10FFFF) return false;
  out = cp;
  i += len;
  return true;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  char32_t cp;
  while (i < text.size()) {
    if (!decode_one(text, i, cp))
      throw std::runtime_error("malformed UTF-8 at byte offset " +
                               std::to_string(i));
    out.push_back(cp);
  }
  return out;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  char32_t cp;
  while (i < text.size())
    if (!decode_one(text, i, cp)) return false;
  return true;
}

std::size_t utf8_length(std::string_view text) {
  std::size_t i = 0, count = 0;
  char32_t cp;
  while (i < text.size()) {
    if (!decode_one(text, i, cp))
      throw std::runtime_error("malformed UTF-8 at byte offset " +
                               std::to_string(i));
    ++count;
  }
  return count;
}

}  // namespace feedrank
