#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace feedrank {

// Decodes UTF-8 into Unicode scalar values. Rejects overlong encodings,
// surrogates, out-of-range code points and truncated sequences.
std::vector<char32_t> decode_utf8(std::string_view text);

bool is_valid_utf8(std::string_view text);

// Number of Unicode scalar values in `text`.
std::size_t utf8_length(std::string_view text);

}  // namespace feedrank
