#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace feedrank::csv {

using Row = std::vector<std::string>;

// RFC 4180 style CSV. Quoted fields may contain commas, doubled quotes and
// newlines; both \n and \r\n line endings are accepted on input, \n is
// written on output.
std::vector<Row> parse(std::string_view text);
std::vector<Row> parse_file(const std::string& path);

std::string escape_field(std::string_view field);
std::string format_row(const Row& row);
std::string format(const std::vector<Row>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace feedrank::csv
