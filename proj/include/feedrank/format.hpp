#pragma once

#include <charconv>
#include <stdexcept>
#include <string>

namespace feedrank {

// Formats a double with 17 significant digits, enough for lossless
// round-tripping through text.
inline std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

inline double parse_double(const std::string& text) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error("not a number: '" + text + "'");
  return value;
}

inline long long parse_int(const std::string& text) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  long long value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error("not an integer: '" + text + "'");
  return value;
}

}  // namespace feedrank
