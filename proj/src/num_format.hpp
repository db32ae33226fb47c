#ifndef LEXICLUST_SRC_NUM_FORMAT_HPP
#define LEXICLUST_SRC_NUM_FORMAT_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

#include "lexiclust/errors.hpp"

namespace lexiclust::detail {

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw FormatError("cannot format double");
  return std::string(buf, ptr);
}

inline double parse_double(std::string_view text) {
  double value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FormatError("bad decimal value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace lexiclust::detail

#endif  // LEXICLUST_SRC_NUM_FORMAT_HPP
