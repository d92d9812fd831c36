#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace surfchem {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

}  // namespace surfchem
