#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "splitquat/algebra.hpp"

namespace splitquat {

/// Raised by parse_quaternion; position() is the 0-based offset into the
/// literal where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a sum of signed decimal terms, each optionally suffixed by i, j or k
/// (e.g. "-0.25+2.5i+0.75j+2.5k"). Omitted terms are zero, repeated terms add,
/// whitespace is ignored and a bare suffix ("-j") means a unit coefficient.
SplitQuaternion parse_quaternion(std::string_view text);

/// Inverse of parse_quaternion with 17 significant digits; zero terms are
/// omitted and the zero quaternion prints as "0".
std::string format_quaternion(const SplitQuaternion& q);

/// Shorter human-readable rendering (up to `digits` significant digits).
std::string pretty_quaternion(const SplitQuaternion& q, int digits = 10);

}  // namespace splitquat
