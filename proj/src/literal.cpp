#include "splitquat/literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace splitquat {

namespace {

std::string strip_spaces(std::string_view text, std::vector<std::size_t>& origin) {
  std::string out;
  for (std::size_t n = 0; n < text.size(); ++n) {
    if (std::isspace(static_cast<unsigned char>(text[n]))) continue;
    out.push_back(text[n]);
    origin.push_back(n);
  }
  origin.push_back(text.size());
  return out;
}

std::string render(const SplitQuaternion& q, int digits) {
  static constexpr const char* kSuffix[4] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t n = 0; n < 4; ++n) {
    const double v = q[n];
    if (v == 0.0) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (!out.empty() && buf[0] != '-') out.push_back('+');
    out += buf;
    out += kSuffix[n];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

SplitQuaternion parse_quaternion(std::string_view text) {
  std::vector<std::size_t> origin;
  const std::string s = strip_spaces(text, origin);
  if (s.empty()) throw ParseError("empty quaternion literal", 0);

  SplitQuaternion q;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t term_start = pos;
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (term_start != 0) {
      throw ParseError("expected '+' or '-' between terms", origin[pos]);
    }
    if (pos >= s.size()) throw ParseError("dangling sign", origin[pos]);

    double magnitude = 1.0;
    const bool has_number = std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.';
    if (has_number) {
      // Leading sign already consumed; from_chars handles digits, '.', exponent.
      const char* first = s.data() + pos;
      const char* last = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(first, last, magnitude, std::chars_format::general);
      if (ec != std::errc() || ptr == first) throw ParseError("malformed number", origin[pos]);
      pos = static_cast<std::size_t>(ptr - s.data());
    }
    std::size_t slot = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      slot = s[pos] == 'i' ? 1 : s[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (!has_number) {
      throw ParseError("expected a number or one of i, j, k", origin[pos]);
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw ParseError(std::string("unexpected character '") + s[pos] + "'", origin[pos]);
    const double v = sign * magnitude;
    if (!std::isfinite(v)) throw ParseError("coefficient is not finite", origin[term_start]);
    switch (slot) {
      case 0: q.s0 += v; break;
      case 1: q.s1 += v; break;
      case 2: q.s2 += v; break;
      default: q.s3 += v; break;
    }
  }
  return q;
}

std::string format_quaternion(const SplitQuaternion& q) { return render(q, 17); }

std::string pretty_quaternion(const SplitQuaternion& q, int digits) { return render(q, digits); }

}  // namespace splitquat
