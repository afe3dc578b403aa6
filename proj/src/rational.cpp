#include "fibint/rational.hpp"

#include <cctype>

#include "fibint/errors.hpp"

namespace fibint {

namespace {

// Replaces U+2212 (minus sign) with '-' and strips surrounding whitespace.
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(c));
  }
  std::size_t b = out.find_first_not_of(" \t");
  std::size_t e = out.find_last_not_of(" \t");
  if (b == std::string::npos) return {};
  return out.substr(b, e - b + 1);
}

bool valid_rational_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) return valid_int(s);
  return valid_int(std::string_view(s).substr(0, slash)) &&
         valid_int(std::string_view(s).substr(slash + 1));
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string s = normalize(text);
  if (!valid_rational_text(s))
    throw domain_error("malformed rational: '" + std::string(text) + "'");
  Rat q(s);
  if (q.get_den() == 0)
    throw domain_error("zero denominator in rational: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

VecQ parse_rational_vector(std::string_view text) {
  VecQ out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string rational_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

std::string vector_str(const VecQ& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(',');
    out += rational_str(v[i]);
  }
  return out;
}

}  // namespace fibint
