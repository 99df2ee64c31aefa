#include "infconv/rational.hpp"

namespace infconv {

namespace {

bool all_digits(const std::string& s, std::size_t b, std::size_t e) {
  if (b >= e) return false;
  for (std::size_t i = b; i < e; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  // Strict format: no whitespace, no hex/octal prefixes, sign only up front.
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
  const std::size_t slash = s.find('/');
  bool shape_ok;
  if (slash == std::string::npos) {
    shape_ok = all_digits(s, start, s.size());
  } else {
    shape_ok = all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
  }
  if (!shape_ok) throw ParseError("not a rational: \"" + s + "\"");
  try {
    Rat q(s, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: \"" + s + "\"");
  }
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

ExtRat ext_from_string(const std::string& s) {
  if (s == "+inf") return ExtRat::inf();
  return ExtRat(rat_from_string(s));
}

}  // namespace infconv
