#include "tiltlab/rational.hpp"

#include <cctype>

#include "tiltlab/error.hpp"

namespace tiltlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw InputError("malformed rational \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (s.starts_with("\xE2\x88\x92")) {  // U+2212
    negative = true;
    s.remove_prefix(3);
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer d{std::string(den)};
    if (d == 0) bad(text);
    value = Rational(Integer{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)) || (frac.empty() && whole == "0" && s.size() == 1))
      bad(text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits{std::string(whole) + std::string(frac)};
    value = Rational(digits, scale);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(Integer{std::string(s)});
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace tiltlab
