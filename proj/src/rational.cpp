#include "circnet/rational.hpp"

#include <cctype>

#include "circnet/error.hpp"

namespace circnet {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) fail(ErrorKind::Internal, "zero denominator");
  Rat q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Int parse_unsigned_int(std::string_view s, std::string_view original) {
  if (!all_digits(s))
    fail(ErrorKind::ParseError, "bad rational literal '" + std::string(original) + "'");
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) fail(ErrorKind::ParseError, "bad rational literal '" + std::string(text) + "'");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Int num = parse_unsigned_int(s.substr(0, slash), text);
    Int den = parse_unsigned_int(s.substr(slash + 1), text);
    if (sgn(den) == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rat(num, den);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    // Decimal inputs convert exactly as digits / 10^k.
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      fail(ErrorKind::ParseError, "bad rational literal '" + std::string(text) + "'");
    Int num = whole.empty() ? Int(0) : parse_unsigned_int(whole, text);
    Int den = 1;
    if (!frac.empty()) {
      Int frac_num = parse_unsigned_int(frac, text);
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      num = num * den + frac_num;
    }
    value = Rat(num, den);
    value.canonicalize();
  } else {
    value = Rat(parse_unsigned_int(s, text));
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rat& value) {
  return value.get_str();
}

int sign(const Rat& value) {
  return sgn(value);
}

}  // namespace circnet
