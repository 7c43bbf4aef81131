#include "kdst/rational.hpp"

#include <cctype>

namespace kdst {

std::optional<Rational> parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  std::string int_part, frac_part;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    int_part += text[pos++];
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      frac_part += text[pos++];
    }
  }
  if (pos != text.size()) return std::nullopt;
  if (int_part.empty() && frac_part.empty()) return std::nullopt;

  mpz_class numerator(int_part.empty() ? "0" : int_part);
  mpz_class denominator = 1;
  for (char digit : frac_part) {
    numerator = numerator * 10 + (digit - '0');
    denominator *= 10;
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  mpq_class scaled = value * scale;
  mpz_class twice_num = scaled.get_num() * 2;
  mpz_class rounded;
  // round half away from zero
  if (scaled >= 0) {
    rounded = (twice_num + scaled.get_den()) / (scaled.get_den() * 2);
  } else {
    rounded = (twice_num - scaled.get_den()) / (scaled.get_den() * 2);
  }

  bool negative = rounded < 0;
  mpz_class magnitude = negative ? mpz_class(-rounded) : rounded;
  mpz_class whole = magnitude / scale;
  mpz_class frac = magnitude % scale;

  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string frac_str = frac.get_str();
    frac_str.insert(frac_str.begin(), digits - frac_str.size(), '0');
    // trim trailing zeros but keep at least one digit
    while (frac_str.size() > 1 && frac_str.back() == '0') frac_str.pop_back();
    if (frac_str != "0") out += "." + frac_str;
  }
  return out;
}

} // namespace kdst
