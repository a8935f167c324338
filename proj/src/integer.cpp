#include "modrecip/integer.hpp"

#include <cctype>

namespace modrecip {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::optional<Integer> parse_integer(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) return std::nullopt;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (base == 10 ? !std::isdigit(c) : !std::isxdigit(c)) return std::nullopt;
  }
  Integer value;
  if (value.set_str(std::string(text), base) != 0) return std::nullopt;
  if (negative) value = -value;
  return value;
}

std::string to_string(const Integer& x) { return x.get_str(10); }

}  // namespace modrecip
