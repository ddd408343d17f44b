#include "foliage/rational.hpp"

#include "foliage/error.hpp"

namespace foliage {

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto dot = text.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") throw DomainError("bad decimal: " + text);
      Int scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, text.size() - dot - 1);
      // Base 10 explicitly: GMP's default base 0 reads a leading 0 as octal.
      Rat r(Int(digits[0] == '+' ? digits.substr(1) : digits, 10), scale);
      r.canonicalize();
      return r;
    }
    Rat r(text[0] == '+' ? text.substr(1) : text, 10);
    if (r.get_den() == 0) throw DomainError("zero denominator: " + text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational literal: " + text);
  }
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace foliage
