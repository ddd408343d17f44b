#pragma once

#include <gmpxx.h>

#include <string>

namespace foliage {

// Always canonical: gmpxx keeps numerator/denominator reduced after arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
// Accepts "p", "p/q", "-p/q" and decimals like "0.25".
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace foliage
