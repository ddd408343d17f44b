#pragma once

#include <doctest.h>

#include "foliage/catalogue.hpp"
#include "foliage/cli.hpp"

namespace th {

using namespace foliage;

inline KForm F(const std::string& s, const std::vector<std::string>& params = {},
               std::optional<std::size_t> arity = std::nullopt) {
  return cli::parse_form(s, params, arity);
}

inline RatFn S(const std::string& s, const Ctx& ctx) { return cli::parse_scalar(s, ctx); }
inline Poly P(const std::string& s, const Ctx& ctx) { return cli::parse_scalar(s, ctx).as_poly(); }

inline Rat R(long n, long d = 1) { return make_rat(n, d); }

}  // namespace th
