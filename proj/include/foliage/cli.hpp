#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "foliage/degree2.hpp"
#include "foliage/error.hpp"

namespace foliage::cli {

using Json = nlohmann::json;

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line, column;
};

// Grammar: + - * / ^ (integer exponent), unary minus, parentheses, d(expr), dx1..dx4 (or dx, dy,
// dz, dw), variables x1..x4 (or x, y, z, w) and the declared parameters. The arity is the highest
// variable index used (at least 2) unless given.
KForm parse_form(const std::string& text, const std::vector<std::string>& params = {},
                 std::optional<std::size_t> arity = std::nullopt);
// Scalar expressions only; the context is supplied.
RatFn parse_scalar(const std::string& text, const Ctx& ctx);

std::vector<std::string> split_list(const std::string& s);

// Reports. Rationals are "p/q" strings, counts are integers, infinite Milnor numbers "INFINITE".
Json milnor_json(const Milnor& m);
Json germ_report(const KForm& w);
Json search_report(const SeriesSearch& s);
Json family_report(const OmegaFamilyData& d);
Json budget_report(const SingularBudget& b);

struct SuiteItem {
  std::string name;
  bool passed;
  std::string detail;
};
std::vector<std::string> suite_names();
// Throws DomainError for an unknown name; "all" runs every suite.
std::vector<SuiteItem> run_suite(const std::string& name);

// Exit codes: 0 success, 1 mathematical negative (failed check, domain error), 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foliage::cli
