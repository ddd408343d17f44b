#include "foliage/varctx.hpp"

#include <set>

#include "foliage/error.hpp"

namespace foliage {

VarCtx::VarCtx(std::vector<std::string> geometric, std::vector<std::string> params)
    : geometric_(std::move(geometric)), params_(std::move(params)) {
  if (geometric_.empty()) throw DomainError("at least one geometric variable required");
  if (geometric_.size() > kMaxGeometric) throw DomainError("at most 4 geometric variables");
  if (params_.size() > kMaxParams) throw DomainError("at most 4 parameters");
  std::set<std::string> seen;
  for (const auto* list : {&geometric_, &params_})
    for (const auto& n : *list)
      if (n.empty() || !seen.insert(n).second) throw DomainError("duplicate or empty variable name: " + n);
}

const std::string& VarCtx::name(std::size_t var) const {
  return var < geometric_.size() ? geometric_.at(var) : params_.at(var - geometric_.size());
}

std::optional<std::size_t> VarCtx::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < total(); ++i)
    if (this->name(i) == name) return i;
  return std::nullopt;
}

Ctx make_ctx(std::vector<std::string> geometric, std::vector<std::string> params) {
  return std::make_shared<const VarCtx>(std::move(geometric), std::move(params));
}

Ctx standard_ctx(std::size_t arity, std::vector<std::string> params) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
  return make_ctx(std::move(names), std::move(params));
}

void require_same(const Ctx& a, const Ctx& b) {
  if (!same_ctx(a, b)) throw ContextMismatch();
}

}  // namespace foliage
