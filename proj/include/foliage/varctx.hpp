#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace foliage {

inline constexpr std::size_t kMaxGeometric = 4;
inline constexpr std::size_t kMaxParams = 4;
inline constexpr std::size_t kMaxVars = kMaxGeometric + kMaxParams;

// Geometric variables come first in every exponent vector, parameters after.
class VarCtx {
 public:
  VarCtx(std::vector<std::string> geometric, std::vector<std::string> params = {});

  std::size_t arity() const { return geometric_.size(); }
  std::size_t nparams() const { return params_.size(); }
  std::size_t total() const { return geometric_.size() + params_.size(); }

  const std::vector<std::string>& geometric() const { return geometric_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::string& name(std::size_t var) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VarCtx& o) const {
    return geometric_ == o.geometric_ && params_ == o.params_;
  }

 private:
  std::vector<std::string> geometric_;
  std::vector<std::string> params_;
};

using Ctx = std::shared_ptr<const VarCtx>;

Ctx make_ctx(std::vector<std::string> geometric, std::vector<std::string> params = {});
// x1..xn with the given parameters.
Ctx standard_ctx(std::size_t arity, std::vector<std::string> params = {});

inline bool same_ctx(const Ctx& a, const Ctx& b) { return a == b || *a == *b; }
void require_same(const Ctx& a, const Ctx& b);

}  // namespace foliage
