#include <algorithm>
#include <cctype>
#include <sstream>

#include "foliage/cli.hpp"
#include "foliage/error.hpp"

namespace foliage::cli {

ParseError::ParseError(const std::string& msg, std::size_t l, std::size_t c)
    : Error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)), line(l), column(c) {}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

namespace {

enum class Tok { Num, Ident, Op, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(ch)) || (ch == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      t.kind = Tok::Num;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
    } else if (std::string("+-*/^").find(ch) != std::string::npos) {
      j = i + 1;
      t.kind = Tok::Op;
    } else if (ch == '(' || ch == ')') {
      j = i + 1;
      t.kind = ch == '(' ? Tok::LParen : Tok::RParen;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    t.text = s.substr(i, j - i);
    out.push_back(t);
    advance(j - i);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// 1-based index of a coordinate name, 0 otherwise.
std::size_t coordinate(const std::string& name) {
  static const std::string alias = "xyzw";
  if (name.size() == 1 && alias.find(name[0]) != std::string::npos) return alias.find(name[0]) + 1;
  if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '4') return name[1] - '0';
  return 0;
}

std::size_t differential_index(const std::string& name) {
  return name.size() >= 2 && name[0] == 'd' ? coordinate(name.substr(1)) : 0;
}

// A scalar (degree 0) or a 1-form.
struct Value {
  std::optional<RatFn> scalar;
  std::optional<KForm> form;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, Ctx ctx) : toks_(std::move(toks)), ctx_(std::move(ctx)) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(msg, t.line, t.col); }
  bool is_op(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }

  Value expr() {
    Value v = term();
    while (is_op("+") || is_op("-")) {
      const Token& op = next();
      Value r = term();
      v = add(v, r, op.text == "-", op);
    }
    return v;
  }

  Value term() {
    Value v = unary();
    while (is_op("*") || is_op("/")) {
      const Token& op = next();
      Value r = unary();
      v = op.text == "*" ? mul(v, r, op) : div(v, r, op);
    }
    return v;
  }

  Value unary() {
    if (is_op("-")) {
      next();
      Value v = unary();
      if (v.scalar) v.scalar = -*v.scalar;
      if (v.form) v.form = -*v.form;
      return v;
    }
    if (is_op("+")) {
      next();
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!is_op("^")) return base;
    const Token& op = next();
    bool neg = false;
    bool paren = false;
    if (peek().kind == Tok::LParen) {
      paren = true;
      next();
    }
    if (is_op("-")) {
      neg = true;
      next();
    }
    if (peek().kind != Tok::Num || peek().text.find('.') != std::string::npos) fail("integer exponent expected");
    const Token& num = next();
    if (paren) {
      if (peek().kind != Tok::RParen) fail("')' expected");
      next();
    }
    if (num.text.size() > 4) fail_at(num, "exponent too large");
    int e = std::stoi(num.text);
    if (!base.scalar) fail_at(op, "^ applies to scalar expressions only");
    if (neg && base.scalar->is_zero()) fail_at(op, "division by zero");
    base.scalar = base.scalar->pow(neg ? -e : e);
    return base;
  }

  Value atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Num: {
        try {
          return {RatFn(ctx_, parse_rat(t.text)), std::nullopt};
        } catch (const std::exception&) {
          fail_at(t, "malformed number '" + t.text + "'");
        }
      }
      case Tok::LParen: {
        Value v = expr();
        if (peek().kind != Tok::RParen) fail("')' expected");
        next();
        return v;
      }
      case Tok::Ident: return identifier(t);
      case Tok::End: fail_at(t, "unexpected end of input");
      default: fail_at(t, "unexpected '" + t.text + "'");
    }
  }

  Value identifier(const Token& t) {
    if (t.text == "d" && peek().kind == Tok::LParen) {
      next();
      Value inner = expr();
      if (peek().kind != Tok::RParen) fail("')' expected");
      next();
      if (!inner.scalar) fail_at(t, "d(...) applies to scalar expressions only");
      return {std::nullopt, differential(*inner.scalar)};
    }
    if (auto i = coordinate(t.text)) return {RatFn(Poly::var(ctx_, i - 1)), std::nullopt};
    if (auto i = differential_index(t.text)) return {std::nullopt, KForm::dx(ctx_, i - 1)};
    if (auto p = ctx_->index_of(t.text); p && *p >= ctx_->arity()) return {RatFn(Poly::var(ctx_, *p)), std::nullopt};
    fail_at(t, "undeclared identifier '" + t.text + "'");
  }

  Value add(const Value& a, const Value& b, bool minus, const Token& op) {
    if (a.scalar && b.scalar) return {minus ? *a.scalar - *b.scalar : *a.scalar + *b.scalar, std::nullopt};
    if (a.form && b.form) return {std::nullopt, minus ? *a.form - *b.form : *a.form + *b.form};
    // A zero scalar is compatible with forms.
    if (a.form && b.scalar && b.scalar->is_zero()) return a;
    if (b.form && a.scalar && a.scalar->is_zero()) return {std::nullopt, minus ? -*b.form : *b.form};
    fail_at(op, "cannot add a function and a 1-form");
  }

  Value mul(const Value& a, const Value& b, const Token& op) {
    if (a.scalar && b.scalar) return {*a.scalar * *b.scalar, std::nullopt};
    if (a.scalar) return {std::nullopt, *a.scalar * *b.form};
    if (b.scalar) return {std::nullopt, *b.scalar * *a.form};
    fail_at(op, "product of two 1-forms (wedge is not part of the input grammar)");
  }

  Value div(const Value& a, const Value& b, const Token& op) {
    if (!b.scalar) fail_at(op, "division by a 1-form");
    if (b.scalar->is_zero()) fail_at(op, "division by zero");
    RatFn inv = RatFn(ctx_, 1) / *b.scalar;
    if (a.scalar) return {*a.scalar * inv, std::nullopt};
    return {std::nullopt, inv * *a.form};
  }

  std::vector<Token> toks_;
  Ctx ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

KForm parse_form(const std::string& text, const std::vector<std::string>& params, std::optional<std::size_t> arity) {
  auto toks = tokenize(text);
  std::size_t n = 2;
  for (const auto& t : toks) {
    if (t.kind != Tok::Ident) continue;
    if (std::find(params.begin(), params.end(), t.text) != params.end()) continue;
    n = std::max({n, coordinate(t.text), differential_index(t.text)});
  }
  if (arity) {
    if (*arity < n) throw DomainError("expression uses x" + std::to_string(n) + " but the arity is " + std::to_string(*arity));
    n = *arity;
  }
  for (const auto& p : params)
    if (coordinate(p) || differential_index(p) || p == "d") throw DomainError("parameter name '" + p + "' is reserved");
  Ctx ctx = standard_ctx(n, params);
  Value v = Parser(std::move(toks), ctx).parse();
  return v.form ? *v.form : KForm::scalar(*v.scalar);
}

RatFn parse_scalar(const std::string& text, const Ctx& ctx) {
  auto toks = tokenize(text);
  for (const auto& t : toks)
    if (t.kind == Tok::Ident && coordinate(t.text) > ctx->arity())
      throw ParseError("variable " + t.text + " outside the context", t.line, t.col);
  Value v = Parser(std::move(toks), ctx).parse();
  if (!v.scalar) throw DomainError("scalar expression expected");
  return *v.scalar;
}

}  // namespace foliage::cli
