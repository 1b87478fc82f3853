#include "kron/parser.hpp"

#include <cctype>
#include <limits>

namespace kron {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::vector<std::string>>& vars)
      : text_(text), explicit_(vars.has_value()) {
    if (vars) vars_ = *vars;
  }

  MultiPoly run() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p.with_vars(vars_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      const std::size_t at = pos_;
      const std::string d = digits();
      Integer e(d);
      if (e > std::numeric_limits<std::int32_t>::max()) {
        throw ParseError("exponent overflow (greater than 2^31-1)", at);
      }
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  MultiPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      if (accept('/')) {
        const std::size_t at = pos_;
        Integer den(digits());
        if (den == 0) throw ParseError("syntax error: zero denominator", at);
        return MultiPoly(vars_, make_rational(num, den));
      }
      return MultiPoly(vars_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      std::size_t idx = 0;
      for (; idx < vars_.size(); ++idx)
        if (vars_[idx] == name) break;
      if (idx == vars_.size()) {
        if (explicit_) throw ParseError("unknown variable '" + name + "'", start);
        vars_.push_back(name);
      }
      return MultiPoly::variable(vars_, idx);
    }
    if (accept('(')) {
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool explicit_;
  std::vector<std::string> vars_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::optional<std::vector<std::string>>& variables) {
  return Parser(text, variables).run();
}

}  // namespace kron
