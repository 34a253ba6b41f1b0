#include "hopfrt/polynomial_parse.hpp"

#include <algorithm>
#include <cctype>

#include "hopfrt/errors.hpp"

namespace hopfrt {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {
    // Longest names first so that `x10` is not read as `x1` followed by `0`.
    order_.resize(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](auto a, auto b) { return vars[a].size() > vars[b].size(); });
  }

  PolyTerms parse() {
    PolyTerms out;
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    for (bool first = true;; first = false) {
      skip();
      if (pos_ >= s_.size()) break;
      Rational sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-', found '") + s_[pos_] + "'", pos_);
      }
      auto [exps, coef] = term();
      auto& slot = out[exps];
      slot += sign * coef;
      if (is_zero(slot)) out.erase(exps);
    }
    return out;
  }

 private:
  std::pair<std::vector<int>, Rational> term() {
    std::vector<int> exps(vars_.size(), 0);
    Rational coef = 1;
    bool any = false;
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == '+' || s_[pos_] == '-') break;
      if (s_[pos_] == '*') {
        if (!any) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef *= number();
        any = true;
        continue;
      }
      if (s_[pos_] == '(') {
        throw ParseError("parentheses are not supported", pos_);
      }
      const std::size_t v = variable();
      int e = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected exponent", pos_);
        e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      }
      exps[v] += e;
      any = true;
    }
    if (!any) throw ParseError("expected term", pos_);
    return {exps, coef};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (den == pos_) throw ParseError("expected denominator", pos_);
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      throw ParseError("invalid number", start);
    }
  }

  std::size_t variable() {
    for (auto i : order_) {
      const auto& name = vars_[i];
      if (s_.substr(pos_, name.size()) == name) {
        const std::size_t end = pos_ + name.size();
        if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) continue;
        pos_ = end;
        return i;
      }
    }
    std::size_t end = pos_;
    while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
    throw ParseError("unknown variable '" + std::string(s_.substr(pos_, std::max<std::size_t>(end - pos_, 1))) + "'",
                     pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyTerms parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return PolyParser(text, variables).parse();
}

}  // namespace hopfrt
