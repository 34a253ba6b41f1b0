#include "hopfrt/lincomb.hpp"

#include <cctype>

#include "hopfrt/errors.hpp"

namespace hopfrt {

bool TensorKeyOrder::operator()(const TensorKey& a, const TensorKey& b) const {
  auto cls = [](const TensorKey& k) { return k.second.is_unit() ? 0 : (k.first.is_unit() ? 1 : 2); };
  const int ca = cls(a);
  const int cb = cls(b);
  if (ca != cb) return ca < cb;
  return a < b;
}

namespace {

template <class Map, class KeyFn>
std::string render_terms(const Map& terms, KeyFn&& key_str) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (sgn(c) < 0) {
      out += first ? "- " : " - ";
      out += to_string(Rational(-c));
    } else {
      if (!first) out += " + ";
      out += to_string(c);
    }
    out += ' ';
    out += key_str(k);
    first = false;
  }
  return out;
}

}  // namespace

std::string render(const LinComb& x) {
  return render_terms(x.terms(), [](const Forest& f) { return f.str(); });
}

std::string render(const Tensor2& x) {
  return render_terms(x.terms(),
                      [](const TensorKey& k) { return "(" + k.first.str() + " | " + k.second.str() + ")"; });
}

LinComb parse_lincomb(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  LinComb out;
  bool first = true;
  for (;;) {
    skip();
    if (pos >= text.size()) {
      if (first) throw ParseError("empty expression", pos);
      break;
    }
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    Rational coef = 1;
    bool have_coef = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      coef = parse_rational(text.substr(start, pos - start));
      have_coef = true;
      skip();
    }
    const bool forest_follows = pos < text.size() && (text[pos] == '[' || text[pos] == '1');
    if (forest_follows) {
      out.add(parse_forest_at(text, pos), sign * coef);
    } else if (have_coef) {
      // A bare number is a multiple of the unit.
      out.add(Forest{}, sign * coef);
    } else {
      throw ParseError("expected coefficient or forest", pos);
    }
  }
  return out;
}

}  // namespace hopfrt
