#include "hopfrt/rational.hpp"

#include <cctype>

#include "hopfrt/errors.hpp"

namespace hopfrt {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == from) throw ParseError("expected digits in rational '" + std::string(text) + "'", j);
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  i = digits(i);
  if (i < text.size() && text[i] == '/') i = digits(i + 1);
  if (i != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", i);
  std::string s(text.front() == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("invalid rational '" + s + "'", 0);
  if (s.find('/') != std::string::npos && sgn(q.get_den()) == 0) throw ParseError("zero denominator", 0);
  q.canonicalize();
  return q;
}

Rational factorial(unsigned k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace hopfrt
