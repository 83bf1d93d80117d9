#include "posmap/rational.hpp"

#include <cctype>

namespace posmap {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("expected digits in '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("invalid character '" + std::string(1, text[i]) + "' in number '" +
                       std::string(text) + "'");
    }
  }
  Integer z(std::string(text.substr(pos)), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  Integer num = parse_integer(text.substr(0, slash), true);
  Integer den = parse_integer(text.substr(slash + 1), false);
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

std::string to_string(const ComplexRational& z) {
  return "(" + to_string(z.re) + ", " + to_string(z.im) + ")";
}

}  // namespace posmap
