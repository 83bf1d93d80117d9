#include "posmap/poly_parse.hpp"

#include <cctype>
#include <map>

namespace posmap {
namespace {

struct ParsedTerm {
  Rational coeff;
  std::map<std::size_t, std::uint32_t> powers;  // variable index (1-based) -> exponent
  bool bare_x = false;                          // 'x' without index
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int s = 1;
      if (peek() == '+' || peek() == '-') {
        s = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      ParsedTerm t = parse_term();
      if (s < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += text_[pos_++];
    return d;
  }

  ParsedTerm parse_term() {
    ParsedTerm t;
    t.coeff = 1;
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits(), 10);
      skip_ws();
      Integer den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::string d = digits();
        if (d.empty()) fail("expected denominator");
        den = Integer(d, 10);
        if (sgn(den) == 0) fail("zero denominator");
      }
      t.coeff = make_rational(num, den);
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') fail("expected variable after '*'");
      }
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != 'x') break;
      ++pos_;
      std::string idx = digits();
      std::size_t var = 0;
      if (idx.empty()) {
        t.bare_x = true;
        var = 1;
      } else {
        var = std::stoul(idx);
        if (var == 0) fail("variable indices start at 1");
      }
      skip_ws();
      std::uint32_t e = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::string d = digits();
        if (d.empty()) fail("expected exponent");
        e = static_cast<std::uint32_t>(std::stoul(d));
        if (e == 0) fail("exponents must be positive");
      }
      t.powers[var] += e;
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') fail("expected variable after '*'");
      }
    }
    if (!have_factor) fail("expected coefficient or variable");
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, std::optional<std::size_t> nvars) {
  auto terms = Parser(text).parse();
  std::size_t maxvar = 0;
  for (const auto& t : terms) {
    if (t.bare_x) throw ParseError("multivariate input needs indexed variables x1, x2, ...");
    for (const auto& [v, e] : t.powers) maxvar = std::max(maxvar, v);
  }
  const std::size_t n = nvars.value_or(std::max<std::size_t>(maxvar, 1));
  if (maxvar > n) {
    throw ParseError("variable x" + std::to_string(maxvar) + " outside the ring x1..x" + std::to_string(n));
  }
  MultiPoly p(indexed_variables("x", n));
  for (const auto& t : terms) {
    Monomial m(n);
    for (const auto& [v, e] : t.powers) m[v - 1] = e;
    p.add_term(m, t.coeff);
  }
  return p;
}

UniPoly parse_unipoly(std::string_view text) {
  auto terms = Parser(text).parse();
  UniPoly p;
  for (const auto& t : terms) {
    std::size_t k = 0;
    for (const auto& [v, e] : t.powers) {
      if (v != 1) throw ParseError("univariate input may only use x (or x1)");
      k += e;
    }
    p += UniPoly::monomial(t.coeff, k);
  }
  return p;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& vars = p.variables();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool has_vars = m.total_degree() > 0;
    bool need_space = false;
    if (mag != 1 || !has_vars) {
      out += to_string(mag);
      need_space = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (need_space) out += " ";
      out += vars[v];
      if (m[v] > 1) out += "^" + std::to_string(m[v]);
      need_space = true;
    }
  }
  return out;
}

}  // namespace posmap
