#include "gf/polytext.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gf {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  char var = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at position " << i << ": " << msg;
    throw std::invalid_argument(os.str());
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  Int parse_uint() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number");
    return Int(s.substr(start, i - start));
  }

  Poly parse_base() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      Poly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = parse_uint();
      if (eat('/')) {
        Int d = parse_uint();
        if (d == 0) fail("zero denominator");
        Rat q(n, d);
        q.canonicalize();
        return Poly::constant(q);
      }
      return Poly::constant(Rat(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (var == 0) var = c;
      if (c != var) fail(std::string("mixed variables '") + var + "' and '" + c + "'");
      ++i;
      return Poly::variable();
    }
    fail("unexpected character");
  }

  Poly parse_factor() {
    Poly b = parse_base();
    if (eat('^')) {
      Int e = parse_uint();
      if (e > 64) fail("exponent too large");
      return b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Poly parse_term() {
    Poly t = parse_factor();
    while (eat('*')) t = t * parse_factor();
    return t;
  }

  Poly parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        break;
    }
    return acc;
  }
};

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser p(text);
  Poly r = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

std::string poly_to_string(const Poly& f, char var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = f.degree(); d >= 0; --d) {
    Rat c = f.coeff(d);
    if (sign(c) == 0) continue;
    if (first) {
      if (sign(c) < 0) os << '-';
      first = false;
    } else {
      os << (sign(c) < 0 ? '-' : '+');
    }
    Rat a = abs(c);
    bool unit = (a == 1);
    if (d == 0) {
      os << to_string(a);
    } else {
      if (!unit) os << to_string(a) << '*';
      os << var;
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

}  // namespace gf
