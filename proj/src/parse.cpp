#include <cctype>

#include "axl/field.hpp"

namespace axl {

namespace {

// Recursive-descent parser for fully parenthesizable arithmetic over named
// symbols: + - * / ^ ( ) integers. '^' takes a nonnegative integer exponent.
struct Parser {
  const std::string& s;
  size_t i = 0;
  const DescP& d;
  const std::map<std::string, FieldElem>& syms;

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char ch) {
    skip();
    if (i < s.size() && s[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void err(const std::string& msg) {
    fail(Err::CorpusParseError, "parse error at offset " + std::to_string(i) + ": " + msg +
                                     " in \"" + s + "\"");
  }

  FieldElem expr() {
    FieldElem v = term();
    while (true) {
      skip();
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  FieldElem term() {
    FieldElem v = factor();
    while (true) {
      skip();
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  FieldElem factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    FieldElem v = atom();
    skip();
    if (eat('^')) {
      long e = integer();
      v = v.pow(e);
    }
    return v;
  }

  long integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) err("expected integer");
    long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }

  FieldElem atom() {
    skip();
    if (eat('(')) {
      FieldElem v = expr();
      if (!eat(')')) err("expected ')'");
      return v;
    }
    if (i < s.size() && std::isdigit((unsigned char)s[i])) {
      std::string num;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) num += s[i++];
      return FieldElem::from_rat(d, Rat(Int(num)));
    }
    if (i < s.size() && (std::isalpha((unsigned char)s[i]) || s[i] == '_')) {
      std::string name;
      while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) name += s[i++];
      auto it = syms.find(name);
      if (it != syms.end()) return it->second;
      return FieldElem::generator(d, name);
    }
    err("unexpected character");
  }
};

}  // namespace

FieldElem parse_expr(const DescP& d, const std::string& text,
                     const std::map<std::string, FieldElem>& syms) {
  Parser p{text, 0, d, syms};
  FieldElem v = p.expr();
  p.skip();
  if (p.i != text.size()) p.err("trailing input");
  return v;
}

}  // namespace axl
