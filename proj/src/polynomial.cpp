#include "superfock/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace superfock {

Poly Poly::var(int axis) {
  Poly p;
  Key k{0, 0, 0};
  k[axis] = 1;
  p.add(k, GaussianRational(1));
  return p;
}

void Poly::add(const Key& k, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) { terms_.emplace(k, c); return; }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [k, c] : b.terms_) r.add(k, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add(Poly::Key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

Poly Poly::pow(int k) const {
  Poly r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

Poly Poly::substitute(const Poly& xm, const Poly& xn, const Poly& xp) const {
  Poly r;
  for (const auto& [k, c] : terms_) {
    Poly t(c);
    if (k[0]) t *= xm.pow(k[0]);
    if (k[1]) t *= xn.pow(k[1]);
    if (k[2]) t *= xp.pow(k[2]);
    r += t;
  }
  return r;
}

GaussianRational Poly::evaluate(const GaussianRational& vm, const GaussianRational& vn,
                                const GaussianRational& vp) const {
  GaussianRational out;
  for (const auto& [k, c] : terms_) {
    GaussianRational t = c;
    for (int i = 0; i < k[0]; ++i) t *= vm;
    for (int i = 0; i < k[1]; ++i) t *= vn;
    for (int i = 0; i < k[2]; ++i) t *= vp;
    out += t;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"m", "n", "p"};
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string piece = "(" + c.str() + ")";
    for (int axis = 0; axis < 3; ++axis) {
      if (k[axis] == 0) continue;
      piece += "*";
      piece += names[axis];
      if (k[axis] > 1) piece += "^" + std::to_string(k[axis]);
    }
    if (!first) out += " + ";
    out += piece;
    first = false;
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& text;
  std::size_t pos;
  const std::array<std::string, 3>& vars;
  const std::map<std::string, GaussianRational>& params;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(msg + " at column " + std::to_string(pos + 1));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }

  Poly parse_expr() {
    Poly acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') { ++pos; acc += parse_term(); }
      else if (c == '-') { ++pos; acc -= parse_term(); }
      else break;
    }
    return acc;
  }

  static bool atom_start(char c) {
    return std::isdigit((unsigned char)c) || std::isalpha((unsigned char)c) ||
           c == '_' || c == '(';
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') { ++pos; acc *= parse_factor(); }
      else if (c == '/') {
        ++pos;
        Poly d = parse_factor();
        if (d.terms().size() != 1 || d.terms().begin()->first != Poly::Key{0, 0, 0})
          fail("division by a non-constant");
        GaussianRational inv = GaussianRational(1) / d.terms().begin()->second;
        acc = acc.scaled(inv);
      } else if (atom_start(c)) {
        acc *= parse_factor();  // implicit multiplication
      } else break;
    }
    return acc;
  }

  Poly parse_factor() {
    if (eat('-')) return -parse_factor();
    if (eat('+')) return parse_factor();
    Poly base = parse_atom();
    if (peek() == '^') {
      ++pos;
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      if (start == pos) fail("expected integer exponent");
      base = base.pow(std::stoi(text.substr(start, pos - start)));
    }
    return base;
  }

  Poly parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      return Poly(GaussianRational(Rational(std::stoll(text.substr(start, pos - start)))));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      if (name == "i") return Poly(GaussianRational::i());
      for (int axis = 0; axis < 3; ++axis)
        if (name == vars[axis]) return Poly::var(axis);
      auto it = params.find(name);
      if (it != params.end()) return Poly(it->second);
      pos = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("expected a polynomial atom");
  }
};

}  // namespace

Poly Poly::parse(const std::string& text, const std::array<std::string, 3>& vars,
                 const std::map<std::string, GaussianRational>& params) {
  PolyParser parser{text, 0, vars, params};
  Poly out = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("unexpected trailing input");
  return out;
}

}  // namespace superfock
