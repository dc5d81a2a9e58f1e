#include "superfock/dsl.hpp"

#include <cctype>
#include <map>

namespace superfock {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  int column() const { return int(pos) + 1; }
  bool eat(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, column()); }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)text[start])))
      fail("expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

// One summand: a function part and, if a basis factor d<k> closed the term,
// its direction.
struct TermValue {
  SuperFunction fn;
  std::optional<int> dir;
  int start_column = 0;
};

struct Parser {
  Lexer lex;
  SuperDimension dim;

  explicit Parser(const std::string& text, SuperDimension d) : lex{text, 0}, dim(d) {}

  std::vector<TermValue> parse_expr() {
    std::vector<TermValue> terms;
    int sign = 1;
    if (lex.eat('-')) sign = -1;
    parse_term(sign, terms);
    while (true) {
      char c = lex.peek();
      if (c == '+') { ++lex.pos; parse_term(1, terms); }
      else if (c == '-') { ++lex.pos; parse_term(-1, terms); }
      else break;
    }
    return terms;
  }

  void parse_term(int sign, std::vector<TermValue>& out) {
    TermValue val;
    lex.peek();
    val.start_column = lex.column();
    val.fn = SuperFunction::constant(dim, Scalar(sign));
    bool closed = false;
    while (true) {
      if (closed) lex.fail("basis factor d<k> must close its term");
      parse_factor(val, closed);
      char c = lex.peek();
      if (c == '*') { ++lex.pos; continue; }
      break;
    }
    out.push_back(std::move(val));
  }

  void parse_factor(TermValue& val, bool& closed) {
    char c = lex.peek();
    int col = lex.column();
    if (c == '\0') lex.fail("expected a factor");
    if (c == '(') {
      ++lex.pos;
      std::vector<TermValue> inner = parse_expr();
      if (!lex.eat(')')) lex.fail("expected ')'");
      SuperFunction sum;
      bool first = true;
      for (auto& t : inner) {
        if (t.dir) throw ParseError("basis factor not allowed inside parentheses", col);
        if (first) { sum = t.fn; first = false; }
        else sum += t.fn;
      }
      val.fn = val.fn * sum;
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      long long num = lex.integer();
      long long den = 1;
      if (lex.peek() == '/') { ++lex.pos; den = lex.integer(); }
      val.fn = val.fn.scaled(Scalar(Rational(num, den)));
      return;
    }
    std::string word = lex.ident();
    if (word.empty()) lex.fail("expected a factor");
    if (word == "i") { val.fn = val.fn.scaled(Scalar::i()); return; }
    if (word == "t") throw ParseError("bare t is not a factor; use x0 or exp(i*m*t)", col);
    if (word == "tau") {
      int power = 1;
      if (lex.peek() == '^') { ++lex.pos; power = int(lex.integer()); }
      val.fn = val.fn.scaled(Scalar::tau(power));
      return;
    }
    if (word == "exp") {
      if (!lex.eat('(')) lex.fail("expected '(' after exp");
      int sign = 1;
      if (lex.eat('-')) sign = -1;
      std::string unit = lex.ident();
      if (unit != "i") throw ParseError("expected i in exp(i*m*t)", col);
      if (!lex.eat('*')) lex.fail("expected '*' in exp(i*m*t)");
      long long m = lex.integer();
      if (!lex.eat('*')) lex.fail("expected '*' in exp(i*m*t)");
      std::string tvar = lex.ident();
      if (tvar != "t") throw ParseError("expected t in exp(i*m*t)", col);
      if (!lex.eat(')')) lex.fail("expected ')'");
      val.fn = val.fn * SuperFunction::fourier(dim, int(sign * m));
      return;
    }
    // Indexed factors: x<k>, th<k>, v<k>, a<k>, d<k>.
    auto split = [&](const std::string& prefix) -> std::optional<int> {
      if (word.size() <= prefix.size() || word.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
      for (std::size_t i = prefix.size(); i < word.size(); ++i)
        if (!std::isdigit((unsigned char)word[i])) return std::nullopt;
      return std::stoi(word.substr(prefix.size()));
    };
    try {
      if (auto k = split("x")) {
        if (*k > dim.n_spatial) throw ParseError("bosonic index x" + std::to_string(*k) +
                                                 " out of range", col);
        val.fn = val.fn * SuperFunction::coordinate(dim, *k);
        return;
      }
      if (auto k = split("th")) {
        if (*k < 1 || *k > dim.m_fermionic)
          throw ParseError("fermionic index th" + std::to_string(*k) + " out of range", col);
        val.fn = val.fn * SuperFunction::coordinate(dim, dim.fermion_index(*k - 1));
        return;
      }
      if (auto k = split("v")) {
        val.fn = val.fn * SuperFunction::velocity(dim, *k);
        return;
      }
      if (auto k = split("a")) {
        val.fn = val.fn * SuperFunction::acceleration(dim, *k);
        return;
      }
      if (auto k = split("d")) {
        if (!dim.valid_index(*k))
          throw ParseError("basis index d" + std::to_string(*k) + " out of range", col);
        val.dir = *k;
        closed = true;
        return;
      }
    } catch (const std::out_of_range& e) {
      throw ParseError(e.what(), col);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), col);
    }
    throw ParseError("unknown factor '" + word + "'", col);
  }
};

}  // namespace

ParsedExpression parse_dsl(const std::string& text, SuperDimension dim) {
  Parser parser(text, dim);
  ParsedExpression out;

  // Optional "name =" prefix.
  {
    Lexer probe{text, 0};
    std::string name = probe.ident();
    if (!name.empty() && probe.peek() == '=') {
      ++probe.pos;
      out.name = name;
      parser.lex.pos = probe.pos;
    }
  }

  std::vector<TermValue> terms = parser.parse_expr();
  parser.lex.skip_ws();
  if (parser.lex.pos != text.size())
    throw ParseError("unexpected trailing input", parser.lex.column());
  if (terms.empty()) throw ParseError("empty expression", 1);

  bool field = terms.front().dir.has_value();
  for (const auto& t : terms)
    if (t.dir.has_value() != field)
      throw ParseError("mixed function and vector-field terms", t.start_column);

  if (!field) {
    SuperFunction sum = terms.front().fn;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      try {
        sum += terms[i].fn;
      } catch (const std::invalid_argument&) {
        throw ParseError("term parity differs from the first term", terms[i].start_column);
      }
    }
    out.value = sum;
    return out;
  }

  // Field parity is fixed by the first nonzero component.
  int parity = -1;
  std::map<int, SuperFunction> comps;
  for (const auto& t : terms) {
    if (t.fn.is_zero()) continue;
    int p = (t.fn.parity() + dim.deg(*t.dir)) & 1;
    if (parity < 0) parity = p;
    else if (p != parity)
      throw ParseError("component parity violates the declared field parity", t.start_column);
    auto it = comps.find(*t.dir);
    if (it == comps.end()) comps.emplace(*t.dir, t.fn);
    else {
      try {
        it->second += t.fn;
      } catch (const std::invalid_argument&) {
        throw ParseError("component parity violates the declared field parity", t.start_column);
      }
    }
  }
  SuperVectorField xi(dim, parity < 0 ? 0 : parity);
  for (const auto& [mu, fn] : comps) xi.set_component(mu, fn);
  out.value = xi;
  return out;
}

SuperVectorField parse_vector_field(const std::string& text, SuperDimension dim) {
  ParsedExpression e = parse_dsl(text, dim);
  if (!e.is_field()) throw ParseError("expected a vector field (no d<k> factor found)", 1);
  return std::get<SuperVectorField>(e.value);
}

SuperFunction parse_function(const std::string& text, SuperDimension dim) {
  ParsedExpression e = parse_dsl(text, dim);
  if (e.is_field()) throw ParseError("expected a function, found a vector field", 1);
  return std::get<SuperFunction>(e.value);
}

namespace {

std::string print_term(const SuperDimension& dim, const TermKey& k, const Scalar& c,
                       std::optional<int> dir) {
  std::string piece = "(" + c.str() + ")";
  if (k.fourier != 0) piece += "*exp(i*" + std::to_string(k.fourier) + "*t)";
  for (const auto& [idx, exp] : k.bos)
    for (int e = 0; e < exp; ++e) piece += "*x" + std::to_string(idx);
  for (const auto& [idx, exp] : k.vbos)
    for (int e = 0; e < exp; ++e) piece += "*v" + std::to_string(idx);
  for (const auto& [idx, exp] : k.abos)
    for (int e = 0; e < exp; ++e) piece += "*a" + std::to_string(idx);
  std::uint64_t rest = k.odd;
  while (rest) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    int m = dim.m_fermionic;
    if (g < m) piece += "*th" + std::to_string(g + 1);
    else if (g < 2 * m) piece += "*v" + std::to_string(dim.fermion_index(g - m));
    else piece += "*a" + std::to_string(dim.fermion_index(g - 2 * m));
  }
  if (dir) piece += "*d" + std::to_string(*dir);
  return piece;
}

}  // namespace

std::string print_dsl(const SuperFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += print_term(f.dim(), k, c, std::nullopt);
  }
  return out;
}

std::string print_dsl(const SuperVectorField& xi) {
  std::string out;
  for (const auto& [mu, comp] : xi.components()) {
    for (const auto& [k, c] : comp.terms()) {
      if (!out.empty()) out += " + ";
      out += print_term(xi.dim(), k, c, mu);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace superfock
