#ifndef SUPERFOCK_DSL_HPP
#define SUPERFOCK_DSL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "superfock/vector_field.hpp"

namespace superfock {

// Text form for functions and vector fields (grammar in the README):
//   term   := ['-'] factor ('*' factor)*
//   factor := INT['/'INT] | 'i' | 'tau'['^'['-']INT] | exp(i*INT*t)
//           | x<k> | th<k> | v<k> | a<k> | d<k> | '(' expr ')'
//   expr   := term (('+'|'-') term)*
// A d<k> factor must close its term and turns the expression into a vector
// field. x0 carries an explicit power of t (accepted by the symbolic layer,
// rejected by the Fock builders); v0 folds to 1 and a0 to 0.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int col)
      : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
  int column;
};

struct ParsedExpression {
  std::optional<std::string> name;
  std::variant<SuperFunction, SuperVectorField> value;

  bool is_field() const { return value.index() == 1; }
};

ParsedExpression parse_dsl(const std::string& text, SuperDimension dim);

SuperVectorField parse_vector_field(const std::string& text, SuperDimension dim);
SuperFunction parse_function(const std::string& text, SuperDimension dim);

// Canonical printers emitting the same grammar; parse(print(x)) == x.
std::string print_dsl(const SuperFunction& f);
std::string print_dsl(const SuperVectorField& xi);

}  // namespace superfock

#endif
