#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csurg::scenario {

struct Position {
  int line = 0;
  int column = 0;
  bool operator==(const Position&) const = default;
};

struct Token {
  std::string text;
  Position pos;
  bool operator==(const Token&) const = default;
};

enum class ScenarioErrorKind { syntax, undeclared, arity, runtime };

std::string_view to_string(ScenarioErrorKind k);

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(ScenarioErrorKind kind, Position pos, const std::string& message);
  ScenarioErrorKind kind() const noexcept { return kind_; }
  Position position() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ScenarioErrorKind kind_;
  Position pos_;
  std::string message_;
};

struct Option {
  Token key;
  Token value;
  bool operator==(const Option&) const = default;
};

// One line. `keyword` is the first token, `sub` the subcommand of kirby and
// verify, `target` the declared or assigned name, `args` the positional
// operands and `options` the key=value pairs.
struct Statement {
  Token keyword;
  std::optional<Token> sub;
  std::optional<Token> target;
  std::vector<Token> args;
  std::vector<Option> options;
  std::string source;

  const Option* option(std::string_view key) const;
  bool operator==(const Statement&) const = default;
};

struct Scenario {
  std::vector<Statement> statements;
  bool operator==(const Scenario&) const = default;
};

// Grammar, one statement per line, '#' starts a comment:
//   page <name> dim=<2n> handles=[k:count,...] [stein=<bool>] [spheres=[...]] [cores=[k:label,...]]
//   word <name> = <label>^<exp> ... | id
//   openbook <name> = (<page>, <word>)
//   manifold <name> = catalog(<n>,<k>) [hypersurface=<page>] [legendrian=<label>]
//   sum <name> = <m1> <m2>
//   surgery <name> = <m> sphere=<label> k=<int> [param=<id>]
//   cover <name> = <m> q=<int> [along=page|<page>]
//   fibered <name> = <page> <phi> <psi>
//   compose <int> ...
//   kirby cover <page> q=<int> [base=lens|none] [out=<file>] [expect_dotted=<int>] [expect_two=<int>]
//   kirby surgery k=<int> [out=<file>]
//   verify equal <m1> <m2>
//   verify flags <m> [weakly|symplectically|exactly|stein=<true|false|unknown>]...
//   verify twist n=<int> [samples=<int>] [eps=<real>]
//   verify contact <form-id> n=<int> [samples=<int>]
//   print <m>
// Names must be declared before use; word letters must be spheres of a
// declared page. Throws ScenarioError; never returns a partial result.
Scenario parse_scenario(std::string_view text);

}  // namespace csurg::scenario
