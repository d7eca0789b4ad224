#pragma once

// Text formats: S-expression problem files, models, and two-counter machine
// descriptions.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordeq/ast.hpp"
#include "wordeq/twocounter.hpp"

namespace wordeq {

enum class Sort { String, Int };
enum class Command { CheckSat, GetModel };

struct Problem {
  Alphabet alphabet;
  std::vector<std::pair<std::string, Sort>> decls;
  std::vector<Formula> assertions;
  std::vector<Command> commands;

  /// Conjunction of all assertions.
  Formula formula() const { return Formula::conj(assertions); }
  bool wants_model() const;
};

/// Throws ParseError with line and column.
Problem parse_problem(std::string_view text);

std::string print_str(const StrTerm& t);
std::string print_len(const LenTerm& t);
std::string print_regex(const Regex& r);
std::string print_atom(const Atom& a);
std::string print_formula(const Formula& phi);
std::string print_problem(const Problem& p);

/// `(define-fun X () String "w")` and `(define-fun n () Int 3)` lines.
std::string print_model(const Assignment& a);
Assignment parse_model(std::string_view text);

/// Line-oriented machine description; `#` starts a comment.
TwoCounterMachine parse_2cm(std::string_view text);

}  // namespace wordeq
