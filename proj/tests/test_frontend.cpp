#include "doctest.h"
#include "support/support.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/frontend.hpp"

using namespace wordeq;
using namespace wqtest;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(ParseErrorKind::Syntax, 0, 0, "");
}

ParseError machine_error(const std::string& text) {
  try {
    parse_2cm(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for machine: " << text);
  return ParseError(ParseErrorKind::Syntax, 0, 0, "");
}

const char* kHeader = "(set-alphabet \"ab\")(declare-const X String)(declare-const Y String)"
                      "(declare-const Z String)(declare-const n Int)\n";

}  // namespace

TEST_CASE("parse a commutation problem") {
  Problem p = parse_problem(
      "(set-alphabet \"ab\")(declare-const X String)(assert (= (str.++ \"ab\" X) (str.++ X \"ba\")))(check-sat)");
  CHECK(p.alphabet == "ab");
  REQUIRE(p.assertions.size() == 1);
  CHECK(p.assertions[0] == eq(StrTerm::concat({L("ab"), V("X")}), StrTerm::concat({V("X"), L("ba")})));
  CHECK(p.commands == std::vector<Command>{Command::CheckSat});
  CHECK_FALSE(p.wants_model());
}

TEST_CASE("parse linear length atom") {
  Problem p = parse_problem(std::string(kHeader) + "(assert (<= (+ (str.len X) (* -1 (str.len Y))) 0))");
  REQUIRE(p.assertions.size() == 1);
  const Atom& a = p.assertions[0].atom();
  CHECK(a.kind() == Atom::Kind::LenLeq);
  CHECK(a.bound() == 0);
  CHECK(a.len() == LenTerm::sum({{1, LenTerm::len(V("X"))}, {-1, LenTerm::len(V("Y"))}}));
}

TEST_CASE("parse errors carry kind and position") {
  ParseError undeclared = parse_error("(set-alphabet \"ab\")\n(assert (= X X))");
  CHECK(undeclared.kind() == ParseErrorKind::UndeclaredVariable);
  CHECK(undeclared.line() == 2);
  CHECK(undeclared.col() == 12);

  ParseError letter = parse_error("(set-alphabet \"ab\")(declare-const X String)\n(assert (= X \"ac\"))");
  CHECK(letter.kind() == ParseErrorKind::LetterOutsideAlphabet);
  CHECK(letter.line() == 2);

  ParseError sort = parse_error(std::string(kHeader) + "(assert (= X n))");
  CHECK(sort.kind() == ParseErrorKind::Sort);
  CHECK(sort.line() == 2);

  ParseError unclosed = parse_error("(set-alphabet \"ab\"");
  CHECK(unclosed.kind() == ParseErrorKind::Syntax);
  CHECK(unclosed.line() == 1);
  CHECK(unclosed.col() == 1);

  ParseError overflow = parse_error(std::string(kHeader) + "(assert (<= (str.len X) 99999999999999999999))");
  CHECK(overflow.kind() == ParseErrorKind::Syntax);

  ParseError no_alphabet = parse_error("(declare-const X String)");
  CHECK(no_alphabet.line() == 1);
}

TEST_CASE("printers use the canonical spelling") {
  CHECK(print_atom(Atom::word_eq(StrTerm::concat({L("ab"), V("X")}), StrTerm::concat({V("X"), L("ba")}))) ==
        "(= (str.++ \"ab\" X) (str.++ X \"ba\"))");
  CHECK(print_regex(Regex::star(Regex::alt({Regex::lit("ab"), Regex::lit("ba")}))) ==
        "(re.* (re.union (str.to.re \"ab\") (str.to.re \"ba\")))");
}

TEST_CASE("print then parse is the identity on random formulas") {
  Rng rng(21);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    Formula phi = random_formula(rng, "ab", 4, 3);
    Problem p;
    p.alphabet = "ab";
    p.decls = {{"X", Sort::String}, {"Y", Sort::String}, {"Z", Sort::String}, {"n", Sort::Int}};
    p.assertions = {phi};
    p.commands = {Command::CheckSat, Command::GetModel};
    Problem q = parse_problem(print_problem(p));
    if (q.assertions.size() != 1 || !(q.assertions[0] == phi)) {
      ++mismatches;
      MESSAGE("round trip changed: " << print_formula(phi));
    }
    CHECK(q.wants_model());
  }
  CHECK(mismatches == 0);
}

TEST_CASE("models print and parse back") {
  Assignment a;
  a.strs["X"] = "aba";
  a.strs["Y"] = "";
  a.ints["n"] = 7;
  std::string text = print_model(a);
  CHECK(text.find("(define-fun X () String \"aba\")") != std::string::npos);
  CHECK(parse_model(text) == a);
}

TEST_CASE("arbitrary input never escapes as anything but ParseError") {
  Rng rng(22);
  const std::string pieces[] = {"(", ")", "\"", "ab", "X", " ", "\n", "assert", "=", "str.++", "str.len", "<=",
                                "declare-const", "String", "Int", "set-alphabet", "re.*", "-1", "9", "\\", ";"};
  const std::string valid = std::string(kHeader) + "(assert (= (str.++ \"ab\" X) (str.++ X \"ba\")))(check-sat)";
  int other = 0;
  for (int i = 0; i < 100000; ++i) {
    std::string text;
    switch (i % 3) {
      case 0:
        for (int k = uniform(rng, 0, 40); k > 0; --k) text.push_back(static_cast<char>(uniform(rng, 0, 255)));
        break;
      case 1:
        for (int k = uniform(rng, 0, 30); k > 0; --k) text += pieces[uniform(rng, 0, 20)];
        break;
      default:
        text = valid;
        for (int k = uniform(rng, 1, 3); k > 0; --k) {
          std::size_t at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(text.size()) - 1));
          if (chance(rng, 0.5))
            text.erase(at, 1);
          else
            text.insert(at, pieces[uniform(rng, 0, 20)]);
        }
    }
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.col() >= 1);
    } catch (...) {
      ++other;
    }
  }
  CHECK(other == 0);
}

TEST_CASE("deeply nested input is rejected") {
  std::string text(std::size_t{5000}, '(');
  CHECK(parse_error(text).kind() == ParseErrorKind::Syntax);
}

TEST_CASE("machine descriptions") {
  TwoCounterMachine m = parse_2cm(
      "# two states\nstates: q0 qf\ninput-alphabet: 0 1\ninitial: q0\nfinal: qf\nq0 0 Z Z -> qf in R\n");
  CHECK(m.states.size() == 2);
  CHECK(m.input_alphabet == "01");
  CHECK(m.initial == "q0");
  CHECK(m.is_final("qf"));
  REQUIRE(m.delta.size() == 1);
  const auto& [key, act] = *m.delta.begin();
  CHECK(key == RuleKey{"q0", '0', true, true});
  CHECK(act == RuleAction{"qf", Tape::In, Move::R});

  ParseError dup = machine_error(
      "states: q0 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\nq0 0 Z Z -> qf in R\nq0 0 Z Z -> q0 stor1 R\n");
  CHECK(dup.kind() == ParseErrorKind::NondeterministicDelta);
  CHECK(dup.line() == 6);

  ParseError letter =
      machine_error("states: q0 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\nq0 1 Z Z -> qf in R\n");
  CHECK(letter.kind() == ParseErrorKind::LetterOutsideAlphabet);

  ParseError bad = machine_error("states: q0 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\nq0 0 Z Z => qf in R\n");
  CHECK(bad.kind() == ParseErrorKind::Syntax);
  CHECK(bad.line() == 5);
  CHECK(bad.col() == 10);
}
