#include "wordeq/frontend.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "wordeq/errors.hpp"

namespace wordeq {

bool Problem::wants_model() const {
  return std::find(commands.begin(), commands.end(), Command::GetModel) != commands.end();
}

namespace {

constexpr int kMaxDepth = 1000;

struct Sexp {
  enum class Kind { List, Symbol, String, Int };
  Kind kind = Kind::List;
  std::string text;
  std::int64_t value = 0;
  std::vector<Sexp> items;
  int line = 1;
  int col = 1;

  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
};

[[noreturn]] void fail(ParseErrorKind kind, int line, int col, const std::string& msg) {
  throw ParseError(kind, line, col, msg);
}
[[noreturn]] void fail(const Sexp& at, const std::string& msg, ParseErrorKind kind = ParseErrorKind::Syntax) {
  fail(kind, at.line, at.col, msg);
}

bool symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("~!@$%^&*_-+=<>.?/").find(c) != std::string_view::npos;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read(0));
      skip_space();
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == ';') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  Sexp read(int depth) {
    if (depth > kMaxDepth) fail(ParseErrorKind::Syntax, line_, col_, "nesting too deep");
    Sexp s;
    s.line = line_;
    s.col = col_;
    char c = peek();
    if (c == '(') {
      advance();
      s.kind = Sexp::Kind::List;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail(ParseErrorKind::Syntax, s.line, s.col, "unclosed parenthesis");
        if (peek() == ')') {
          advance();
          return s;
        }
        s.items.push_back(read(depth + 1));
      }
    }
    if (c == ')') fail(ParseErrorKind::Syntax, line_, col_, "unexpected ')'");
    if (c == '"') {
      advance();
      s.kind = Sexp::Kind::String;
      while (pos_ < text_.size() && peek() != '"') {
        char d = peek();
        if (d < 32 || d > 126) fail(ParseErrorKind::Syntax, line_, col_, "invalid character in string literal");
        s.text.push_back(d);
        advance();
      }
      if (pos_ >= text_.size()) fail(ParseErrorKind::Syntax, s.line, s.col, "unterminated string literal");
      advance();
      return s;
    }
    if (!symbol_char(c)) fail(ParseErrorKind::Syntax, line_, col_, "unexpected character");
    while (pos_ < text_.size() && symbol_char(peek())) {
      s.text.push_back(peek());
      advance();
    }
    std::string_view digits = s.text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char d) { return d >= '0' && d <= '9'; })) {
      s.kind = Sexp::Kind::Int;
      auto [ptr, ec] = std::from_chars(s.text.data(), s.text.data() + s.text.size(), s.value);
      if (ec != std::errc() || ptr != s.text.data() + s.text.size())
        fail(ParseErrorKind::Syntax, s.line, s.col, "integer constant out of 64-bit range");
    } else {
      s.kind = Sexp::Kind::Symbol;
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Interpreter {
 public:
  Problem run(const std::vector<Sexp>& commands) {
    for (const auto& cmd : commands) command(cmd);
    return std::move(p_);
  }

 private:
  const std::string& head(const Sexp& s) {
    if (s.kind != Sexp::Kind::List || s.items.empty() || s.items.front().kind != Sexp::Kind::Symbol)
      fail(s, "expected a parenthesized form with an operator");
    return s.items.front().text;
  }

  void arity(const Sexp& s, std::size_t min, std::size_t max) {
    std::size_t n = s.items.size() - 1;
    if (n < min || n > max) fail(s, "wrong number of arguments to " + s.items.front().text);
  }

  void command(const Sexp& s) {
    const std::string& h = head(s);
    if (h == "set-alphabet") {
      arity(s, 1, 1);
      const Sexp& a = s.items[1];
      if (a.kind != Sexp::Kind::String || a.text.empty()) fail(a, "set-alphabet expects a nonempty string");
      if (alphabet_set_) fail(s, "alphabet already set");
      std::string seen;
      for (char c : a.text) {
        if (seen.find(c) != std::string::npos) fail(a, std::string("duplicate letter '") + c + "'");
        seen.push_back(c);
      }
      p_.alphabet = a.text;
      alphabet_set_ = true;
    } else if (h == "declare-const") {
      arity(s, 2, 2);
      const Sexp& name = s.items[1];
      const Sexp& sort = s.items[2];
      if (name.kind != Sexp::Kind::Symbol) fail(name, "expected an identifier");
      if (FreshNames::is_fresh(name.text)) fail(name, "identifiers may not start with '!'");
      if (reserved(name.text)) fail(name, "reserved word used as identifier");
      if (sorts_.count(name.text)) fail(name, "duplicate declaration of " + name.text);
      Sort srt;
      if (sort.is_symbol("String")) {
        if (!alphabet_set_) fail(s, "set-alphabet must precede String declarations");
        srt = Sort::String;
      } else if (sort.is_symbol("Int")) {
        srt = Sort::Int;
      } else {
        fail(sort, "expected sort String or Int", ParseErrorKind::Sort);
      }
      sorts_[name.text] = srt;
      p_.decls.emplace_back(name.text, srt);
    } else if (h == "assert") {
      arity(s, 1, 1);
      p_.assertions.push_back(form(s.items[1]));
    } else if (h == "check-sat") {
      arity(s, 0, 0);
      p_.commands.push_back(Command::CheckSat);
    } else if (h == "get-model") {
      arity(s, 0, 0);
      p_.commands.push_back(Command::GetModel);
    } else {
      fail(s.items.front(), "unknown command " + h);
    }
  }

  static bool reserved(const std::string& n) {
    static const std::set<std::string> words{"and", "or", "not", "re.epsilon", "String", "Int", "str.++", "str.len",
                                             "str.in.re", "str.to.re", "re.++", "re.union", "re.*"};
    return words.count(n) > 0;
  }

  Formula form(const Sexp& s) {
    const std::string& h = head(s);
    if (h == "=") {
      arity(s, 2, 2);
      StrTerm lhs = str(s.items[1]);
      return Formula::atom(Atom::word_eq(std::move(lhs), str(s.items[2])));
    }
    if (h == "<=") {
      arity(s, 2, 2);
      const Sexp& b = s.items[2];
      if (b.kind != Sexp::Kind::Int) fail(b, "expected an integer bound");
      return Formula::atom(Atom::len_leq(len(s.items[1]), b.value));
    }
    if (h == "str.in.re") {
      arity(s, 2, 2);
      StrTerm t = str(s.items[1]);
      return Formula::atom(Atom::in_re(std::move(t), regex(s.items[2])));
    }
    if (h == "and" || h == "or") {
      std::vector<Formula> kids;
      for (std::size_t i = 1; i < s.items.size(); ++i) kids.push_back(form(s.items[i]));
      return h == "and" ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    if (h == "not") {
      arity(s, 1, 1);
      return Formula::negate(form(s.items[1]));
    }
    fail(s.items.front(), "unknown formula operator " + h);
  }

  Word literal(const Sexp& s) {
    for (std::size_t i = 0; i < s.text.size(); ++i)
      if (p_.alphabet.find(s.text[i]) == std::string::npos)
        fail(ParseErrorKind::LetterOutsideAlphabet, s.line, s.col + 1 + static_cast<int>(i),
             std::string("letter outside alphabet: '") + s.text[i] + "'");
    return s.text;
  }

  void check_var(const Sexp& s, Sort want) {
    auto it = sorts_.find(s.text);
    if (it == sorts_.end()) fail(s, "undeclared variable " + s.text, ParseErrorKind::UndeclaredVariable);
    if (it->second != want)
      fail(s, s.text + " has sort " + (it->second == Sort::String ? "String" : "Int"), ParseErrorKind::Sort);
  }

  StrTerm str(const Sexp& s) {
    switch (s.kind) {
      case Sexp::Kind::String:
        return StrTerm::lit(literal(s));
      case Sexp::Kind::Symbol:
        check_var(s, Sort::String);
        return StrTerm::var(s.text);
      case Sexp::Kind::Int:
        fail(s, "integer where a string term is expected", ParseErrorKind::Sort);
      case Sexp::Kind::List:
        break;
    }
    if (head(s) != "str.++") fail(s.items.front(), "expected a string term", ParseErrorKind::Sort);
    arity(s, 2, SIZE_MAX);
    std::vector<StrTerm> parts;
    for (std::size_t i = 1; i < s.items.size(); ++i) parts.push_back(str(s.items[i]));
    return StrTerm::concat(std::move(parts));
  }

  LenTerm len(const Sexp& s) {
    switch (s.kind) {
      case Sexp::Kind::Int:
        return LenTerm::constant(s.value);
      case Sexp::Kind::Symbol:
        check_var(s, Sort::Int);
        return LenTerm::int_var(s.text);
      case Sexp::Kind::String:
        fail(s, "string where an integer term is expected", ParseErrorKind::Sort);
      case Sexp::Kind::List:
        break;
    }
    const std::string& h = head(s);
    if (h == "str.len") {
      arity(s, 1, 1);
      return LenTerm::len(str(s.items[1]));
    }
    if (h == "+") {
      arity(s, 2, SIZE_MAX);
      std::vector<std::pair<std::int64_t, LenTerm>> terms;
      for (std::size_t i = 1; i < s.items.size(); ++i) terms.emplace_back(1, len(s.items[i]));
      return LenTerm::sum(std::move(terms));
    }
    if (h == "*") {
      arity(s, 2, 2);
      if (s.items[1].kind != Sexp::Kind::Int) fail(s.items[1], "expected an integer coefficient");
      return LenTerm::sum({{s.items[1].value, len(s.items[2])}});
    }
    fail(s.items.front(), "expected an integer term", ParseErrorKind::Sort);
  }

  Regex regex(const Sexp& s) {
    if (s.is_symbol("re.epsilon")) return Regex::epsilon();
    const std::string& h = head(s);
    if (h == "str.to.re") {
      arity(s, 1, 1);
      if (s.items[1].kind != Sexp::Kind::String) fail(s.items[1], "expected a string literal");
      return Regex::lit(literal(s.items[1]));
    }
    if (h == "re.++" || h == "re.union") {
      arity(s, 2, SIZE_MAX);
      std::vector<Regex> kids;
      for (std::size_t i = 1; i < s.items.size(); ++i) kids.push_back(regex(s.items[i]));
      return h == "re.++" ? Regex::concat(std::move(kids)) : Regex::alt(std::move(kids));
    }
    if (h == "re.*") {
      arity(s, 1, 1);
      return Regex::star(regex(s.items[1]));
    }
    fail(s.items.front(), "expected a regular expression");
  }

  Problem p_;
  bool alphabet_set_ = false;
  std::map<std::string, Sort> sorts_;
};

std::string quote(const Word& w) { return "\"" + w + "\""; }

}  // namespace

Problem parse_problem(std::string_view text) { return Interpreter().run(Reader(text).read_all()); }

std::string print_str(const StrTerm& t) {
  switch (t.kind()) {
    case StrTerm::Kind::Lit:
      return quote(t.text());
    case StrTerm::Kind::Var:
      return t.text();
    case StrTerm::Kind::Concat: {
      std::string out = "(str.++";
      for (const auto& p : t.parts()) out += " " + print_str(p);
      return out + ")";
    }
  }
  return {};
}

std::string print_len(const LenTerm& t) {
  switch (t.kind()) {
    case LenTerm::Kind::Const:
      return std::to_string(t.value());
    case LenTerm::Kind::IntVar:
      return t.name();
    case LenTerm::Kind::Len:
      return "(str.len " + print_str(t.str()) + ")";
    case LenTerm::Kind::Sum: {
      auto scaled = [&](std::size_t i) {
        return "(* " + std::to_string(t.coeff(i)) + " " + print_len(t.term(i)) + ")";
      };
      if (t.size() == 1) return scaled(0);
      std::string out = "(+";
      for (std::size_t i = 0; i < t.size(); ++i) out += " " + (t.coeff(i) == 1 ? print_len(t.term(i)) : scaled(i));
      return out + ")";
    }
  }
  return {};
}

std::string print_regex(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Epsilon:
      return "re.epsilon";
    case Regex::Kind::Lit:
      return "(str.to.re " + quote(r.word()) + ")";
    case Regex::Kind::Star:
      return "(re.* " + print_regex(r.children().front()) + ")";
    case Regex::Kind::Concat:
    case Regex::Kind::Union: {
      std::string out = r.kind() == Regex::Kind::Concat ? "(re.++" : "(re.union";
      for (const auto& c : r.children()) out += " " + print_regex(c);
      return out + ")";
    }
  }
  return {};
}

std::string print_atom(const Atom& a) {
  switch (a.kind()) {
    case Atom::Kind::WordEq:
      return "(= " + print_str(a.lhs()) + " " + print_str(a.rhs()) + ")";
    case Atom::Kind::LenLeq:
      return "(<= " + print_len(a.len()) + " " + std::to_string(a.bound()) + ")";
    case Atom::Kind::InRe:
      return "(str.in.re " + print_str(a.lhs()) + " " + print_regex(a.re()) + ")";
  }
  return {};
}

std::string print_formula(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Atom:
      return print_atom(phi.atom());
    case Formula::Kind::Not:
      return "(not " + print_formula(phi.children().front()) + ")";
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::string out = phi.kind() == Formula::Kind::And ? "(and" : "(or";
      for (const auto& c : phi.children()) out += " " + print_formula(c);
      return out + ")";
    }
  }
  return {};
}

std::string print_problem(const Problem& p) {
  std::ostringstream os;
  os << "(set-alphabet " << quote(p.alphabet) << ")\n";
  for (const auto& [name, sort] : p.decls)
    os << "(declare-const " << name << (sort == Sort::String ? " String" : " Int") << ")\n";
  for (const auto& a : p.assertions) os << "(assert " << print_formula(a) << ")\n";
  for (auto c : p.commands) os << (c == Command::CheckSat ? "(check-sat)\n" : "(get-model)\n");
  return os.str();
}

std::string print_model(const Assignment& a) {
  std::ostringstream os;
  for (const auto& [x, w] : a.strs) os << "(define-fun " << x << " () String " << quote(w) << ")\n";
  for (const auto& [n, v] : a.ints) os << "(define-fun " << n << " () Int " << v << ")\n";
  return os.str();
}

Assignment parse_model(std::string_view text) {
  Assignment a;
  for (const auto& s : Reader(text).read_all()) {
    if (s.kind != Sexp::Kind::List || s.items.size() != 5 || !s.items[0].is_symbol("define-fun") ||
        s.items[1].kind != Sexp::Kind::Symbol || s.items[2].kind != Sexp::Kind::List || !s.items[2].items.empty())
      fail(s, "expected (define-fun NAME () SORT VALUE)");
    const Sexp& sort = s.items[3];
    const Sexp& value = s.items[4];
    if (sort.is_symbol("String") && value.kind == Sexp::Kind::String)
      a.strs[s.items[1].text] = value.text;
    else if (sort.is_symbol("Int") && value.kind == Sexp::Kind::Int)
      a.ints[s.items[1].text] = value.value;
    else
      fail(sort, "sort and value do not match", ParseErrorKind::Sort);
  }
  return a;
}

TwoCounterMachine parse_2cm(std::string_view text) {
  TwoCounterMachine m;
  bool have_states = false, have_alphabet = false, have_initial = false, have_final = false;
  struct PendingRule {
    int line;
    RuleKey key;
    RuleAction action;
  };
  std::vector<PendingRule> rules;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string content = raw.substr(0, raw.find('#'));
    std::vector<std::string> toks;
    std::vector<int> cols;
    for (std::size_t i = 0; i < content.size();) {
      if (std::isspace(static_cast<unsigned char>(content[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < content.size() && !std::isspace(static_cast<unsigned char>(content[j]))) ++j;
      toks.push_back(content.substr(i, j - i));
      cols.push_back(static_cast<int>(i) + 1);
      i = j;
    }
    if (toks.empty()) continue;
    auto syntax = [&](std::size_t i, const std::string& msg) { fail(ParseErrorKind::Syntax, line, cols[i], msg); };
    const std::string& first = toks.front();
    if (first == "states:") {
      if (toks.size() < 2) syntax(0, "states: needs at least one state");
      m.states.assign(toks.begin() + 1, toks.end());
      have_states = true;
    } else if (first == "input-alphabet:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) syntax(i, "input letters are single characters");
        m.input_alphabet += toks[i];
      }
      if (m.input_alphabet.empty()) syntax(0, "input-alphabet: needs at least one letter");
      have_alphabet = true;
    } else if (first == "initial:") {
      if (toks.size() != 2) syntax(0, "initial: takes one state");
      m.initial = toks[1];
      have_initial = true;
    } else if (first == "final:") {
      m.finals.insert(toks.begin() + 1, toks.end());
      have_final = true;
    } else {
      if (toks.size() > 4 && toks[4] != "->") syntax(4, "expected ->");
      if (toks.size() != 8) syntax(0, "expected: state input tape1 tape2 -> state tape move");
      PendingRule r{line, {}, {}};
      r.key.state = toks[0];
      if (toks[1] == "end")
        r.key.input = '\0';
      else if (toks[1].size() == 1)
        r.key.input = toks[1][0];
      else
        syntax(1, "input letter must be a single character or end");
      if (toks[2] != "Z" && toks[2] != "b") syntax(2, "first store top must be Z or b");
      if (toks[3] != "Z" && toks[3] != "c") syntax(3, "second store top must be Z or c");
      r.key.counter1_zero = toks[2] == "Z";
      r.key.counter2_zero = toks[3] == "Z";
      r.action.next = toks[5];
      if (toks[6] == "in")
        r.action.tape = Tape::In;
      else if (toks[6] == "stor1")
        r.action.tape = Tape::Stor1;
      else if (toks[6] == "stor2")
        r.action.tape = Tape::Stor2;
      else
        syntax(6, "tape must be in, stor1 or stor2");
      if (toks[7] == "L")
        r.action.move = Move::L;
      else if (toks[7] == "R")
        r.action.move = Move::R;
      else
        syntax(7, "move must be L or R");
      rules.push_back(std::move(r));
    }
  }
  if (!have_states || !have_alphabet || !have_initial || !have_final)
    fail(ParseErrorKind::Syntax, line + 1, 1, "missing states:, input-alphabet:, initial: or final: line");
  auto known = [&](const std::string& q) { return std::find(m.states.begin(), m.states.end(), q) != m.states.end(); };
  if (!known(m.initial)) fail(ParseErrorKind::Syntax, 1, 1, "initial state not declared: " + m.initial);
  for (const auto& f : m.finals)
    if (!known(f)) fail(ParseErrorKind::Syntax, 1, 1, "final state not declared: " + f);
  for (const auto& r : rules) {
    if (!known(r.key.state) || !known(r.action.next)) fail(ParseErrorKind::Syntax, r.line, 1, "undeclared state in rule");
    if (r.key.input != '\0' && m.input_alphabet.find(r.key.input) == std::string::npos)
      fail(ParseErrorKind::LetterOutsideAlphabet, r.line, 1, std::string("letter outside input alphabet: '") + r.key.input + "'");
    if (!m.delta.emplace(r.key, r.action).second)
      fail(ParseErrorKind::NondeterministicDelta, r.line, 1, "second rule for the same state, input and store tops");
  }
  return m;
}

}  // namespace wordeq
