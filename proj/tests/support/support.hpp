#pragma once

// Shared test helpers: random generators, a derivative-based regex matcher,
// and a small zoo of two-counter machines.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wordeq/ast.hpp"
#include "wordeq/lengths.hpp"
#include "wordeq/param_word.hpp"
#include "wordeq/twocounter.hpp"

namespace wqtest {

using namespace wordeq;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Word random_word(Rng& rng, const Alphabet& sigma, int min_len, int max_len) {
  Word w;
  for (int n = uniform(rng, min_len, max_len); n > 0; --n) w.push_back(sigma[uniform(rng, 0, static_cast<int>(sigma.size()) - 1)]);
  return w;
}

/// All words over sigma of length at most n, in shortlex order.
inline std::vector<Word> words_up_to(const Alphabet& sigma, std::size_t n) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : sigma) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brzozowski derivatives, independent of the automata module.

inline bool nullable(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Epsilon:
      return true;
    case Regex::Kind::Lit:
      return r.word().empty();
    case Regex::Kind::Star:
      return true;
    case Regex::Kind::Concat:
      for (const auto& c : r.children())
        if (!nullable(c)) return false;
      return true;
    case Regex::Kind::Union:
      for (const auto& c : r.children())
        if (nullable(c)) return true;
      return false;
  }
  return false;
}

/// Matches by recursion on the structure: w in L(r).
inline bool derivative_match(const Regex& r, const Word& w);

inline bool match_concat(const std::vector<Regex>& parts, std::size_t i, const Word& w) {
  if (i == parts.size()) return w.empty();
  for (std::size_t k = 0; k <= w.size(); ++k)
    if (derivative_match(parts[i], w.substr(0, k)) && match_concat(parts, i + 1, w.substr(k))) return true;
  return false;
}

inline bool derivative_match(const Regex& r, const Word& w) {
  switch (r.kind()) {
    case Regex::Kind::Epsilon:
      return w.empty();
    case Regex::Kind::Lit:
      return w == r.word();
    case Regex::Kind::Concat:
      return match_concat(r.children(), 0, w);
    case Regex::Kind::Union:
      for (const auto& c : r.children())
        if (derivative_match(c, w)) return true;
      return false;
    case Regex::Kind::Star:
      if (w.empty()) return true;
      // First iteration consumes a nonempty prefix.
      for (std::size_t k = 1; k <= w.size(); ++k)
        if (derivative_match(r.children().front(), w.substr(0, k)) && derivative_match(r, w.substr(k))) return true;
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Random regexes and formulas.

inline Regex random_regex(Rng& rng, const Alphabet& sigma, int depth) {
  int pick = depth <= 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 5);
  switch (pick) {
    case 0:
      return Regex::lit(random_word(rng, sigma, 1, 2));
    case 1:
      return chance(rng, 0.2) ? Regex::epsilon() : Regex::lit(random_word(rng, sigma, 1, 1));
    case 2:
    case 3:
      return Regex::concat({random_regex(rng, sigma, depth - 1), random_regex(rng, sigma, depth - 1)});
    case 4:
      return Regex::alt({random_regex(rng, sigma, depth - 1), random_regex(rng, sigma, depth - 1)});
    default:
      return Regex::star(random_regex(rng, sigma, depth - 1));
  }
}

inline const std::vector<std::string>& str_vars() {
  static const std::vector<std::string> v{"X", "Y", "Z"};
  return v;
}

inline StrTerm random_str_term(Rng& rng, const Alphabet& sigma, int nvars) {
  std::vector<StrTerm> parts;
  for (int k = uniform(rng, 1, 3); k > 0; --k) {
    if (chance(rng, 0.5))
      parts.push_back(StrTerm::var(str_vars()[uniform(rng, 0, nvars - 1)]));
    else
      parts.push_back(StrTerm::lit(random_word(rng, sigma, 0, 2)));
  }
  return StrTerm::concat(std::move(parts));
}

inline LenTerm random_len_term(Rng& rng, const Alphabet& sigma, int nvars, bool ints) {
  std::vector<std::pair<std::int64_t, LenTerm>> terms;
  for (int k = uniform(rng, 1, 2); k > 0; --k) {
    std::int64_t c = uniform(rng, -2, 2);
    if (c == 0) c = 1;
    if (ints && chance(rng, 0.3))
      terms.emplace_back(c, LenTerm::int_var("n"));
    else
      terms.emplace_back(c, LenTerm::len(random_str_term(rng, sigma, nvars)));
  }
  if (chance(rng, 0.2)) terms.emplace_back(1, LenTerm::constant(uniform(rng, -2, 2)));
  return LenTerm::sum(std::move(terms));
}

/// Unrestricted formula over X, Y, Z (first `nvars`) and integer n.
inline Formula random_formula(Rng& rng, const Alphabet& sigma, int depth, int nvars, bool ints = true) {
  if (depth <= 0 || chance(rng, 0.3)) {
    switch (uniform(rng, 0, 2)) {
      case 0:
        return Formula::atom(Atom::word_eq(random_str_term(rng, sigma, nvars), random_str_term(rng, sigma, nvars)));
      case 1:
        return Formula::atom(Atom::len_leq(random_len_term(rng, sigma, nvars, ints), uniform(rng, -1, 4)));
      default:
        return Formula::atom(Atom::in_re(random_str_term(rng, sigma, nvars), random_regex(rng, sigma, 2)));
    }
  }
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Formula::negate(random_formula(rng, sigma, depth - 1, nvars, ints));
    case 1:
      return Formula::conj({random_formula(rng, sigma, depth - 1, nvars, ints),
                            random_formula(rng, sigma, depth - 1, nvars, ints)});
    default:
      return Formula::disj({random_formula(rng, sigma, depth - 1, nvars, ints),
                            random_formula(rng, sigma, depth - 1, nvars, ints)});
  }
}

inline Assignment random_assignment(Rng& rng, const Alphabet& sigma, int max_len, int max_int) {
  Assignment a;
  for (const auto& x : str_vars()) a.strs[x] = random_word(rng, sigma, 0, max_len);
  a.ints["n"] = uniform(rng, 0, max_int);
  return a;
}

// Equation shapes the solved-form procedure covers.
inline Formula eq(StrTerm l, StrTerm r) { return Formula::atom(Atom::word_eq(std::move(l), std::move(r))); }
inline StrTerm V(const std::string& x) { return StrTerm::var(x); }
inline StrTerm L(const Word& w) { return StrTerm::lit(w); }
inline Formula len_le(const std::string& x, std::int64_t c) {
  return Formula::atom(Atom::len_leq(LenTerm::len(V(x)), c));
}
inline Formula len_ge(const std::string& x, std::int64_t c) {
  return Formula::atom(Atom::len_leq(LenTerm::sum({{-1, LenTerm::len(V(x))}}), -c));
}

/// u X = X v with v a rotation of u about half of the time.
inline Formula random_commutation(Rng& rng, const Alphabet& sigma, const std::string& x, double rotation = 0.6) {
  Word u = random_word(rng, sigma, 1, 3);
  Word v;
  if (chance(rng, rotation)) {
    std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(u.size()) - 1));
    v = u.substr(k) + u.substr(0, k);
  } else {
    v = random_word(rng, sigma, static_cast<int>(u.size()), static_cast<int>(u.size()));
  }
  return eq(StrTerm::concat({L(u), V(x)}), StrTerm::concat({V(x), L(v)}));
}

/// Equation defining vars[i] from literals and later variables, so the
/// definitions form no cycle.
inline Formula random_definition(Rng& rng, const Alphabet& sigma, const std::vector<std::string>& vars, std::size_t i) {
  std::vector<StrTerm> parts;
  for (int k = uniform(rng, 1, 3); k > 0; --k) {
    if (i + 1 < vars.size() && chance(rng, 0.5))
      parts.push_back(V(vars[static_cast<std::size_t>(uniform(rng, static_cast<int>(i) + 1, static_cast<int>(vars.size()) - 1))]));
    else
      parts.push_back(L(random_word(rng, sigma, 1, 2)));
  }
  return eq(V(vars[i]), StrTerm::concat(std::move(parts)));
}

inline Formula random_length_atom(Rng& rng, const std::vector<std::string>& vars) {
  const std::string& x = vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))];
  switch (uniform(rng, 0, 3)) {
    case 0:
      return len_le(x, uniform(rng, 0, 6));
    case 1:
      return len_ge(x, uniform(rng, 0, 5));
    case 2: {
      const std::string& y = vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))];
      return Formula::atom(Atom::len_leq(LenTerm::sum({{1, LenTerm::len(V(x))}, {-1, LenTerm::len(V(y))}}), uniform(rng, -2, 2)));
    }
    default:
      return Formula::negate(len_le(x, uniform(rng, 0, 5)));
  }
}

/// Word equations, length constraints, negation and disjunction over at most
/// three variables, with every string variable bounded by `max_len`.
inline Formula random_wel_formula(Rng& rng, const Alphabet& sigma, int max_len) {
  int nvars = uniform(rng, 1, 3);
  std::vector<std::string> vars(str_vars().begin(), str_vars().begin() + nvars);
  std::vector<Formula> conj;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        conj.push_back(random_commutation(rng, sigma, vars[i]));
        break;
      case 1:
      case 2: {
        Formula d = random_definition(rng, sigma, vars, i);
        conj.push_back(chance(rng, 0.2) ? Formula::negate(d) : d);
        break;
      }
      default:
        break;  // free variable
    }
  }
  for (int k = uniform(rng, 0, 2); k > 0; --k) {
    if (chance(rng, 0.3))
      conj.push_back(Formula::disj({random_length_atom(rng, vars), random_length_atom(rng, vars)}));
    else
      conj.push_back(random_length_atom(rng, vars));
  }
  for (const auto& x : vars) conj.push_back(len_le(x, max_len));
  return Formula::conj(std::move(conj));
}

/// Like random_wel_formula, with regular constraints on variables whose
/// solutions are fully determined by equations (no free parts).
inline Formula random_welr_formula(Rng& rng, const Alphabet& sigma, int max_len) {
  int nvars = uniform(rng, 1, 3);
  std::vector<std::string> vars(str_vars().begin(), str_vars().begin() + nvars);
  std::vector<Formula> conj;
  // Last variable: commutation or constant; earlier ones defined from later
  // ones and literals, so every variable is determined.
  const std::string& last = vars.back();
  if (chance(rng, 0.7))
    conj.push_back(random_commutation(rng, sigma, last, 0.85));
  else
    conj.push_back(eq(V(last), L(random_word(rng, sigma, 0, 3))));
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) conj.push_back(random_definition(rng, sigma, vars, i));
  for (int k = uniform(rng, 1, 2); k > 0; --k) {
    const std::string& x = vars[static_cast<std::size_t>(uniform(rng, 0, nvars - 1))];
    Regex re = random_regex(rng, sigma, 3);
    if (chance(rng, 0.6)) {
      // Words containing a short factor: satisfiable far more often.
      std::vector<Regex> letters;
      for (char c : sigma) letters.push_back(Regex::lit(Word(1, c)));
      Regex any = Regex::star(Regex::alt(letters));
      re = Regex::concat({any, Regex::lit(random_word(rng, sigma, 1, 2)), any});
    }
    Formula r = Formula::atom(Atom::in_re(V(x), re));
    conj.push_back(chance(rng, 0.25) ? Formula::negate(r) : r);
  }
  if (chance(rng, 0.6)) conj.push_back(random_length_atom(rng, vars));
  for (const auto& x : vars) conj.push_back(len_le(x, max_len));
  return Formula::conj(std::move(conj));
}

/// Random linear system over at most four unknowns.
inline LinSystem random_system(Rng& rng, int max_vars, int max_rows, int max_coeff) {
  int nvars = uniform(rng, 1, max_vars);
  LinSystem sys;
  for (int r = uniform(rng, 1, max_rows); r > 0; --r) {
    LinRow row;
    row.rel = chance(rng, 0.3) ? LinRow::Rel::Eq : LinRow::Rel::Le;
    for (int v = 0; v < nvars; ++v) {
      if (chance(rng, 0.35)) continue;
      int c = uniform(rng, -max_coeff, max_coeff);
      if (c != 0) row.coeffs[LinVar::problem_int("v" + std::to_string(v))] = c;
    }
    row.bound = uniform(rng, -10, 20);
    sys.add(std::move(row));
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Two-counter machines.

struct ZooEntry {
  std::string name;
  std::string text;
  std::string input;
  bool accepts;
};

inline const std::vector<ZooEntry>& zoo() {
  static const std::vector<ZooEntry> z{
      {"immediate accept",
       "states: q0 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\nq0 0 Z Z -> qf in L\n", "0", true},
      {"increment then decrement",
       "states: q0 q1 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\n"
       "q0 0 Z Z -> q1 stor1 R\nq1 0 b Z -> qf stor1 L\nq1 0 Z Z -> q1 stor2 R\n",
       "0", true},
      {"divergent counter", "states: q0 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\nq0 0 Z Z -> q0 stor1 R\nq0 0 b Z -> q0 stor1 R\n",
       "0", false},
      {"input walk",
       "states: q0 q1 qf\ninput-alphabet: 0 1\ninitial: q0\nfinal: qf\n"
       "q0 0 Z Z -> q1 in R\nq1 1 Z Z -> qf in L\n",
       "01", true},
      {"rejecting final", "states: q0 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\nq0 0 Z Z -> qf stor2 R\n", "0",
       false},
  };
  return z;
}

}  // namespace wqtest
