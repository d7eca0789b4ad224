#pragma once

// Solved forms X = t of word-equation conjunctions, and the rewriting
// procedure producing them for a supported fragment.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wordeq/ast.hpp"
#include "wordeq/automata.hpp"
#include "wordeq/param_word.hpp"

namespace wordeq {

/// Each problem variable is defined exactly once by a parametric word that
/// mentions no problem variable. Parameters range freely over the naturals.
struct SolvedForm {
  std::map<std::string, ParamWord> equations;

  std::vector<ParamId> params() const;
  std::vector<PartId> parts() const;
  bool operator==(const SolvedForm&) const = default;
  auto operator<=>(const SolvedForm&) const = default;
};

std::string to_string(const SolvedForm& sf);

/// Renders a solved form as word equations. Parameter powers and unfixed parts
/// become opaque variables named `(<base>)^i<n>` and `y<n>`.
std::vector<Atom> render(const SolvedForm& sf);

/// True iff every equation is `X = t` with X in `vars`, each member of `vars`
/// is defined exactly once, and no member of `vars` occurs on a right side.
/// Variables outside `vars` are read as unfixed parts.
bool is_solved_form(const std::vector<Atom>& eqs, const std::set<std::string>& vars);

struct RewriteLimits {
  int max_depth = 32;  // case splits along one branch
  long max_nodes = 50000;
};

struct SolvedFormResult {
  enum class Status { Solved, Unsat, NoSolvedFormInFragment };
  Status status = Status::Unsat;
  std::vector<SolvedForm> forms;  // disjunction; nonempty iff Solved
  std::string reason;
};

/// Converts a conjunction of word equations into a disjunction of solved
/// forms over `vars` (which must include every variable of `eqs`).
SolvedFormResult to_solved_form(const std::vector<Atom>& eqs, const std::set<std::string>& vars,
                                const RewriteLimits& limits = {});
SolvedFormResult to_solved_form(const std::vector<Atom>& eqs, const RewriteLimits& limits = {});

/// Automaton for { instantiate(sf[x], v) } with each power compiled as a star.
Dfa solved_form_language(const SolvedForm& sf, const std::string& x, const Alphabet& sigma);

}  // namespace wordeq
