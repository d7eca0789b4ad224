#pragma once

// End-to-end satisfiability for word equations with length and regular
// constraints.

#include <string>

#include "wordeq/ast.hpp"
#include "wordeq/lengths.hpp"
#include "wordeq/lia.hpp"
#include "wordeq/solved_form.hpp"

namespace wordeq {

struct Verdict {
  enum class Kind { Sat, Unsat, Unsupported };
  enum class Reason { None, NoSolvedFormInFragment, UnfixedPartUnderRegex, ResourceExhausted };

  Kind kind = Kind::Unsat;
  Reason reason = Reason::None;
  Assignment model;  // Sat only; covers exactly the free variables of the input
  std::string detail;
};

/// "no solved form in fragment" and similar short phrases.
std::string to_string(Verdict::Reason r);

struct SolverOptions {
  RewriteLimits rewrite;
  LiaLimits lia;
};

Verdict check_sat(const Formula& phi, const Alphabet& sigma, const SolverOptions& options = {});

/// Instantiates every equation of `sf`. Unfixed parts are filled with the
/// first letter of `sigma`; problem integers are copied from `m`.
Assignment build_model(const SolvedForm& sf, const LiaModel& m, const Alphabet& sigma);

bool verify_model(const Formula& phi, const Assignment& a);

/// Same pipeline with every regular constraint replaced by the length
/// abstraction len(X) in lengths(RE). Deliberately incomplete as a decision
/// procedure: it can report Sat for unsatisfiable inputs.
Verdict::Kind check_sat_length_abstraction(const Formula& phi, const Alphabet& sigma,
                                           const SolverOptions& options = {});

}  // namespace wordeq
