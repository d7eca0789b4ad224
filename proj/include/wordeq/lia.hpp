#pragma once

// Conjunctions of linear constraints over the naturals.

#include <optional>

#include "wordeq/lengths.hpp"

namespace wordeq {

struct LiaLimits {
  long max_nodes = 1000000;
};

/// Exact integer satisfiability by the Omega test. Returns a model covering
/// every unknown of `sys`, or nullopt when no natural solution exists.
/// Throws CoefficientOverflow or ResourceExhausted.
std::optional<LiaModel> lia_sat(const LinSystem& sys, const LiaLimits& limits = {});

}  // namespace wordeq
