#pragma once

// Exhaustive bounded search for models.

#include <cstdint>
#include <optional>

#include "wordeq/ast.hpp"

namespace wordeq {

struct BoundedVerdict {
  std::optional<Assignment> model;  // first model in enumeration order
  std::size_t len_bound = 0;
  std::int64_t int_bound = 0;

  bool sat() const { return model.has_value(); }
};

/// Enumerates string variables (by name) over sigma up to `len_bound`
/// letters in shortlex order, then integer variables (by name) over
/// [0, int_bound]. Subtrees whose partial assignment already falsifies
/// `phi` are skipped. Throws ResourceExhausted past `max_nodes`.
BoundedVerdict brute_force_sat(const Formula& phi, const Alphabet& sigma, std::size_t len_bound,
                               std::int64_t int_bound, long max_nodes = 50000000);

}  // namespace wordeq
