#pragma once

// Linear length constraints implied by solved forms.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wordeq/ast.hpp"
#include "wordeq/automata.hpp"
#include "wordeq/solved_form.hpp"

namespace wordeq {

/// Integer unknown of a linear system. All unknowns range over the naturals.
struct LinVar {
  enum class Kind { LenOf, ParamOf, PartLenOf, FreshAP, ProblemInt };
  Kind kind = Kind::LenOf;
  std::string name;  // LenOf, ProblemInt
  int id = 0;        // ParamOf, PartLenOf, FreshAP

  static LinVar len_of(std::string x) { return {Kind::LenOf, std::move(x), 0}; }
  static LinVar param_of(ParamId p) { return {Kind::ParamOf, {}, p}; }
  static LinVar part_len_of(PartId y) { return {Kind::PartLenOf, {}, y}; }
  static LinVar fresh_ap(int k) { return {Kind::FreshAP, {}, k}; }
  static LinVar problem_int(std::string n) { return {Kind::ProblemInt, std::move(n), 0}; }

  bool operator==(const LinVar&) const = default;
  auto operator<=>(const LinVar&) const = default;
};

std::string to_string(const LinVar& v);

/// sum(coeffs[v] * v) (= | <=) bound
struct LinRow {
  enum class Rel { Eq, Le };
  std::map<LinVar, std::int64_t> coeffs;
  Rel rel = Rel::Le;
  std::int64_t bound = 0;

  bool operator==(const LinRow&) const = default;
};

struct LinSystem {
  std::vector<LinRow> rows;

  void add(LinRow row) { rows.push_back(std::move(row)); }
  void append(const LinSystem& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }
};

using LiaModel = std::map<LinVar, std::int64_t>;

/// True iff every row holds; unknowns missing from the model read as 0.
bool satisfies(const LinSystem& sys, const LiaModel& m);
std::string to_string(const LinRow& row);

/// One row len(X) = C + sum |u|*i + sum len(y) per equation of the form.
LinSystem implied_length_constraints(const SolvedForm& sf);

/// LenLeq atom as a row over LenOf and ProblemInt unknowns. Lengths of
/// literals and concatenations are expanded linearly.
LinRow translate_len_atom(const Atom& a);

/// One system per progression of `s`, each using a fresh FreshAP unknown
/// drawn from `next_fresh`. The empty set yields no systems.
std::vector<LinSystem> upset_to_rows(const LinVar& x, const UPSet& s, int& next_fresh);

}  // namespace wordeq
