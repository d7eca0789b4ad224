#pragma once

// Terms and quantifier-free formulas over word equations, linear length
// constraints and regular membership. All node types are immutable values.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wordeq {

/// Ordered set of distinct single-character letters.
using Alphabet = std::string;
using Word = std::string;

class StrTerm {
 public:
  enum class Kind { Lit, Var, Concat };

  StrTerm() = default;
  static StrTerm lit(Word word);
  static StrTerm var(std::string name);
  /// Builds a concatenation. Zero parts yield the empty literal and a single
  /// part is returned unchanged, so a Concat node always has at least two parts.
  static StrTerm concat(std::vector<StrTerm> parts);

  Kind kind() const { return kind_; }
  bool is_lit() const { return kind_ == Kind::Lit; }
  bool is_var() const { return kind_ == Kind::Var; }
  /// Literal word (Lit) or variable name (Var).
  const std::string& text() const { return text_; }
  const std::vector<StrTerm>& parts() const { return parts_; }

  bool operator==(const StrTerm&) const = default;

 private:
  Kind kind_ = Kind::Lit;
  std::string text_;
  std::vector<StrTerm> parts_;
};

class LenTerm {
 public:
  enum class Kind { Const, IntVar, Len, Sum };

  LenTerm() = default;
  static LenTerm constant(std::int64_t value);
  static LenTerm int_var(std::string name);
  static LenTerm len(StrTerm t);
  /// Weighted sum. Nested sums are flattened into this one; an empty sum is
  /// the constant 0.
  static LenTerm sum(std::vector<std::pair<std::int64_t, LenTerm>> terms);

  Kind kind() const { return kind_; }
  std::int64_t value() const { return value_; }
  const std::string& name() const { return name_; }
  const StrTerm& str() const { return str_; }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coeff(std::size_t i) const { return coeffs_[i]; }
  const LenTerm& term(std::size_t i) const { return terms_[i]; }

  bool operator==(const LenTerm&) const = default;

 private:
  Kind kind_ = Kind::Const;
  std::int64_t value_ = 0;
  std::string name_;
  StrTerm str_;
  std::vector<std::int64_t> coeffs_;
  std::vector<LenTerm> terms_;
};

class Regex {
 public:
  enum class Kind { Lit, Epsilon, Concat, Union, Star };

  Regex() = default;
  static Regex lit(Word word);
  static Regex epsilon();
  static Regex concat(std::vector<Regex> parts);
  static Regex alt(std::vector<Regex> parts);
  static Regex star(Regex inner);

  Kind kind() const { return kind_; }
  const Word& word() const { return word_; }
  const std::vector<Regex>& children() const { return children_; }

  bool operator==(const Regex&) const = default;

 private:
  Kind kind_ = Kind::Epsilon;
  Word word_;
  std::vector<Regex> children_;
};

class Atom {
 public:
  enum class Kind { WordEq, LenLeq, InRe };

  Atom() = default;
  static Atom word_eq(StrTerm lhs, StrTerm rhs);
  static Atom len_leq(LenTerm t, std::int64_t bound);
  static Atom in_re(StrTerm t, Regex re);

  Kind kind() const { return kind_; }
  /// Left side of a word equation, or the tested term of a membership.
  const StrTerm& lhs() const { return lhs_; }
  const StrTerm& rhs() const { return rhs_; }
  const LenTerm& len() const { return len_; }
  std::int64_t bound() const { return bound_; }
  const Regex& re() const { return re_; }

  bool operator==(const Atom&) const = default;

 private:
  Kind kind_ = Kind::WordEq;
  StrTerm lhs_;
  StrTerm rhs_;
  LenTerm len_;
  std::int64_t bound_ = 0;
  Regex re_;
};

class Formula {
 public:
  enum class Kind { Atom, And, Or, Not };

  Formula() = default;
  static Formula atom(Atom a);
  /// Empty conjunction is true, empty disjunction is false.
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula negate(Formula inner);

  Kind kind() const { return kind_; }
  const Atom& atom() const { return atom_; }
  const std::vector<Formula>& children() const { return children_; }

  bool operator==(const Formula&) const = default;

 private:
  Kind kind_ = Kind::And;
  Atom atom_;
  std::vector<Formula> children_;
};

/// Atom with polarity, the element of a conjunct.
struct Literal {
  Atom atom;
  bool negated = false;
  bool operator==(const Literal&) const = default;
};
using Conjunct = std::vector<Literal>;

struct Assignment {
  std::map<std::string, Word> strs;
  std::map<std::string, std::int64_t> ints;
  bool operator==(const Assignment&) const = default;
};

struct VarSets {
  std::set<std::string> strs;
  std::set<std::string> ints;
  bool operator==(const VarSets&) const = default;
};

// Evaluation (see eval.cpp).
Word eval_str(const StrTerm& t, const Assignment& a);
std::int64_t eval_len(const LenTerm& t, const Assignment& a);
bool eval_atom(const Atom& atom, const Assignment& a);
bool eval_formula(const Formula& phi, const Assignment& a);
bool eval_conjunct(const Conjunct& c, const Assignment& a);

VarSets free_vars(const Formula& phi);
VarSets free_vars(const Atom& atom);
void collect_vars(const StrTerm& t, std::set<std::string>& out);

/// Disjunctive normal form with negations pushed onto atoms.
std::vector<Conjunct> to_dnf(const Formula& phi);
Formula from_dnf(const std::vector<Conjunct>& dnf);

/// Supplies variable names that cannot collide with user identifiers.
class FreshNames {
 public:
  std::string next(const std::string& hint);
  static bool is_fresh(const std::string& name) { return !name.empty() && name[0] == '!'; }

 private:
  int counter_ = 0;
};

/// Rewrites negated length and word-equation literals into an equisatisfiable
/// disjunction of conjuncts. Negated memberships are kept as negated literals
/// and are complemented at the automaton level.
std::vector<Conjunct> eliminate_negations(const Conjunct& c, const Alphabet& sigma, FreshNames& fresh);

}  // namespace wordeq
