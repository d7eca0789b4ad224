#pragma once

// Finite automata over single-character alphabets, ultimately periodic
// length sets, and membership analysis of parametric words.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wordeq/ast.hpp"
#include "wordeq/param_word.hpp"

namespace wordeq {

/// Thompson automaton. Letters are bytes; epsilon moves kept separately.
class Nfa {
 public:
  struct Edge {
    char letter;
    int target;
  };

  int add_state();
  void add_edge(int from, char letter, int to) { edges_[from].push_back({letter, to}); }
  void add_epsilon(int from, int to) { eps_[from].push_back(to); }

  int size() const { return static_cast<int>(edges_.size()); }
  int initial = 0;
  int accepting = 0;
  const std::vector<Edge>& edges(int q) const { return edges_[q]; }
  const std::vector<int>& epsilons(int q) const { return eps_[q]; }

  std::set<int> closure(std::set<int> states) const;
  bool accepts(const Word& w) const;

 private:
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<int>> eps_;
};

Nfa regex_to_nfa(const Regex& r);

/// Total deterministic automaton with dense states and initial state 0.
class Dfa {
 public:
  Dfa(Alphabet sigma, int states);

  const Alphabet& alphabet() const { return sigma_; }
  int size() const { return static_cast<int>(accepting_.size()); }
  int step(int q, char letter) const;
  int step_index(int q, std::size_t letter_index) const { return table_[q * sigma_.size() + letter_index]; }
  int run(int q, const Word& w) const;
  bool accepting(int q) const { return accepting_[q]; }
  bool accepts(const Word& w) const { return accepting_[run(0, w)]; }

  void set_transition(int q, std::size_t letter_index, int target) { table_[q * sigma_.size() + letter_index] = target; }
  void set_accepting(int q, bool acc) { accepting_[q] = acc; }

 private:
  Alphabet sigma_;
  std::vector<int> table_;
  std::vector<bool> accepting_;
};

Dfa regex_to_dfa(const Regex& r, const Alphabet& sigma);
Dfa dfa_intersect(const Dfa& a, const Dfa& b);
Dfa dfa_complement(const Dfa& a);
/// Shortest (then alphabet-ordered) accepted word, or nullopt when empty.
std::optional<Word> dfa_witness(const Dfa& a);
inline bool dfa_is_empty(const Dfa& a) { return !dfa_witness(a).has_value(); }

/// Arithmetic progression {offset + period*k : k >= 0}; period 0 is a singleton.
struct Progression {
  std::int64_t offset = 0;
  std::int64_t period = 0;
  bool contains(std::int64_t n) const;
  bool operator==(const Progression&) const = default;
  auto operator<=>(const Progression&) const = default;
};

/// Ultimately periodic set of naturals kept as a normalized union of
/// progressions: no progression is contained in another.
class UPSet {
 public:
  UPSet() = default;
  explicit UPSet(std::vector<Progression> progressions);
  static UPSet all() { return UPSet({{0, 1}}); }
  static UPSet singleton(std::int64_t n) { return UPSet({{n, 0}}); }

  const std::vector<Progression>& progressions() const { return progs_; }
  bool empty() const { return progs_.empty(); }
  bool contains(std::int64_t n) const;

  bool operator==(const UPSet&) const = default;

 private:
  std::vector<Progression> progs_;
};

inline bool upset_member(const UPSet& s, std::int64_t n) { return s.contains(n); }
UPSet upset_union(const UPSet& s, const UPSet& t);
UPSet upset_intersect(const UPSet& s, const UPSet& t);
std::string to_string(const UPSet& s);

struct LengthSetResult {
  UPSet lengths;
  std::int64_t preperiod = 0;
  std::int64_t period = 1;
};

/// Length abstraction through the eventually periodic sequence of reachable
/// state sets.
LengthSetResult length_set_detail(const Dfa& a);
inline UPSet length_set(const Dfa& a) { return length_set_detail(a).lengths; }

/// A box constrains each parameter of a parametric word to a UPSet.
using ParamBox = std::map<ParamId, UPSet>;

/// Finite union of boxes describing exactly the accepted parameter valuations.
struct ParamConstraintSet {
  std::vector<ParamBox> boxes;
  bool contains(const std::map<ParamId, std::int64_t>& valuation) const;
};

/// Throws UnfixedPartPresent when the word has an unfixed block.
ParamConstraintSet param_membership(const ParamWord& w, const Dfa& a);

}  // namespace wordeq
