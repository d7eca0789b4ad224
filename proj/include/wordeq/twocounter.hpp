#pragma once

// Two-counter machines, their computation histories, and the encoding of
// acceptance as the failure of a universally quantified word-equation
// sentence.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordeq/ast.hpp"

namespace wordeq {

enum class Tape { In, Stor1, Stor2 };
enum class Move { L, R };

/// Domain row of the transition function. `input` is the scanned letter;
/// `counter1_zero` and `counter2_zero` select the Z column of each store.
struct RuleKey {
  std::string state;
  char input = 0;
  bool counter1_zero = true;
  bool counter2_zero = true;
  auto operator<=>(const RuleKey&) const = default;
};

struct RuleAction {
  std::string next;
  Tape tape = Tape::In;
  Move move = Move::R;
  bool operator==(const RuleAction&) const = default;
};

struct TwoCounterMachine {
  std::vector<std::string> states;
  std::string input_alphabet;
  std::string initial;
  std::set<std::string> finals;
  std::map<RuleKey, RuleAction> delta;

  bool is_final(const std::string& q) const { return finals.count(q) > 0; }
};

struct MachineId {
  std::string state;
  int head = 0;
  std::int64_t counter1 = 0;
  std::int64_t counter2 = 0;
  bool operator==(const MachineId&) const = default;
};

struct SimResult {
  enum class Status { Accepted, Rejected, StillRunning };
  Status status = Status::StillRunning;
  std::vector<MachineId> history;
};

/// Steps until a final state is entered. Accepted iff that final ID has the
/// head on the first cell and both counters at zero. Throws
/// MissingTransition when no rule applies.
SimResult simulate(const TwoCounterMachine& m, const std::string& w, long max_steps);

/// Letters of the history alphabet: one letter per (state, head position),
/// followed by the counter letters 'b' and 'c'.
class HistoryAlphabet {
 public:
  HistoryAlphabet(const TwoCounterMachine& m, const std::string& w);

  char letter(const std::string& state, int head) const;
  const Alphabet& id_letters() const { return ids_; }
  Alphabet sigma() const { return ids_ + "bc"; }
  /// Inverse of letter(); nullopt for 'b', 'c' and unknown letters.
  std::optional<std::pair<std::string, int>> decode(char letter) const;

 private:
  std::map<std::pair<std::string, int>, char> letters_;
  Alphabet ids_;
};

Word encode_history(const TwoCounterMachine& m, const std::string& w, const std::vector<MachineId>& history);

/// Prenex sentence: forall universals, exists existentials, body.
struct Sentence {
  Alphabet sigma;
  std::vector<std::string> universals;
  std::vector<std::string> existentials;
  Formula body;
};

struct EncodeOptions {
  std::size_t cap = 100000;  // bound on enumerated letter sets
  /// Writes the wrong-successor-letter case with negated equations, as a
  /// test input for positivize().
  bool negated_letter_check = false;
};

std::vector<Word> not_init_words(const TwoCounterMachine& m, const std::string& w);
std::vector<Word> not_final_words(const TwoCounterMachine& m, const std::string& w);

/// Sentence that is valid iff the machine has no accepting history on w.
/// Throws EncodingCapExceeded.
Sentence encode(const TwoCounterMachine& m, const std::string& w, const EncodeOptions& options = {});

/// Negation-free equivalent of the body. Each negated equation s != t becomes
/// a disjunction of positive equations over fresh existentials.
Sentence positivize(const Sentence& s);

struct BoundedResult {
  std::optional<Word> counterexample;  // shortlex-first universal value falsifying the sentence
  std::size_t bound = 0;
};

/// Checks the sentence for every universal value up to `max_len` letters,
/// with existentials ranging over words no longer than the universal value.
/// Supports a single universal variable. Throws ResourceExhausted.
BoundedResult bounded_validity_check(const Sentence& s, std::size_t max_len, long max_nodes = 50000000);

/// True iff some choice of existentials makes the body true when the single
/// universal variable is `value`.
bool holds_at(const Sentence& s, const Word& value, long max_nodes = 50000000);

/// The sentence as text: `(forall (S) (exists (S1 ...) body))`.
std::string print_sentence(const Sentence& s);

}  // namespace wordeq
