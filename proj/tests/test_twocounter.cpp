#include "doctest.h"
#include "support/properties.hpp"

using namespace wordeq;
using namespace wqtest;

namespace {

TwoCounterMachine zoo_machine(std::size_t i) { return parse_2cm(zoo()[i].text); }

bool body_has_atom(const Formula& f, const Atom& a) {
  if (f.kind() == Formula::Kind::Atom) return f.atom() == a;
  for (const auto& c : f.children())
    if (body_has_atom(c, a)) return true;
  return false;
}

bool has_negation(const Formula& f) {
  if (f.kind() == Formula::Kind::Not) return true;
  for (const auto& c : f.children())
    if (has_negation(c)) return true;
  return false;
}

}  // namespace

TEST_CASE("simulation") {
  SimResult one = simulate(zoo_machine(0), "0", 10);
  CHECK(one.status == SimResult::Status::Accepted);
  CHECK(one.history.size() == 2);

  SimResult incdec = simulate(zoo_machine(1), "0", 10);
  REQUIRE(incdec.status == SimResult::Status::Accepted);
  std::vector<std::int64_t> trace;
  for (const auto& id : incdec.history) trace.push_back(id.counter1);
  CHECK(trace == std::vector<std::int64_t>{0, 1, 0});

  CHECK(simulate(zoo_machine(2), "0", 50).status == SimResult::Status::StillRunning);

  SimResult walk = simulate(zoo_machine(3), "01", 10);
  REQUIRE(walk.status == SimResult::Status::Accepted);
  CHECK(walk.history[1].head == 1);
  CHECK(walk.history.back().head == 0);

  SimResult rejected = simulate(zoo_machine(4), "0", 10);
  CHECK(rejected.status == SimResult::Status::Rejected);
  CHECK(rejected.history.back().counter2 == 1);

  TwoCounterMachine partial = parse_2cm("states: q0 q1 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\nq0 0 Z Z -> q1 in R\n");
  CHECK_THROWS_AS(simulate(partial, "0", 10), MissingTransition);
}

TEST_CASE("history words") {
  TwoCounterMachine m = zoo_machine(1);
  HistoryAlphabet alpha(m, "0");
  MachineId init{"q0", 0, 0, 0};
  CHECK(encode_history(m, "0", {init}) == Word(1, alpha.letter("q0", 0)));
  MachineId two{"q1", 0, 2, 0};
  CHECK(encode_history(m, "0", {two}) == Word(1, alpha.letter("q1", 0)) + "bb");
  CHECK(alpha.decode(alpha.letter("q1", 0)) == std::make_pair(std::string("q1"), 0));
  CHECK_FALSE(alpha.decode('b').has_value());
  CHECK(alpha.sigma().size() == alpha.id_letters().size() + 2);
}

TEST_CASE("initial-ID complement") {
  TwoCounterMachine m = zoo_machine(0);
  HistoryAlphabet alpha(m, "0");
  auto not_init = not_init_words(m, "0");
  std::set<Word> excluded;
  for (char c : alpha.sigma())
    if (std::find(not_init.begin(), not_init.end(), Word(1, c)) == not_init.end()) excluded.insert(Word(1, c));
  CHECK(excluded == std::set<Word>{Word(1, alpha.letter("q0", 0))});
  // The empty history is covered by the S = "" disjunct instead.
  CHECK(std::find(not_init.begin(), not_init.end(), Word{}) == not_init.end());
}

TEST_CASE("sentence shape") {
  for (std::size_t i = 0; i < zoo().size(); ++i) {
    Sentence s = encode(zoo_machine(i), zoo()[i].input);
    CHECK(s.universals == std::vector<std::string>{"S"});
    CHECK(s.existentials == std::vector<std::string>{"S1", "S2", "S3", "S4", "U", "V"});
    CHECK(s.universals.size() + s.existentials.size() <= 7);
    CHECK(body_has_atom(s.body, Atom::word_eq(V("S"), L(""))));
    CHECK(body_has_atom(s.body, Atom::word_eq(V("S"), StrTerm::concat({V("S1"), L("c"), L("b"), V("S4")}))));
    CHECK_FALSE(has_negation(s.body));
  }
  std::string text = print_sentence(encode(zoo_machine(0), "0"));
  CHECK(text.rfind("(forall (S) (exists (S1 S2 S3 S4 U V) ", 0) == 0);
}

TEST_CASE("encoding cap") {
  EncodeOptions tiny;
  tiny.cap = 2;
  CHECK_THROWS_AS(encode(zoo_machine(1), "0", tiny), EncodingCapExceeded);
}

TEST_CASE("empty transition function") {
  TwoCounterMachine m = parse_2cm("states: q0 qf\ninput-alphabet: 0\ninitial: q0\nfinal: qf\n");
  Sentence s = encode(m, "0");
  CHECK_FALSE(bounded_validity_check(s, 3).counterexample.has_value());
}

TEST_CASE("bounded checks on hand-made sentences") {
  Sentence taut{"ab", {"S"}, {}, Formula::atom(Atom::word_eq(V("S"), V("S")))};
  CHECK_FALSE(bounded_validity_check(taut, 5).counterexample.has_value());
  CHECK(positivize(taut).body == taut.body);

  Sentence neq{"AB", {"S"}, {}, Formula::negate(Formula::atom(Atom::word_eq(V("S"), L("A"))))};
  Sentence pos = positivize(neq);
  CHECK_FALSE(has_negation(pos.body));
  for (const auto& w : words_up_to("AB", 2)) {
    CHECK(holds_at(pos, w) == (w != "A"));
    CHECK(holds_at(neq, w) == (w != "A"));
  }
  BoundedResult r = bounded_validity_check(pos, 2);
  REQUIRE(r.counterexample.has_value());
  CHECK(*r.counterexample == "A");
}

TEST_CASE("accepting runs match bounded counterexamples") {
  PropertyResult r = reduction_coherent(6);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("positivize keeps bounded verdicts") {
  PropertyResult r = positivize_preserves(3);
  INFO(r.summary());
  CHECK(r.ok());
}
