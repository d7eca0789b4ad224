#include "wordeq/twocounter.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "wordeq/errors.hpp"
#include "wordeq/frontend.hpp"

namespace wordeq {

SimResult simulate(const TwoCounterMachine& m, const std::string& w, long max_steps) {
  if (w.empty()) throw Error("input word must be nonempty");
  SimResult r;
  MachineId id{m.initial, 0, 0, 0};
  r.history.push_back(id);
  for (long step = 0;; ++step) {
    if (m.is_final(id.state)) {
      bool clean = id.head == 0 && id.counter1 == 0 && id.counter2 == 0;
      r.status = clean ? SimResult::Status::Accepted : SimResult::Status::Rejected;
      return r;
    }
    if (step >= max_steps) {
      r.status = SimResult::Status::StillRunning;
      return r;
    }
    RuleKey key{id.state, w[id.head], id.counter1 == 0, id.counter2 == 0};
    auto it = m.delta.find(key);
    if (it == m.delta.end())
      throw MissingTransition("no rule for state " + id.state + " reading '" + std::string(1, w[id.head]) + "' with " +
                              (key.counter1_zero ? "Z" : "b") + "/" + (key.counter2_zero ? "Z" : "c"));
    const RuleAction& act = it->second;
    int d = act.move == Move::R ? 1 : -1;
    switch (act.tape) {
      case Tape::In:
        id.head = std::clamp(id.head + d, 0, static_cast<int>(w.size()) - 1);
        break;
      case Tape::Stor1:
        id.counter1 = std::max<std::int64_t>(0, id.counter1 + d);
        break;
      case Tape::Stor2:
        id.counter2 = std::max<std::int64_t>(0, id.counter2 + d);
        break;
    }
    id.state = act.next;
    r.history.push_back(id);
  }
}

namespace {

// Printable letters usable for configurations; b and c are the counter
// letters, and quoting or S-expression delimiters are avoided.
constexpr std::string_view kLetterPool =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789adefghijklmnopqrstuvwxyz#$%&*+-./:<=>?@^_~!'`|{}[],";

}  // namespace

HistoryAlphabet::HistoryAlphabet(const TwoCounterMachine& m, const std::string& w) {
  std::size_t needed = m.states.size() * w.size();
  if (needed > kLetterPool.size()) throw EncodingCapExceeded(needed);
  std::size_t k = 0;
  for (const auto& q : m.states)
    for (int n = 0; n < static_cast<int>(w.size()); ++n) {
      letters_[{q, n}] = kLetterPool[k];
      ids_.push_back(kLetterPool[k]);
      ++k;
    }
}

char HistoryAlphabet::letter(const std::string& state, int head) const {
  auto it = letters_.find({state, head});
  if (it == letters_.end()) throw Error("no letter for state " + state + " at " + std::to_string(head));
  return it->second;
}

std::optional<std::pair<std::string, int>> HistoryAlphabet::decode(char letter) const {
  for (const auto& [key, c] : letters_)
    if (c == letter) return key;
  return std::nullopt;
}

Word encode_history(const TwoCounterMachine& m, const std::string& w, const std::vector<MachineId>& history) {
  HistoryAlphabet alpha(m, w);
  Word out;
  for (const auto& id : history) {
    out.push_back(alpha.letter(id.state, id.head));
    out.append(static_cast<std::size_t>(id.counter1), 'b');
    out.append(static_cast<std::size_t>(id.counter2), 'c');
  }
  return out;
}

std::vector<Word> not_init_words(const TwoCounterMachine& m, const std::string& w) {
  HistoryAlphabet alpha(m, w);
  char init = alpha.letter(m.initial, 0);
  std::vector<Word> out;
  for (char c : alpha.sigma())
    if (c != init) out.emplace_back(1, c);
  out.push_back(Word{init, 'b'});
  out.push_back(Word{init, 'c'});
  return out;
}

std::vector<Word> not_final_words(const TwoCounterMachine& m, const std::string& w) {
  HistoryAlphabet alpha(m, w);
  std::set<char> finals;
  for (const auto& q : m.finals) finals.insert(alpha.letter(q, 0));
  std::vector<Word> out;
  for (char c : alpha.id_letters())
    if (!finals.count(c)) out.emplace_back(1, c);
  out.emplace_back("b");
  out.emplace_back("c");
  return out;
}

namespace {

StrTerm V(const char* name) { return StrTerm::var(name); }
StrTerm L(Word w) { return StrTerm::lit(std::move(w)); }
StrTerm L(char c) { return StrTerm::lit(Word(1, c)); }

Formula eq(StrTerm lhs, std::vector<StrTerm> rhs) {
  return Formula::atom(Atom::word_eq(std::move(lhs), StrTerm::concat(std::move(rhs))));
}

// W x = x W, i.e. W is a power of x.
Formula run_of(const char* var, char x) { return eq(StrTerm::concat({V(var), L(x)}), {L(x), V(var)}); }

using Pieces = std::vector<StrTerm>;

void append(Pieces& out, const Pieces& more) { out.insert(out.end(), more.begin(), more.end()); }

Pieces repeat(char x, int n) {
  if (n <= 0) return {};
  return {L(Word(static_cast<std::size_t>(n), x))};
}

class Encoder {
 public:
  Encoder(const TwoCounterMachine& m, const std::string& w, const EncodeOptions& opts)
      : m_(m), w_(w), opts_(opts), alpha_(m, w) {}

  Sentence run() {
    auto not_init = not_init_words(m_, w_);
    auto not_final = not_final_words(m_, w_);
    if (not_init.size() > opts_.cap) throw EncodingCapExceeded(not_init.size());
    if (not_final.size() > opts_.cap) throw EncodingCapExceeded(not_final.size());
    for (const auto& e : not_init) add({eq(V("S"), {L(e), V("S1")})});
    for (const auto& e : not_final) add({eq(V("S"), {V("S1"), L(e)})});
    add({eq(V("S"), {L(Word{})})});
    add({eq(V("S"), {V("S1"), L('c'), L('b'), V("S4")})});
    for (const auto& q : m_.states)
      for (int n = 0; n < static_cast<int>(w_.size()); ++n)
        for (bool z1 : {true, false})
          for (bool z2 : {true, false}) transition_violations(q, n, z1, z2);
    if (disjuncts_.size() > opts_.cap) throw EncodingCapExceeded(disjuncts_.size());

    Sentence s;
    s.sigma = alpha_.sigma();
    s.universals = {"S"};
    s.existentials = {"S1", "S2", "S3", "S4", "U", "V"};
    s.body = Formula::disj(std::move(disjuncts_));
    return s;
  }

 private:
  void add(std::vector<Formula> conj) { disjuncts_.push_back(Formula::conj(std::move(conj))); }

  // Counter run of the current configuration for a tape that is not under
  // inspection: empty when the counter is zero, else x followed by a run var.
  static Pieces plain_run(bool zero, char x, const char* var, std::vector<Formula>& side) {
    if (zero) return {};
    side.push_back(run_of(var, x));
    return {L(x), V(var)};
  }

  void transition_violations(const std::string& q, int n, bool z1, bool z2) {
    const char sigma = alpha_.letter(q, n);
    auto rule = m_.delta.find(RuleKey{q, w_[n], z1, z2});
    bool stuck = m_.is_final(q) || rule == m_.delta.end();

    if (stuck) {
      for (char tau : alpha_.id_letters()) {
        std::vector<Formula> side;
        Pieces s{V("S1"), L(sigma)};
        append(s, plain_run(z1, 'b', "U", side));
        append(s, plain_run(z2, 'c', "V", side));
        s.push_back(L(tau));
        s.push_back(V("S4"));
        side.insert(side.begin(), eq(V("S"), s));
        add(std::move(side));
      }
      return;
    }

    const RuleAction& act = rule->second;
    int d = act.move == Move::R ? 1 : -1;
    int n2 = n;
    int delta1 = 0, delta2 = 0;
    if (act.tape == Tape::In) n2 = std::clamp(n + d, 0, static_cast<int>(w_.size()) - 1);
    if (act.tape == Tape::Stor1) delta1 = (z1 && d < 0) ? 0 : d;
    if (act.tape == Tape::Stor2) delta2 = (z2 && d < 0) ? 0 : d;
    const char expected = alpha_.letter(act.next, n2);

    for (char tau : alpha_.id_letters()) {
      if (tau == expected && !opts_.negated_letter_check) continue;
      std::vector<Formula> side;
      Pieces s{V("S1"), L(sigma)};
      append(s, plain_run(z1, 'b', "U", side));
      append(s, plain_run(z2, 'c', "V", side));
      s.push_back(L(tau));
      s.push_back(V("S4"));
      side.insert(side.begin(), eq(V("S"), s));
      if (opts_.negated_letter_check)
        side.push_back(Formula::negate(eq(StrTerm::concat({L(tau), V("S4")}), {L(expected), V("S4")})));
      add(std::move(side));
    }

    counter_violations(sigma, expected, 1, z1, delta1, z2);
    counter_violations(sigma, expected, 2, z2, delta2, z1);
  }

  // Successor configuration has the right letter but a counter run of the
  // inspected tape that is too long or too short.
  void counter_violations(char sigma, char expected, int tape, bool zero, int delta, bool other_zero) {
    const char x = tape == 1 ? 'b' : 'c';
    const char other = tape == 1 ? 'c' : 'b';
    const char* run = tape == 1 ? "U" : "V";      // R
    const char* other_run = tape == 1 ? "V" : "U";
    const char* extra = "S2";                       // E
    const char* next_other = "S3";                  // successor's other run

    // Assembles S from the current run and the successor's run of the
    // inspected tape, with `tail` after the successor's inspected run.
    auto emit = [&](const Pieces& cur, const Pieces& next, bool exact, std::vector<Formula> side) {
      Pieces s{V("S1"), L(sigma)};
      Pieces other_cur = plain_run(other_zero, other, other_run, side);
      if (tape == 1) {
        append(s, cur);
        append(s, other_cur);
      } else {
        append(s, other_cur);
        append(s, cur);
      }
      s.push_back(L(expected));
      if (tape == 2) {
        s.push_back(V(next_other));
        side.push_back(run_of(next_other, other));
      }
      append(s, next);
      if (!exact) {
        s.push_back(V("S4"));
        side.insert(side.begin(), eq(V("S"), s));
        add(std::move(side));
        return;
      }
      if (tape == 1) {
        s.push_back(V(next_other));
        side.push_back(run_of(next_other, other));
      }
      // The successor ends here: followed by a configuration letter or the end.
      std::vector<Formula> at_end = side;
      at_end.insert(at_end.begin(), eq(V("S"), s));
      add(std::move(at_end));
      for (char y : alpha_.id_letters()) {
        Pieces t = s;
        t.push_back(L(y));
        t.push_back(V("S4"));
        std::vector<Formula> more = side;
        more.insert(more.begin(), eq(V("S"), t));
        add(std::move(more));
      }
    };
    auto R = [&] { return V(run); };
    auto E = [&] { return V(extra); };

    // Too long.
    if (zero) {
      emit({}, repeat(x, std::max(0, delta) + 1), false, {});
    } else {
      Pieces cur{L(x), R()};
      Pieces next = repeat(x, 2 + delta);
      next.push_back(R());
      emit(cur, next, false, {run_of(run, x)});
    }

    // Too short.
    if (zero) {
      if (delta == 1) emit({}, {}, true, {});
      return;
    }
    switch (delta) {
      case 1:
        emit({L(x), E()}, {}, true, {run_of(extra, x)});
        emit({L(x), R(), E()}, {L(x), R()}, true, {run_of(run, x), run_of(extra, x)});
        break;
      case 0:
        emit({R(), L(x), E()}, {R()}, true, {run_of(run, x), run_of(extra, x)});
        break;
      default:
        emit({R(), L(Word(2, x)), E()}, {R()}, true, {run_of(run, x), run_of(extra, x)});
        break;
    }
  }

  const TwoCounterMachine& m_;
  const std::string& w_;
  const EncodeOptions& opts_;
  HistoryAlphabet alpha_;
  std::vector<Formula> disjuncts_;
};

}  // namespace

Sentence encode(const TwoCounterMachine& m, const std::string& w, const EncodeOptions& options) {
  if (w.empty()) throw Error("input word must be nonempty");
  return Encoder(m, w, options).run();
}

namespace {

class Positivizer {
 public:
  explicit Positivizer(Sentence& s) : s_(s) {}

  Formula nnf(const Formula& f, bool negated) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        if (!negated) return f;
        if (f.atom().kind() != Atom::Kind::WordEq) throw Error("positivize: only word equations can be negated");
        return disequality(f.atom().lhs(), f.atom().rhs());
      case Formula::Kind::Not:
        return nnf(f.children().front(), !negated);
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        std::vector<Formula> kids;
        for (const auto& c : f.children()) kids.push_back(nnf(c, negated));
        bool conj = (f.kind() == Formula::Kind::And) != negated;
        return conj ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
      }
    }
    return f;
  }

 private:
  std::string fresh(const std::string& hint) {
    std::string name;
    do {
      name = hint + std::to_string(counter_++);
    } while (std::find(s_.universals.begin(), s_.universals.end(), name) != s_.universals.end() ||
             std::find(s_.existentials.begin(), s_.existentials.end(), name) != s_.existentials.end());
    s_.existentials.push_back(name);
    return name;
  }

  // s != t: one is a proper prefix of the other, or they differ at some
  // position after a common prefix.
  Formula disequality(const StrTerm& s, const StrTerm& t) {
    StrTerm p = StrTerm::var(fresh("P"));
    StrTerm u = StrTerm::var(fresh("W"));
    StrTerm v = StrTerm::var(fresh("W"));
    std::vector<Formula> out;
    for (char y : s_.sigma) {
      out.push_back(eq(s, {t, L(y), u}));
      out.push_back(eq(t, {s, L(y), u}));
    }
    for (char x : s_.sigma)
      for (char y : s_.sigma)
        if (x != y) out.push_back(Formula::conj({eq(s, {p, L(x), u}), eq(t, {p, L(y), v})}));
    return Formula::disj(std::move(out));
  }

  Sentence& s_;
  int counter_ = 0;
};

}  // namespace

Sentence positivize(const Sentence& s) {
  Sentence out = s;
  Positivizer p(out);
  out.body = p.nnf(s.body, false);
  return out;
}

namespace {

struct Item {
  bool is_var = false;
  char letter = 0;
  int var = 0;
};

using Pattern = std::vector<Item>;

struct CLit {
  Pattern lhs, rhs;
  bool negated = false;
};

class Checker {
 public:
  Checker(const Sentence& s, long max_nodes) : sigma_(s.sigma), max_nodes_(max_nodes) {
    if (s.universals.size() != 1) throw Error("bounded check supports exactly one universal variable");
    id(s.universals.front());
    for (const auto& e : s.existentials) id(e);
    for (const auto& c : to_dnf(s.body)) {
      std::vector<CLit> lits;
      for (const auto& lit : c) {
        if (lit.atom.kind() != Atom::Kind::WordEq) throw Error("bounded check supports word equations only");
        lits.push_back({compile(lit.atom.lhs()), compile(lit.atom.rhs()), lit.negated});
      }
      conjuncts_.push_back(std::move(lits));
    }
  }

  bool holds(const Word& value) {
    vals_.assign(names_.size(), std::nullopt);
    vals_[0] = value;
    bound_ = value.size();
    for (const auto& c : conjuncts_)
      if (satisfy(c)) return true;
    return false;
  }

 private:
  int id(const std::string& name) {
    auto [it, fresh] = ids_.emplace(name, static_cast<int>(names_.size()));
    if (fresh) names_.push_back(name);
    return it->second;
  }

  Pattern compile(const StrTerm& t) {
    Pattern p;
    std::function<void(const StrTerm&)> rec = [&](const StrTerm& u) {
      switch (u.kind()) {
        case StrTerm::Kind::Lit:
          for (char c : u.text()) p.push_back({false, c, 0});
          break;
        case StrTerm::Kind::Var:
          p.push_back({true, 0, id(u.text())});
          break;
        case StrTerm::Kind::Concat:
          for (const auto& q : u.parts()) rec(q);
          break;
      }
    };
    rec(t);
    return p;
  }

  int unbound(const Pattern& p) const {
    int n = 0;
    for (const auto& it : p)
      if (it.is_var && !vals_[it.var]) ++n;
    return n;
  }

  Word value(const Pattern& p) const {
    Word w;
    for (const auto& it : p) {
      if (it.is_var)
        w += *vals_[it.var];
      else
        w.push_back(it.letter);
    }
    return w;
  }

  void tick() {
    if (++nodes_ > max_nodes_) throw ResourceExhausted("bounded validity check node budget exhausted");
  }

  bool satisfy(const std::vector<CLit>& lits) {
    tick();
    const CLit* best = nullptr;
    bool best_lhs_bound = false;
    int best_free = 0;
    int first_free_var = -1;
    for (const auto& l : lits) {
      int ul = unbound(l.lhs), ur = unbound(l.rhs);
      if (ul == 0 && ur == 0) {
        bool equal = value(l.lhs) == value(l.rhs);
        if (equal == l.negated) return false;
        continue;
      }
      for (const Pattern* p : {&l.lhs, &l.rhs})
        for (const auto& it : *p)
          if (first_free_var < 0 && it.is_var && !vals_[it.var]) first_free_var = it.var;
      if (l.negated || (ul > 0 && ur > 0)) continue;
      int free = ul + ur;
      if (!best || free < best_free) {
        best = &l;
        best_lhs_bound = ul == 0;
        best_free = free;
      }
    }
    if (first_free_var < 0) return true;
    if (best) {
      const Word target = value(best_lhs_bound ? best->lhs : best->rhs);
      const Pattern& pat = best_lhs_bound ? best->rhs : best->lhs;
      return match(pat, 0, target, 0, [&] { return satisfy(lits); });
    }
    // No equation has a determined side: enumerate one variable.
    return enumerate(first_free_var, [&] { return satisfy(lits); });
  }

  bool match(const Pattern& p, std::size_t i, const Word& w, std::size_t pos, const std::function<bool()>& k) {
    if (i == p.size()) return pos == w.size() && k();
    const Item& it = p[i];
    if (!it.is_var) return pos < w.size() && w[pos] == it.letter && match(p, i + 1, w, pos + 1, k);
    if (vals_[it.var]) {
      const Word& v = *vals_[it.var];
      return pos + v.size() <= w.size() && w.compare(pos, v.size(), v) == 0 && match(p, i + 1, w, pos + v.size(), k);
    }
    std::size_t rest = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!p[j].is_var)
        ++rest;
      else if (vals_[p[j].var] && p[j].var != it.var)
        rest += vals_[p[j].var]->size();
    if (pos + rest > w.size()) return false;
    std::size_t max_len = std::min(w.size() - pos - rest, bound_);
    for (std::size_t len = 0; len <= max_len; ++len) {
      tick();
      vals_[it.var] = w.substr(pos, len);
      bool ok = match(p, i + 1, w, pos + len, k);
      if (ok) {
        vals_[it.var].reset();
        return true;
      }
    }
    vals_[it.var].reset();
    return false;
  }

  bool enumerate(int var, const std::function<bool()>& k) {
    Word cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t len) {
      if (cur.size() == len) {
        vals_[var] = cur;
        bool ok = k();
        vals_[var].reset();
        return ok;
      }
      for (char c : sigma_) {
        cur.push_back(c);
        bool ok = rec(len);
        cur.pop_back();
        if (ok) return true;
      }
      return false;
    };
    for (std::size_t len = 0; len <= bound_; ++len)
      if (rec(len)) return true;
    return false;
  }

  Alphabet sigma_;
  long max_nodes_;
  long nodes_ = 0;
  std::size_t bound_ = 0;
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<std::vector<CLit>> conjuncts_;
  std::vector<std::optional<Word>> vals_;
};

}  // namespace

bool holds_at(const Sentence& s, const Word& value, long max_nodes) { return Checker(s, max_nodes).holds(value); }

BoundedResult bounded_validity_check(const Sentence& s, std::size_t max_len, long max_nodes) {
  Checker checker(s, max_nodes);
  BoundedResult r;
  r.bound = max_len;
  Word cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t len) {
    if (cur.size() == len) {
      if (!checker.holds(cur)) {
        r.counterexample = cur;
        return true;
      }
      return false;
    }
    for (char c : s.sigma) {
      cur.push_back(c);
      bool found = rec(len);
      cur.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (std::size_t len = 0; len <= max_len; ++len)
    if (rec(len)) break;
  return r;
}

std::string print_sentence(const Sentence& s) {
  auto names = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& n : v) out += (out.empty() ? "" : " ") + n;
    return out;
  };
  return "(forall (" + names(s.universals) + ") (exists (" + names(s.existentials) + ") " + print_formula(s.body) + "))";
}

}  // namespace wordeq
