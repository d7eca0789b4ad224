#include "wordeq/automata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "wordeq/errors.hpp"

namespace wordeq {

int Nfa::add_state() {
  edges_.emplace_back();
  eps_.emplace_back();
  return size() - 1;
}

std::set<int> Nfa::closure(std::set<int> states) const {
  std::vector<int> stack(states.begin(), states.end());
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int t : eps_[q])
      if (states.insert(t).second) stack.push_back(t);
  }
  return states;
}

bool Nfa::accepts(const Word& w) const {
  std::set<int> cur = closure({initial});
  for (char ch : w) {
    std::set<int> next;
    for (int q : cur)
      for (const auto& e : edges_[q])
        if (e.letter == ch) next.insert(e.target);
    if (next.empty()) return false;
    cur = closure(std::move(next));
  }
  return cur.count(accepting) > 0;
}

namespace {

struct Fragment {
  int start;
  int end;
};

Fragment build(Nfa& nfa, const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Epsilon: {
      int s = nfa.add_state(), e = nfa.add_state();
      nfa.add_epsilon(s, e);
      return {s, e};
    }
    case Regex::Kind::Lit: {
      int s = nfa.add_state();
      int cur = s;
      for (char ch : r.word()) {
        int next = nfa.add_state();
        nfa.add_edge(cur, ch, next);
        cur = next;
      }
      if (cur == s) {
        int e = nfa.add_state();
        nfa.add_epsilon(s, e);
        cur = e;
      }
      return {s, cur};
    }
    case Regex::Kind::Concat: {
      Fragment whole = build(nfa, r.children().front());
      for (std::size_t i = 1; i < r.children().size(); ++i) {
        Fragment f = build(nfa, r.children()[i]);
        nfa.add_epsilon(whole.end, f.start);
        whole.end = f.end;
      }
      return whole;
    }
    case Regex::Kind::Union: {
      int s = nfa.add_state(), e = nfa.add_state();
      for (const auto& c : r.children()) {
        Fragment f = build(nfa, c);
        nfa.add_epsilon(s, f.start);
        nfa.add_epsilon(f.end, e);
      }
      return {s, e};
    }
    case Regex::Kind::Star: {
      int s = nfa.add_state(), e = nfa.add_state();
      Fragment f = build(nfa, r.children().front());
      nfa.add_epsilon(s, e);
      nfa.add_epsilon(s, f.start);
      nfa.add_epsilon(f.end, f.start);
      nfa.add_epsilon(f.end, e);
      return {s, e};
    }
  }
  return {0, 0};
}

void check_letters(const Regex& r, const Alphabet& sigma) {
  for (char ch : r.word())
    if (sigma.find(ch) == Alphabet::npos) throw LetterOutsideAlphabet(ch);
  for (const auto& c : r.children()) check_letters(c, sigma);
}

}  // namespace

Nfa regex_to_nfa(const Regex& r) {
  Nfa nfa;
  Fragment f = build(nfa, r);
  nfa.initial = f.start;
  nfa.accepting = f.end;
  return nfa;
}

Dfa::Dfa(Alphabet sigma, int states)
    : sigma_(std::move(sigma)), table_(static_cast<std::size_t>(states) * sigma_.size(), 0), accepting_(states, false) {}

int Dfa::step(int q, char letter) const {
  auto idx = sigma_.find(letter);
  if (idx == Alphabet::npos) throw LetterOutsideAlphabet(letter);
  return step_index(q, idx);
}

int Dfa::run(int q, const Word& w) const {
  for (char ch : w) q = step(q, ch);
  return q;
}

Dfa regex_to_dfa(const Regex& r, const Alphabet& sigma) {
  check_letters(r, sigma);
  Nfa nfa = regex_to_nfa(r);
  std::map<std::set<int>, int> index;
  std::vector<std::set<int>> subsets;
  std::vector<std::vector<int>> delta;
  auto intern = [&](std::set<int> s) {
    auto [it, inserted] = index.emplace(s, static_cast<int>(subsets.size()));
    if (inserted) {
      subsets.push_back(std::move(s));
      delta.emplace_back(sigma.size(), 0);
    }
    return it->second;
  };
  intern(nfa.closure({nfa.initial}));
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    for (std::size_t li = 0; li < sigma.size(); ++li) {
      std::set<int> next;
      for (int q : subsets[cur])
        for (const auto& e : nfa.edges(q))
          if (e.letter == sigma[li]) next.insert(e.target);
      int target = intern(nfa.closure(std::move(next)));
      delta[cur][li] = target;
    }
  }
  Dfa dfa(sigma, static_cast<int>(subsets.size()));
  for (std::size_t q = 0; q < subsets.size(); ++q) {
    dfa.set_accepting(static_cast<int>(q), subsets[q].count(nfa.accepting) > 0);
    for (std::size_t li = 0; li < sigma.size(); ++li) dfa.set_transition(static_cast<int>(q), li, delta[q][li]);
  }
  return dfa;
}

Dfa dfa_intersect(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch();
  const std::size_t k = a.alphabet().size();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> delta;
  auto intern = [&](std::pair<int, int> p) {
    auto [it, inserted] = index.emplace(p, static_cast<int>(pairs.size()));
    if (inserted) {
      pairs.push_back(p);
      delta.emplace_back(k, 0);
    }
    return it->second;
  };
  intern({0, 0});
  for (std::size_t cur = 0; cur < pairs.size(); ++cur)
    for (std::size_t li = 0; li < k; ++li) {
      auto [p, q] = pairs[cur];
      delta[cur][li] = intern({a.step_index(p, li), b.step_index(q, li)});
    }
  Dfa out(a.alphabet(), static_cast<int>(pairs.size()));
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    out.set_accepting(static_cast<int>(s), a.accepting(pairs[s].first) && b.accepting(pairs[s].second));
    for (std::size_t li = 0; li < k; ++li) out.set_transition(static_cast<int>(s), li, delta[s][li]);
  }
  return out;
}

Dfa dfa_complement(const Dfa& a) {
  Dfa out = a;
  for (int q = 0; q < a.size(); ++q) out.set_accepting(q, !a.accepting(q));
  return out;
}

std::optional<Word> dfa_witness(const Dfa& a) {
  std::vector<int> parent(a.size(), -1);
  std::vector<char> via(a.size(), 0);
  std::vector<bool> seen(a.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    if (a.accepting(q)) {
      Word w;
      for (int cur = q; cur != 0; cur = parent[cur]) w.push_back(via[cur]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t li = 0; li < a.alphabet().size(); ++li) {
      int t = a.step_index(q, li);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = q;
        via[t] = a.alphabet()[li];
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

bool Progression::contains(std::int64_t n) const {
  if (n < offset) return false;
  if (period == 0) return n == offset;
  return (n - offset) % period == 0;
}

namespace {

bool subsumes(const Progression& big, const Progression& small) {
  if (small.period == 0) return big.contains(small.offset);
  return big.period > 0 && small.period % big.period == 0 && big.contains(small.offset);
}

}  // namespace

UPSet::UPSet(std::vector<Progression> progressions) {
  auto& ps = progressions;
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    // A singleton one period before a progression extends it downwards.
    for (auto& p : ps) {
      if (p.period == 0) continue;
      for (auto& s : ps)
        if (s.period == 0 && s.offset + p.period == p.offset) {
          p.offset = s.offset;
          changed = true;
        }
    }
    for (std::size_t i = 0; i < ps.size() && !changed; ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (i != j && subsumes(ps[j], ps[i])) {
          ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
  }
  progs_ = std::move(ps);
}

bool UPSet::contains(std::int64_t n) const {
  return std::any_of(progs_.begin(), progs_.end(), [n](const Progression& p) { return p.contains(n); });
}

UPSet upset_union(const UPSet& s, const UPSet& t) {
  std::vector<Progression> all = s.progressions();
  all.insert(all.end(), t.progressions().begin(), t.progressions().end());
  return UPSet(std::move(all));
}

namespace {

std::optional<Progression> intersect(const Progression& x, const Progression& y) {
  if (x.period == 0) return y.contains(x.offset) ? std::optional(x) : std::nullopt;
  if (y.period == 0) return x.contains(y.offset) ? std::optional(y) : std::nullopt;
  std::int64_t l = std::lcm(x.period, y.period);
  std::int64_t start = std::max(x.offset, y.offset);
  for (std::int64_t n = start; n < start + l; ++n)
    if (x.contains(n) && y.contains(n)) return Progression{n, l};
  return std::nullopt;
}

}  // namespace

UPSet upset_intersect(const UPSet& s, const UPSet& t) {
  std::vector<Progression> out;
  for (const auto& x : s.progressions())
    for (const auto& y : t.progressions())
      if (auto p = intersect(x, y)) out.push_back(*p);
  return UPSet(std::move(out));
}

std::string to_string(const UPSet& s) {
  if (s.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& p : s.progressions()) {
    if (!first) os << ", ";
    first = false;
    os << p.offset;
    if (p.period) os << "+" << p.period << "k";
  }
  os << "}";
  return os.str();
}

LengthSetResult length_set_detail(const Dfa& a) {
  std::map<std::vector<bool>, std::int64_t> first_seen;
  std::vector<bool> hits;
  std::vector<bool> cur(a.size(), false);
  cur[0] = true;
  std::int64_t len = 0;
  while (true) {
    auto [it, inserted] = first_seen.emplace(cur, len);
    if (!inserted) break;
    bool hit = false;
    for (int q = 0; q < a.size(); ++q) hit = hit || (cur[q] && a.accepting(q));
    hits.push_back(hit);
    std::vector<bool> next(a.size(), false);
    for (int q = 0; q < a.size(); ++q)
      if (cur[q])
        for (std::size_t li = 0; li < a.alphabet().size(); ++li) next[a.step_index(q, li)] = true;
    cur = std::move(next);
    ++len;
  }
  LengthSetResult r;
  r.preperiod = first_seen.at(cur);
  r.period = len - r.preperiod;
  std::vector<Progression> ps;
  for (std::int64_t n = 0; n < len; ++n)
    if (hits[n]) ps.push_back({n, n < r.preperiod ? 0 : r.period});
  r.lengths = UPSet(std::move(ps));
  return r;
}

bool ParamConstraintSet::contains(const std::map<ParamId, std::int64_t>& valuation) const {
  for (const auto& box : boxes) {
    bool inside = true;
    for (const auto& [p, set] : box) {
      auto it = valuation.find(p);
      if (it == valuation.end() || !set.contains(it->second)) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

ParamConstraintSet param_membership(const ParamWord& w, const Dfa& a) {
  if (w.has_unfixed()) throw UnfixedPartPresent();
  struct Branch {
    int state;
    ParamBox box;
  };
  std::vector<Branch> branches{{0, {}}};
  for (const auto& block : w.blocks()) {
    if (block.kind == Block::Kind::Const) {
      for (auto& b : branches) b.state = a.run(b.state, block.word);
      continue;
    }
    std::vector<Branch> next;
    for (const auto& b : branches) {
      // States after u^0, u^1, ... until the lasso closes.
      std::vector<int> seq{b.state};
      std::map<int, std::size_t> pos{{b.state, 0}};
      while (true) {
        int q = a.run(seq.back(), block.word);
        auto [it, inserted] = pos.emplace(q, seq.size());
        if (!inserted) break;
        seq.push_back(q);
      }
      auto loop_start = static_cast<std::int64_t>(pos.at(a.run(seq.back(), block.word)));
      auto period = static_cast<std::int64_t>(seq.size()) - loop_start;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        auto kk = static_cast<std::int64_t>(k);
        UPSet cls = kk < loop_start ? UPSet::singleton(kk) : UPSet({{kk, period}});
        ParamBox box = b.box;
        auto it = box.find(block.id);
        if (it != box.end()) {
          cls = upset_intersect(it->second, cls);
          if (cls.empty()) continue;
        }
        box[block.id] = cls;
        next.push_back({seq[k], std::move(box)});
      }
    }
    branches = std::move(next);
  }
  ParamConstraintSet out;
  for (auto& b : branches)
    if (a.accepting(b.state)) out.boxes.push_back(std::move(b.box));
  return out;
}

}  // namespace wordeq
