#include "wordeq/solved_form.hpp"

#include <algorithm>
#include <sstream>

#include "wordeq/errors.hpp"

namespace wordeq {

std::vector<ParamId> SolvedForm::params() const {
  std::vector<ParamId> out;
  for (const auto& [x, pw] : equations)
    for (ParamId p : pw.params())
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

std::vector<PartId> SolvedForm::parts() const {
  std::vector<PartId> out;
  for (const auto& [x, pw] : equations)
    for (PartId y : pw.parts())
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  return out;
}

std::string to_string(const SolvedForm& sf) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, pw] : sf.equations) {
    if (!first) os << " & ";
    first = false;
    os << x << " = " << to_string(pw);
  }
  return os.str();
}

std::vector<Atom> render(const SolvedForm& sf) {
  std::vector<Atom> out;
  for (const auto& [x, pw] : sf.equations) {
    std::vector<StrTerm> parts;
    for (const auto& b : pw.blocks()) {
      switch (b.kind) {
        case Block::Kind::Const:
          parts.push_back(StrTerm::lit(b.word));
          break;
        case Block::Kind::Power:
          parts.push_back(StrTerm::var("(" + b.word + ")^i" + std::to_string(b.id)));
          break;
        case Block::Kind::Unfixed:
          parts.push_back(StrTerm::var("y" + std::to_string(b.id)));
          break;
      }
    }
    out.push_back(Atom::word_eq(StrTerm::var(x), StrTerm::concat(std::move(parts))));
  }
  return out;
}

bool is_solved_form(const std::vector<Atom>& eqs, const std::set<std::string>& vars) {
  std::map<std::string, int> defined;
  for (const auto& eq : eqs) {
    if (eq.kind() != Atom::Kind::WordEq || !eq.lhs().is_var()) return false;
    if (!vars.count(eq.lhs().text())) return false;
    ++defined[eq.lhs().text()];
    std::set<std::string> rhs_vars;
    collect_vars(eq.rhs(), rhs_vars);
    for (const auto& v : rhs_vars)
      if (vars.count(v)) return false;
  }
  for (const auto& v : vars)
    if (defined[v] != 1) return false;
  return true;
}

namespace {

struct Sym {
  enum class Kind { Letter, Var, Power };
  Kind kind = Kind::Letter;
  char letter = 0;
  int id = 0;  // variable or parameter id
  Word base;

  static Sym let(char c) { return {Kind::Letter, c, 0, {}}; }
  static Sym var(int v) { return {Kind::Var, 0, v, {}}; }
  static Sym power(Word base, int p) { return {Kind::Power, 0, p, std::move(base)}; }
  bool is(Kind k) const { return kind == k; }
  bool operator==(const Sym&) const = default;
};

using Seq = std::vector<Sym>;

struct Equation {
  Seq lhs;
  Seq rhs;
};

struct State {
  std::vector<Equation> eqs;
  std::map<int, Seq> bind;
  int depth = 0;
};

enum class ParamOp { Zero, Succ, Sum };

Seq letters(const Word& w) {
  Seq out;
  for (char c : w) out.push_back(Sym::let(c));
  return out;
}

bool mentions_var(const Seq& s, int v) {
  return std::any_of(s.begin(), s.end(), [v](const Sym& x) { return x.is(Sym::Kind::Var) && x.id == v; });
}

bool has_letter(const Seq& s) {
  return std::any_of(s.begin(), s.end(), [](const Sym& x) { return x.is(Sym::Kind::Letter); });
}

bool all_letters(const Seq& s) {
  return std::all_of(s.begin(), s.end(), [](const Sym& x) { return x.is(Sym::Kind::Letter); });
}

Word word_of(const Seq& s) {
  Word w;
  for (const auto& x : s) w.push_back(x.letter);
  return w;
}

template <typename F>
void rewrite_all(State& st, F&& rewrite_seq) {
  for (auto& eq : st.eqs) {
    rewrite_seq(eq.lhs);
    rewrite_seq(eq.rhs);
  }
  for (auto& [v, s] : st.bind) rewrite_seq(s);
}

void subst_var(State& st, int x, const Seq& repl) {
  rewrite_all(st, [&](Seq& s) {
    if (!mentions_var(s, x)) return;
    Seq out;
    for (const auto& sym : s) {
      if (sym.is(Sym::Kind::Var) && sym.id == x)
        out.insert(out.end(), repl.begin(), repl.end());
      else
        out.push_back(sym);
    }
    s = std::move(out);
  });
  st.bind[x] = repl;
}

void subst_param(State& st, int p, ParamOp op, int j = -1, int k = -1) {
  rewrite_all(st, [&](Seq& s) {
    Seq out;
    for (const auto& sym : s) {
      if (!sym.is(Sym::Kind::Power) || sym.id != p) {
        out.push_back(sym);
        continue;
      }
      switch (op) {
        case ParamOp::Zero:
          break;
        case ParamOp::Succ: {
          Seq u = letters(sym.base);
          out.insert(out.end(), u.begin(), u.end());
          out.push_back(Sym::power(sym.base, j));
          break;
        }
        case ParamOp::Sum:
          out.push_back(Sym::power(sym.base, j));
          out.push_back(Sym::power(sym.base, k));
          break;
      }
    }
    s = std::move(out);
  });
}

class Rewriter {
 public:
  Rewriter(std::vector<std::string> names, std::vector<int> problem_vars, RewriteLimits limits)
      : names_(std::move(names)), problem_vars_(std::move(problem_vars)), limits_(limits) {}

  void run(State st) { process(std::move(st)); }

  bool blocked() const { return blocked_; }
  const std::string& reason() const { return reason_; }
  std::vector<SolvedForm> forms() const { return {found_.begin(), found_.end()}; }

 private:
  enum class Step { Progress, Dead, Stuck };

  int fresh_var() {
    names_.push_back("!w" + std::to_string(names_.size()));
    return static_cast<int>(names_.size()) - 1;
  }
  int fresh_param() { return next_param_++; }

  void block(const std::string& why) {
    if (!blocked_) reason_ = why;
    blocked_ = true;
  }

  // Strips common ends of every equation and resolves equations with an
  // empty side. Dead on a letter clash.
  Step simplify(State& st) {
    for (std::size_t e = 0; e < st.eqs.size(); ++e) {
      auto& [l, r] = st.eqs[e];
      std::size_t pre = 0;
      while (pre < l.size() && pre < r.size() && l[pre] == r[pre]) ++pre;
      if (pre < l.size() && pre < r.size() && l[pre].is(Sym::Kind::Letter) && r[pre].is(Sym::Kind::Letter))
        return Step::Dead;
      l.erase(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(pre));
      r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pre));
      while (!l.empty() && !r.empty() && l.back() == r.back()) {
        l.pop_back();
        r.pop_back();
      }
      if (!l.empty() && !r.empty() && l.back().is(Sym::Kind::Letter) && r.back().is(Sym::Kind::Letter))
        return Step::Dead;
      if (l.empty() && r.empty()) {
        st.eqs.erase(st.eqs.begin() + static_cast<std::ptrdiff_t>(e));
        return Step::Progress;
      }
      if (l.empty() || r.empty()) {
        const Seq& side = l.empty() ? r : l;
        if (has_letter(side)) return Step::Dead;
        Sym first = side.front();
        if (first.is(Sym::Kind::Var))
          subst_var(st, first.id, {});
        else
          subst_param(st, first.id, ParamOp::Zero);
        return Step::Progress;
      }
    }
    return Step::Stuck;
  }

  // X = t with X not in t.
  Step definitional(State& st) {
    for (std::size_t e = 0; e < st.eqs.size(); ++e) {
      for (int side = 0; side < 2; ++side) {
        const Seq& one = side == 0 ? st.eqs[e].lhs : st.eqs[e].rhs;
        const Seq& other = side == 0 ? st.eqs[e].rhs : st.eqs[e].lhs;
        if (one.size() != 1 || !one.front().is(Sym::Kind::Var)) continue;
        int x = one.front().id;
        if (mentions_var(other, x)) {
          if (has_letter(other)) return Step::Dead;  // |X| = |X| + k with k > 0
          continue;
        }
        Seq repl = other;
        st.eqs.erase(st.eqs.begin() + static_cast<std::ptrdiff_t>(e));
        subst_var(st, x, repl);
        return Step::Progress;
      }
    }
    return Step::Stuck;
  }

  // u X = X v with constant u, v: X = (pq)^i p for u = pq, v = qp.
  bool commutation(const State& st, std::vector<State>& branches) {
    for (std::size_t e = 0; e < st.eqs.size(); ++e) {
      for (int side = 0; side < 2; ++side) {
        const Seq& a = side == 0 ? st.eqs[e].lhs : st.eqs[e].rhs;
        const Seq& b = side == 0 ? st.eqs[e].rhs : st.eqs[e].lhs;
        if (a.size() < 2 || b.size() < 2) continue;
        if (!a.back().is(Sym::Kind::Var) || !(b.front() == a.back())) continue;
        Seq u_seq(a.begin(), a.end() - 1), v_seq(b.begin() + 1, b.end());
        if (!all_letters(u_seq) || !all_letters(v_seq)) continue;
        int x = a.back().id;
        Word u = word_of(u_seq), v = word_of(v_seq);
        if (u.size() == v.size()) {
          for (std::size_t k = 0; k < u.size(); ++k) {
            Word p = u.substr(0, k), q = u.substr(k);
            if (q + p != v) continue;
            State next = st;
            next.eqs.erase(next.eqs.begin() + static_cast<std::ptrdiff_t>(e));
            Seq repl{Sym::power(u, fresh_param())};
            Seq tail = letters(p);
            repl.insert(repl.end(), tail.begin(), tail.end());
            subst_var(next, x, repl);
            branches.push_back(std::move(next));
          }
        }
        return true;  // no admissible split means no solution
      }
    }
    return false;
  }

  // Case split on the first differing leading symbols of the first equation.
  void split(const State& st, std::vector<State>& branches) {
    const Sym a0 = st.eqs.front().lhs.front();
    const Sym b0 = st.eqs.front().rhs.front();
    Sym a = a0, b = b0;
    if (!a.is(Sym::Kind::Var) && b.is(Sym::Kind::Var)) std::swap(a, b);
    auto branch = [&](auto&& apply) {
      State next = st;
      apply(next);
      branches.push_back(std::move(next));
    };
    if (a.is(Sym::Kind::Var)) {
      int x = a.id;
      if (b.is(Sym::Kind::Letter)) {
        branch([&](State& s) { subst_var(s, x, {}); });
        branch([&](State& s) { subst_var(s, x, {b, Sym::var(fresh_var())}); });
      } else if (b.is(Sym::Kind::Var)) {
        int y = b.id;
        branch([&](State& s) { subst_var(s, x, {Sym::var(y), Sym::var(fresh_var())}); });
        branch([&](State& s) { subst_var(s, y, {Sym::var(x), Sym::var(fresh_var())}); });
      } else {
        unroll(st, b.id, branches);
      }
      return;
    }
    if (a.is(Sym::Kind::Letter)) std::swap(a, b);
    // a is a power now.
    if (b.is(Sym::Kind::Power) && b.base == a.base) {
      int i = a.id, j = b.id;
      branch([&](State& s) { subst_param(s, i, ParamOp::Sum, j, fresh_param()); });
      branch([&](State& s) { subst_param(s, j, ParamOp::Sum, i, fresh_param()); });
      return;
    }
    unroll(st, a.id, branches);
  }

  void unroll(const State& st, int p, std::vector<State>& branches) {
    State zero = st;
    subst_param(zero, p, ParamOp::Zero);
    branches.push_back(std::move(zero));
    State succ = st;
    subst_param(succ, p, ParamOp::Succ, fresh_param());
    branches.push_back(std::move(succ));
  }

  void process(State st) {
    while (!blocked_) {
      if (++nodes_ > limits_.max_nodes) {
        block("rewriting node budget exhausted");
        return;
      }
      Step s = simplify(st);
      if (s == Step::Dead) return;
      if (s == Step::Progress) continue;
      if (st.eqs.empty()) {
        emit(st);
        return;
      }
      s = definitional(st);
      if (s == Step::Dead) return;
      if (s == Step::Progress) continue;
      std::vector<State> branches;
      if (!commutation(st, branches)) {
        if (st.depth >= limits_.max_depth) {
          block("case-split depth limit reached");
          return;
        }
        split(st, branches);
        for (auto& b : branches) ++b.depth;
      }
      for (auto& b : branches) {
        process(std::move(b));
        if (blocked_) return;
      }
      return;
    }
  }

  void emit(const State& st) {
    std::vector<int> order = problem_vars_;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return names_[x] < names_[y]; });
    std::map<int, int> param_ids, part_ids;
    SolvedForm sf;
    for (int x : order) {
      auto it = st.bind.find(x);
      Seq seq = it == st.bind.end() ? Seq{Sym::var(x)} : it->second;
      std::vector<Block> blocks;
      for (const auto& sym : seq) {
        switch (sym.kind) {
          case Sym::Kind::Letter:
            blocks.push_back(Block::constant(Word(1, sym.letter)));
            break;
          case Sym::Kind::Power: {
            auto [pi, ins] = param_ids.emplace(sym.id, static_cast<int>(param_ids.size()));
            blocks.push_back(Block::power(sym.base, pi->second));
            break;
          }
          case Sym::Kind::Var: {
            auto [yi, ins] = part_ids.emplace(sym.id, static_cast<int>(part_ids.size()));
            blocks.push_back(Block::unfixed(yi->second));
            break;
          }
        }
      }
      sf.equations.emplace(names_[x], ParamWord(std::move(blocks)));
    }
    found_.insert(std::move(sf));
  }

  std::vector<std::string> names_;
  std::vector<int> problem_vars_;
  RewriteLimits limits_;
  int next_param_ = 0;
  long nodes_ = 0;
  bool blocked_ = false;
  std::string reason_;
  std::set<SolvedForm> found_;
};

void flatten(const StrTerm& t, const std::map<std::string, int>& ids, Seq& out) {
  switch (t.kind()) {
    case StrTerm::Kind::Lit:
      for (char c : t.text()) out.push_back(Sym::let(c));
      break;
    case StrTerm::Kind::Var:
      out.push_back(Sym::var(ids.at(t.text())));
      break;
    case StrTerm::Kind::Concat:
      for (const auto& p : t.parts()) flatten(p, ids, out);
      break;
  }
}

}  // namespace

SolvedFormResult to_solved_form(const std::vector<Atom>& eqs, const std::set<std::string>& vars,
                                const RewriteLimits& limits) {
  std::set<std::string> all = vars;
  for (const auto& eq : eqs) {
    collect_vars(eq.lhs(), all);
    collect_vars(eq.rhs(), all);
  }
  std::vector<std::string> names(all.begin(), all.end());
  std::map<std::string, int> ids;
  std::vector<int> problem;
  for (std::size_t i = 0; i < names.size(); ++i) {
    ids[names[i]] = static_cast<int>(i);
    problem.push_back(static_cast<int>(i));
  }
  State st;
  for (const auto& eq : eqs) {
    Equation e;
    flatten(eq.lhs(), ids, e.lhs);
    flatten(eq.rhs(), ids, e.rhs);
    st.eqs.push_back(std::move(e));
  }
  Rewriter rw(names, problem, limits);
  rw.run(std::move(st));

  SolvedFormResult res;
  if (rw.blocked()) {
    res.status = SolvedFormResult::Status::NoSolvedFormInFragment;
    res.reason = rw.reason();
  } else {
    res.forms = rw.forms();
    res.status = res.forms.empty() ? SolvedFormResult::Status::Unsat : SolvedFormResult::Status::Solved;
  }
  return res;
}

SolvedFormResult to_solved_form(const std::vector<Atom>& eqs, const RewriteLimits& limits) {
  return to_solved_form(eqs, {}, limits);
}

Dfa solved_form_language(const SolvedForm& sf, const std::string& x, const Alphabet& sigma) {
  auto it = sf.equations.find(x);
  if (it == sf.equations.end()) throw UnmappedVariable(x);
  if (it->second.has_unfixed()) throw UnfixedPartPresent();
  std::vector<Regex> parts;
  for (const auto& b : it->second.blocks()) {
    if (b.kind == Block::Kind::Const)
      parts.push_back(Regex::lit(b.word));
    else
      parts.push_back(Regex::star(Regex::lit(b.word)));
  }
  return regex_to_dfa(Regex::concat(std::move(parts)), sigma);
}

}  // namespace wordeq
