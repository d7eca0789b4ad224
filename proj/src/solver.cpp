#include "wordeq/solver.hpp"

#include <functional>
#include <stdexcept>

#include "wordeq/automata.hpp"
#include "wordeq/errors.hpp"

namespace wordeq {

std::string to_string(Verdict::Reason r) {
  switch (r) {
    case Verdict::Reason::None:
      return "none";
    case Verdict::Reason::NoSolvedFormInFragment:
      return "no solved form in fragment";
    case Verdict::Reason::UnfixedPartUnderRegex:
      return "unfixed part under regular constraint";
    case Verdict::Reason::ResourceExhausted:
      return "resource exhausted";
  }
  return "unknown";
}

bool verify_model(const Formula& phi, const Assignment& a) { return eval_formula(phi, a); }

Assignment build_model(const SolvedForm& sf, const LiaModel& m, const Alphabet& sigma) {
  auto value = [&](const LinVar& v) {
    auto it = m.find(v);
    return it == m.end() ? std::int64_t{0} : it->second;
  };
  std::map<ParamId, std::int64_t> params;
  for (ParamId p : sf.params()) params[p] = value(LinVar::param_of(p));
  std::map<PartId, Word> parts;
  for (PartId y : sf.parts())
    parts[y] = Word(static_cast<std::size_t>(value(LinVar::part_len_of(y))), sigma.empty() ? 'a' : sigma.front());
  Assignment a;
  for (const auto& [x, pw] : sf.equations) a.strs[x] = instantiate(pw, params, parts);
  for (const auto& [v, n] : m)
    if (v.kind == LinVar::Kind::ProblemInt) a.ints[v.name] = n;
  return a;
}

namespace {

struct RegexLit {
  std::string var;
  Dfa dfa;
};

struct Split {
  std::vector<Atom> equations;
  std::vector<Atom> lengths;
  std::vector<RegexLit> regexes;
  std::set<std::string> vars;
};

Split partition(const Conjunct& c, const Alphabet& sigma, FreshNames& fresh) {
  Split s;
  for (const auto& lit : c) {
    const Atom& a = lit.atom;
    switch (a.kind()) {
      case Atom::Kind::WordEq:
        s.equations.push_back(a);
        collect_vars(a.lhs(), s.vars);
        collect_vars(a.rhs(), s.vars);
        break;
      case Atom::Kind::LenLeq: {
        s.lengths.push_back(a);
        VarSets vs = free_vars(a);
        s.vars.insert(vs.strs.begin(), vs.strs.end());
        break;
      }
      case Atom::Kind::InRe: {
        std::string x;
        if (a.lhs().is_var()) {
          x = a.lhs().text();
        } else {
          x = fresh.next("Z");
          s.equations.push_back(Atom::word_eq(StrTerm::var(x), a.lhs()));
          collect_vars(a.lhs(), s.vars);
        }
        s.vars.insert(x);
        Dfa d = regex_to_dfa(a.re(), sigma);
        s.regexes.push_back({x, lit.negated ? dfa_complement(d) : d});
        break;
      }
    }
  }
  return s;
}

// Cartesian product of disjunctive row sets, visited lazily.
bool for_each_branch(const std::vector<std::vector<LinSystem>>& options, const LinSystem& base,
                     const std::function<bool(const LinSystem&)>& visit) {
  std::function<bool(std::size_t, LinSystem&)> rec = [&](std::size_t i, LinSystem& acc) {
    if (i == options.size()) return visit(acc);
    for (const auto& opt : options[i]) {
      LinSystem next = acc;
      next.append(opt);
      if (rec(i + 1, next)) return true;
    }
    return false;
  };
  LinSystem acc = base;
  return rec(0, acc);
}

class Pipeline {
 public:
  Pipeline(const Formula& phi, const Alphabet& sigma, const SolverOptions& opts, bool abstract)
      : phi_(phi), sigma_(sigma), opts_(opts), abstract_(abstract) {}

  Verdict run() {
    FreshNames fresh;
    for (const auto& conjunct : to_dnf(phi_)) {
      for (const auto& c : eliminate_negations(conjunct, sigma_, fresh)) {
        Split s = partition(c, sigma_, fresh);
        if (solve_split(s)) return sat_;
      }
    }
    Verdict v;
    if (reason_ != Verdict::Reason::None) {
      v.kind = Verdict::Kind::Unsupported;
      v.reason = reason_;
      v.detail = detail_;
    }
    return v;
  }

 private:
  void block(Verdict::Reason r, const std::string& detail) {
    if (reason_ != Verdict::Reason::None) return;
    reason_ = r;
    detail_ = detail;
  }

  bool solve_split(const Split& s) {
    SolvedFormResult sfr = to_solved_form(s.equations, s.vars, opts_.rewrite);
    if (sfr.status == SolvedFormResult::Status::NoSolvedFormInFragment) {
      block(Verdict::Reason::NoSolvedFormInFragment, sfr.reason);
      return false;
    }
    for (const auto& sf : sfr.forms)
      if (solve_form(s, sf)) return true;
    return false;
  }

  bool solve_form(const Split& s, const SolvedForm& sf) {
    LinSystem base = implied_length_constraints(sf);
    for (const auto& a : s.lengths) base.add(translate_len_atom(a));
    int next_fresh = 0;
    std::vector<std::vector<LinSystem>> options;

    if (abstract_) {
      for (const auto& r : s.regexes) options.push_back(upset_to_rows(LinVar::len_of(r.var), length_set(r.dfa), next_fresh));
    } else {
      std::vector<ParamBox> boxes{ParamBox{}};
      for (const auto& r : s.regexes) {
        const ParamWord& pw = sf.equations.at(r.var);
        if (pw.has_unfixed()) {
          block(Verdict::Reason::UnfixedPartUnderRegex, r.var);
          return false;
        }
        if (dfa_is_empty(dfa_intersect(solved_form_language(sf, r.var, sigma_), r.dfa))) return false;
        ParamConstraintSet pcs = param_membership(pw, r.dfa);
        std::vector<ParamBox> merged;
        for (const auto& b1 : boxes)
          for (const auto& b2 : pcs.boxes) {
            ParamBox m = b1;
            bool empty = false;
            for (const auto& [p, set] : b2) {
              auto it = m.find(p);
              UPSet joint = it == m.end() ? set : upset_intersect(it->second, set);
              if (joint.empty()) empty = true;
              m[p] = joint;
            }
            if (!empty) merged.push_back(std::move(m));
          }
        boxes = std::move(merged);
      }
      // Each box is its own disjunct: one option list per box.
      for (const auto& box : boxes) {
        std::vector<std::vector<LinSystem>> box_options;
        for (const auto& [p, set] : box) {
          if (set == UPSet::all()) continue;
          box_options.push_back(upset_to_rows(LinVar::param_of(p), set, next_fresh));
        }
        if (try_branches(sf, box_options, base)) return true;
      }
      return false;
    }
    return try_branches(sf, options, base);
  }

  bool try_branches(const SolvedForm& sf, const std::vector<std::vector<LinSystem>>& options, const LinSystem& base) {
    return for_each_branch(options, base, [&](const LinSystem& sys) {
      std::optional<LiaModel> m;
      try {
        m = lia_sat(sys, opts_.lia);
      } catch (const ResourceExhausted& e) {
        block(Verdict::Reason::ResourceExhausted, e.what());
        return false;
      } catch (const CoefficientOverflow& e) {
        block(Verdict::Reason::ResourceExhausted, e.what());
        return false;
      }
      if (!m) return false;
      if (abstract_) {
        sat_.kind = Verdict::Kind::Sat;
        return true;
      }
      Assignment a = build_model(sf, *m, sigma_);
      sat_ = finish(a);
      return true;
    });
  }

  Verdict finish(const Assignment& raw) const {
    Verdict v;
    v.kind = Verdict::Kind::Sat;
    VarSets fv = free_vars(phi_);
    for (const auto& x : fv.strs) {
      auto it = raw.strs.find(x);
      v.model.strs[x] = it == raw.strs.end() ? Word{} : it->second;
    }
    for (const auto& n : fv.ints) {
      auto it = raw.ints.find(n);
      v.model.ints[n] = it == raw.ints.end() ? 0 : it->second;
    }
    if (!verify_model(phi_, v.model)) throw std::logic_error("solver produced a model that fails verification");
    return v;
  }

  const Formula& phi_;
  const Alphabet& sigma_;
  const SolverOptions& opts_;
  bool abstract_;
  Verdict sat_;
  Verdict::Reason reason_ = Verdict::Reason::None;
  std::string detail_;
};

}  // namespace

Verdict check_sat(const Formula& phi, const Alphabet& sigma, const SolverOptions& options) {
  return Pipeline(phi, sigma, options, false).run();
}

Verdict::Kind check_sat_length_abstraction(const Formula& phi, const Alphabet& sigma, const SolverOptions& options) {
  return Pipeline(phi, sigma, options, true).run().kind;
}

}  // namespace wordeq
