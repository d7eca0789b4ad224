#include "wordeq/ast.hpp"

namespace wordeq {

namespace {

std::vector<Conjunct> product(const std::vector<Conjunct>& xs, const std::vector<Conjunct>& ys) {
  std::vector<Conjunct> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Conjunct c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Conjunct> dnf(const Formula& phi, bool negated) {
  switch (phi.kind()) {
    case Formula::Kind::Atom:
      return {Conjunct{Literal{phi.atom(), negated}}};
    case Formula::Kind::Not:
      return dnf(phi.children().front(), !negated);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool conjunctive = (phi.kind() == Formula::Kind::And) != negated;
      if (conjunctive) {
        std::vector<Conjunct> acc{Conjunct{}};
        for (const auto& c : phi.children()) acc = product(acc, dnf(c, negated));
        return acc;
      }
      std::vector<Conjunct> acc;
      for (const auto& c : phi.children()) {
        auto sub = dnf(c, negated);
        acc.insert(acc.end(), sub.begin(), sub.end());
      }
      return acc;
    }
  }
  return {};
}

LenTerm difference(const StrTerm& s, const StrTerm& t) {
  return LenTerm::sum({{1, LenTerm::len(s)}, {-1, LenTerm::len(t)}});
}

}  // namespace

std::vector<Conjunct> to_dnf(const Formula& phi) { return dnf(phi, false); }

Formula from_dnf(const std::vector<Conjunct>& conjuncts) {
  std::vector<Formula> disjuncts;
  for (const auto& c : conjuncts) {
    std::vector<Formula> lits;
    for (const auto& lit : c) {
      Formula f = Formula::atom(lit.atom);
      lits.push_back(lit.negated ? Formula::negate(std::move(f)) : std::move(f));
    }
    disjuncts.push_back(Formula::conj(std::move(lits)));
  }
  return Formula::disj(std::move(disjuncts));
}

std::vector<Conjunct> eliminate_negations(const Conjunct& c, const Alphabet& sigma, FreshNames& fresh) {
  std::vector<Conjunct> acc{Conjunct{}};
  for (const auto& lit : c) {
    std::vector<Conjunct> options;
    if (!lit.negated || lit.atom.kind() == Atom::Kind::InRe) {
      options.push_back({lit});
    } else if (lit.atom.kind() == Atom::Kind::LenLeq) {
      // not (t <= c)  <=>  -t <= -c-1 over the integers
      options.push_back({Literal{Atom::len_leq(LenTerm::sum({{-1, lit.atom.len()}}), -lit.atom.bound() - 1)}});
    } else {
      const StrTerm& s = lit.atom.lhs();
      const StrTerm& t = lit.atom.rhs();
      options.push_back({Literal{Atom::len_leq(difference(s, t), -1)}});
      options.push_back({Literal{Atom::len_leq(difference(t, s), -1)}});
      // Equal length, first difference after a common prefix P.
      StrTerm p = StrTerm::var(fresh.next("P"));
      StrTerm u = StrTerm::var(fresh.next("U"));
      StrTerm v = StrTerm::var(fresh.next("V"));
      for (char a : sigma)
        for (char b : sigma) {
          if (a == b) continue;
          options.push_back({
              Literal{Atom::word_eq(s, StrTerm::concat({p, StrTerm::lit(Word(1, a)), u}))},
              Literal{Atom::word_eq(t, StrTerm::concat({p, StrTerm::lit(Word(1, b)), v}))},
          });
        }
    }
    acc = product(acc, options);
  }
  return acc;
}

}  // namespace wordeq
