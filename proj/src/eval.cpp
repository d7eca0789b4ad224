#include "wordeq/automata.hpp"
#include "wordeq/errors.hpp"

namespace wordeq {

Word eval_str(const StrTerm& t, const Assignment& a) {
  switch (t.kind()) {
    case StrTerm::Kind::Lit:
      return t.text();
    case StrTerm::Kind::Var: {
      auto it = a.strs.find(t.text());
      if (it == a.strs.end()) throw UnmappedVariable(t.text());
      return it->second;
    }
    case StrTerm::Kind::Concat: {
      Word out;
      for (const auto& p : t.parts()) out += eval_str(p, a);
      return out;
    }
  }
  return {};
}

std::int64_t eval_len(const LenTerm& t, const Assignment& a) {
  switch (t.kind()) {
    case LenTerm::Kind::Const:
      return t.value();
    case LenTerm::Kind::IntVar: {
      auto it = a.ints.find(t.name());
      if (it == a.ints.end()) throw UnmappedVariable(t.name());
      return it->second;
    }
    case LenTerm::Kind::Len:
      return static_cast<std::int64_t>(eval_str(t.str(), a).size());
    case LenTerm::Kind::Sum: {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < t.size(); ++i) total += t.coeff(i) * eval_len(t.term(i), a);
      return total;
    }
  }
  return 0;
}

bool eval_atom(const Atom& atom, const Assignment& a) {
  switch (atom.kind()) {
    case Atom::Kind::WordEq:
      return eval_str(atom.lhs(), a) == eval_str(atom.rhs(), a);
    case Atom::Kind::LenLeq:
      return eval_len(atom.len(), a) <= atom.bound();
    case Atom::Kind::InRe:
      return regex_to_nfa(atom.re()).accepts(eval_str(atom.lhs(), a));
  }
  return false;
}

bool eval_formula(const Formula& phi, const Assignment& a) {
  switch (phi.kind()) {
    case Formula::Kind::Atom:
      return eval_atom(phi.atom(), a);
    case Formula::Kind::And:
      for (const auto& c : phi.children())
        if (!eval_formula(c, a)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : phi.children())
        if (eval_formula(c, a)) return true;
      return false;
    case Formula::Kind::Not:
      return !eval_formula(phi.children().front(), a);
  }
  return false;
}

bool eval_conjunct(const Conjunct& c, const Assignment& a) {
  for (const auto& lit : c)
    if (eval_atom(lit.atom, a) == lit.negated) return false;
  return true;
}

}  // namespace wordeq
