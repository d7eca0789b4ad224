#include "wordeq/ast.hpp"

namespace wordeq {

StrTerm StrTerm::lit(Word word) {
  StrTerm t;
  t.kind_ = Kind::Lit;
  t.text_ = std::move(word);
  return t;
}

StrTerm StrTerm::var(std::string name) {
  StrTerm t;
  t.kind_ = Kind::Var;
  t.text_ = std::move(name);
  return t;
}

StrTerm StrTerm::concat(std::vector<StrTerm> parts) {
  if (parts.empty()) return lit("");
  if (parts.size() == 1) return std::move(parts.front());
  StrTerm t;
  t.kind_ = Kind::Concat;
  t.parts_ = std::move(parts);
  return t;
}

LenTerm LenTerm::constant(std::int64_t value) {
  LenTerm t;
  t.kind_ = Kind::Const;
  t.value_ = value;
  return t;
}

LenTerm LenTerm::int_var(std::string name) {
  LenTerm t;
  t.kind_ = Kind::IntVar;
  t.name_ = std::move(name);
  return t;
}

LenTerm LenTerm::len(StrTerm s) {
  LenTerm t;
  t.kind_ = Kind::Len;
  t.str_ = std::move(s);
  return t;
}

LenTerm LenTerm::sum(std::vector<std::pair<std::int64_t, LenTerm>> terms) {
  LenTerm t;
  t.kind_ = Kind::Sum;
  for (auto& [c, sub] : terms) {
    if (sub.kind_ == Kind::Sum) {
      for (std::size_t i = 0; i < sub.terms_.size(); ++i) {
        t.coeffs_.push_back(c * sub.coeffs_[i]);
        t.terms_.push_back(sub.terms_[i]);
      }
    } else {
      t.coeffs_.push_back(c);
      t.terms_.push_back(std::move(sub));
    }
  }
  if (t.terms_.empty()) return constant(0);
  return t;
}

Regex Regex::lit(Word word) {
  Regex r;
  r.kind_ = Kind::Lit;
  r.word_ = std::move(word);
  return r;
}

Regex Regex::epsilon() { return Regex(); }

Regex Regex::concat(std::vector<Regex> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return std::move(parts.front());
  Regex r;
  r.kind_ = Kind::Concat;
  r.children_ = std::move(parts);
  return r;
}

Regex Regex::alt(std::vector<Regex> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Regex r;
  r.kind_ = Kind::Union;
  r.children_ = std::move(parts);
  return r;
}

Regex Regex::star(Regex inner) {
  Regex r;
  r.kind_ = Kind::Star;
  r.children_.push_back(std::move(inner));
  return r;
}

Atom Atom::word_eq(StrTerm lhs, StrTerm rhs) {
  Atom a;
  a.kind_ = Kind::WordEq;
  a.lhs_ = std::move(lhs);
  a.rhs_ = std::move(rhs);
  return a;
}

Atom Atom::len_leq(LenTerm t, std::int64_t bound) {
  Atom a;
  a.kind_ = Kind::LenLeq;
  a.len_ = std::move(t);
  a.bound_ = bound;
  return a;
}

Atom Atom::in_re(StrTerm t, Regex re) {
  Atom a;
  a.kind_ = Kind::InRe;
  a.lhs_ = std::move(t);
  a.re_ = std::move(re);
  return a;
}

Formula Formula::atom(Atom a) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.atom_ = std::move(a);
  return f;
}

Formula Formula::conj(std::vector<Formula> children) {
  if (children.size() == 1) return std::move(children.front());
  Formula f;
  f.kind_ = Kind::And;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::disj(std::vector<Formula> children) {
  if (children.size() == 1) return std::move(children.front());
  Formula f;
  f.kind_ = Kind::Or;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::negate(Formula inner) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(inner));
  return f;
}

void collect_vars(const StrTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case StrTerm::Kind::Lit:
      break;
    case StrTerm::Kind::Var:
      out.insert(t.text());
      break;
    case StrTerm::Kind::Concat:
      for (const auto& p : t.parts()) collect_vars(p, out);
      break;
  }
}

namespace {

void collect_len_vars(const LenTerm& t, VarSets& out) {
  switch (t.kind()) {
    case LenTerm::Kind::Const:
      break;
    case LenTerm::Kind::IntVar:
      out.ints.insert(t.name());
      break;
    case LenTerm::Kind::Len:
      collect_vars(t.str(), out.strs);
      break;
    case LenTerm::Kind::Sum:
      for (std::size_t i = 0; i < t.size(); ++i) collect_len_vars(t.term(i), out);
      break;
  }
}

void collect_atom_vars(const Atom& a, VarSets& out) {
  switch (a.kind()) {
    case Atom::Kind::WordEq:
      collect_vars(a.lhs(), out.strs);
      collect_vars(a.rhs(), out.strs);
      break;
    case Atom::Kind::LenLeq:
      collect_len_vars(a.len(), out);
      break;
    case Atom::Kind::InRe:
      collect_vars(a.lhs(), out.strs);
      break;
  }
}

void collect_formula_vars(const Formula& phi, VarSets& out) {
  if (phi.kind() == Formula::Kind::Atom) {
    collect_atom_vars(phi.atom(), out);
    return;
  }
  for (const auto& c : phi.children()) collect_formula_vars(c, out);
}

}  // namespace

VarSets free_vars(const Formula& phi) {
  VarSets out;
  collect_formula_vars(phi, out);
  return out;
}

VarSets free_vars(const Atom& atom) {
  VarSets out;
  collect_atom_vars(atom, out);
  return out;
}

std::string FreshNames::next(const std::string& hint) { return "!" + hint + std::to_string(counter_++); }

}  // namespace wordeq
