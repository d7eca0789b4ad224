#include "wordeq/oracle.hpp"

#include <stdexcept>

#include "wordeq/errors.hpp"

namespace wordeq {

namespace {

enum class Tri { False, True, Unknown };

Tri tri_not(Tri t) {
  if (t == Tri::Unknown) return t;
  return t == Tri::True ? Tri::False : Tri::True;
}

// Partial assignment: strings and integers assigned so far.
class Search {
 public:
  Search(const Formula& phi, const Alphabet& sigma, std::size_t len_bound, std::int64_t int_bound, long max_nodes)
      : phi_(phi), sigma_(sigma), len_bound_(len_bound), int_bound_(int_bound), max_nodes_(max_nodes) {
    VarSets vs = free_vars(phi);
    strs_.assign(vs.strs.begin(), vs.strs.end());
    ints_.assign(vs.ints.begin(), vs.ints.end());
  }

  std::optional<Assignment> run() {
    if (dfs(0)) return a_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t k) {
    if (++nodes_ > max_nodes_) throw ResourceExhausted("oracle node budget exhausted");
    Tri t = eval(phi_);
    if (t == Tri::False) return false;
    if (k == strs_.size() + ints_.size()) {
      if (!eval_formula(phi_, a_)) throw std::logic_error("oracle model fails evaluation");
      return true;
    }
    if (k < strs_.size()) {
      const std::string& x = strs_[k];
      Word cur;
      for (std::size_t len = 0; len <= len_bound_; ++len)
        if (words(x, cur, len, k)) return true;
      a_.strs.erase(x);
      pending_.reset();
      return false;
    }
    const std::string& n = ints_[k - strs_.size()];
    for (std::int64_t v = 0; v <= int_bound_; ++v) {
      a_.ints[n] = v;
      if (dfs(k + 1)) return true;
    }
    a_.ints.erase(n);
    return false;
  }

  // Enumerates words of length `len` letter by letter; the partial word is
  // visible to eval() as a known prefix followed by unknown letters.
  bool words(const std::string& x, Word& cur, std::size_t len, std::size_t k) {
    if (++nodes_ > max_nodes_) throw ResourceExhausted("oracle node budget exhausted");
    a_.strs.erase(x);
    pending_ = Pending{x, cur, len};
    if (eval(phi_) == Tri::False) return false;
    if (cur.size() == len) {
      pending_.reset();
      a_.strs[x] = cur;
      if (dfs(k + 1)) return true;
      return false;
    }
    for (char c : sigma_) {
      cur.push_back(c);
      bool found = words(x, cur, len, k);
      cur.pop_back();
      if (found) return true;
    }
    return false;
  }

  Tri eval(const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        return eval_atom_partial(f.atom());
      case Formula::Kind::Not:
        return tri_not(eval(f.children().front()));
      case Formula::Kind::And: {
        Tri acc = Tri::True;
        for (const auto& c : f.children()) {
          Tri t = eval(c);
          if (t == Tri::False) return t;
          if (t == Tri::Unknown) acc = t;
        }
        return acc;
      }
      case Formula::Kind::Or: {
        Tri acc = Tri::False;
        for (const auto& c : f.children()) {
          Tri t = eval(c);
          if (t == Tri::True) return t;
          if (t == Tri::Unknown) acc = t;
        }
        return acc;
      }
    }
    return Tri::Unknown;
  }

  bool bound(const Atom& atom) const {
    VarSets vs = free_vars(atom);
    for (const auto& x : vs.strs)
      if (!a_.strs.count(x)) return false;
    for (const auto& n : vs.ints)
      if (!a_.ints.count(n)) return false;
    return true;
  }

  static constexpr int kUnknownLetter = -1;
  static constexpr int kGap = -2;

  // Cells of t: a letter, an unknown letter of the variable being enumerated,
  // or a gap of unknown length for an unassigned variable.
  void flatten(const StrTerm& t, std::vector<int>& out, std::size_t& free_vars) const {
    switch (t.kind()) {
      case StrTerm::Kind::Lit:
        for (char c : t.text()) out.push_back(static_cast<unsigned char>(c));
        break;
      case StrTerm::Kind::Var: {
        auto it = a_.strs.find(t.text());
        if (it != a_.strs.end()) {
          for (char c : it->second) out.push_back(static_cast<unsigned char>(c));
        } else if (pending_ && pending_->name == t.text()) {
          for (char c : pending_->prefix) out.push_back(static_cast<unsigned char>(c));
          for (std::size_t i = pending_->prefix.size(); i < pending_->length; ++i) out.push_back(kUnknownLetter);
        } else {
          out.push_back(kGap);
          ++free_vars;
        }
        break;
      }
      case StrTerm::Kind::Concat:
        for (const auto& p : t.parts()) flatten(p, out, free_vars);
        break;
    }
  }

  Tri eval_atom_partial(const Atom& atom) const {
    if (bound(atom)) return eval_atom(atom, a_) ? Tri::True : Tri::False;
    switch (atom.kind()) {
      case Atom::Kind::WordEq: {
        std::vector<int> l, r;
        std::size_t fl = 0, fr = 0;
        flatten(atom.lhs(), l, fl);
        flatten(atom.rhs(), r, fr);
        for (std::size_t i = 0; i < l.size() && i < r.size() && l[i] != kGap && r[i] != kGap; ++i)
          if (l[i] >= 0 && r[i] >= 0 && l[i] != r[i]) return Tri::False;
        for (std::size_t i = 0; i < l.size() && i < r.size(); ++i) {
          int x = l[l.size() - 1 - i], y = r[r.size() - 1 - i];
          if (x == kGap || y == kGap) break;
          if (x >= 0 && y >= 0 && x != y) return Tri::False;
        }
        // Length interval check: known letters give a minimum length.
        std::int64_t lmin = static_cast<std::int64_t>(l.size() - fl), rmin = static_cast<std::int64_t>(r.size() - fr);
        std::int64_t lmax = lmin + static_cast<std::int64_t>(fl * len_bound_);
        std::int64_t rmax = rmin + static_cast<std::int64_t>(fr * len_bound_);
        if (lmin > rmax || rmin > lmax) return Tri::False;
        return Tri::Unknown;
      }
      case Atom::Kind::LenLeq: {
        auto [lo, hi] = range(atom.len());
        if (lo > atom.bound()) return Tri::False;
        if (hi <= atom.bound()) return Tri::True;
        return Tri::Unknown;
      }
      case Atom::Kind::InRe:
        return Tri::Unknown;
    }
    return Tri::Unknown;
  }

  std::pair<std::int64_t, std::int64_t> str_range(const StrTerm& t) const {
    std::vector<int> cells;
    std::size_t free = 0;
    flatten(t, cells, free);
    auto fixed = static_cast<std::int64_t>(cells.size() - free);
    return {fixed, fixed + static_cast<std::int64_t>(free * len_bound_)};
  }

  std::pair<std::int64_t, std::int64_t> range(const LenTerm& t) const {
    switch (t.kind()) {
      case LenTerm::Kind::Const:
        return {t.value(), t.value()};
      case LenTerm::Kind::IntVar: {
        auto it = a_.ints.find(t.name());
        if (it != a_.ints.end()) return {it->second, it->second};
        return {0, int_bound_};
      }
      case LenTerm::Kind::Len:
        return str_range(t.str());
      case LenTerm::Kind::Sum: {
        std::int64_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
          auto [a, b] = range(t.term(i));
          std::int64_t c = t.coeff(i);
          if (c >= 0) {
            lo += c * a;
            hi += c * b;
          } else {
            lo += c * b;
            hi += c * a;
          }
        }
        return {lo, hi};
      }
    }
    return {0, 0};
  }

  const Formula& phi_;
  const Alphabet& sigma_;
  std::size_t len_bound_;
  std::int64_t int_bound_;
  long max_nodes_;
  long nodes_ = 0;
  std::vector<std::string> strs_, ints_;
  Assignment a_;
  struct Pending {
    std::string name;
    Word prefix;
    std::size_t length = 0;
  };
  std::optional<Pending> pending_;
};

}  // namespace

BoundedVerdict brute_force_sat(const Formula& phi, const Alphabet& sigma, std::size_t len_bound,
                               std::int64_t int_bound, long max_nodes) {
  BoundedVerdict v;
  v.len_bound = len_bound;
  v.int_bound = int_bound;
  v.model = Search(phi, sigma, len_bound, int_bound, max_nodes).run();
  return v;
}

}  // namespace wordeq
