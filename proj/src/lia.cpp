#include "wordeq/lia.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "wordeq/errors.hpp"

namespace wordeq {

namespace {

using i64 = std::int64_t;
using Vec = std::vector<i64>;

i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// a mod^ m: the residue of a in (-m/2, m/2].
i64 mod_hat(i64 a, i64 m) {
  i64 r = a - mul(m, floor_div(a, m));
  if (2 * r > m) r -= m;
  return r;
}

// sum(a_i x_i) + c  (= 0 | >= 0)
struct Constraint {
  Vec a;
  i64 c = 0;
  bool eq = false;
};

struct Problem {
  int n = 0;
  std::vector<Constraint> cs;
};

i64 eval(const Constraint& k, const Vec& vals, int skip) {
  i64 s = k.c;
  for (std::size_t i = 0; i < k.a.size(); ++i)
    if (static_cast<int>(i) != skip && k.a[i] != 0) s = add(s, mul(k.a[i], vals[i]));
  return s;
}

class Omega {
 public:
  explicit Omega(long max_nodes) : max_nodes_(max_nodes) {}

  std::optional<Vec> solve(Problem p) {
    if (++nodes_ > max_nodes_) throw ResourceExhausted("integer arithmetic node budget exhausted");
    if (!normalize(p)) return std::nullopt;
    for (std::size_t e = 0; e < p.cs.size(); ++e)
      if (p.cs[e].eq) return eliminate_equality(std::move(p), e);
    if (p.cs.empty()) return Vec(p.n, 0);
    return eliminate_variable(std::move(p));
  }

 private:
  // Divides by coefficient gcds, tightens inequalities, merges duplicates,
  // and turns opposite inequality pairs into equalities. False on conflict.
  static bool normalize(Problem& p) {
    std::map<Vec, i64> ineq, eq;
    for (auto& k : p.cs) {
      i64 g = 0;
      for (i64 x : k.a) g = std::gcd(g, std::llabs(x));
      if (g == 0) {
        if (k.eq ? k.c != 0 : k.c < 0) return false;
        continue;
      }
      if (k.eq) {
        if (k.c % g != 0) return false;
        for (i64& x : k.a) x /= g;
        k.c /= g;
        auto lead = std::find_if(k.a.begin(), k.a.end(), [](i64 x) { return x != 0; });
        if (*lead < 0) {
          for (i64& x : k.a) x = -x;
          k.c = -k.c;
        }
        auto [it, fresh] = eq.emplace(k.a, k.c);
        if (!fresh && it->second != k.c) return false;
      } else {
        for (i64& x : k.a) x /= g;
        k.c = floor_div(k.c, g);
        auto [it, fresh] = ineq.emplace(k.a, k.c);
        if (!fresh) it->second = std::min(it->second, k.c);
      }
    }
    std::vector<Constraint> out;
    for (auto it = ineq.begin(); it != ineq.end(); ++it) {
      Vec neg = it->first;
      for (i64& x : neg) x = -x;
      auto jt = ineq.find(neg);
      if (jt != ineq.end()) {
        i64 sum = add(it->second, jt->second);
        if (sum < 0) return false;
        if (sum == 0) {
          if (it->first < neg) out.push_back({it->first, it->second, true});
          continue;
        }
      }
      out.push_back({it->first, it->second, false});
    }
    for (auto& [a, c] : eq) out.push_back({a, c, true});
    p.cs = std::move(out);
    return true;
  }

  static void substitute(Problem& p, int k, const Vec& def, i64 def_c) {
    for (auto& f : p.cs) {
      i64 fk = f.a[k];
      if (fk == 0) continue;
      for (int i = 0; i < p.n; ++i)
        if (def[i] != 0) f.a[i] = add(f.a[i], mul(fk, def[i]));
      f.a[k] = 0;
      f.c = add(f.c, mul(fk, def_c));
    }
  }

  std::optional<Vec> eliminate_equality(Problem p, std::size_t e) {
    const Constraint eqn = p.cs[e];
    int k = -1;
    for (int i = 0; i < p.n; ++i)
      if (std::llabs(eqn.a[i]) == 1) {
        k = i;
        break;
      }
    Vec def(p.n, 0);
    i64 def_c = 0;
    if (k >= 0) {
      // x_k = -a_k * (rest + c)
      i64 s = eqn.a[k];
      for (int i = 0; i < p.n; ++i)
        if (i != k) def[i] = -mul(s, eqn.a[i]);
      def_c = -mul(s, eqn.c);
      p.cs.erase(p.cs.begin() + static_cast<std::ptrdiff_t>(e));
    } else {
      for (int i = 0; i < p.n; ++i)
        if (eqn.a[i] != 0 && (k < 0 || std::llabs(eqn.a[i]) < std::llabs(eqn.a[k]))) k = i;
      i64 m = add(std::llabs(eqn.a[k]), 1);
      i64 s = eqn.a[k] > 0 ? 1 : -1;
      int sigma = p.n++;
      for (auto& f : p.cs) f.a.push_back(0);
      def.assign(p.n, 0);
      // x_k = sign(a_k) * (sum_{i != k} (a_i mod^ m) x_i + (c mod^ m) - m sigma)
      for (int i = 0; i < sigma; ++i)
        if (i != k) def[i] = mul(s, mod_hat(eqn.a[i], m));
      def[sigma] = -mul(s, m);
      def_c = mul(s, mod_hat(eqn.c, m));
    }
    substitute(p, k, def, def_c);
    int n = p.n;
    auto child = solve(std::move(p));
    if (!child) return std::nullopt;
    Vec vals = std::move(*child);
    vals.resize(std::max<std::size_t>(vals.size(), n), 0);
    i64 x = def_c;
    for (int i = 0; i < n; ++i)
      if (def[i] != 0) x = add(x, mul(def[i], vals[i]));
    vals[k] = x;
    return vals;
  }

  static int choose_variable(const Problem& p) {
    int best = -1;
    long best_score = 0;
    for (int x = 0; x < p.n; ++x) {
      long lowers = 0, uppers = 0;
      bool exact = true;
      bool lower_unit = true, upper_unit = true;
      for (const auto& k : p.cs) {
        if (k.a[x] > 0) {
          ++lowers;
          lower_unit = lower_unit && k.a[x] == 1;
        } else if (k.a[x] < 0) {
          ++uppers;
          upper_unit = upper_unit && k.a[x] == -1;
        }
      }
      if (lowers + uppers == 0) continue;
      exact = lower_unit || upper_unit;
      long score = (lowers == 0 || uppers == 0) ? -1 : lowers * uppers + (exact ? 0 : 1000000);
      if (best < 0 || score < best_score) {
        best = x;
        best_score = score;
      }
    }
    return best;
  }

  std::optional<Vec> eliminate_variable(Problem p) {
    int x = choose_variable(p);
    std::vector<Constraint> lowers, uppers, rest;
    for (const auto& k : p.cs) {
      if (k.a[x] > 0)
        lowers.push_back(k);
      else if (k.a[x] < 0)
        uppers.push_back(k);
      else
        rest.push_back(k);
    }
    auto extend = [&](std::optional<Vec> child) -> std::optional<Vec> {
      if (!child) return std::nullopt;
      Vec vals = std::move(*child);
      vals.resize(std::max<std::size_t>(vals.size(), p.n), 0);
      std::optional<i64> lo, hi;
      for (const auto& k : lowers) {
        i64 v = ceil_div(-eval(k, vals, x), k.a[x]);
        lo = lo ? std::max(*lo, v) : v;
      }
      for (const auto& k : uppers) {
        i64 v = floor_div(eval(k, vals, x), -k.a[x]);
        hi = hi ? std::min(*hi, v) : v;
      }
      if (lo && hi && *lo > *hi) throw std::logic_error("omega: empty integer range during back-substitution");
      vals[x] = lo ? *lo : (hi ? *hi : 0);
      return vals;
    };

    if (lowers.empty() || uppers.empty()) return extend(solve({p.n, rest}));

    bool exact = true;
    i64 amax = 0;
    for (const auto& u : uppers) amax = std::max(amax, -u.a[x]);
    Problem real{p.n, rest}, dark{p.n, rest};
    for (const auto& l : lowers)
      for (const auto& u : uppers) {
        i64 b = l.a[x], a = -u.a[x];
        if (a != 1 && b != 1) exact = false;
        Constraint comb;
        comb.a.assign(p.n, 0);
        for (int i = 0; i < p.n; ++i) comb.a[i] = add(mul(a, l.a[i]), mul(b, u.a[i]));
        comb.a[x] = 0;
        comb.c = add(mul(a, l.c), mul(b, u.c));
        real.cs.push_back(comb);
        comb.c = add(comb.c, -mul(a - 1, b - 1));
        dark.cs.push_back(std::move(comb));
      }
    if (exact) return extend(solve(std::move(real)));
    if (!solve(std::move(real))) return std::nullopt;
    if (auto d = extend(solve(std::move(dark)))) return d;
    for (const auto& l : lowers) {
      i64 b = l.a[x];
      i64 imax = floor_div(add(mul(amax, b), -add(amax, b)), amax);
      for (i64 i = 0; i <= imax; ++i) {
        Problem splinter = p;
        splinter.cs.push_back({l.a, add(l.c, -i), true});
        if (auto s = solve(std::move(splinter))) return s;
      }
    }
    return std::nullopt;
  }

  long max_nodes_;
  long nodes_ = 0;
};

}  // namespace

std::optional<LiaModel> lia_sat(const LinSystem& sys, const LiaLimits& limits) {
  std::map<LinVar, int> index;
  std::vector<LinVar> vars;
  for (const auto& row : sys.rows)
    for (const auto& [v, c] : row.coeffs)
      if (index.emplace(v, static_cast<int>(vars.size())).second) vars.push_back(v);

  Problem p;
  p.n = static_cast<int>(vars.size());
  for (const auto& row : sys.rows) {
    Constraint k;
    k.a.assign(p.n, 0);
    for (const auto& [v, c] : row.coeffs) k.a[index[v]] = row.rel == LinRow::Rel::Le ? -c : c;
    if (row.rel == LinRow::Rel::Le) {
      k.c = row.bound;
    } else {
      k.c = -row.bound;
      k.eq = true;
    }
    p.cs.push_back(std::move(k));
  }
  for (int i = 0; i < p.n; ++i) {
    Constraint nonneg;
    nonneg.a.assign(p.n, 0);
    nonneg.a[i] = 1;
    p.cs.push_back(std::move(nonneg));
  }

  Omega omega(limits.max_nodes);
  auto vals = omega.solve(std::move(p));
  if (!vals) return std::nullopt;
  LiaModel model;
  for (std::size_t i = 0; i < vars.size(); ++i) model[vars[i]] = (*vals)[i];
  if (!satisfies(sys, model)) throw std::logic_error("integer model failed verification");
  return model;
}

}  // namespace wordeq
