#include "wordeq/lengths.hpp"

#include <sstream>

#include "wordeq/errors.hpp"

namespace wordeq {

std::string to_string(const LinVar& v) {
  switch (v.kind) {
    case LinVar::Kind::LenOf:
      return "len(" + v.name + ")";
    case LinVar::Kind::ParamOf:
      return "i" + std::to_string(v.id);
    case LinVar::Kind::PartLenOf:
      return "len(y" + std::to_string(v.id) + ")";
    case LinVar::Kind::FreshAP:
      return "k" + std::to_string(v.id);
    case LinVar::Kind::ProblemInt:
      return v.name;
  }
  return "?";
}

std::string to_string(const LinRow& row) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : row.coeffs) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << to_string(v);
  }
  if (first) os << "0";
  os << (row.rel == LinRow::Rel::Eq ? " = " : " <= ") << row.bound;
  return os.str();
}

bool satisfies(const LinSystem& sys, const LiaModel& m) {
  for (const auto& row : sys.rows) {
    __int128 lhs = 0;
    for (const auto& [v, c] : row.coeffs) {
      auto it = m.find(v);
      std::int64_t val = it == m.end() ? 0 : it->second;
      if (val < 0) return false;
      lhs += static_cast<__int128>(c) * val;
    }
    bool ok = row.rel == LinRow::Rel::Eq ? lhs == row.bound : lhs <= row.bound;
    if (!ok) return false;
  }
  for (const auto& [v, val] : m)
    if (val < 0) return false;
  return true;
}

namespace {

void add_coeff(LinRow& row, const LinVar& v, std::int64_t c) {
  std::int64_t& slot = row.coeffs[v];
  if (__builtin_add_overflow(slot, c, &slot)) throw CoefficientOverflow();
  if (slot == 0) row.coeffs.erase(v);
}

// Accumulates scale * len(t) into row; constants move into `constant`.
void add_str_len(LinRow& row, const StrTerm& t, std::int64_t scale, std::int64_t& constant) {
  switch (t.kind()) {
    case StrTerm::Kind::Lit: {
      std::int64_t part;
      if (__builtin_mul_overflow(scale, static_cast<std::int64_t>(t.text().size()), &part) ||
          __builtin_add_overflow(constant, part, &constant))
        throw CoefficientOverflow();
      break;
    }
    case StrTerm::Kind::Var:
      add_coeff(row, LinVar::len_of(t.text()), scale);
      break;
    case StrTerm::Kind::Concat:
      for (const auto& p : t.parts()) add_str_len(row, p, scale, constant);
      break;
  }
}

void add_len_term(LinRow& row, const LenTerm& t, std::int64_t scale, std::int64_t& constant) {
  switch (t.kind()) {
    case LenTerm::Kind::Const: {
      std::int64_t part;
      if (__builtin_mul_overflow(scale, t.value(), &part) || __builtin_add_overflow(constant, part, &constant))
        throw CoefficientOverflow();
      break;
    }
    case LenTerm::Kind::IntVar:
      add_coeff(row, LinVar::problem_int(t.name()), scale);
      break;
    case LenTerm::Kind::Len:
      add_str_len(row, t.str(), scale, constant);
      break;
    case LenTerm::Kind::Sum:
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::int64_t s;
        if (__builtin_mul_overflow(scale, t.coeff(i), &s)) throw CoefficientOverflow();
        add_len_term(row, t.term(i), s, constant);
      }
      break;
  }
}

}  // namespace

LinSystem implied_length_constraints(const SolvedForm& sf) {
  LinSystem sys;
  for (const auto& [x, pw] : sf.equations) {
    LinRow row;
    row.rel = LinRow::Rel::Eq;
    row.coeffs[LinVar::len_of(x)] = 1;
    std::int64_t constant = 0;
    for (const auto& b : pw.blocks()) {
      switch (b.kind) {
        case Block::Kind::Const:
          constant += static_cast<std::int64_t>(b.word.size());
          break;
        case Block::Kind::Power:
          add_coeff(row, LinVar::param_of(b.id), -static_cast<std::int64_t>(b.word.size()));
          break;
        case Block::Kind::Unfixed:
          add_coeff(row, LinVar::part_len_of(b.id), -1);
          break;
      }
    }
    row.bound = constant;
    sys.add(std::move(row));
  }
  return sys;
}

LinRow translate_len_atom(const Atom& a) {
  LinRow row;
  row.rel = LinRow::Rel::Le;
  std::int64_t constant = 0;
  add_len_term(row, a.len(), 1, constant);
  if (__builtin_sub_overflow(a.bound(), constant, &row.bound)) throw CoefficientOverflow();
  return row;
}

std::vector<LinSystem> upset_to_rows(const LinVar& x, const UPSet& s, int& next_fresh) {
  std::vector<LinSystem> out;
  for (const auto& p : s.progressions()) {
    LinRow row;
    row.rel = LinRow::Rel::Eq;
    row.coeffs[x] = 1;
    if (p.period != 0) row.coeffs[LinVar::fresh_ap(next_fresh++)] = -p.period;
    row.bound = p.offset;
    LinSystem sys;
    sys.add(std::move(row));
    out.push_back(std::move(sys));
  }
  return out;
}

}  // namespace wordeq
