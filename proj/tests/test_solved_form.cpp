#include "doctest.h"
#include "support/properties.hpp"

using namespace wordeq;
using namespace wqtest;

namespace {

const Alphabet kAb = "ab";

Atom atom_eq(StrTerm l, StrTerm r) { return Atom::word_eq(std::move(l), std::move(r)); }
Atom commutation_ab() { return atom_eq(StrTerm::concat({L("ab"), V("X")}), StrTerm::concat({V("X"), L("ba")})); }

}  // namespace

TEST_CASE("instantiate") {
  ParamWord w({Block::power("ab", 0), Block::constant("a")});
  CHECK(instantiate(w, {{0, 1}}, {}) == "aba");
  CHECK(instantiate(w, {{0, 0}}, {}) == "a");
  ParamWord parts({Block::constant("a"), Block::unfixed(0), Block::constant("b"), Block::unfixed(1), Block::constant("a")});
  CHECK(instantiate(parts, {}, {{0, ""}, {1, ""}}) == "aba");
  CHECK(instantiate(parts, {}, {{0, "bb"}, {1, "a"}}) == "abbbaa");
  CHECK_THROWS_AS(instantiate(w, {}, {}), UnmappedId);
}

TEST_CASE("parametric words merge constants") {
  ParamWord w({Block::constant("a"), Block::constant(""), Block::constant("b"), Block::power("a", 0)});
  REQUIRE(w.blocks().size() == 2);
  CHECK(w.blocks()[0] == Block::constant("ab"));
  CHECK(w.const_length() == 2);
  CHECK_FALSE(w.has_unfixed());
}

TEST_CASE("is_solved_form") {
  CHECK(is_solved_form({atom_eq(V("X"), L("ab"))}, {"X"}));
  CHECK_FALSE(is_solved_form({atom_eq(V("X"), StrTerm::concat({L("ab"), V("Y")})), atom_eq(V("Y"), L("a"))}, {"X", "Y"}));
  Atom def = atom_eq(V("X"), StrTerm::concat({L("a"), V("Y"), L("b"), V("Z"), L("a")}));
  CHECK(is_solved_form({def}, {"X"}));
  CHECK_FALSE(is_solved_form({def}, {"X", "Y", "Z"}));
  CHECK_FALSE(is_solved_form({atom_eq(V("X"), L("a")), atom_eq(V("X"), L("b"))}, {"X"}));
}

TEST_CASE("commutation gives a single power form") {
  auto res = to_solved_form({commutation_ab()});
  REQUIRE(res.status == SolvedFormResult::Status::Solved);
  REQUIRE(res.forms.size() == 1);
  CHECK(res.forms[0].equations.at("X") == ParamWord({Block::power("ab", 0), Block::constant("a")}));
  CHECK(is_solved_form(render(res.forms[0]), {"X"}));
}

TEST_CASE("two-variable system with equal powers") {
  auto res = to_solved_form({atom_eq(StrTerm::concat({V("X"), L("a")}), StrTerm::concat({L("a"), V("Y")})),
                             atom_eq(StrTerm::concat({V("Y"), L("a")}), StrTerm::concat({V("X"), L("a")}))});
  REQUIRE(res.status == SolvedFormResult::Status::Solved);
  REQUIRE(res.forms.size() == 1);
  const auto& f = res.forms[0];
  REQUIRE(f.equations.at("X").blocks().size() == 1);
  CHECK(f.equations.at("X").blocks()[0].kind == Block::Kind::Power);
  CHECK(f.equations.at("X").blocks()[0].word == "a");
  CHECK(f.equations.at("X") == f.equations.at("Y"));
}

TEST_CASE("quadratic equation is outside the fragment") {
  auto res = to_solved_form({atom_eq(StrTerm::concat({V("X"), L("ab"), V("Y")}), StrTerm::concat({V("Y"), L("ba"), V("X")}))});
  CHECK(res.status == SolvedFormResult::Status::NoSolvedFormInFragment);
  CHECK(res.forms.empty());
}

TEST_CASE("constant clash is unsatisfiable") {
  CHECK(to_solved_form({atom_eq(L("ab"), L("ba"))}).status == SolvedFormResult::Status::Unsat);
  CHECK(to_solved_form({atom_eq(StrTerm::concat({L("a"), V("X")}), StrTerm::concat({L("b"), V("X")}))}).status ==
        SolvedFormResult::Status::Unsat);
}

TEST_CASE("commutation with a definition re-parameterizes") {
  std::vector<Atom> eqs{commutation_ab(), atom_eq(V("X"), StrTerm::concat({L("ab"), V("Y")}))};
  auto res = to_solved_form(eqs);
  REQUIRE(res.status == SolvedFormResult::Status::Solved);
  REQUIRE(res.forms.size() == 1);
  const auto& f = res.forms[0];
  CHECK(f.equations.at("X") == ParamWord({Block::constant("ab"), Block::power("ab", 0), Block::constant("a")}));
  CHECK(f.equations.at("Y") == ParamWord({Block::power("ab", 0), Block::constant("a")}));
  // Solution sets agree up to length 9.
  auto solutions = all_solutions(eqs, kAb, 9);
  std::set<std::pair<Word, Word>> from_oracle, from_form;
  for (const auto& a : solutions) from_oracle.insert({a.strs.at("X"), a.strs.at("Y")});
  for (std::int64_t j = 0; j <= 4; ++j) {
    Word x = instantiate(f.equations.at("X"), {{0, j}}, {});
    Word y = instantiate(f.equations.at("Y"), {{0, j}}, {});
    if (x.size() <= 9 && y.size() <= 9) from_form.insert({x, y});
  }
  CHECK(from_oracle == from_form);
  CHECK(from_form.size() == 4);
}

TEST_CASE("free variables become unfixed parts") {
  auto res = to_solved_form({atom_eq(V("X"), StrTerm::concat({L("a"), V("Y"), L("b"), V("Z"), L("a")}))});
  REQUIRE(res.status == SolvedFormResult::Status::Solved);
  REQUIRE(res.forms.size() == 1);
  const auto& f = res.forms[0];
  CHECK(f.equations.at("X") == ParamWord({Block::constant("a"), Block::unfixed(0), Block::constant("b"),
                                           Block::unfixed(1), Block::constant("a")}));
  CHECK(f.equations.at("Y") == ParamWord({Block::unfixed(0)}));
  CHECK(f.equations.at("Z") == ParamWord({Block::unfixed(1)}));
  CHECK(f.parts().size() == 2);
}

TEST_CASE("rewriting caps are enforced") {
  RewriteLimits tight;
  tight.max_nodes = 3;
  auto res = to_solved_form({atom_eq(StrTerm::concat({V("X"), L("ab")}), StrTerm::concat({L("ab"), V("Y")}))}, tight);
  CHECK(res.status == SolvedFormResult::Status::NoSolvedFormInFragment);
}

TEST_CASE("solved form languages") {
  SolvedForm f;
  f.equations["X"] = ParamWord({Block::power("ab", 0), Block::constant("a")});
  f.equations["C"] = ParamWord({Block::constant("ab")});
  f.equations["A"] = ParamWord({Block::power("a", 1)});
  Dfa x = solved_form_language(f, "X", kAb);
  Dfa odd = regex_to_dfa(Regex::concat({Regex::star(Regex::lit("ab")), Regex::lit("a")}), kAb);
  Dfa c = solved_form_language(f, "C", kAb);
  Dfa a = solved_form_language(f, "A", kAb);
  for (const auto& w : words_up_to(kAb, 8)) {
    CHECK(x.accepts(w) == odd.accepts(w));
    CHECK(c.accepts(w) == (w == "ab"));
    CHECK(a.accepts(w) == (w.find('b') == Word::npos));
  }
  CHECK_THROWS_AS(solved_form_language(f, "W", kAb), UnmappedVariable);
  SolvedForm g;
  g.equations["X"] = ParamWord({Block::unfixed(0)});
  CHECK_THROWS_AS(solved_form_language(g, "X", kAb), UnfixedPartPresent);
}

TEST_CASE("each parameter keeps one base length") {
  // Exponents stay plain parameters: no form scales a parameter by
  // different base lengths.
  for (const auto& c : solved_form_corpus(41, 200, kAb)) {
    std::map<ParamId, std::size_t> base_len;
    for (const auto& [x, pw] : c.form.equations)
      for (const auto& b : pw.blocks())
        if (b.kind == Block::Kind::Power) {
          auto [it, fresh] = base_len.emplace(b.id, b.word.size());
          CHECK(it->second == b.word.size());
        }
  }
}

TEST_CASE("forms are sound for their equations") {
  auto corpus = solved_form_corpus(42, 60, kAb);
  PropertyResult r = implied_constraints_sound_and_complete(corpus, kAb, 43);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("forms cover every short solution") {
  PropertyResult r = solved_forms_complete(44, 80, kAb, 7);
  INFO(r.summary());
  CHECK(r.ok());
}
