#include "wordeq/wordeq.h"

#include <cstring>
#include <string>
#include <vector>

#include "wordeq/bench.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/frontend.hpp"
#include "wordeq/oracle.hpp"
#include "wordeq/solver.hpp"
#include "wordeq/twocounter.hpp"

struct wq_problem {
  wordeq::Problem problem;
};

struct wq_verdict {
  wq_verdict_kind kind = WQ_UNSAT;
  std::string reason;
  std::vector<std::string> entries;
};

namespace {

thread_local std::string last_error;

wq_status fail(wq_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <typename F>
wq_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const wordeq::ParseError& e) {
    return fail(WQ_ERR_PARSE, e.what());
  } catch (const wordeq::ResourceExhausted& e) {
    return fail(WQ_ERR_RESOURCE, e.what());
  } catch (const wordeq::CoefficientOverflow& e) {
    return fail(WQ_ERR_RESOURCE, e.what());
  } catch (const wordeq::EncodingCapExceeded& e) {
    return fail(WQ_ERR_RESOURCE, e.what());
  } catch (const wordeq::Error& e) {
    return fail(WQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WQ_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(WQ_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> model_lines(const wordeq::Assignment& a) {
  std::vector<std::string> out;
  std::string text = wordeq::print_model(a);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* wq_version(void) { return "1.0.0"; }

const char* wq_last_error(void) { return last_error.c_str(); }

wq_status wq_problem_parse(const char* text, size_t len, wq_problem** out) {
  if (!text || !out) return fail(WQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* p = new wq_problem{wordeq::parse_problem(std::string_view(text, len))};
    *out = p;
    return WQ_OK;
  });
}

void wq_problem_free(wq_problem* p) { delete p; }

int wq_problem_wants_model(const wq_problem* p) { return p && p->problem.wants_model() ? 1 : 0; }

wq_status wq_solve(const wq_problem* p, wq_verdict** out) {
  if (!p || !out) return fail(WQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    wordeq::Verdict v = wordeq::check_sat(p->problem.formula(), p->problem.alphabet);
    auto* r = new wq_verdict;
    switch (v.kind) {
      case wordeq::Verdict::Kind::Sat:
        r->kind = WQ_SAT;
        r->entries = model_lines(v.model);
        break;
      case wordeq::Verdict::Kind::Unsat:
        r->kind = WQ_UNSAT;
        break;
      case wordeq::Verdict::Kind::Unsupported:
        r->kind = WQ_UNSUPPORTED;
        r->reason = wordeq::to_string(v.reason);
        break;
    }
    *out = r;
    return WQ_OK;
  });
}

wq_status wq_oracle(const wq_problem* p, size_t max_len, long long max_int, wq_verdict** out) {
  if (!p || !out || max_int < 0) return fail(WQ_ERR_INVALID_ARGUMENT, "invalid argument");
  *out = nullptr;
  return guarded([&] {
    auto v = wordeq::brute_force_sat(p->problem.formula(), p->problem.alphabet, max_len, max_int);
    auto* r = new wq_verdict;
    if (v.model) {
      r->kind = WQ_SAT;
      r->entries = model_lines(*v.model);
    }
    *out = r;
    return WQ_OK;
  });
}

wq_verdict_kind wq_verdict_kind_of(const wq_verdict* v) { return v ? v->kind : WQ_UNSAT; }

const char* wq_verdict_reason(const wq_verdict* v) { return v ? v->reason.c_str() : ""; }

size_t wq_verdict_model_size(const wq_verdict* v) { return v ? v->entries.size() : 0; }

const char* wq_verdict_model_entry(const wq_verdict* v, size_t i) {
  if (!v || i >= v->entries.size()) return nullptr;
  return v->entries[i].c_str();
}

void wq_verdict_free(wq_verdict* v) { delete v; }

wq_status wq_analyze(const char* const* paths, size_t n, int tsv, char** out) {
  if (!out || (n > 0 && !paths)) return fail(WQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> ps;
    for (size_t i = 0; i < n; ++i) {
      if (!paths[i]) return fail(WQ_ERR_INVALID_ARGUMENT, "null path");
      ps.emplace_back(paths[i]);
    }
    auto stats = wordeq::analyze_corpus(ps);
    *out = dup(wordeq::format_stats(stats, tsv != 0));
    return WQ_OK;
  });
}

wq_status wq_encode_2cm(const char* machine_text, const char* input, long check_bound, char** out, int* found) {
  if (!machine_text || !input || !out) return fail(WQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (found) *found = 0;
  return guarded([&] {
    auto m = wordeq::parse_2cm(machine_text);
    std::string w = input;
    for (char c : w)
      if (m.input_alphabet.find(c) == std::string::npos)
        return fail(WQ_ERR_INVALID_ARGUMENT, std::string("input letter outside machine alphabet: '") + c + "'");
    auto sentence = wordeq::encode(m, w);
    wordeq::HistoryAlphabet alpha(m, w);
    std::string text;
    for (char c : alpha.id_letters()) {
      auto key = alpha.decode(c);
      text += "; " + std::string(1, c) + " = state " + key->first + ", head " + std::to_string(key->second) + "\n";
    }
    text += "(set-alphabet \"" + sentence.sigma + "\")\n";
    text += wordeq::print_sentence(sentence) + "\n";
    if (check_bound > 0) {
      auto r = wordeq::bounded_validity_check(sentence, static_cast<std::size_t>(check_bound));
      if (r.counterexample) {
        text += "counterexample: \"" + *r.counterexample + "\"\n";
        if (found) *found = 1;
      } else {
        text += "no counterexample up to " + std::to_string(check_bound) + "\n";
      }
    }
    *out = dup(text);
    return WQ_OK;
  });
}

void wq_string_free(char* s) { delete[] s; }

}  // extern "C"
