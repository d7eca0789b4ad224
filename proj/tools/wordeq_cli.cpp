// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wordeq/wordeq.h"

namespace {

constexpr int kExitError = 3;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitError;
}

int load(const std::string& path, wq_problem** p) {
  std::string text;
  if (!read_file(path, text)) return error("cannot read " + path);
  if (wq_problem_parse(text.data(), text.size(), p) != WQ_OK) return error(path + ":" + wq_last_error());
  return 0;
}

int report(wq_verdict* v, bool model) {
  int code = 0;
  switch (wq_verdict_kind_of(v)) {
    case WQ_SAT:
      std::cout << "sat\n";
      if (model)
        for (size_t i = 0; i < wq_verdict_model_size(v); ++i) std::cout << wq_verdict_model_entry(v, i) << "\n";
      code = 0;
      break;
    case WQ_UNSAT:
      std::cout << "unsat\n";
      code = 1;
      break;
    case WQ_UNSUPPORTED:
      std::cout << "unsupported: " << wq_verdict_reason(v) << "\n";
      code = 2;
      break;
  }
  wq_verdict_free(v);
  return code;
}

int cmd_solve(const std::string& path) {
  wq_problem* p = nullptr;
  if (int rc = load(path, &p)) return rc;
  wq_verdict* v = nullptr;
  wq_status s = wq_solve(p, &v);
  bool model = wq_problem_wants_model(p) != 0;
  wq_problem_free(p);
  if (s != WQ_OK) return error(wq_last_error());
  return report(v, model);
}

int cmd_oracle(const std::string& path, std::size_t max_len, long long max_int) {
  wq_problem* p = nullptr;
  if (int rc = load(path, &p)) return rc;
  wq_verdict* v = nullptr;
  wq_status s = wq_oracle(p, max_len, max_int, &v);
  wq_problem_free(p);
  if (s != WQ_OK) return error(wq_last_error());
  bool sat = wq_verdict_kind_of(v) == WQ_SAT;
  int code = report(v, true);
  if (!sat) std::cout << "; no model with strings up to " << max_len << " letters and integers up to " << max_int << "\n";
  return code;
}

int cmd_analyze(const std::vector<std::string>& paths, bool tsv) {
  std::vector<const char*> ptrs;
  for (const auto& p : paths) ptrs.push_back(p.c_str());
  char* out = nullptr;
  if (wq_analyze(ptrs.data(), ptrs.size(), tsv ? 1 : 0, &out) != WQ_OK) return error(wq_last_error());
  std::cout << out;
  wq_string_free(out);
  return 0;
}

int cmd_encode(const std::string& path, const std::string& input, long bound) {
  std::string text;
  if (!read_file(path, text)) return error("cannot read " + path);
  char* out = nullptr;
  int found = 0;
  if (wq_encode_2cm(text.c_str(), input.c_str(), bound, &out, &found) != WQ_OK) return error(wq_last_error());
  std::cout << out;
  wq_string_free(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satisfiability for word equations with length and regular constraints"};
  app.require_subcommand(1);

  std::string file;
  auto* solve = app.add_subcommand("solve", "decide a problem file");
  solve->add_option("FILE", file, "problem file")->required();

  std::size_t max_len = 6;
  long long max_int = 10;
  auto* oracle = app.add_subcommand("oracle", "bounded exhaustive search");
  oracle->add_option("FILE", file, "problem file")->required();
  oracle->add_option("--max-len", max_len, "longest string tried")->capture_default_str();
  oracle->add_option("--max-int", max_int, "largest integer tried")->capture_default_str()->check(CLI::NonNegativeNumber);

  std::vector<std::string> paths;
  bool tsv = false;
  auto* analyze = app.add_subcommand("analyze", "count equations already in solved form");
  analyze->add_option("PATHS", paths, "files or directories")->required();
  analyze->add_flag("--tsv", tsv, "one tab-separated line per file");

  std::string input;
  long bound = 0;
  auto* enc = app.add_subcommand("encode-2cm", "encode two-counter machine acceptance");
  enc->add_option("MACHINE", file, "machine description")->required();
  enc->add_option("--input", input, "input word")->required();
  enc->add_option("--check-bound", bound, "run the bounded validity check up to this length")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  if (*solve) return cmd_solve(file);
  if (*oracle) return cmd_oracle(file, max_len, max_int);
  if (*analyze) return cmd_analyze(paths, tsv);
  return cmd_encode(file, input, bound);
}
