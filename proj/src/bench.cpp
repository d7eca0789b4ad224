#include "wordeq/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "wordeq/errors.hpp"
#include "wordeq/frontend.hpp"

namespace wordeq {

namespace fs = std::filesystem;

bool is_definitional(const Atom& eq) {
  if (eq.kind() != Atom::Kind::WordEq || !eq.lhs().is_var()) return false;
  std::set<std::string> rhs;
  collect_vars(eq.rhs(), rhs);
  return !rhs.count(eq.lhs().text());
}

namespace {

void collect_equations(const Formula& f, std::vector<Atom>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    if (f.atom().kind() == Atom::Kind::WordEq) out.push_back(f.atom());
    return;
  }
  for (const auto& c : f.children()) collect_equations(c, out);
}

}  // namespace

std::vector<Atom> equations_of(const std::string& text) {
  Problem p = parse_problem(text);
  std::vector<Atom> out;
  for (const auto& a : p.assertions) collect_equations(a, out);
  return out;
}

CorpusStats analyze_corpus(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  CorpusStats stats;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> inner;
      for (const auto& entry : fs::directory_iterator(p, ec))
        if (entry.is_regular_file()) inner.push_back(entry.path().string());
      std::sort(inner.begin(), inner.end());
      files.insert(files.end(), inner.begin(), inner.end());
    } else {
      files.push_back(p);
    }
  }
  for (const auto& path : files) {
    FileStats fsn;
    fsn.path = path;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fsn.error = "cannot read file";
    } else {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        for (const auto& eq : equations_of(buf.str())) {
          ++fsn.total;
          if (is_definitional(eq)) ++fsn.solved;
        }
      } catch (const ParseError& e) {
        fsn.error = e.what();
        fsn.total = fsn.solved = 0;
      }
    }
    if (fsn.error.empty()) {
      ++stats.files;
      stats.equations_total += fsn.total;
      stats.equations_solved_form += fsn.solved;
    } else {
      ++stats.skipped;
    }
    stats.per_file.push_back(std::move(fsn));
  }
  return stats;
}

std::string format_stats(const CorpusStats& stats, bool tsv) {
  char line[512];
  std::string out;
  if (tsv) {
    for (const auto& f : stats.per_file) {
      if (!f.error.empty()) continue;
      std::snprintf(line, sizeof line, "%s\t%zu\t%zu\t%.4f\n", f.path.c_str(), f.total, f.solved, f.ratio());
      out += line;
    }
    return out;
  }
  std::size_t width = 4;
  for (const auto& f : stats.per_file) width = std::max(width, f.path.size());
  auto row = [&](const std::string& name, const std::string& a, const std::string& b, const std::string& c) {
    std::snprintf(line, sizeof line, "%-*s  %10s  %10s  %8s\n", static_cast<int>(width), name.c_str(), a.c_str(),
                  b.c_str(), c.c_str());
    out += line;
  };
  auto ratio = [](double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r);
    return std::string(buf);
  };
  row("file", "equations", "solved", "ratio");
  for (const auto& f : stats.per_file) {
    if (f.error.empty())
      row(f.path, std::to_string(f.total), std::to_string(f.solved), ratio(f.ratio()));
    else
      row(f.path, "-", "-", "skipped");
  }
  row("TOTAL", std::to_string(stats.equations_total), std::to_string(stats.equations_solved_form), ratio(stats.ratio()));
  std::snprintf(line, sizeof line, "files analyzed: %zu, skipped: %zu\n", stats.files, stats.skipped);
  out += line;
  return out;
}

std::string generate_problem(std::uint64_t seed, const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  const Alphabet sigma = "ab";
  std::uniform_int_distribution<std::size_t> count(options.min_equations, options.max_equations);
  std::size_t n = count(rng);
  std::size_t nvars = 6;
  std::bernoulli_distribution definitional(options.solved_fraction);
  std::uniform_int_distribution<std::size_t> pick_var(0, nvars - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> shape(0, 2);

  auto var = [&](std::size_t i) { return StrTerm::var("X" + std::to_string(i)); };
  auto lit = [&] {
    std::uniform_int_distribution<std::size_t> len(1, 3);
    Word w;
    for (std::size_t k = len(rng); k > 0; --k) w.push_back(sigma[static_cast<std::size_t>(coin(rng))]);
    return StrTerm::lit(w);
  };
  // Concatenation of literals and variables other than `avoid`.
  auto term = [&](std::size_t avoid) {
    std::vector<StrTerm> parts;
    std::uniform_int_distribution<int> len(1, 3);
    for (int k = len(rng); k > 0; --k) {
      std::size_t v = pick_var(rng);
      if (coin(rng) == 0 || v == avoid)
        parts.push_back(lit());
      else
        parts.push_back(var(v));
    }
    return StrTerm::concat(std::move(parts));
  };

  Problem p;
  p.alphabet = sigma;
  for (std::size_t i = 0; i < nvars; ++i) p.decls.emplace_back("X" + std::to_string(i), Sort::String);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = pick_var(rng);
    Atom eq;
    if (definitional(rng)) {
      eq = Atom::word_eq(var(x), term(x));
    } else {
      switch (shape(rng)) {
        case 0:  // X = ... X ...
          eq = Atom::word_eq(var(x), StrTerm::concat({lit(), var(x)}));
          break;
        case 1:  // u X = X v
          eq = Atom::word_eq(StrTerm::concat({lit(), var(x)}), StrTerm::concat({var(x), lit()}));
          break;
        default:  // constant left side
          eq = Atom::word_eq(lit(), term(nvars));
          break;
      }
    }
    p.assertions.push_back(Formula::atom(eq));
  }
  p.commands.push_back(Command::CheckSat);
  return print_problem(p);
}

std::vector<std::string> generate_corpus(const std::string& dir, const CorpusOptions& options) {
  fs::create_directories(dir);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < options.files; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "p%05zu.smt", i);
    std::string path = (fs::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << generate_problem(options.seed * 1000003u + i, options);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace wordeq
