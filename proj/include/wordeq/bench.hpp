#pragma once

// Counting equations already in solved form across a corpus of problem files.

#include <cstdint>
#include <string>
#include <vector>

#include "wordeq/ast.hpp"

namespace wordeq {

struct FileStats {
  std::string path;
  std::size_t total = 0;
  std::size_t solved = 0;
  std::string error;  // nonempty when the file was skipped

  double ratio() const { return total == 0 ? 0.0 : static_cast<double>(solved) / static_cast<double>(total); }
};

struct CorpusStats {
  std::size_t files = 0;  // files analyzed successfully
  std::size_t skipped = 0;
  std::size_t equations_total = 0;
  std::size_t equations_solved_form = 0;
  std::vector<FileStats> per_file;

  double ratio() const {
    return equations_total == 0 ? 0.0
                                : static_cast<double>(equations_solved_form) / static_cast<double>(equations_total);
  }
};

/// `X = t` with X a variable not occurring in t.
bool is_definitional(const Atom& eq);

/// Word equations of one problem text, in assertion order.
std::vector<Atom> equations_of(const std::string& text);

/// Directories contribute their regular files, sorted by path. Unreadable
/// or unparseable files are recorded and skipped.
CorpusStats analyze_corpus(const std::vector<std::string>& paths);

/// Fixed-column table, or one tab-separated line per file when `tsv`.
std::string format_stats(const CorpusStats& stats, bool tsv);

struct CorpusOptions {
  std::size_t files = 1000;
  double solved_fraction = 0.8;
  std::size_t min_equations = 30;
  std::size_t max_equations = 50;
  std::uint64_t seed = 1;
};

/// Problem text whose equations are definitional with probability
/// `solved_fraction` each.
std::string generate_problem(std::uint64_t seed, const CorpusOptions& options);

/// Writes options.files problem files into `dir`; returns their paths.
std::vector<std::string> generate_corpus(const std::string& dir, const CorpusOptions& options);

}  // namespace wordeq
