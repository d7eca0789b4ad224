#pragma once

#include <map>
#include <string>
#include <vector>

#include "wordeq/ast.hpp"

namespace wordeq {

using ParamId = int;
using PartId = int;

/// One block of a parametric word: a constant, a power u^i of a nonempty
/// constant with an integer parameter, or an unfixed part.
struct Block {
  enum class Kind { Const, Power, Unfixed };
  Kind kind = Kind::Const;
  Word word;  // constant text, or the base of a power
  int id = 0;  // parameter id (Power) or part id (Unfixed)

  static Block constant(Word w) { return {Kind::Const, std::move(w), 0}; }
  static Block power(Word base, ParamId p) { return {Kind::Power, std::move(base), p}; }
  static Block unfixed(PartId y) { return {Kind::Unfixed, {}, y}; }
  bool operator==(const Block&) const = default;
  auto operator<=>(const Block&) const = default;
};

/// Word with integer parameters and unfixed parts. Adjacent constants are
/// merged and empty constants dropped on construction.
class ParamWord {
 public:
  ParamWord() = default;
  explicit ParamWord(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool has_unfixed() const;
  std::vector<ParamId> params() const;
  std::vector<PartId> parts() const;
  /// Sum of the lengths of unparameterized constants.
  std::size_t const_length() const;

  bool operator==(const ParamWord&) const = default;
  auto operator<=>(const ParamWord&) const = default;

 private:
  std::vector<Block> blocks_;
};

Word instantiate(const ParamWord& pw, const std::map<ParamId, std::int64_t>& params,
                 const std::map<PartId, Word>& parts);

std::string to_string(const ParamWord& pw);

}  // namespace wordeq
