#include "wordeq/param_word.hpp"

#include <algorithm>
#include <sstream>

#include "wordeq/errors.hpp"

namespace wordeq {

ParamWord::ParamWord(std::vector<Block> blocks) {
  for (auto& b : blocks) {
    if (b.kind == Block::Kind::Const) {
      if (b.word.empty()) continue;
      if (!blocks_.empty() && blocks_.back().kind == Block::Kind::Const) {
        blocks_.back().word += b.word;
        continue;
      }
    }
    blocks_.push_back(std::move(b));
  }
}

bool ParamWord::has_unfixed() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.kind == Block::Kind::Unfixed; });
}

std::vector<ParamId> ParamWord::params() const {
  std::vector<ParamId> out;
  for (const auto& b : blocks_)
    if (b.kind == Block::Kind::Power && std::find(out.begin(), out.end(), b.id) == out.end()) out.push_back(b.id);
  return out;
}

std::vector<PartId> ParamWord::parts() const {
  std::vector<PartId> out;
  for (const auto& b : blocks_)
    if (b.kind == Block::Kind::Unfixed && std::find(out.begin(), out.end(), b.id) == out.end()) out.push_back(b.id);
  return out;
}

std::size_t ParamWord::const_length() const {
  std::size_t n = 0;
  for (const auto& b : blocks_)
    if (b.kind == Block::Kind::Const) n += b.word.size();
  return n;
}

Word instantiate(const ParamWord& pw, const std::map<ParamId, std::int64_t>& params,
                 const std::map<PartId, Word>& parts) {
  Word out;
  for (const auto& b : pw.blocks()) {
    switch (b.kind) {
      case Block::Kind::Const:
        out += b.word;
        break;
      case Block::Kind::Power: {
        auto it = params.find(b.id);
        if (it == params.end()) throw UnmappedId("unmapped parameter i" + std::to_string(b.id));
        for (std::int64_t k = 0; k < it->second; ++k) out += b.word;
        break;
      }
      case Block::Kind::Unfixed: {
        auto it = parts.find(b.id);
        if (it == parts.end()) throw UnmappedId("unmapped unfixed part y" + std::to_string(b.id));
        out += it->second;
        break;
      }
    }
  }
  return out;
}

std::string to_string(const ParamWord& pw) {
  if (pw.blocks().empty()) return "\"\"";
  std::ostringstream os;
  bool first = true;
  for (const auto& b : pw.blocks()) {
    if (!first) os << " . ";
    first = false;
    switch (b.kind) {
      case Block::Kind::Const:
        os << '"' << b.word << '"';
        break;
      case Block::Kind::Power:
        os << "(" << b.word << ")^i" << b.id;
        break;
      case Block::Kind::Unfixed:
        os << "y" << b.id;
        break;
    }
  }
  return os.str();
}

}  // namespace wordeq
