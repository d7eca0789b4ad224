#pragma once

#include <stdexcept>
#include <string>

namespace wordeq {

/// Base class for every error the toolkit raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnmappedVariable : public Error {
 public:
  explicit UnmappedVariable(const std::string& name)
      : Error("unmapped variable: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnmappedId : public Error {
 public:
  using Error::Error;
};

class LetterOutsideAlphabet : public Error {
 public:
  explicit LetterOutsideAlphabet(char letter)
      : Error(std::string("letter outside alphabet: '") + letter + "'"), letter_(letter) {}
  char letter() const { return letter_; }

 private:
  char letter_;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("automata over different alphabets") {}
};

class UnfixedPartPresent : public Error {
 public:
  UnfixedPartPresent() : Error("parametric word contains an unfixed part") {}
};

class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

class CoefficientOverflow : public Error {
 public:
  CoefficientOverflow() : Error("integer coefficient overflow") {}
};

class MissingTransition : public Error {
 public:
  using Error::Error;
};

class EncodingCapExceeded : public Error {
 public:
  explicit EncodingCapExceeded(std::size_t size)
      : Error("encoding cap exceeded (" + std::to_string(size) + ")"), size_(size) {}
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
};

enum class ParseErrorKind { Syntax, Sort, UndeclaredVariable, LetterOutsideAlphabet, NondeterministicDelta };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, int col, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
        kind_(kind), line_(line), col_(col) {}
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int col_;
};

}  // namespace wordeq
