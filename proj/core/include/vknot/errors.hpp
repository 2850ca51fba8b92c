#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vknot {

/// Malformed or inconsistent signed Gauss code.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move whose pattern does not match the diagram at the named site.
class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move sequence failed part-way; `index` is the zero-based position of the
/// first move that could not be applied.
class SequenceError : public std::invalid_argument {
 public:
  SequenceError(std::size_t index, const std::string& what)
      : std::invalid_argument("move " + std::to_string(index + 1) + ": " + what),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace vknot
