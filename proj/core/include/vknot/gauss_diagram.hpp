#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

using ChordId = int;

/// Head = under-passage, Tail = over-passage. Arrows point tail -> head.
enum class Role : std::uint8_t { Head, Tail };

constexpr Role opposite(Role r) noexcept { return r == Role::Head ? Role::Tail : Role::Head; }

enum class Parity : std::uint8_t { Even, Odd };

struct Endpoint {
  ChordId chord = 0;
  Role role = Role::Tail;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Per-chord record kept alongside the endpoint cycle.
struct Chord {
  ChordId id = 0;
  int sign = 1;  // +1 or -1
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Chord&, const Chord&) = default;
};

/// A Gauss diagram: a cyclic sequence of signed, directed chord endpoints.
///
/// Values are immutable once constructed; every rewrite produces a new
/// diagram. Construction validates that each chord appears exactly once as a
/// head and once as a tail and carries a sign of +1 or -1. The empty diagram
/// is the unknot.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Builds a diagram from an endpoint cycle and (chord, sign) pairs.
  /// Throws ParseError when the invariants do not hold.
  GaussDiagram(std::vector<Endpoint> endpoints, std::span<const std::pair<ChordId, int>> signs);

  std::size_t size() const noexcept { return endpoints_.size(); }
  std::size_t chord_count() const noexcept { return chords_.size(); }
  bool empty() const noexcept { return endpoints_.empty(); }

  std::span<const Endpoint> endpoints() const noexcept { return endpoints_; }
  const Endpoint& at(std::size_t i) const { return endpoints_.at(i); }

  /// Chords sorted by id.
  std::span<const Chord> chords() const noexcept { return chords_; }

  bool contains(ChordId id) const noexcept;
  /// Throws std::out_of_range for an unknown chord.
  const Chord& chord(ChordId id) const;
  int sign(ChordId id) const { return chord(id).sign; }
  std::size_t position(ChordId id, Role role) const {
    const Chord& c = chord(id);
    return role == Role::Head ? c.head : c.tail;
  }

  ChordId max_chord_id() const noexcept { return chords_.empty() ? 0 : chords_.back().id; }

  std::size_t next(std::size_t i) const noexcept { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const noexcept { return i == 0 ? size() - 1 : i - 1; }
  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return i != j && (next(i) == j || next(j) == i);
  }

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.endpoints_ == b.endpoints_ && a.chords_ == b.chords_;
  }

 private:
  std::vector<Endpoint> endpoints_;
  std::vector<Chord> chords_;
};

/// Parses tokens of the form (O|U)<label>(+|-), e.g. "O1+O2+U1+U2+".
GaussDiagram parse_gauss_code(std::string_view code);

/// Emits the code starting at `basepoint` (taken modulo the endpoint count).
std::string serialize(const GaussDiagram& d, std::size_t basepoint = 0);

/// Least serialization over all basepoints with chords renumbered 1..n in
/// order of first appearance.
std::string canonical_form(const GaussDiagram& d);

/// Renumbers chords 1..n in order of first appearance from position 0.
GaussDiagram relabeled(const GaussDiagram& d);

/// Rotates the endpoint cycle so that position `start` becomes position 0.
GaussDiagram rotated(const GaussDiagram& d, std::size_t start);

Parity parity(const GaussDiagram& d, ChordId id);

/// Crossing switch: every head/tail exchanged and every sign negated.
GaussDiagram mirror(const GaussDiagram& d);

/// Orientation reversal: the endpoint cycle is read backwards.
GaussDiagram inverse(const GaussDiagram& d);

/// True iff every pair of chords interleaves.
bool is_complete(const GaussDiagram& d);

/// Longest cyclic run of consecutive heads.
std::size_t longest_head_run(const GaussDiagram& d);

/// True iff the endpoints of chords a and b alternate around the circle.
bool chords_interleave(const GaussDiagram& d, ChordId a, ChordId b);

}  // namespace vknot
