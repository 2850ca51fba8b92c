#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

enum class MoveKind : std::uint8_t { R1Remove, R1Add, R2Remove, R2Add, R3, FO, FU, Detour };

std::string_view to_string(MoveKind k) noexcept;

/// Forbidden moves charged by one application of `k` (a detour counts two).
constexpr int forbidden_cost(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::FO:
    case MoveKind::FU:
      return 1;
    case MoveKind::Detour:
      return 2;
    default:
      return 0;
  }
}

constexpr bool is_forbidden(MoveKind k) noexcept { return forbidden_cost(k) > 0; }

/// One rewrite together with its site.
///
/// Removals, forbidden moves and R3 name existing chords. Additions name the
/// new chord labels and where they go:
///  - R1Add inserts the pair (T_a, H_a), or (H_a, T_a) when `head_first`, in
///    front of position `gap`.
///  - R2Add inserts (T_a, T_b) in front of position `gap`, then inserts the
///    head block in front of position `gap2` of the resulting cycle; the block
///    is (H_a, H_b), or (H_b, H_a) when `head_first`. Chord a gets `sign`,
///    chord b gets -`sign`.
struct Move {
  MoveKind kind = MoveKind::R1Remove;
  std::array<ChordId, 3> chords{};
  std::size_t gap = 0;
  std::size_t gap2 = 0;
  int sign = 1;
  bool head_first = false;

  static Move r1_remove(ChordId a) { return {MoveKind::R1Remove, {a, 0, 0}}; }
  static Move r2_remove(ChordId a, ChordId b) { return {MoveKind::R2Remove, {a, b, 0}}; }
  static Move r3(ChordId a, ChordId b, ChordId c) { return {MoveKind::R3, {a, b, c}}; }
  static Move fo(ChordId a, ChordId b) { return {MoveKind::FO, {a, b, 0}}; }
  static Move fu(ChordId a, ChordId b) { return {MoveKind::FU, {a, b, 0}}; }
  /// Swaps the head of `a` with the adjacent tail of `b`.
  static Move detour(ChordId a, ChordId b) { return {MoveKind::Detour, {a, b, 0}}; }
  static Move r1_add(ChordId a, std::size_t gap, int sign, bool head_first) {
    return {MoveKind::R1Add, {a, 0, 0}, gap, 0, sign, head_first};
  }
  static Move r2_add(ChordId a, ChordId b, std::size_t tails_gap, std::size_t heads_gap, int sign,
                     bool reversed_heads) {
    return {MoveKind::R2Add, {a, b, 0}, tails_gap, heads_gap, sign, reversed_heads};
  }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Ordered certificate of rewrites.
struct MoveSequence {
  std::vector<Move> moves;

  int forbidden_cost() const noexcept;
  std::size_t size() const noexcept { return moves.size(); }
  bool empty() const noexcept { return moves.empty(); }

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

class MoveKindSet {
 public:
  constexpr MoveKindSet() = default;
  constexpr MoveKindSet(std::initializer_list<MoveKind> kinds) {
    for (MoveKind k : kinds) insert(k);
  }

  constexpr void insert(MoveKind k) noexcept { bits_ |= bit(k); }
  constexpr bool contains(MoveKind k) const noexcept { return (bits_ & bit(k)) != 0; }

  static constexpr MoveKindSet forbidden() { return {MoveKind::FO, MoveKind::FU}; }
  static constexpr MoveKindSet removals() { return {MoveKind::R1Remove, MoveKind::R2Remove}; }
  /// Everything except the addition moves.
  static constexpr MoveKindSet non_additions() {
    return {MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3,
            MoveKind::FO,       MoveKind::FU,       MoveKind::Detour};
  }
  static constexpr MoveKindSet reidemeister() {
    return {MoveKind::R1Remove, MoveKind::R1Add, MoveKind::R2Remove, MoveKind::R2Add, MoveKind::R3};
  }

 private:
  static constexpr std::uint16_t bit(MoveKind k) noexcept {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(k));
  }
  std::uint16_t bits_ = 0;
};

/// Applies `m`, throwing MoveError when the site does not match its pattern.
GaussDiagram apply_move(const GaussDiagram& d, const Move& m);

/// Every applicable move of the allowed kinds. Additions are listed only when
/// allowed and only while the result stays within `crossing_ceiling` chords.
std::vector<Move> enumerate_moves(const GaussDiagram& d, MoveKindSet allow,
                                  std::size_t crossing_ceiling = std::numeric_limits<std::size_t>::max());

struct SequenceResult {
  GaussDiagram diagram;
  int forbidden_cost = 0;
};

/// Left fold of apply_move. Throws SequenceError naming the failing index.
SequenceResult apply_sequence(const GaussDiagram& d, const MoveSequence& s);

/// Text notation: FO(a,b), FU(a,b), FD(a,b), R1(a), R2(a,b), R3(a,b,c),
/// R1A(a,gap,OU|UO,+|-), R2A(a,b,gap,gap2,+|-,S|R).
std::string to_notation(const Move& m);
std::string to_notation(const MoveSequence& s);
Move parse_move(std::string_view term);
/// Comma-separated terms; whitespace between terms is ignored. Throws ParseError.
MoveSequence parse_move_sequence(std::string_view text);

}  // namespace vknot
