#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "vknot/bounds.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/moves.hpp"

namespace vknot {

struct SearchConfig {
  int max_forbidden = 0;
  /// Most chords an intermediate diagram may carry; defaults to the initial
  /// count + 2. Only matters when additions are enabled.
  std::optional<std::size_t> crossing_ceiling;
  std::size_t max_states = 2'000'000;
  bool allow_additions = false;
  bool allow_r3 = false;
  /// Keep a visited set keyed by canonical_form. Turning it off only costs work.
  bool dedup = true;
};

enum class SearchStatus : std::uint8_t { Unknotted, ExhaustedBudget, ExhaustedStates };

std::string_view to_string(SearchStatus s) noexcept;

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedBudget;
  MoveSequence certificate;  // meaningful only when Unknotted
  int forbidden_used = 0;
  std::size_t states_visited = 0;
};

/// Greedy closure under R1/R2 removals; the result admits neither.
GaussDiagram simplify(const GaussDiagram& d);

/// Iterative deepening on the number of forbidden moves. Level k is the
/// breadth-first closure under free moves of everything reachable with k
/// forbidden moves, so the first certificate found has minimum cost relative
/// to the enabled free moves and the crossing ceiling. Detours are never
/// chosen; an FO and an FU are charged separately instead.
SearchOutcome unknotting_search(const GaussDiagram& d, const SearchConfig& cfg);

/// best_bounds followed by a search with budget equal to the upper bound.
/// A certificate tightens the upper bound; meeting the lower bound makes the
/// report exact.
BoundReport certify_forbidden_number(const GaussDiagram& d, const SearchConfig& cfg,
                                     const FamilySpec* family = nullptr, bool known_nontrivial = false);

struct VerifyResult {
  bool valid_unknotting = false;
  int forbidden_cost = 0;
  /// Diagram after the last applied move (before the failing one, if any).
  GaussDiagram final;
  std::optional<std::size_t> failed_index;
  std::string error;
};

/// Replays `s` on a copy of `d`; never throws for inapplicable moves.
VerifyResult verify_sequence(const GaussDiagram& d, const MoveSequence& s);

}  // namespace vknot
