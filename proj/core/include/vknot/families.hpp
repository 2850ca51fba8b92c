#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/bounds.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/moves.hpp"

namespace vknot {

enum class Family : std::uint8_t { Torus2Minimal, Torus2Bridge, Twist, VirtualTwist, TrefoilRing, CompleteEnum };

struct FamilySpec {
  Family family = Family::TrefoilRing;
  int parameter = 1;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses "torus2-min:p", "torus2-bridge:p", "twist:n", "vtwist:n", "ring:n",
/// "complete:c". Throws ParseError.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
/// Throws std::invalid_argument when the parameter is out of range.
void validate(const FamilySpec& spec);

/// Minimal (p,2)-torus diagram: p positive chords, heads and tails alternating.
GaussDiagram torus2_minimal(int p);

/// (p,2)-torus knot in 2-bridge position: 2(p-1) positive chords, chords
/// 1..p-1 on the first overpass and p..2(p-1) on the second.
GaussDiagram torus2_bridge(int p);

/// Unknotting certificate for torus2_bridge(p) that spends (p^2-1)/2
/// forbidden moves: even chords are slid free and removed, then the odd
/// chords fall away by R1.
MoveSequence torus2_bridge_schedule(int p);

/// Twist knot with n half twists: chords 1..n in the twist region, chords
/// n+1 and n+2 in the clasp. twist_knot(1) is the trefoil, twist_knot(2) the
/// figure-eight.
GaussDiagram twist_knot(int n);

/// twist_knot(n) with clasp chord n+1 made virtual.
GaussDiagram virtual_twist_knot(int n);

/// n virtual trefoils in a ring: blocks O(2k-1)+ O(2k)+ U(2k-1)+ U(2k)+.
GaussDiagram trefoil_ring(int n);

inline constexpr int kCompleteCeiling = 7;

/// Every complete diagram with c chords up to rotation and relabeling.
/// Signs are all positive unless `all_signs` is set.
std::vector<GaussDiagram> enumerate_complete(int c, bool all_signs = false, int ceiling = kCompleteCeiling);

/// Generates the family member named by `spec` (complete:c yields the first
/// enumerated diagram; use enumerate_complete for the full list).
GaussDiagram generate(const FamilySpec& spec);

/// Family-specific bounds that hold for the knot type the spec generates.
std::vector<BoundItem> family_lower_bounds(const FamilySpec& spec);
std::vector<BoundItem> family_upper_bounds(const FamilySpec& spec);

}  // namespace vknot
