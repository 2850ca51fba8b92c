#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent_poly.hpp"

namespace vknot {

struct FamilySpec;

// Closed-form upper bounds on the forbidden number. Each throws
// std::invalid_argument when its parameter is out of range.

/// c(c-1)/2 + floor((c-1)^2/4); 0 for c <= 1.
int generic_upper_bound(int c);
/// c(c-1)/2 + floor((c-h)^2/4) for a complete diagram; requires 1 <= h <= c.
int complete_upper_bound(int c, int h);
/// floor((3c^2 - 6c + 7)/4) for c >= 2, 0 below.
int global_upper_bound(int c);
/// (p^2 - 1)/2 for the (p,2)-torus knot, p odd >= 3 (2-bridge route).
int torus2_upper_bound(int p);
/// (5p^2 - 4p - 1)/8 for the (p,2)-torus knot from its minimal diagram.
int torus2_minimal_diagram_bound(int p);
/// 3n+1 for odd n, 5n/2 - 1 for even n.
int twist_upper_bound(int n);
/// (lower, upper) for the virtual twist knot with n half twists.
std::pair<int, int> virtual_twist_bounds(int n);

/// ceil(|odd writhe| / 2).
int ow_lower_bound(const GaussDiagram& d);
/// ceil(sum |b_i| / 2) over the odd writhe polynomial coefficients.
int owp_lower_bound(const GaussDiagram& d);

struct BoundItem {
  std::string source;  // e.g. "odd-writhe", "global(c)"
  int value = 0;
  std::string note;    // empty, or a scoping remark such as "diagram-relative"
};

struct BoundReport {
  int crossings = 0;
  int head_run = 0;
  bool complete = false;
  int odd_writhe = 0;
  LaurentPoly owp;
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::vector<BoundItem> lower_items;
  std::vector<BoundItem> upper_items;
  /// Reported anomalies, e.g. an odd writhe that is not even.
  std::vector<std::string> warnings;
  /// Set once a search certificate supports `upper`.
  std::optional<std::string> certificate;
};

/// Collects every applicable lower and upper bound. A diagram that the R1/R2
/// closure reduces to nothing is reported as the unknot (0, 0, exact 0).
/// When `family` is given its family-specific bounds are included too.
/// `known_nontrivial` asserts that d is not the unknot (e.g. a census entry),
/// which is worth a lower bound of 1; a nonempty R1/R2 closure alone is not
/// proof of that.
BoundReport best_bounds(const GaussDiagram& d, const FamilySpec* family = nullptr, bool known_nontrivial = false);

std::string to_json(const BoundReport& r);
/// Aligned key/value text block.
std::string to_text(const BoundReport& r);
/// "n" when exact, otherwise "lower-upper".
std::string interval_string(const BoundReport& r);

}  // namespace vknot
