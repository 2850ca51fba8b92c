#pragma once

#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent_poly.hpp"

namespace vknot {

/// One integer per arc; arc i runs from endpoint i to endpoint i+1.
///
/// The label of an arc is the signed count of chords whose head is met before
/// their tail when the circle is traversed once starting inside that arc.
/// An empty diagram has a single arc labelled 0.
struct ArcLabeling {
  std::vector<int> labels;
};

/// Sum of the signs of the odd chords.
int odd_writhe(const GaussDiagram& d);

ArcLabeling arc_labels(const GaussDiagram& d);

/// max(head-side labels) - min(tail-side labels) for one chord.
int chord_index(const GaussDiagram& d, const ArcLabeling& labeling, ChordId id);

/// Sum over odd chords of sign * t^index.
LaurentPoly odd_writhe_polynomial(const GaussDiagram& d);

}  // namespace vknot
