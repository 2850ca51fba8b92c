#include "vknot/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace vknot {

int odd_writhe(const GaussDiagram& d) {
  int w = 0;
  for (const Chord& c : d.chords()) {
    if (parity(d, c.id) == Parity::Odd) w += c.sign;
  }
  return w;
}

ArcLabeling arc_labels(const GaussDiagram& d) {
  const std::size_t n = d.size();
  if (n == 0) return {{0}};
  // Arc n-1 ends at endpoint 0, so a traversal from it meets endpoints in
  // index order; a chord counts when its head index is the smaller one.
  int label = 0;
  for (const Chord& c : d.chords()) {
    if (c.head < c.tail) label += c.sign;
  }
  ArcLabeling out;
  out.labels.resize(n);
  out.labels[n - 1] = label;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Endpoint& e = d.at(i);
    label += e.role == Role::Head ? -d.sign(e.chord) : d.sign(e.chord);
    out.labels[i] = label;
  }
  return out;
}

int chord_index(const GaussDiagram& d, const ArcLabeling& labeling, ChordId id) {
  const Chord& c = d.chord(id);
  if (labeling.labels.size() != d.size()) throw std::invalid_argument("labeling does not match diagram");
  const auto& L = labeling.labels;
  const int h = std::max(L[d.prev(c.head)], L[c.head]);
  const int t = std::min(L[d.prev(c.tail)], L[c.tail]);
  return h - t;
}

LaurentPoly odd_writhe_polynomial(const GaussDiagram& d) {
  LaurentPoly w;
  if (d.empty()) return w;
  const ArcLabeling labeling = arc_labels(d);
  for (const Chord& c : d.chords()) {
    if (parity(d, c.id) == Parity::Odd) w.add_term(chord_index(d, labeling, c.id), c.sign);
  }
  return w;
}

}  // namespace vknot
