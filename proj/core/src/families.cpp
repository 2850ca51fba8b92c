#include "vknot/families.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>

#include "vknot/errors.hpp"

namespace vknot {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {Family::Torus2Minimal, "torus2-min"}, {Family::Torus2Bridge, "torus2-bridge"},
    {Family::Twist, "twist"},              {Family::VirtualTwist, "vtwist"},
    {Family::TrefoilRing, "ring"},         {Family::CompleteEnum, "complete"},
};

void require_odd_p(int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd and >= 3, got " + std::to_string(p));
}

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

GaussDiagram build(const std::vector<Endpoint>& eps, const std::vector<std::pair<ChordId, int>>& signs) {
  return GaussDiagram(eps, signs);
}

std::vector<std::pair<ChordId, int>> uniform_signs(int chords, int sign = 1) {
  std::vector<std::pair<ChordId, int>> out;
  for (ChordId id = 1; id <= chords; ++id) out.emplace_back(id, sign);
  return out;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec must look like name:parameter");
  const std::string_view name = text.substr(0, colon);
  const std::string_view param = text.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), value);
  if (ec != std::errc() || ptr != param.data() + param.size() || param.empty()) {
    throw ParseError("family parameter must be an integer: '" + std::string(param) + "'");
  }
  for (const auto& entry : kNames) {
    if (entry.name == name) {
      FamilySpec spec{entry.family, value};
      try {
        validate(spec);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(name) + ": " + e.what());
      }
      return spec;
    }
  }
  throw ParseError("unknown family '" + std::string(name) + "'");
}

std::string to_string(const FamilySpec& spec) {
  for (const auto& entry : kNames) {
    if (entry.family == spec.family) return std::string(entry.name) + ":" + std::to_string(spec.parameter);
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Torus2Minimal:
    case Family::Torus2Bridge:
      require_odd_p(spec.parameter);
      return;
    case Family::Twist:
    case Family::VirtualTwist:
    case Family::TrefoilRing:
      require_positive(spec.parameter);
      return;
    case Family::CompleteEnum:
      if (spec.parameter < 1 || spec.parameter > kCompleteCeiling) {
        throw std::invalid_argument("c must be in 1.." + std::to_string(kCompleteCeiling));
      }
      return;
  }
}

GaussDiagram torus2_minimal(int p) {
  require_odd_p(p);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  std::vector<Endpoint> eps(n);
  for (int i = 0; i < p; ++i) {
    eps[2 * i] = {i + 1, Role::Tail};
    eps[(2 * i + p) % n] = {i + 1, Role::Head};
  }
  return build(eps, uniform_signs(p));
}

GaussDiagram torus2_bridge(int p) {
  require_odd_p(p);
  const int m = p - 1;
  // Under-block of the first overpass, then the same block shifted by m.
  std::vector<ChordId> block1;
  for (int j = 0; j < m / 2; ++j) {
    block1.push_back(2 * m - 2 * j);
    block1.push_back(m - 1 - 2 * j);
  }
  std::vector<Endpoint> eps;
  for (int i = 1; i <= m; ++i) eps.push_back({i, Role::Tail});
  for (ChordId x : block1) eps.push_back({x, Role::Head});
  for (int i = m + 1; i <= 2 * m; ++i) eps.push_back({i, Role::Tail});
  for (ChordId x : block1) eps.push_back({(x - 1 + m) % (2 * m) + 1, Role::Head});
  return build(eps, uniform_signs(2 * m));
}

MoveSequence torus2_bridge_schedule(int p) {
  GaussDiagram d = torus2_bridge(p);
  const int m = p - 1;
  MoveSequence out;

  // Slides the tail of x over neighbouring tails toward its head, then the
  // head over neighbouring heads toward the tail, trying both directions.
  auto isolate = [](const GaussDiagram& start, ChordId x) {
    std::optional<std::pair<GaussDiagram, std::vector<Move>>> best;
    for (int dir : {1, -1}) {
      GaussDiagram g = start;
      std::vector<Move> moves;
      auto step = [&](std::size_t i) { return dir > 0 ? g.next(i) : g.prev(i); };
      auto back = [&](std::size_t i) { return dir > 0 ? g.prev(i) : g.next(i); };
      for (;;) {
        const Endpoint& nb = g.at(step(g.position(x, Role::Tail)));
        if (nb.chord == x || nb.role != Role::Tail) break;
        moves.push_back(Move::fo(x, nb.chord));
        g = apply_move(g, moves.back());
      }
      for (;;) {
        const Endpoint& nb = g.at(back(g.position(x, Role::Head)));
        if (nb.chord == x || nb.role != Role::Head) break;
        moves.push_back(Move::fu(x, nb.chord));
        g = apply_move(g, moves.back());
      }
      if (!g.adjacent(g.position(x, Role::Tail), g.position(x, Role::Head))) continue;
      if (!best || moves.size() < best->second.size()) best.emplace(std::move(g), std::move(moves));
    }
    return best;
  };

  for (int k = 2; k < p; k += 2) {
    for (ChordId x : {k, k + m}) {
      auto r = isolate(d, x);
      if (!r) throw std::logic_error("torus2_bridge_schedule: chord " + std::to_string(x) + " cannot be isolated");
      for (const Move& mv : r->second) out.moves.push_back(mv);
      out.moves.push_back(Move::r1_remove(x));
      d = apply_move(r->first, out.moves.back());
    }
  }
  for (bool progress = true; progress && !d.empty();) {
    progress = false;
    for (const Chord& c : d.chords()) {
      if (d.adjacent(c.tail, c.head)) {
        out.moves.push_back(Move::r1_remove(c.id));
        d = apply_move(d, out.moves.back());
        progress = true;
        break;
      }
    }
  }
  if (!d.empty()) throw std::logic_error("torus2_bridge_schedule: odd chords did not fall away");
  return out;
}

namespace {

// Twist chords 1..n, clasp chords n+1 and n+2; roles alternate O, U, ...
GaussDiagram twist_with(int n, bool keep_first_clasp) {
  require_positive(n);
  const ChordId c1 = n + 1;
  const ChordId c2 = n + 2;
  std::vector<ChordId> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(i);
  if (n % 2 == 0) {
    labels.insert(labels.end(), {c1, c2});
  } else {
    labels.insert(labels.end(), {c2, c1});
  }
  for (int i = n; i >= 1; --i) labels.push_back(i);
  labels.insert(labels.end(), {c2, c1});

  std::vector<Endpoint> eps;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!keep_first_clasp && labels[k] == c1) continue;
    eps.push_back({labels[k], k % 2 == 0 ? Role::Tail : Role::Head});
  }
  const int clasp = n % 2 == 1 ? 1 : -1;
  auto signs = uniform_signs(n);
  if (keep_first_clasp) signs.emplace_back(c1, clasp);
  signs.emplace_back(c2, clasp);
  GaussDiagram g(std::move(eps), signs);
  return keep_first_clasp ? g : relabeled(g);
}

}  // namespace

GaussDiagram twist_knot(int n) { return twist_with(n, true); }

GaussDiagram virtual_twist_knot(int n) { return twist_with(n, false); }

GaussDiagram trefoil_ring(int n) {
  require_positive(n);
  std::vector<Endpoint> eps;
  for (int k = 1; k <= n; ++k) {
    eps.push_back({2 * k - 1, Role::Tail});
    eps.push_back({2 * k, Role::Tail});
    eps.push_back({2 * k - 1, Role::Head});
    eps.push_back({2 * k, Role::Head});
  }
  return build(eps, uniform_signs(2 * n));
}

std::vector<GaussDiagram> enumerate_complete(int c, bool all_signs, int ceiling) {
  if (c < 1 || c > ceiling) {
    throw std::invalid_argument("enumerate_complete: c must be in 1.." + std::to_string(ceiling));
  }
  // A chord diagram is complete exactly when every chord is a diameter of
  // the 2c-gon, so only the tail/head choice and the signs vary.
  const std::size_t n = 2 * static_cast<std::size_t>(c);
  const unsigned patterns = 1u << c;
  const unsigned sign_patterns = all_signs ? patterns : 1u;
  std::set<std::string> seen;
  std::vector<GaussDiagram> out;
  for (unsigned roles = 0; roles < patterns; ++roles) {
    std::vector<Endpoint> eps(n);
    for (int i = 0; i < c; ++i) {
      const bool tail_first = ((roles >> i) & 1u) == 0;
      eps[i] = {i + 1, tail_first ? Role::Tail : Role::Head};
      eps[i + c] = {i + 1, tail_first ? Role::Head : Role::Tail};
    }
    for (unsigned sp = 0; sp < sign_patterns; ++sp) {
      std::vector<std::pair<ChordId, int>> signs;
      for (int i = 0; i < c; ++i) signs.emplace_back(i + 1, ((sp >> i) & 1u) ? -1 : 1);
      GaussDiagram g(eps, signs);
      if (seen.insert(canonical_form(g)).second) out.push_back(relabeled(g));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GaussDiagram& a, const GaussDiagram& b) { return canonical_form(a) < canonical_form(b); });
  return out;
}

GaussDiagram generate(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Torus2Minimal: return torus2_minimal(spec.parameter);
    case Family::Torus2Bridge: return torus2_bridge(spec.parameter);
    case Family::Twist: return twist_knot(spec.parameter);
    case Family::VirtualTwist: return virtual_twist_knot(spec.parameter);
    case Family::TrefoilRing: return trefoil_ring(spec.parameter);
    case Family::CompleteEnum: return enumerate_complete(spec.parameter).front();
  }
  throw std::invalid_argument("unknown family");
}

std::vector<BoundItem> family_lower_bounds(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Torus2Minimal:
    case Family::Torus2Bridge:
    case Family::Twist:
      return {{"nontrivial", 1, "family, classical nontrivial knot"}};
    case Family::VirtualTwist:
      return {{"vtwist(n)", virtual_twist_bounds(spec.parameter).first, "family"}};
    case Family::TrefoilRing:
      return {{"ring(n)", spec.parameter, "family"}};
    default:
      return {};
  }
}

std::vector<BoundItem> family_upper_bounds(const FamilySpec& spec) {
  validate(spec);
  const int v = spec.parameter;
  switch (spec.family) {
    case Family::Torus2Minimal:
    case Family::Torus2Bridge:
      return {{"torus2(p)", torus2_upper_bound(v), "family, 2-bridge route"},
              {"torus2-min(p)", torus2_minimal_diagram_bound(v), "family, minimal diagram"},
              {"global(p)", global_upper_bound(v), "family, crossing number p"}};
    case Family::Twist:
      return {{"twist(n)", twist_upper_bound(v), "family"}, {"global(n+2)", global_upper_bound(v + 2), "family"}};
    case Family::VirtualTwist:
      return {{"vtwist(n)", virtual_twist_bounds(v).second, "family"}};
    case Family::TrefoilRing:
      return {{"ring(n)", v, "family"}};
    case Family::CompleteEnum:
      return {};
  }
  return {};
}

}  // namespace vknot
