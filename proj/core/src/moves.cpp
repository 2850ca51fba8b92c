#include "vknot/moves.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "vknot/errors.hpp"

namespace vknot {

std::string_view to_string(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::R1Remove: return "R1";
    case MoveKind::R1Add: return "R1A";
    case MoveKind::R2Remove: return "R2";
    case MoveKind::R2Add: return "R2A";
    case MoveKind::R3: return "R3";
    case MoveKind::FO: return "FO";
    case MoveKind::FU: return "FU";
    case MoveKind::Detour: return "FD";
  }
  return "?";
}

int MoveSequence::forbidden_cost() const noexcept {
  int total = 0;
  for (const Move& m : moves) total += vknot::forbidden_cost(m.kind);
  return total;
}

namespace {

std::vector<std::pair<ChordId, int>> sign_list(const GaussDiagram& d) {
  std::vector<std::pair<ChordId, int>> out;
  out.reserve(d.chord_count() + 2);
  for (const Chord& c : d.chords()) out.emplace_back(c.id, c.sign);
  return out;
}

GaussDiagram with_endpoints(const GaussDiagram& d, std::vector<Endpoint> eps) {
  return GaussDiagram(std::move(eps), sign_list(d));
}

GaussDiagram swapped(const GaussDiagram& d, std::size_t i, std::size_t j) {
  std::vector<Endpoint> eps(d.endpoints().begin(), d.endpoints().end());
  std::swap(eps[i], eps[j]);
  return with_endpoints(d, std::move(eps));
}

GaussDiagram without(const GaussDiagram& d, std::initializer_list<ChordId> ids) {
  std::vector<Endpoint> eps;
  eps.reserve(d.size());
  for (const Endpoint& e : d.endpoints()) {
    if (std::find(ids.begin(), ids.end(), e.chord) == ids.end()) eps.push_back(e);
  }
  std::vector<std::pair<ChordId, int>> signs;
  for (const Chord& c : d.chords()) {
    if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) signs.emplace_back(c.id, c.sign);
  }
  return GaussDiagram(std::move(eps), signs);
}

const Chord& require_chord(const GaussDiagram& d, ChordId id, MoveKind k) {
  if (!d.contains(id)) {
    throw MoveError(std::string(to_string(k)) + ": unknown chord " + std::to_string(id));
  }
  return d.chord(id);
}

void require_distinct(ChordId a, ChordId b, MoveKind k) {
  if (a == b) throw MoveError(std::string(to_string(k)) + ": chords must be distinct");
}

bool r2_pattern(const GaussDiagram& d, const Chord& a, const Chord& b) {
  return a.sign == -b.sign && d.adjacent(a.tail, b.tail) && d.adjacent(a.head, b.head);
}

// Three adjacent endpoint pairs forming an R3 triangle. The "top" strand
// carries two tails, the "bottom" strand two heads, the "middle" strand one of
// each.
struct Triangle {
  std::size_t top[2];
  std::size_t mid[2];
  std::size_t bottom[2];
};

// Each pair is (i, next(i)) so that pair[0] is met first on the circle.
std::optional<Triangle> find_triangle(const GaussDiagram& d, ChordId x, ChordId y, ChordId z) {
  if (x == y || y == z || x == z) return std::nullopt;
  const ChordId ids[3] = {x, y, z};
  std::vector<std::size_t> pos;
  for (ChordId id : ids) {
    pos.push_back(d.chord(id).tail);
    pos.push_back(d.chord(id).head);
  }
  auto in_triple = [&](std::size_t p) { return std::find(pos.begin(), pos.end(), p) != pos.end(); };

  // Candidate pairs (p, next(p)) joining endpoints of two different chords.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p : pos) {
    const std::size_t q = d.next(p);
    if (in_triple(q) && d.at(p).chord != d.at(q).chord) pairs.emplace_back(p, q);
  }
  std::sort(pairs.begin(), pairs.end());

  const std::size_t np = pairs.size();
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = i + 1; j < np; ++j) {
      for (std::size_t k = j + 1; k < np; ++k) {
        const std::pair<std::size_t, std::size_t>* chosen[3] = {&pairs[i], &pairs[j], &pairs[k]};
        std::vector<std::size_t> used;
        for (auto* pr : chosen) {
          used.push_back(pr->first);
          used.push_back(pr->second);
        }
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end()) continue;

        Triangle t{};
        int n_top = 0, n_mid = 0, n_bottom = 0;
        for (auto* pr : chosen) {
          const Role r0 = d.at(pr->first).role;
          const Role r1 = d.at(pr->second).role;
          if (r0 == Role::Tail && r1 == Role::Tail) {
            t.top[0] = pr->first, t.top[1] = pr->second, ++n_top;
          } else if (r0 == Role::Head && r1 == Role::Head) {
            t.bottom[0] = pr->first, t.bottom[1] = pr->second, ++n_bottom;
          } else {
            t.mid[0] = pr->first, t.mid[1] = pr->second, ++n_mid;
          }
        }
        if (n_top != 1 || n_mid != 1 || n_bottom != 1) continue;

        // The middle head belongs to a chord with a tail on top, the middle
        // tail to a chord with a head on the bottom.
        const std::size_t mid_head = d.at(t.mid[0]).role == Role::Head ? t.mid[0] : t.mid[1];
        const std::size_t mid_tail = mid_head == t.mid[0] ? t.mid[1] : t.mid[0];
        const ChordId a = d.at(mid_head).chord;
        const ChordId c = d.at(mid_tail).chord;
        if (d.at(t.top[0]).chord != a && d.at(t.top[1]).chord != a) continue;
        const ChordId b = d.at(t.top[0]).chord == a ? d.at(t.top[1]).chord : d.at(t.top[0]).chord;
        const ChordId bottom0 = d.at(t.bottom[0]).chord;
        const ChordId bottom1 = d.at(t.bottom[1]).chord;
        if (!((bottom0 == b && bottom1 == c) || (bottom0 == c && bottom1 == b))) continue;
        if (a == b || b == c || a == c) continue;

        // Strand directions: +1 when the strand meets its first-listed
        // crossing first (top: a then b, middle: a then c, bottom: b then c).
        const int dir_top = d.at(t.top[0]).chord == a ? 1 : -1;
        const int dir_mid = t.mid[0] == mid_head ? 1 : -1;
        const int dir_bottom = bottom0 == b ? 1 : -1;
        const int sa = d.sign(a), sb = d.sign(b), sc = d.sign(c);
        if (sa * sb != dir_mid * dir_bottom) continue;
        if (sa * sc != dir_top * dir_bottom) continue;
        return t;
      }
    }
  }
  return std::nullopt;
}

GaussDiagram apply_r3(const GaussDiagram& d, const Move& m) {
  for (ChordId id : m.chords) require_chord(d, id, m.kind);
  auto t = find_triangle(d, m.chords[0], m.chords[1], m.chords[2]);
  if (!t) throw MoveError("R3: chords do not form an admissible triangle");
  std::vector<Endpoint> eps(d.endpoints().begin(), d.endpoints().end());
  std::swap(eps[t->top[0]], eps[t->top[1]]);
  std::swap(eps[t->mid[0]], eps[t->mid[1]]);
  std::swap(eps[t->bottom[0]], eps[t->bottom[1]]);
  return with_endpoints(d, std::move(eps));
}

GaussDiagram apply_addition(const GaussDiagram& d, const Move& m) {
  auto check_new = [&](ChordId id) {
    if (id <= 0) throw MoveError(std::string(to_string(m.kind)) + ": label must be positive");
    if (d.contains(id)) throw MoveError(std::string(to_string(m.kind)) + ": chord " + std::to_string(id) + " already present");
  };
  if (m.sign != 1 && m.sign != -1) throw MoveError(std::string(to_string(m.kind)) + ": sign must be +1 or -1");
  std::vector<Endpoint> eps(d.endpoints().begin(), d.endpoints().end());
  auto signs = sign_list(d);
  const ChordId a = m.chords[0];
  check_new(a);
  if (m.gap > eps.size()) throw MoveError(std::string(to_string(m.kind)) + ": gap out of range");

  if (m.kind == MoveKind::R1Add) {
    Endpoint first{a, m.head_first ? Role::Head : Role::Tail};
    Endpoint second{a, m.head_first ? Role::Tail : Role::Head};
    eps.insert(eps.begin() + static_cast<std::ptrdiff_t>(m.gap), {first, second});
    signs.emplace_back(a, m.sign);
    return GaussDiagram(std::move(eps), signs);
  }

  const ChordId b = m.chords[1];
  check_new(b);
  require_distinct(a, b, m.kind);
  eps.insert(eps.begin() + static_cast<std::ptrdiff_t>(m.gap), {Endpoint{a, Role::Tail}, Endpoint{b, Role::Tail}});
  if (m.gap2 > eps.size()) throw MoveError("R2A: head gap out of range");
  if (m.gap2 == m.gap + 1) throw MoveError("R2A: head block cannot split the tail pair");
  Endpoint h1{m.head_first ? b : a, Role::Head};
  Endpoint h2{m.head_first ? a : b, Role::Head};
  eps.insert(eps.begin() + static_cast<std::ptrdiff_t>(m.gap2), {h1, h2});
  signs.emplace_back(a, m.sign);
  signs.emplace_back(b, -m.sign);
  return GaussDiagram(std::move(eps), signs);
}

}  // namespace

GaussDiagram apply_move(const GaussDiagram& d, const Move& m) {
  const ChordId a = m.chords[0];
  const ChordId b = m.chords[1];
  switch (m.kind) {
    case MoveKind::R1Remove: {
      const Chord& c = require_chord(d, a, m.kind);
      if (!d.adjacent(c.tail, c.head)) {
        throw MoveError("R1: endpoints of chord " + std::to_string(a) + " are not adjacent");
      }
      return without(d, {a});
    }
    case MoveKind::R2Remove: {
      require_distinct(a, b, m.kind);
      const Chord& ca = require_chord(d, a, m.kind);
      const Chord& cb = require_chord(d, b, m.kind);
      if (ca.sign != -cb.sign) throw MoveError("R2: chords must have opposite signs");
      if (!r2_pattern(d, ca, cb)) throw MoveError("R2: tails and heads are not pairwise adjacent");
      return without(d, {a, b});
    }
    case MoveKind::FO:
    case MoveKind::FU:
    case MoveKind::Detour: {
      require_distinct(a, b, m.kind);
      const Chord& ca = require_chord(d, a, m.kind);
      const Chord& cb = require_chord(d, b, m.kind);
      std::size_t i = 0, j = 0;
      if (m.kind == MoveKind::FO) {
        i = ca.tail, j = cb.tail;
      } else if (m.kind == MoveKind::FU) {
        i = ca.head, j = cb.head;
      } else {
        i = ca.head, j = cb.tail;
      }
      if (!d.adjacent(i, j)) {
        throw MoveError(std::string(to_string(m.kind)) + ": endpoints of chords " + std::to_string(a) + " and " +
                        std::to_string(b) + " are not adjacent");
      }
      return swapped(d, i, j);
    }
    case MoveKind::R3:
      return apply_r3(d, m);
    case MoveKind::R1Add:
    case MoveKind::R2Add:
      return apply_addition(d, m);
  }
  throw MoveError("unknown move kind");
}

std::vector<Move> enumerate_moves(const GaussDiagram& d, MoveKindSet allow, std::size_t crossing_ceiling) {
  std::vector<Move> out;
  const auto chords = d.chords();
  const std::size_t n = d.size();

  if (allow.contains(MoveKind::R1Remove)) {
    for (const Chord& c : chords) {
      if (d.adjacent(c.tail, c.head)) out.push_back(Move::r1_remove(c.id));
    }
  }
  if (allow.contains(MoveKind::R2Remove)) {
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        if (r2_pattern(d, chords[i], chords[j])) out.push_back(Move::r2_remove(chords[i].id, chords[j].id));
      }
    }
  }
  if (allow.contains(MoveKind::R3)) {
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        for (std::size_t k = j + 1; k < chords.size(); ++k) {
          if (find_triangle(d, chords[i].id, chords[j].id, chords[k].id)) {
            out.push_back(Move::r3(chords[i].id, chords[j].id, chords[k].id));
          }
        }
      }
    }
  }
  // Same-role neighbours (FO/FU) and head-then-tail neighbours (detour).
  const bool want_fo = allow.contains(MoveKind::FO);
  const bool want_fu = allow.contains(MoveKind::FU);
  const bool want_detour = allow.contains(MoveKind::Detour);
  if (want_fo || want_fu || want_detour) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = d.next(i);
      const Endpoint& p = d.at(i);
      const Endpoint& q = d.at(j);
      if (p.chord == q.chord) continue;
      const ChordId lo = std::min(p.chord, q.chord);
      const ChordId hi = std::max(p.chord, q.chord);
      if (p.role == Role::Tail && q.role == Role::Tail && want_fo) out.push_back(Move::fo(lo, hi));
      if (p.role == Role::Head && q.role == Role::Head && want_fu) out.push_back(Move::fu(lo, hi));
      if (p.role != q.role && want_detour) {
        const ChordId head_of = p.role == Role::Head ? p.chord : q.chord;
        const ChordId tail_of = p.role == Role::Head ? q.chord : p.chord;
        out.push_back(Move::detour(head_of, tail_of));
      }
    }
  }

  const std::size_t count = d.chord_count();
  const ChordId fresh = d.max_chord_id() + 1;
  const std::size_t gaps = std::max<std::size_t>(n, 1);
  if (allow.contains(MoveKind::R1Add) && count + 1 <= crossing_ceiling) {
    for (std::size_t g = 0; g < gaps; ++g) {
      for (int sign : {1, -1}) {
        for (bool head_first : {false, true}) out.push_back(Move::r1_add(fresh, g, sign, head_first));
      }
    }
  }
  if (allow.contains(MoveKind::R2Add) && count + 2 <= crossing_ceiling) {
    for (std::size_t g = 0; g < gaps; ++g) {
      for (std::size_t g2 = 0; g2 <= n + 1; ++g2) {
        if (g2 == g + 1) continue;
        for (int sign : {1, -1}) {
          for (bool reversed : {false, true}) out.push_back(Move::r2_add(fresh, fresh + 1, g, g2, sign, reversed));
        }
      }
    }
  }
  return out;
}

SequenceResult apply_sequence(const GaussDiagram& d, const MoveSequence& s) {
  SequenceResult r{d, 0};
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    try {
      r.diagram = apply_move(r.diagram, s.moves[i]);
    } catch (const MoveError& e) {
      throw SequenceError(i, e.what());
    }
    r.forbidden_cost += forbidden_cost(s.moves[i].kind);
  }
  return r;
}

std::string to_notation(const Move& m) {
  std::string out(to_string(m.kind));
  out += '(';
  auto num = [](auto v) { return std::to_string(v); };
  switch (m.kind) {
    case MoveKind::R1Remove:
      out += num(m.chords[0]);
      break;
    case MoveKind::R3:
      out += num(m.chords[0]) + "," + num(m.chords[1]) + "," + num(m.chords[2]);
      break;
    case MoveKind::R1Add:
      out += num(m.chords[0]) + "," + num(m.gap) + "," + (m.head_first ? "UO" : "OU") + "," +
             (m.sign > 0 ? "+" : "-");
      break;
    case MoveKind::R2Add:
      out += num(m.chords[0]) + "," + num(m.chords[1]) + "," + num(m.gap) + "," + num(m.gap2) + "," +
             (m.sign > 0 ? "+" : "-") + "," + (m.head_first ? "R" : "S");
      break;
    default:
      out += num(m.chords[0]) + "," + num(m.chords[1]);
      break;
  }
  out += ')';
  return out;
}

std::string to_notation(const MoveSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    if (i) out += ", ";
    out += to_notation(s.moves[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view s, std::string_view term) {
  s = trim(s);
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad number '" + std::string(s) + "' in move '" + std::string(term) + "'");
  }
  return v;
}

int parse_sign(std::string_view s, std::string_view term) {
  s = trim(s);
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw ParseError("bad sign in move '" + std::string(term) + "'");
}

}  // namespace

Move parse_move(std::string_view term) {
  term = trim(term);
  const auto open = term.find('(');
  if (open == std::string_view::npos || term.back() != ')') {
    throw ParseError("malformed move '" + std::string(term) + "'");
  }
  const std::string_view name = trim(term.substr(0, open));
  const std::string_view inner = term.substr(open + 1, term.size() - open - 2);
  std::vector<std::string_view> args;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || inner[i] == ',') {
      args.push_back(trim(inner.substr(start, i - start)));
      start = i + 1;
    }
  }
  auto expect_args = [&](std::size_t k) {
    if (args.size() != k) {
      throw ParseError("move '" + std::string(term) + "' expects " + std::to_string(k) + " arguments");
    }
  };
  auto label = [&](std::size_t i) {
    const auto v = parse_number<ChordId>(args[i], term);
    if (v <= 0) throw ParseError("chord labels must be positive in '" + std::string(term) + "'");
    return v;
  };

  if (name == "R1") {
    expect_args(1);
    return Move::r1_remove(label(0));
  }
  if (name == "R2") {
    expect_args(2);
    return Move::r2_remove(label(0), label(1));
  }
  if (name == "R3") {
    expect_args(3);
    return Move::r3(label(0), label(1), label(2));
  }
  if (name == "FO" || name == "FU" || name == "FD") {
    expect_args(2);
    if (name == "FO") return Move::fo(label(0), label(1));
    if (name == "FU") return Move::fu(label(0), label(1));
    return Move::detour(label(0), label(1));
  }
  if (name == "R1A") {
    expect_args(4);
    bool head_first;
    if (args[2] == "OU") {
      head_first = false;
    } else if (args[2] == "UO") {
      head_first = true;
    } else {
      throw ParseError("R1A order must be OU or UO in '" + std::string(term) + "'");
    }
    return Move::r1_add(label(0), parse_number<std::size_t>(args[1], term), parse_sign(args[3], term), head_first);
  }
  if (name == "R2A") {
    expect_args(6);
    bool reversed;
    if (args[5] == "S") {
      reversed = false;
    } else if (args[5] == "R") {
      reversed = true;
    } else {
      throw ParseError("R2A head order must be S or R in '" + std::string(term) + "'");
    }
    return Move::r2_add(label(0), label(1), parse_number<std::size_t>(args[2], term),
                        parse_number<std::size_t>(args[3], term), parse_sign(args[4], term), reversed);
  }
  throw ParseError("unknown move '" + std::string(name) + "'");
}

MoveSequence parse_move_sequence(std::string_view text) {
  MoveSequence seq;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : ',';
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in move sequence");
    if (ch == ',' && depth == 0) {
      const auto term = trim(text.substr(start, i - start));
      if (!term.empty()) {
        seq.moves.push_back(parse_move(term));
      } else if (i < text.size()) {
        throw ParseError("empty term in move sequence");
      }
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in move sequence");
  return seq;
}

}  // namespace vknot
