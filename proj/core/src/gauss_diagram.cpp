#include "vknot/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "vknot/errors.hpp"

namespace vknot {

GaussDiagram::GaussDiagram(std::vector<Endpoint> endpoints,
                           std::span<const std::pair<ChordId, int>> signs)
    : endpoints_(std::move(endpoints)) {
  std::map<ChordId, Chord> by_id;
  std::map<ChordId, int> seen_role;  // bit 0 = tail, bit 1 = head
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    const Endpoint& e = endpoints_[i];
    if (e.chord <= 0) throw ParseError("chord label must be a positive integer");
    Chord& c = by_id[e.chord];
    c.id = e.chord;
    const int bit = e.role == Role::Tail ? 1 : 2;
    if (seen_role[e.chord] & bit) {
      throw ParseError("chord " + std::to_string(e.chord) + " has two " +
                       (e.role == Role::Tail ? "tails (O)" : "heads (U)"));
    }
    seen_role[e.chord] |= bit;
    (e.role == Role::Tail ? c.tail : c.head) = i;
  }
  for (const auto& [id, bits] : seen_role) {
    if (bits != 3) throw ParseError("chord " + std::to_string(id) + " appears only once");
  }
  std::map<ChordId, int> sign_of;
  for (const auto& [id, s] : signs) {
    if (s != 1 && s != -1) throw ParseError("sign of chord " + std::to_string(id) + " must be +1 or -1");
    if (!sign_of.emplace(id, s).second) throw ParseError("duplicate sign entry for chord " + std::to_string(id));
    if (!by_id.contains(id)) throw ParseError("sign given for absent chord " + std::to_string(id));
  }
  chords_.reserve(by_id.size());
  for (auto& [id, c] : by_id) {
    auto it = sign_of.find(id);
    if (it == sign_of.end()) throw ParseError("chord " + std::to_string(id) + " has no sign");
    c.sign = it->second;
    chords_.push_back(c);
  }
}

bool GaussDiagram::contains(ChordId id) const noexcept {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                             [](const Chord& c, ChordId v) { return c.id < v; });
  return it != chords_.end() && it->id == id;
}

const Chord& GaussDiagram::chord(ChordId id) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                             [](const Chord& c, ChordId v) { return c.id < v; });
  if (it == chords_.end() || it->id != id) {
    throw std::out_of_range("unknown chord " + std::to_string(id));
  }
  return *it;
}

GaussDiagram parse_gauss_code(std::string_view code) {
  while (!code.empty() && std::isspace(static_cast<unsigned char>(code.front()))) code.remove_prefix(1);
  while (!code.empty() && std::isspace(static_cast<unsigned char>(code.back()))) code.remove_suffix(1);

  std::vector<Endpoint> endpoints;
  std::map<ChordId, int> signs;
  std::size_t i = 0;
  while (i < code.size()) {
    const std::size_t token_start = i;
    auto malformed = [&](const std::string& why) {
      return ParseError("malformed token at offset " + std::to_string(token_start) + ": " + why);
    };
    Role role;
    if (code[i] == 'O') {
      role = Role::Tail;
    } else if (code[i] == 'U') {
      role = Role::Head;
    } else {
      throw malformed("expected 'O' or 'U'");
    }
    ++i;
    ChordId label = 0;
    auto [ptr, ec] = std::from_chars(code.data() + i, code.data() + code.size(), label);
    if (ec != std::errc() || ptr == code.data() + i) throw malformed("expected a chord label");
    if (label <= 0) throw malformed("chord label must be positive");
    i = static_cast<std::size_t>(ptr - code.data());
    if (i >= code.size() || (code[i] != '+' && code[i] != '-')) throw malformed("expected '+' or '-'");
    const int sign = code[i] == '+' ? 1 : -1;
    ++i;
    auto [it, inserted] = signs.emplace(label, sign);
    if (!inserted && it->second != sign) {
      throw ParseError("conflicting signs on chord " + std::to_string(label));
    }
    endpoints.push_back({label, role});
  }
  std::vector<std::pair<ChordId, int>> sign_list(signs.begin(), signs.end());
  return GaussDiagram(std::move(endpoints), sign_list);
}

namespace {

void append_token(std::string& out, Role role, ChordId label, int sign) {
  out += role == Role::Tail ? 'O' : 'U';
  out += std::to_string(label);
  out += sign > 0 ? '+' : '-';
}

}  // namespace

std::string serialize(const GaussDiagram& d, std::size_t basepoint) {
  std::string out;
  const std::size_t n = d.size();
  if (n == 0) return out;
  out.reserve(n * 4);
  for (std::size_t k = 0; k < n; ++k) {
    const Endpoint& e = d.at((basepoint + k) % n);
    append_token(out, e.role, e.chord, d.sign(e.chord));
  }
  return out;
}

std::string canonical_form(const GaussDiagram& d) {
  const std::size_t n = d.size();
  if (n == 0) return {};
  std::vector<int> sign_by_pos(n);
  for (std::size_t i = 0; i < n; ++i) sign_by_pos[i] = d.sign(d.at(i).chord);

  std::unordered_map<ChordId, int> renumber;
  renumber.reserve(d.chord_count());
  std::string best;
  std::string candidate;
  candidate.reserve(n * 4);
  for (std::size_t start = 0; start < n; ++start) {
    renumber.clear();
    candidate.clear();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t p = (start + k) % n;
      const Endpoint& e = d.at(p);
      auto [it, _] = renumber.emplace(e.chord, static_cast<int>(renumber.size()) + 1);
      append_token(candidate, e.role, it->second, sign_by_pos[p]);
    }
    if (best.empty() || candidate < best) best = candidate;
  }
  return best;
}

GaussDiagram relabeled(const GaussDiagram& d) {
  std::unordered_map<ChordId, int> renumber;
  std::vector<Endpoint> eps;
  std::vector<std::pair<ChordId, int>> signs;
  for (const Endpoint& e : d.endpoints()) {
    auto [it, inserted] = renumber.emplace(e.chord, static_cast<int>(renumber.size()) + 1);
    if (inserted) signs.emplace_back(it->second, d.sign(e.chord));
    eps.push_back({it->second, e.role});
  }
  return GaussDiagram(std::move(eps), signs);
}

GaussDiagram rotated(const GaussDiagram& d, std::size_t start) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  std::vector<Endpoint> eps(n);
  for (std::size_t k = 0; k < n; ++k) eps[k] = d.at((start + k) % n);
  std::vector<std::pair<ChordId, int>> signs;
  for (const Chord& c : d.chords()) signs.emplace_back(c.id, c.sign);
  return GaussDiagram(std::move(eps), signs);
}

Parity parity(const GaussDiagram& d, ChordId id) {
  const Chord& c = d.chord(id);
  const std::size_t lo = std::min(c.head, c.tail);
  const std::size_t hi = std::max(c.head, c.tail);
  return (hi - lo - 1) % 2 == 1 ? Parity::Odd : Parity::Even;
}

GaussDiagram mirror(const GaussDiagram& d) {
  std::vector<Endpoint> eps(d.endpoints().begin(), d.endpoints().end());
  for (Endpoint& e : eps) e.role = opposite(e.role);
  std::vector<std::pair<ChordId, int>> signs;
  for (const Chord& c : d.chords()) signs.emplace_back(c.id, -c.sign);
  return GaussDiagram(std::move(eps), signs);
}

GaussDiagram inverse(const GaussDiagram& d) {
  std::vector<Endpoint> eps(d.endpoints().rbegin(), d.endpoints().rend());
  std::vector<std::pair<ChordId, int>> signs;
  for (const Chord& c : d.chords()) signs.emplace_back(c.id, c.sign);
  return GaussDiagram(std::move(eps), signs);
}

bool chords_interleave(const GaussDiagram& d, ChordId a, ChordId b) {
  const Chord& ca = d.chord(a);
  const Chord& cb = d.chord(b);
  const std::size_t lo = std::min(ca.head, ca.tail);
  const std::size_t hi = std::max(ca.head, ca.tail);
  auto inside = [&](std::size_t p) { return p > lo && p < hi; };
  return inside(cb.head) != inside(cb.tail);
}

bool is_complete(const GaussDiagram& d) {
  const auto chords = d.chords();
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (!chords_interleave(d, chords[i].id, chords[j].id)) return false;
    }
  }
  return true;
}

std::size_t longest_head_run(const GaussDiagram& d) {
  const std::size_t n = d.size();
  if (n == 0) return 0;
  // Start just after a tail so that no run wraps past the scan origin.
  std::size_t origin = 0;
  while (d.at(origin).role != Role::Tail) ++origin;
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (d.at((origin + k) % n).role == Role::Head) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

}  // namespace vknot
