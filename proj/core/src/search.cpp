#include "vknot/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "vknot/errors.hpp"
#include "vknot/families.hpp"

namespace vknot {

std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Unknotted: return "unknotted";
    case SearchStatus::ExhaustedBudget: return "exhausted-budget";
    case SearchStatus::ExhaustedStates: return "exhausted-states";
  }
  return "?";
}

GaussDiagram simplify(const GaussDiagram& d) {
  GaussDiagram cur = d;
  for (;;) {
    const auto moves = enumerate_moves(cur, MoveKindSet::removals());
    if (moves.empty()) return cur;
    cur = apply_move(cur, moves.front());
  }
}

namespace {

struct Node {
  GaussDiagram diagram;
  std::ptrdiff_t parent = -1;
  Move move;
};

class Searcher {
 public:
  Searcher(const GaussDiagram& start, const SearchConfig& cfg) : cfg_(cfg) {
    ceiling_ = std::max(cfg.crossing_ceiling.value_or(start.chord_count() + 2), start.chord_count());
    free_.insert(MoveKind::R1Remove);
    free_.insert(MoveKind::R2Remove);
    if (cfg.allow_r3) free_.insert(MoveKind::R3);
    if (cfg.allow_additions) {
      free_.insert(MoveKind::R1Add);
      free_.insert(MoveKind::R2Add);
    }
    nodes_.push_back({start, -1, {}});
  }

  SearchOutcome run() {
    std::vector<std::size_t> level{0};
    for (int cost = 0; cost <= cfg_.max_forbidden; ++cost) {
      std::vector<std::size_t> next;
      if (auto hit = close_level(level, next, cost < cfg_.max_forbidden)) return finish(*hit, cost);
      if (over_budget_) return exhausted(SearchStatus::ExhaustedStates);
      level = std::move(next);
      if (level.empty()) break;
    }
    return exhausted(SearchStatus::ExhaustedBudget);
  }

 private:
  // Free-move BFS over `seeds`; forbidden successors are collected in `next`.
  std::optional<std::size_t> close_level(const std::vector<std::size_t>& seeds, std::vector<std::size_t>& next,
                                         bool expand_forbidden) {
    std::deque<std::size_t> queue;
    for (std::size_t id : seeds) {
      if (!claim(nodes_[id].diagram)) continue;
      if (nodes_[id].diagram.empty()) return id;
      queue.push_back(id);
    }
    // Candidates for the next level are only claimed when that level starts,
    // since the free closure of this level may still reach them for free.
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      const GaussDiagram cur = nodes_[id].diagram;
      for (const Move& m : enumerate_moves(cur, free_, ceiling_)) {
        GaussDiagram g = apply_move(cur, m);
        if (!claim(g)) continue;
        if (!add(std::move(g), id, m)) return std::nullopt;
        if (nodes_.back().diagram.empty()) return nodes_.size() - 1;
        queue.push_back(nodes_.size() - 1);
      }
      if (!expand_forbidden) continue;
      for (const Move& m : enumerate_moves(cur, MoveKindSet::forbidden())) {
        GaussDiagram g = apply_move(cur, m);
        if (cfg_.dedup && visited_.contains(canonical_form(g))) continue;
        if (!add(std::move(g), id, m)) return std::nullopt;
        next.push_back(nodes_.size() - 1);
      }
    }
    return std::nullopt;
  }

  // Marks `g` visited; false if it already was.
  bool claim(const GaussDiagram& g) { return !cfg_.dedup || visited_.insert(canonical_form(g)).second; }

  bool add(GaussDiagram g, std::size_t parent, const Move& m) {
    if (nodes_.size() >= cfg_.max_states) {
      over_budget_ = true;
      return false;
    }
    nodes_.push_back({std::move(g), static_cast<std::ptrdiff_t>(parent), m});
    return true;
  }

  SearchOutcome finish(std::size_t id, int cost) const {
    SearchOutcome out;
    out.status = SearchStatus::Unknotted;
    for (std::ptrdiff_t at = static_cast<std::ptrdiff_t>(id); nodes_[at].parent >= 0; at = nodes_[at].parent) {
      out.certificate.moves.push_back(nodes_[at].move);
    }
    std::reverse(out.certificate.moves.begin(), out.certificate.moves.end());
    out.forbidden_used = cost;
    out.states_visited = nodes_.size();
    return out;
  }

  SearchOutcome exhausted(SearchStatus s) const {
    SearchOutcome out;
    out.status = s;
    out.states_visited = nodes_.size();
    return out;
  }

  const SearchConfig& cfg_;
  std::size_t ceiling_ = 0;
  MoveKindSet free_;
  std::vector<Node> nodes_;
  std::unordered_set<std::string> visited_;
  bool over_budget_ = false;
};

}  // namespace

SearchOutcome unknotting_search(const GaussDiagram& d, const SearchConfig& cfg) {
  if (cfg.max_forbidden < 0) return {SearchStatus::ExhaustedBudget, {}, 0, 0};
  return Searcher(d, cfg).run();
}

BoundReport certify_forbidden_number(const GaussDiagram& d, const SearchConfig& cfg, const FamilySpec* family,
                                     bool known_nontrivial) {
  BoundReport r = best_bounds(d, family, known_nontrivial);
  SearchConfig sc = cfg;
  sc.max_forbidden = r.upper;
  const SearchOutcome out = unknotting_search(d, sc);
  if (out.status != SearchStatus::Unknotted) {
    r.warnings.push_back("search " + std::string(to_string(out.status)) + " at budget " + std::to_string(r.upper) +
                         " after " + std::to_string(out.states_visited) + " states");
    return r;
  }
  r.certificate = to_notation(out.certificate);
  r.upper_items.push_back({"search", out.forbidden_used, "replayable certificate"});
  if (out.forbidden_used < r.lower) {
    r.warnings.push_back("certificate cost " + std::to_string(out.forbidden_used) + " is below lower bound " +
                         std::to_string(r.lower));
  }
  r.upper = std::min(r.upper, out.forbidden_used);
  if (r.upper == r.lower) r.exact = r.lower;
  return r;
}

VerifyResult verify_sequence(const GaussDiagram& d, const MoveSequence& s) {
  VerifyResult r;
  r.final = d;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    try {
      r.final = apply_move(r.final, s.moves[i]);
    } catch (const MoveError& e) {
      r.failed_index = i;
      r.error = "move " + std::to_string(i) + " (" + to_notation(s.moves[i]) + "): " + e.what();
      return r;
    }
    r.forbidden_cost += forbidden_cost(s.moves[i].kind);
  }
  r.valid_unknotting = r.final.empty();
  return r;
}

}  // namespace vknot
