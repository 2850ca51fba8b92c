// vknot: command-line front end for the virtual knot toolkit.
//
// Exit status: 0 success, 1 usage or parse error, 2 verification mismatch
// (including a search that ends without a certificate).

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vknot/bounds.hpp"
#include "vknot/census.hpp"
#include "vknot/errors.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/search.hpp"

namespace {

using nlohmann::ordered_json;
using namespace vknot;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct Options {
  bool json = false;
  std::string code;
  std::string family;
  std::string sequence;
  std::string census_file;
  std::string expected_file;
  bool table3 = false;
  bool no_certify = false;
  bool nontrivial = false;
  bool bounds = false;
  int budget = 4;
  int ceiling = -1;
  std::size_t max_states = 2'000'000;
  bool additions = false;
  bool r3 = false;
  bool no_dedup = false;
};

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.max_forbidden = o.budget;
  if (o.ceiling >= 0) cfg.crossing_ceiling = static_cast<std::size_t>(o.ceiling);
  cfg.max_states = o.max_states;
  cfg.allow_additions = o.additions;
  cfg.allow_r3 = o.r3;
  cfg.dedup = !o.no_dedup;
  return cfg;
}

std::string parity_string(const GaussDiagram& d) {
  std::string out;
  for (const Chord& c : d.chords()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c.id) + (parity(d, c.id) == Parity::Odd ? ":odd" : ":even");
  }
  return out;
}

int cmd_parse(const Options& o) {
  const GaussDiagram d = parse_gauss_code(o.code);
  if (o.json) {
    ordered_json j;
    j["code"] = serialize(d);
    j["canonical"] = canonical_form(d);
    j["crossings"] = d.chord_count();
    j["complete"] = is_complete(d);
    j["head_run"] = longest_head_run(d);
    ordered_json parities = ordered_json::object();
    for (const Chord& c : d.chords()) parities[std::to_string(c.id)] = parity(d, c.id) == Parity::Odd ? "odd" : "even";
    j["parity"] = parities;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "code        " << serialize(d) << '\n'
              << "canonical   " << canonical_form(d) << '\n'
              << "crossings   " << d.chord_count() << '\n'
              << "complete    " << (is_complete(d) ? "yes" : "no") << '\n'
              << "head run    " << longest_head_run(d) << '\n'
              << "parity      " << parity_string(d) << '\n';
  }
  return kOk;
}

int cmd_invariants(const Options& o) {
  const GaussDiagram d = parse_gauss_code(o.code);
  const ArcLabeling labels = arc_labels(d);
  const LaurentPoly w = odd_writhe_polynomial(d);
  if (o.json) {
    ordered_json j;
    j["odd_writhe"] = odd_writhe(d);
    j["arc_labels"] = labels.labels;
    ordered_json idx = ordered_json::object();
    for (const Chord& c : d.chords()) idx[std::to_string(c.id)] = chord_index(d, labels, c.id);
    j["chord_index"] = idx;
    j["W"] = w.to_string();
    j["ow_lower_bound"] = ow_lower_bound(d);
    j["owp_lower_bound"] = owp_lower_bound(d);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "odd writhe  " << odd_writhe(d) << '\n' << "arc labels ";
    for (int l : labels.labels) std::cout << ' ' << l;
    std::cout << "\nchord index";
    for (const Chord& c : d.chords()) std::cout << ' ' << c.id << ':' << chord_index(d, labels, c.id);
    std::cout << "\nW(t)        " << w.to_string() << '\n'
              << "OW bound    " << ow_lower_bound(d) << '\n'
              << "OWP bound   " << owp_lower_bound(d) << '\n';
  }
  return kOk;
}

int cmd_bounds(const Options& o) {
  const GaussDiagram d = parse_gauss_code(o.code);
  FamilySpec spec;
  const bool tagged = !o.family.empty();
  if (tagged) spec = parse_family_spec(o.family);
  const BoundReport r = best_bounds(d, tagged ? &spec : nullptr, o.nontrivial);
  std::cout << (o.json ? to_json(r) + "\n" : to_text(r));
  return kOk;
}

int cmd_moves(const Options& o) {
  const GaussDiagram d = parse_gauss_code(o.code);
  MoveKindSet allow = MoveKindSet::non_additions();
  if (o.additions) {
    allow.insert(MoveKind::R1Add);
    allow.insert(MoveKind::R2Add);
  }
  const std::size_t ceiling = o.ceiling >= 0 ? static_cast<std::size_t>(o.ceiling) : d.chord_count() + 2;
  const auto moves = enumerate_moves(d, allow, ceiling);
  if (o.json) {
    ordered_json a = ordered_json::array();
    for (const Move& m : moves) a.push_back({{"move", to_notation(m)}, {"result", serialize(apply_move(d, m))}});
    std::cout << a.dump() << '\n';
  } else {
    for (const Move& m : moves) std::cout << to_notation(m) << "\t" << serialize(apply_move(d, m)) << '\n';
  }
  return kOk;
}

int cmd_search(const Options& o) {
  const GaussDiagram d = parse_gauss_code(o.code);
  const SearchOutcome out = unknotting_search(d, search_config(o));
  if (o.json) {
    ordered_json j;
    j["status"] = to_string(out.status);
    j["forbidden_used"] = out.forbidden_used;
    j["states_visited"] = out.states_visited;
    j["certificate"] =
        out.status == SearchStatus::Unknotted ? ordered_json(to_notation(out.certificate)) : ordered_json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "status      " << to_string(out.status) << '\n' << "states      " << out.states_visited << '\n';
    if (out.status == SearchStatus::Unknotted) {
      std::cout << "cost        " << out.forbidden_used << '\n'
                << "certificate " << (out.certificate.empty() ? "(empty)" : to_notation(out.certificate)) << '\n';
    }
  }
  return out.status == SearchStatus::Unknotted ? kOk : kMismatch;
}

int cmd_verify(const Options& o) {
  const GaussDiagram d = parse_gauss_code(o.code);
  const MoveSequence seq = parse_move_sequence(o.sequence);
  const VerifyResult r = verify_sequence(d, seq);
  if (o.json) {
    ordered_json j;
    j["valid_unknotting"] = r.valid_unknotting;
    j["forbidden_cost"] = r.forbidden_cost;
    j["final"] = serialize(r.final);
    j["failed_index"] = r.failed_index ? ordered_json(*r.failed_index) : ordered_json(nullptr);
    if (!r.error.empty()) j["error"] = r.error;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "valid       " << (r.valid_unknotting ? "yes" : "no") << '\n'
              << "cost        " << r.forbidden_cost << '\n'
              << "final       " << (r.final.empty() ? "(unknot)" : serialize(r.final)) << '\n';
    if (!r.error.empty()) std::cout << "error       " << r.error << '\n';
  }
  return r.valid_unknotting ? kOk : kMismatch;
}

int cmd_family(const Options& o) {
  const FamilySpec spec = parse_family_spec(o.family);
  std::vector<GaussDiagram> diagrams;
  if (spec.family == Family::CompleteEnum) {
    diagrams = enumerate_complete(spec.parameter);
  } else {
    diagrams.push_back(generate(spec));
  }
  ordered_json all = ordered_json::array();
  for (const GaussDiagram& d : diagrams) {
    if (o.json) {
      ordered_json j;
      j["family"] = to_string(spec);
      j["code"] = serialize(d);
      if (o.bounds) j["bounds"] = ordered_json::parse(to_json(best_bounds(d, &spec)));
      all.push_back(j);
    } else {
      std::cout << serialize(d) << '\n';
      if (o.bounds) std::cout << to_text(best_bounds(d, &spec));
    }
  }
  if (o.json) std::cout << (all.size() == 1 ? all.front() : all).dump() << '\n';
  if (spec.family == Family::Torus2Bridge && !o.json && o.bounds) {
    std::cout << "schedule    " << to_notation(torus2_bridge_schedule(spec.parameter)) << '\n';
  }
  return kOk;
}

int cmd_census(const Options& o) {
  const auto entries = load_census(o.census_file);
  std::vector<ExpectedRow> expected;
  if (!o.expected_file.empty()) expected = load_expected(o.expected_file);
  CensusOptions copt;
  copt.certify = !o.no_certify;
  copt.search = search_config(o);
  const CensusReport report = build_report(entries, o.expected_file.empty() ? nullptr : &expected, copt);
  std::cout << (o.json ? render_json_lines(report) : render_text(report));
  bool failed = report.has_mismatch();
  if (o.table3) {
    const Table3Result t3 = verify_table3(entries);
    if (!o.json) std::cout << "\nunknotting sequences\n";
    std::cout << (o.json ? render_json_lines(t3) : render_text(t3));
    failed = failed || !t3.all_ok();
  }
  return failed ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden-move toolkit for virtual knots given as signed Gauss codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Maximum forbidden moves")->check(CLI::NonNegativeNumber);
    sub->add_option("--ceiling", o.ceiling, "Maximum chords in intermediate diagrams (default: initial + 2)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-states", o.max_states, "Cap on stored search states");
    sub->add_flag("--additions", o.additions, "Allow R1/R2 additions within the ceiling");
    sub->add_flag("--r3", o.r3, "Allow R3 moves");
    sub->add_flag("--no-dedup", o.no_dedup, "Disable the visited set");
  };

  auto* parse = app.add_subcommand("parse", "Validate a code and print its canonical form");
  parse->add_option("code", o.code, "Signed Gauss code, e.g. O1+O2+U1+U2+")->required();
  auto* inv = app.add_subcommand("invariants", "Odd writhe, arc labels, chord indices, W(t)");
  inv->add_option("code", o.code)->required();
  auto* bnd = app.add_subcommand("bounds", "Lower and upper bounds on the forbidden number");
  bnd->add_option("code", o.code)->required();
  bnd->add_option("--family", o.family, "Tag the diagram as a family member, e.g. ring:3");
  bnd->add_flag("--nontrivial", o.nontrivial, "Assert the diagram is not the unknot (lower bound 1)");
  auto* mv = app.add_subcommand("moves", "List applicable moves and their results");
  mv->add_option("code", o.code)->required();
  mv->add_flag("--additions", o.additions, "Include R1/R2 additions");
  mv->add_option("--ceiling", o.ceiling, "Chord ceiling for additions");
  auto* srch = app.add_subcommand("search", "Search for an unknotting certificate");
  srch->add_option("code", o.code)->required();
  add_search_flags(srch);
  auto* ver = app.add_subcommand("verify", "Replay a move sequence");
  ver->add_option("code", o.code)->required();
  ver->add_option("--seq", o.sequence, "Moves, e.g. \"FO(1,2), R1(1), R2(2,3)\"")->required();
  auto* fam = app.add_subcommand("family", "Generate a family member");
  fam->add_option("spec", o.family, "torus2-min:p, torus2-bridge:p, twist:n, vtwist:n, ring:n, complete:c")
      ->required();
  fam->add_flag("--bounds", o.bounds, "Also print bounds");
  auto* cen = app.add_subcommand("census", "Report on a census file");
  cen->add_option("file", o.census_file, "name<TAB>code per line")->required();
  cen->add_option("--expected", o.expected_file, "name<TAB>ow<TAB>F per line");
  cen->add_flag("--table3", o.table3, "Replay the built-in unknotting sequences");
  cen->add_flag("--no-certify", o.no_certify, "Skip the per-entry search");
  add_search_flags(cen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse) return cmd_parse(o);
    if (*inv) return cmd_invariants(o);
    if (*bnd) return cmd_bounds(o);
    if (*mv) return cmd_moves(o);
    if (*srch) return cmd_search(o);
    if (*ver) return cmd_verify(o);
    if (*fam) return cmd_family(o);
    if (*cen) return cmd_census(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CensusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
