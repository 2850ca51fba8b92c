#include "vknot/census.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "vknot/errors.hpp"
#include "vknot/moves.hpp"

namespace vknot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.push_back(trim(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start)));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

int parse_int(std::string_view text, const std::string& source, std::size_t line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw CensusError(source, line, std::string("expected an integer ") + what + ", got '" + std::string(text) + "'");
  }
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CensusError(path.string(), 0, "cannot open file");
  return in;
}

}  // namespace

std::vector<CensusEntry> parse_census(std::istream& in, const std::string& source) {
  std::vector<CensusEntry> out;
  std::set<std::string> names;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (skippable(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) throw CensusError(source, number, "expected 'name<TAB>code'");
    if (fields[0].empty()) throw CensusError(source, number, "empty name");
    if (!names.insert(std::string(fields[0])).second) {
      throw CensusError(source, number, "duplicate name '" + std::string(fields[0]) + "'");
    }
    try {
      out.push_back({std::string(fields[0]), std::string(fields[1]), parse_gauss_code(fields[1]), number});
    } catch (const ParseError& e) {
      throw CensusError(source, number, e.what());
    }
  }
  return out;
}

std::vector<CensusEntry> load_census(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_census(in, path.string());
}

std::vector<ExpectedRow> parse_expected(std::istream& in, const std::string& source) {
  std::vector<ExpectedRow> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (skippable(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) throw CensusError(source, number, "expected 'name<TAB>ow<TAB>F'");
    ExpectedRow row;
    row.name = std::string(fields[0]);
    row.ow = parse_int(fields[1], source, number, "OW value");
    const std::string_view f = fields[2];
    if (const auto dash = f.find('-'); dash != std::string_view::npos && dash > 0) {
      row.f_lower = parse_int(f.substr(0, dash), source, number, "F lower bound");
      row.f_upper = parse_int(f.substr(dash + 1), source, number, "F upper bound");
    } else {
      row.f_lower = row.f_upper = parse_int(f, source, number, "F value");
    }
    if (row.f_lower > row.f_upper) throw CensusError(source, number, "F interval has lower > upper");
    out.push_back(row);
  }
  return out;
}

std::vector<ExpectedRow> load_expected(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_expected(in, path.string());
}

int CensusRow::ow_column() const { return static_cast<int>((bounds.owp.l1_norm() + 1) / 2); }

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Consistent: return "consistent";
    case Verdict::Mismatch: return "mismatch";
  }
  return "?";
}

int CensusReport::count(Verdict v) const {
  return static_cast<int>(std::count_if(diffs.begin(), diffs.end(), [v](const DiffRow& d) { return d.verdict == v; }));
}

namespace {

CensusRow compute_row(const CensusEntry& e, const CensusOptions& options) {
  CensusRow row{e.name, e.code, {}};
  const bool nontrivial = options.assume_nontrivial && !e.diagram.empty();
  row.bounds = options.certify ? certify_forbidden_number(e.diagram, options.search, nullptr, nontrivial)
                               : best_bounds(e.diagram, nullptr, nontrivial);
  return row;
}

DiffRow compare(const CensusRow& row, const ExpectedRow& want) {
  DiffRow d;
  d.name = row.name;
  d.expected = want;
  d.ow = row.ow_column();
  d.lower = row.bounds.lower;
  d.upper = row.bounds.upper;
  std::vector<std::string> problems;
  if (d.ow != want.ow) problems.push_back("OW " + std::to_string(d.ow) + " != " + std::to_string(want.ow));
  if (d.upper < want.f_lower || d.lower > want.f_upper) {
    problems.push_back("F " + interval_string(row.bounds) + " disjoint from expected " +
                       std::to_string(want.f_lower) +
                       (want.f_lower == want.f_upper ? "" : "-" + std::to_string(want.f_upper)));
  }
  if (!problems.empty()) {
    d.verdict = Verdict::Mismatch;
    for (std::size_t i = 0; i < problems.size(); ++i) d.reason += (i ? "; " : "") + problems[i];
  } else if (d.lower == want.f_lower && d.upper == want.f_upper) {
    d.verdict = Verdict::Match;
  } else {
    d.verdict = Verdict::Consistent;
    d.reason = "computed F " + interval_string(row.bounds) + " overlaps expected";
  }
  return d;
}

std::string certificate_text(const BoundReport& b) {
  if (!b.certificate) return "-";
  return b.certificate->empty() ? "(empty)" : *b.certificate;
}

std::string expected_f(const ExpectedRow& e) {
  return e.f_lower == e.f_upper ? std::to_string(e.f_lower)
                                : std::to_string(e.f_lower) + "-" + std::to_string(e.f_upper);
}

}  // namespace

CensusReport build_report(const std::vector<CensusEntry>& entries, const std::vector<ExpectedRow>* expected,
                          const CensusOptions& options) {
  CensusReport r;
  r.rows.resize(entries.size());
  const std::size_t workers =
      options.parallel ? std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8)) : 1;
  if (workers <= 1 || entries.size() < 2) {
    for (std::size_t i = 0; i < entries.size(); ++i) r.rows[i] = compute_row(entries[i], options);
  } else {
    // Strided partition; each worker writes only its own slots.
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < entries.size(); i += workers) r.rows[i] = compute_row(entries[i], options);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  for (const CensusRow& row : r.rows) ++r.ow_distribution[row.bounds.crossings][row.ow_column()];

  if (expected != nullptr) {
    std::map<std::string, const CensusRow*> by_name;
    for (const CensusRow& row : r.rows) by_name.emplace(row.name, &row);
    for (const ExpectedRow& want : *expected) {
      auto it = by_name.find(want.name);
      if (it == by_name.end()) {
        r.missing.push_back(want.name);
        continue;
      }
      r.diffs.push_back(compare(*it->second, want));
    }
  }
  return r;
}

std::string render_text(const CensusReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "K" << std::setw(4) << "c" << std::setw(6) << "w_o" << std::setw(24) << "W(t)"
     << std::setw(5) << "OW" << std::setw(8) << "F(K)"
     << "certificate\n";
  for (const CensusRow& row : r.rows) {
    os << std::left << std::setw(10) << row.name << std::setw(4) << row.bounds.crossings << std::setw(6)
       << row.bounds.odd_writhe << std::setw(24) << row.bounds.owp.to_string() << std::setw(5) << row.ow_column()
       << std::setw(8) << interval_string(row.bounds) << certificate_text(row.bounds) << '\n';
  }

  os << "\ndiff\n";
  for (const DiffRow& d : r.diffs) {
    if (d.verdict == Verdict::Match) continue;
    os << "  " << std::left << std::setw(10) << d.name << std::setw(12) << to_string(d.verdict) << "expected OW "
       << d.expected.ow << ", F " << expected_f(d.expected) << "; " << d.reason << '\n';
  }
  for (const std::string& name : r.missing) os << "  " << std::left << std::setw(10) << name << "missing from census\n";

  os << "\nOW distribution (H comparison unavailable)\n";
  for (const auto& [c, counts] : r.ow_distribution) {
    os << "  c=" << c << ':';
    for (const auto& [ow, n] : counts) os << "  OW " << ow << " x" << n;
    os << '\n';
  }

  os << "\nsummary: " << r.rows.size() << " entries, " << r.count(Verdict::Match) << " match, "
     << r.count(Verdict::Consistent) << " consistent, " << r.count(Verdict::Mismatch) << " mismatch, "
     << r.missing.size() << " missing\n";
  return os.str();
}

std::string render_json_lines(const CensusReport& r) {
  using nlohmann::ordered_json;
  std::ostringstream os;
  for (const CensusRow& row : r.rows) {
    ordered_json j;
    j["type"] = "row";
    j["name"] = row.name;
    j["code"] = row.code;
    j["c"] = row.bounds.crossings;
    j["w_o"] = row.bounds.odd_writhe;
    j["W"] = row.bounds.owp.to_string();
    j["ow_lb"] = static_cast<int>((std::abs(row.bounds.odd_writhe) + 1) / 2);
    j["owp_lb"] = row.ow_column();
    j["lower"] = row.bounds.lower;
    j["upper"] = row.bounds.upper;
    j["exact"] = row.bounds.exact ? ordered_json(*row.bounds.exact) : ordered_json(nullptr);
    j["certificate"] = row.bounds.certificate ? ordered_json(*row.bounds.certificate) : ordered_json(nullptr);
    os << j.dump() << '\n';
  }
  for (const DiffRow& d : r.diffs) {
    ordered_json j;
    j["type"] = "diff";
    j["name"] = d.name;
    j["verdict"] = to_string(d.verdict);
    j["expected_ow"] = d.expected.ow;
    j["expected_F"] = expected_f(d.expected);
    j["ow"] = d.ow;
    j["lower"] = d.lower;
    j["upper"] = d.upper;
    j["reason"] = d.reason;
    os << j.dump() << '\n';
  }
  for (const std::string& name : r.missing) os << ordered_json{{"type", "missing"}, {"name", name}}.dump() << '\n';
  for (const auto& [c, counts] : r.ow_distribution) {
    ordered_json j;
    j["type"] = "ow_distribution";
    j["c"] = c;
    ordered_json by_ow = ordered_json::object();
    for (const auto& [ow, n] : counts) by_ow[std::to_string(ow)] = n;
    j["counts"] = by_ow;
    os << j.dump() << '\n';
  }
  ordered_json s;
  s["type"] = "summary";
  s["entries"] = r.rows.size();
  s["match"] = r.count(Verdict::Match);
  s["consistent"] = r.count(Verdict::Consistent);
  s["mismatch"] = r.count(Verdict::Mismatch);
  s["missing"] = r.missing.size();
  os << s.dump() << '\n';
  return os.str();
}

const std::vector<Table3Sequence>& table3_sequences() {
  static const std::vector<Table3Sequence> kSequences = [] {
    constexpr std::string_view s426 = "FO(1,2), FU(2,4), R1(1), R1(4), R2(2,3)";
    constexpr std::string_view s441 = "FO(1,2), R1(1), R2(2,4), R1(3)";
    constexpr std::string_view s455 = "FO(1,2), R1(1), R1(2), R2(3,4)";
    constexpr std::string_view s459 = "FU(2,3), R2(1,2), R2(3,4)";
    return std::vector<Table3Sequence>{
        {"4.26", s426, 2}, {"4.41", s441, 1}, {"4.55", s455, 1}, {"4.56", s455, 1},
        {"4.58", s441, 1}, {"4.59", s459, 1}, {"4.76", s455, 1}, {"4.77", s455, 1},
    };
  }();
  return kSequences;
}

bool Table3Result::all_ok() const {
  return missing.empty() && std::all_of(verdicts.begin(), verdicts.end(), [](const Table3Verdict& v) { return v.ok(); });
}

Table3Result verify_table3(const std::vector<CensusEntry>& entries) {
  Table3Result out;
  for (const Table3Sequence& t : table3_sequences()) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CensusEntry& e) { return e.name == t.name; });
    if (it == entries.end()) {
      out.missing.emplace_back(t.name);
      continue;
    }
    Table3Verdict v;
    v.name = std::string(t.name);
    v.sequence = std::string(t.sequence);
    v.expected_cost = t.expected_cost;
    const MoveSequence seq = parse_move_sequence(t.sequence);
    // Sequences name chords by their published labels; a census using other
    // labels is reported rather than renumbered.
    for (const Move& m : seq.moves) {
      for (ChordId id : m.chords) {
        if (id != 0 && !it->diagram.contains(id) && v.error.empty()) {
          v.error = "labeling mismatch: chord " + std::to_string(id) + " does not occur in the census code";
        }
      }
    }
    const VerifyResult r = verify_sequence(it->diagram, seq);
    v.valid = r.valid_unknotting;
    v.cost = r.forbidden_cost;
    if (v.error.empty()) {
      if (r.failed_index) {
        v.error = r.error;
      } else if (!r.valid_unknotting) {
        v.error = "sequence ends at " + serialize(r.final) + ", not the unknot";
      }
    }
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

std::string render_text(const Table3Result& r) {
  std::ostringstream os;
  for (const Table3Verdict& v : r.verdicts) {
    os << std::left << std::setw(7) << v.name << std::setw(8) << (v.ok() ? "valid" : "INVALID") << "cost " << v.cost
       << " (expected " << v.expected_cost << ")  " << v.sequence;
    if (!v.error.empty()) os << "  [" << v.error << ']';
    os << '\n';
  }
  for (const std::string& name : r.missing) os << std::left << std::setw(7) << name << "missing from census\n";
  return os.str();
}

std::string render_json_lines(const Table3Result& r) {
  using nlohmann::ordered_json;
  std::ostringstream os;
  for (const Table3Verdict& v : r.verdicts) {
    ordered_json j;
    j["type"] = "table3";
    j["name"] = v.name;
    j["sequence"] = v.sequence;
    j["valid"] = v.valid;
    j["cost"] = v.cost;
    j["expected_cost"] = v.expected_cost;
    j["ok"] = v.ok();
    if (!v.error.empty()) j["error"] = v.error;
    os << j.dump() << '\n';
  }
  for (const std::string& name : r.missing) os << ordered_json{{"type", "missing"}, {"name", name}}.dump() << '\n';
  return os.str();
}

}  // namespace vknot
