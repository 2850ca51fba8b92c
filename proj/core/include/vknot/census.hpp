#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/bounds.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/search.hpp"

namespace vknot {

/// Thrown for unreadable files and malformed census/expected lines. The
/// message carries the source name and 1-based line number.
class CensusError : public std::runtime_error {
 public:
  CensusError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct CensusEntry {
  std::string name;
  std::string code;
  GaussDiagram diagram;
  std::size_t line = 0;
};

/// Expected values for one knot: the OW lower bound and F as lower..upper
/// (equal when exact).
struct ExpectedRow {
  std::string name;
  int ow = 0;
  int f_lower = 0;
  int f_upper = 0;
};

/// `name<TAB>code` per line; blank lines and lines starting with '#' skipped.
std::vector<CensusEntry> parse_census(std::istream& in, const std::string& source = "<census>");
std::vector<CensusEntry> load_census(const std::filesystem::path& path);

/// `name<TAB>ow<TAB>F` per line, F being "n" or "lower-upper".
std::vector<ExpectedRow> parse_expected(std::istream& in, const std::string& source = "<expected>");
std::vector<ExpectedRow> load_expected(const std::filesystem::path& path);

struct CensusOptions {
  /// Run certify_forbidden_number per entry instead of best_bounds alone.
  bool certify = true;
  SearchConfig search{0, std::nullopt, 200'000, false, false, true};
  /// Compute rows on worker threads; output order is unaffected.
  bool parallel = true;
  /// Treat every entry with a nonempty code as a nontrivial knot, as census
  /// tables list distinct nontrivial knots (plus the unknot, code empty).
  bool assume_nontrivial = true;
};

struct CensusRow {
  std::string name;
  std::string code;
  BoundReport bounds;
  int ow_column() const;  // the OWP lower bound
};

enum class Verdict : std::uint8_t { Match, Consistent, Mismatch };
std::string_view to_string(Verdict v) noexcept;

struct DiffRow {
  std::string name;
  Verdict verdict = Verdict::Match;
  ExpectedRow expected;
  int ow = 0;
  int lower = 0;
  int upper = 0;
  std::string reason;
};

struct CensusReport {
  std::vector<CensusRow> rows;
  std::vector<DiffRow> diffs;  // one per expected row that has a census entry
  std::vector<std::string> missing;  // expected names with no census entry
  /// crossing number -> OW column value -> count.
  std::map<int, std::map<int, int>> ow_distribution;

  int count(Verdict v) const;
  bool has_mismatch() const { return count(Verdict::Mismatch) > 0; }
};

CensusReport build_report(const std::vector<CensusEntry>& entries, const std::vector<ExpectedRow>* expected,
                          const CensusOptions& options = {});

/// Aligned table, then the diff section (non-matching rows only), the OW
/// distribution and summary counts.
std::string render_text(const CensusReport& r);
/// One JSON object per line: rows, diffs, missing names, distribution, summary.
std::string render_json_lines(const CensusReport& r);

struct Table3Sequence {
  std::string_view name;
  std::string_view sequence;
  int expected_cost;
};

/// The eight published unknotting sequences, "same as" rows expanded.
const std::vector<Table3Sequence>& table3_sequences();

struct Table3Verdict {
  std::string name;
  std::string sequence;
  bool valid = false;
  int cost = 0;
  int expected_cost = 0;
  std::string error;

  bool ok() const { return valid && cost == expected_cost; }
};

struct Table3Result {
  std::vector<Table3Verdict> verdicts;
  std::vector<std::string> missing;

  bool all_ok() const;
};

/// Replays each built-in sequence on the census entry of the same name.
Table3Result verify_table3(const std::vector<CensusEntry>& entries);

std::string render_text(const Table3Result& r);
std::string render_json_lines(const Table3Result& r);

}  // namespace vknot
