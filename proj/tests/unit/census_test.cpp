#include "vknot/census.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace vknot {
namespace {

const std::filesystem::path kData = VKNOT_DATA_DIR;

std::vector<CensusEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_census(in, "test");
}

std::vector<ExpectedRow> parse_exp(const std::string& text) {
  std::istringstream in(text);
  return parse_expected(in, "exp");
}

TEST(CensusParseTest, SkipsCommentsAndBlanks) {
  const auto e = parse("# header\n\n2.1\tO1+O2+U1+U2+\n0.1\t\n");
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].name, "2.1");
  EXPECT_EQ(e[0].line, 3u);
  EXPECT_EQ(e[0].diagram.chord_count(), 2u);
  EXPECT_TRUE(e[1].diagram.empty());
}

TEST(CensusParseTest, ErrorsCarryLineNumbers) {
  try {
    parse("2.1\tO1+O2+U1+U2+\n\nbad\tO1+U2+\n");
    FAIL() << "expected CensusError";
  } catch (const CensusError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("test:3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse("no-tab-here\n"), CensusError);
  EXPECT_THROW(parse("2.1\tO1+O2+U1+U2+\n2.1\tO1+U1+\n"), CensusError);  // duplicate name
}

TEST(CensusParseTest, MissingFile) {
  EXPECT_THROW(load_census(kData / "does-not-exist.tsv"), CensusError);
}

TEST(ExpectedParseTest, ExactAndInterval) {
  const auto rows = parse_exp("# c\n2.1\t1\t1\n4.36\t1\t1-2\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].f_lower, 1);
  EXPECT_EQ(rows[0].f_upper, 1);
  EXPECT_EQ(rows[1].f_lower, 1);
  EXPECT_EQ(rows[1].f_upper, 2);
  EXPECT_THROW(parse_exp("x\t1\n"), CensusError);
  EXPECT_THROW(parse_exp("x\ta\t1\n"), CensusError);
  EXPECT_THROW(parse_exp("x\t1\t3-2\n"), CensusError);
}

TEST(ExpectedParseTest, ShippedFileLoads) {
  const auto rows = load_expected(kData / "expected_le4.tsv");
  EXPECT_EQ(rows.size(), 117u);
  for (const auto& r : rows) {
    EXPECT_LE(r.f_lower, r.f_upper) << r.name;
    EXPECT_LE(r.ow, r.f_lower) << r.name;
  }
}

TEST(ReportTest, FixtureMatchesExpectations) {
  const auto entries = load_census(kData / "census_fixture.tsv");
  const auto expected = load_expected(kData / "expected_le4.tsv");
  const CensusReport r = build_report(entries, &expected);
  EXPECT_EQ(r.rows.size(), entries.size());
  EXPECT_EQ(r.diffs.size(), entries.size());
  EXPECT_FALSE(r.has_mismatch());
  EXPECT_EQ(r.count(Verdict::Match), static_cast<int>(entries.size()));
  EXPECT_EQ(r.missing.size(), expected.size() - entries.size());
  for (const CensusRow& row : r.rows) EXPECT_TRUE(row.bounds.exact.has_value()) << row.name;
}

TEST(ReportTest, DetectsMismatch) {
  const auto entries = parse("2.1\tO1+O2+U1+U2+\n");
  const auto expected = parse_exp("2.1\t1\t3\n");
  const CensusReport r = build_report(entries, &expected);
  ASSERT_EQ(r.diffs.size(), 1u);
  EXPECT_EQ(r.diffs[0].verdict, Verdict::Mismatch);
  EXPECT_TRUE(r.has_mismatch());
  EXPECT_NE(render_text(r).find("mismatch"), std::string::npos);
}

TEST(ReportTest, IntervalInsideExpectationIsConsistent) {
  // Without certification the trefoil ring gets only [2, global(4)].
  const auto entries = parse("ring\tO1+O2+U1+U2+O3+O4+U3+U4+\n");
  const auto expected = parse_exp("ring\t2\t2\n");
  CensusOptions opts;
  opts.certify = false;
  const CensusReport r = build_report(entries, &expected, opts);
  ASSERT_EQ(r.diffs.size(), 1u);
  EXPECT_EQ(r.diffs[0].verdict, Verdict::Consistent);
}

TEST(ReportTest, ParallelAndSerialAgree) {
  const auto entries = load_census(kData / "census_fixture.tsv");
  const auto expected = load_expected(kData / "expected_le4.tsv");
  CensusOptions serial;
  serial.parallel = false;
  const CensusReport a = build_report(entries, &expected, serial);
  const CensusReport b = build_report(entries, &expected);
  EXPECT_EQ(render_text(a), render_text(b));
  EXPECT_EQ(render_json_lines(a), render_json_lines(b));
}

TEST(ReportTest, TextLayout) {
  const auto entries = parse("2.1\tO1+O2+U1+U2+\n0.1\t\n");
  const CensusReport r = build_report(entries, nullptr);
  const std::string text = render_text(r);
  EXPECT_EQ(text.rfind("K ", 0), 0u) << text;
  EXPECT_NE(text.find("FO(1,2), R1(1), R1(2)"), std::string::npos) << text;
  EXPECT_NE(text.find("OW distribution"), std::string::npos);
  EXPECT_NE(text.find("summary: 2 entries"), std::string::npos) << text;
  EXPECT_EQ(r.ow_distribution.at(2).at(1), 1);
  EXPECT_EQ(r.ow_distribution.at(0).at(0), 1);
}

TEST(ReportTest, JsonLinesAreTyped) {
  const auto entries = parse("2.1\tO1+O2+U1+U2+\n");
  const auto expected = parse_exp("2.1\t1\t1\n3.1\t1\t1\n");
  const std::string json = render_json_lines(build_report(entries, &expected));
  std::istringstream in(json);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5u) << json;
  EXPECT_EQ(lines[0].rfind("{\"type\":\"row\"", 0), 0u) << lines[0];
  EXPECT_EQ(lines[1].rfind("{\"type\":\"diff\"", 0), 0u) << lines[1];
  EXPECT_EQ(lines[2], "{\"type\":\"missing\",\"name\":\"3.1\"}");
  EXPECT_EQ(lines[3].rfind("{\"type\":\"ow_distribution\"", 0), 0u) << lines[3];
  EXPECT_EQ(lines[4].rfind("{\"type\":\"summary\"", 0), 0u) << lines[4];
}

TEST(PublishedSequencesTest, AllReplayOnFixture) {
  const Table3Result r = verify_table3(load_census(kData / "census_fixture.tsv"));
  EXPECT_TRUE(r.all_ok()) << render_text(r);
  EXPECT_EQ(r.verdicts.size(), 8u);
  EXPECT_TRUE(r.missing.empty());
  for (const auto& v : r.verdicts) EXPECT_EQ(v.cost, v.expected_cost) << v.name;
}

TEST(PublishedSequencesTest, MissingAndMislabelledEntries) {
  // 4.26 relabelled so its chord 4 is missing, 4.59 absent altogether.
  const auto entries = parse("4.26\tO1+O2-U1+U3+U5+U2-O5+O3+\n");
  const Table3Result r = verify_table3(entries);
  EXPECT_FALSE(r.all_ok());
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_FALSE(r.verdicts[0].ok());
  EXPECT_NE(r.verdicts[0].error.find("label"), std::string::npos) << r.verdicts[0].error;
  EXPECT_EQ(r.missing.size(), 7u);
  EXPECT_NE(render_json_lines(r).find("\"type\":\"table3\""), std::string::npos);
}

TEST(PublishedSequencesTest, CostsAsPublished) {
  int total = 0;
  for (const auto& s : table3_sequences()) {
    EXPECT_EQ(parse_move_sequence(s.sequence).forbidden_cost(), s.expected_cost) << s.name;
    total += s.expected_cost;
  }
  EXPECT_EQ(total, 9);
}

}  // namespace
}  // namespace vknot
