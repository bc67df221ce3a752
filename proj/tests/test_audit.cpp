#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include "cubictk/audit.hpp"
#include "support.hpp"

using namespace cubictk;
using cubictk::testing::kCases;

namespace {

namespace fs = std::filesystem;

const CountSheet& find(const std::vector<CountSheet>& sheets, const std::string& name) {
  auto it = std::find_if(sheets.begin(), sheets.end(), [&](const auto& s) { return s.name == name; });
  if (it == sheets.end()) throw std::runtime_error("no sheet " + name);
  return *it;
}

std::string parse_error(std::string_view text) {
  try {
    parse_sheets(text);
  } catch (const SheetParseError& e) {
    return e.what();
  }
  return "";
}

std::string random_text(std::mt19937_64& rng) {
  static const char alphabet[] = "abcXYZ 0189+-=<\"\\\t\n#.()";
  std::string s;
  for (long n = cubictk::testing::uniform(rng, 0, 12); n > 0; --n)
    s.push_back(alphabet[cubictk::testing::uniform(rng, 0, sizeof(alphabet) - 2)]);
  return s;
}

std::vector<CountSheet> random_sheets(std::mt19937_64& rng) {
  std::vector<CountSheet> out;
  for (long k = cubictk::testing::uniform(rng, 1, 4); k > 0; --k) {
    CountSheet s;
    s.name = "s" + std::to_string(out.size()) + (cubictk::testing::uniform(rng, 0, 1) ? "-x_Y" : "");
    s.relation = cubictk::testing::uniform(rng, 0, 1) ? Relation::Equals : Relation::AtMost;
    s.target = cubictk::testing::uniform(rng, 0, 1000);
    for (long n = cubictk::testing::uniform(rng, 1, 6); n > 0; --n) {
      Contribution c{cubictk::testing::uniform(rng, 0, 1) ? 1 : -1, cubictk::testing::uniform(rng, 0, 99),
                     random_text(rng), std::nullopt};
      if (cubictk::testing::uniform(rng, 0, 1)) c.ref = random_text(rng);
      s.contributions.push_back(std::move(c));
    }
    out.push_back(std::move(s));
  }
  return out;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("cubictk-audit-" + tag + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST(Audit, SingleSheetExample) {
  auto sheets = parse_sheets(
      "sheet I1 expect = 8\n add 6 \"dim Hdg(3,0)\"\n add 2 \"two secant points on D_A x D_A\"\nend\n");
  ASSERT_EQ(sheets.size(), 1u);
  EXPECT_EQ(sheets[0].total(), 8);
  EXPECT_TRUE(sheets[0].passes());
  EXPECT_EQ(sheets[0].relation, Relation::Equals);
  EXPECT_FALSE(sheets[0].contributions[0].ref);
}

TEST(Audit, EmptySheetRejected) {
  EXPECT_NE(parse_error("sheet empty expect = 0\nend\n").find("empty sheet"), std::string::npos);
}

TEST(Audit, SubtractionUnderAtMost) {
  auto sheets = parse_sheets("sheet X expect <= 7\n add 9 \"a\"\n sub 2 \"b\"\nend\n");
  ASSERT_EQ(sheets.size(), 1u);
  EXPECT_EQ(sheets[0].total(), 7);
  EXPECT_TRUE(sheets[0].passes());
  auto report = audit(sheets);
  EXPECT_EQ(report.passed, 1u);
  EXPECT_TRUE(report.all_pass());
}

TEST(Audit, BundledSheets) {
  auto sheets = bundled_sheets();
  EXPECT_GE(sheets.size(), 20u);
  EXPECT_EQ(find(sheets, "H2-tilde").total(), 10);
  EXPECT_EQ(find(sheets, "I5-quintic").total(), 7);
  EXPECT_EQ(find(sheets, "I5-quintic").relation, Relation::AtMost);
  EXPECT_EQ(find(sheets, "quintic-genus2").total(), 10);
  EXPECT_EQ(find(sheets, "I41-bundle").total(), 9);
  EXPECT_EQ(find(sheets, "I1-quartic").total(), 8);
  auto report = audit(sheets);
  EXPECT_TRUE(report.all_pass()) << format_report(report);
  EXPECT_EQ(report.passed, sheets.size());
  for (const auto& s : sheets)
    for (const auto& c : s.contributions) {
      ASSERT_TRUE(c.ref) << s.name;
      EXPECT_FALSE(c.ref->empty()) << s.name;
    }
}

TEST(Audit, AlteredTargetFails) {
  auto sheets = bundled_sheets();
  CountSheet altered = find(sheets, "I4-quintic");
  EXPECT_EQ(altered.total(), 8);
  altered.relation = Relation::Equals;
  altered.target = 11;
  auto report = audit({altered});
  EXPECT_FALSE(report.all_pass());
  EXPECT_EQ(report.failed, 1u);
  EXPECT_FALSE(report.sheets[0].pass);
  EXPECT_NE(format_report(report).find("FAIL"), std::string::npos);
}

TEST(Audit, AtMostBoundary) {
  EXPECT_FALSE(parse_sheets("sheet a expect <= 6\n add 7 \"x\"\nend\n")[0].passes());
  EXPECT_TRUE(parse_sheets("sheet a expect <= 8\n add 7 \"x\"\nend\n")[0].passes());
  EXPECT_FALSE(parse_sheets("sheet a expect = 8\n add 7 \"x\"\nend\n")[0].passes());
}

TEST(Audit, ParseErrors) {
  EXPECT_NE(parse_error("sheet a expect = 1\n add 1 \"x\"\nend\nsheet a expect = 1\n add 1 \"y\"\nend\n")
                .find("duplicate sheet name 'a'"),
            std::string::npos);
  EXPECT_NE(parse_error("sheet a expect = 1\n add 1 \"x\"\n").find("missing 'end' for sheet 'a'"),
            std::string::npos);
  EXPECT_NE(parse_error("sheet a expect == 1\n").find(":1:17: expected a non-negative integer"), std::string::npos);
  EXPECT_NE(parse_error("sheet a expect = 1\n add 1 \"x\n").find("unterminated string"), std::string::npos);
  EXPECT_NE(parse_error("sheet a expect = 1\n mul 1 \"x\"\nend\n").find("expected 'add', 'sub' or 'end'"),
            std::string::npos);
  EXPECT_NE(parse_error("sheet a expect = -1\n").find("expected"), std::string::npos);
  EXPECT_NE(parse_error("sheet a expect = 1\n add 99999999999999 \"x\"\nend\n").find("integer too large"),
            std::string::npos);
}

TEST(Audit, ErrorLocation) {
  try {
    parse_sheets("# header\nsheet a expect = 1\n  add 1 \"x\"\n  add 2 oops\nend\n", "f.sheet");
    FAIL();
  } catch (const SheetParseError& e) {
    EXPECT_EQ(e.source(), "f.sheet");
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 9);
    EXPECT_EQ(std::string(e.what()).rfind("f.sheet:4:9: ", 0), 0u) << e.what();
  }
}

TEST(Audit, CommentsAndWhitespace) {
  auto sheets = parse_sheets(
      "  # c\n\nsheet  a   expect<=3 # trailing\n\tadd 1 \"has # inside\" ref \"r\"\n  sub 0 \"z\"\n end \n");
  ASSERT_EQ(sheets.size(), 1u);
  EXPECT_EQ(sheets[0].contributions[0].description, "has # inside");
  EXPECT_EQ(sheets[0].contributions[0].ref, std::optional<std::string>("r"));
  EXPECT_EQ(sheets[0].total(), 1);
}

TEST(AuditProperty, PrintParseRoundTrip) {
  auto rng = cubictk::testing::rng_for(50);
  for (int i = 0; i < kCases; ++i) {
    auto sheets = random_sheets(rng);
    auto text = print_sheets(sheets);
    ASSERT_EQ(parse_sheets(text), sheets) << text;
    ASSERT_EQ(print_sheets(parse_sheets(text)), text);
  }
}

TEST(AuditProperty, TotalIsOrderIndependent) {
  auto rng = cubictk::testing::rng_for(51);
  for (int i = 0; i < kCases; ++i) {
    auto sheets = random_sheets(rng);
    for (auto s : sheets) {
      long long total = s.total();
      bool pass = s.passes();
      std::shuffle(s.contributions.begin(), s.contributions.end(), rng);
      ASSERT_EQ(s.total(), total);
      ASSERT_EQ(s.passes(), pass);
    }
  }
}

TEST(Audit, LoadDirectory) {
  TempDir dir("load");
  dir.write("b.sheet", "sheet second expect = 1\n add 1 \"x\"\nend\n");
  dir.write("a.sheet", "sheet first expect = 1\n add 1 \"x\"\nend\n");
  dir.write("notes.txt", "not a sheet");
  auto sheets = load_sheets(dir.path);
  ASSERT_EQ(sheets.size(), 2u);
  EXPECT_EQ(sheets[0].name, "first");
  EXPECT_EQ(sheets[1].name, "second");
  EXPECT_EQ(load_sheets(dir.path / "b.sheet").size(), 1u);
}

TEST(Audit, LoadDuplicateAcrossFiles) {
  TempDir dir("dup");
  dir.write("a.sheet", "sheet same expect = 1\n add 1 \"x\"\nend\n");
  dir.write("b.sheet", "sheet same expect = 1\n add 1 \"x\"\nend\n");
  try {
    load_sheets(dir.path);
    FAIL();
  } catch (const SheetParseError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate sheet name 'same'"), std::string::npos);
  }
}

TEST(Audit, LoadMissingPath) { EXPECT_THROW(load_sheets("/nonexistent/cubictk/path"), std::runtime_error); }
