// Count sheets: a line-oriented ledger of additive dimension counts.
//
//   file    := (sheet | comment | blank)*
//   sheet   := "sheet" NAME "expect" REL INT EOL line* "end" EOL
//   line    := ("add" | "sub") INT STRING ("ref" STRING)? EOL
//   REL     := "=" | "<="
//   NAME    := [A-Za-z0-9_-]+
//   STRING  := double-quoted; escapes \" \\ \n \t
//   INT     := decimal >= 0
//
// '#' starts a comment outside strings. Whitespace inside a line is free.
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubictk {

enum class Relation { Equals, AtMost };

struct Contribution {
  int sign;  // +1 add, -1 sub
  long long amount;
  std::string description;
  std::optional<std::string> ref;

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct CountSheet {
  std::string name;
  Relation relation;
  long long target;
  std::vector<Contribution> contributions;

  long long total() const;
  bool passes() const;

  friend bool operator==(const CountSheet&, const CountSheet&) = default;
};

class SheetParseError : public std::runtime_error {
 public:
  SheetParseError(std::string source, int line, int column, const std::string& message);
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  int line_;
  int column_;
  std::string message_;
};

std::vector<CountSheet> parse_sheets(std::string_view text, const std::string& source = "<input>");

/// Canonical text; parse_sheets(print_sheets(x)) == x.
std::string print_sheets(const std::vector<CountSheet>& sheets);

struct SheetResult {
  std::string name;
  Relation relation;
  long long total;
  long long target;
  bool pass;
};

struct AuditReport {
  std::vector<SheetResult> sheets;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_pass() const { return failed == 0; }
};

AuditReport audit(const std::vector<CountSheet>& sheets);
std::string format_report(const AuditReport& report);
std::string_view to_string(Relation r);

/// Parses a single file, or every *.sheet in a directory in file-name order.
/// Sheet names must be unique across the whole set.
std::vector<CountSheet> load_sheets(const std::filesystem::path& path);

/// $CUBICTK_ASSET_DIR if set, otherwise the configured asset directory.
std::filesystem::path default_asset_dir();
std::vector<CountSheet> bundled_sheets();

}  // namespace cubictk
