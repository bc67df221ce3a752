#include "cubictk/audit.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#ifndef CUBICTK_ASSET_DIR
#define CUBICTK_ASSET_DIR "assets"
#endif

namespace cubictk {

SheetParseError::SheetParseError(std::string source, int line, int column,
                                 const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(message) {}

std::string_view to_string(Relation r) { return r == Relation::Equals ? "=" : "<="; }

long long CountSheet::total() const {
  long long t = 0;
  for (const auto& c : contributions) t += c.sign * c.amount;
  return t;
}

bool CountSheet::passes() const {
  const long long t = total();
  return relation == Relation::Equals ? t == target : t <= target;
}

namespace {

enum class Tok { Word, Eq, Le, String };

struct Token {
  Tok kind;
  std::string text;
  int col;
};

constexpr long long kMaxInt = 1'000'000'000'000LL;

bool name_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
}

class LineLexer {
 public:
  LineLexer(const std::string& source, int line) : source_(source), line_(line) {}

  std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
      const char ch = s[i];
      const int col = static_cast<int>(i) + 1;
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
      } else if (ch == '#') {
        break;
      } else if (ch == '=') {
        out.push_back({Tok::Eq, "=", col});
        ++i;
      } else if (ch == '<') {
        if (i + 1 >= s.size() || s[i + 1] != '=') fail(col, "expected '<='");
        out.push_back({Tok::Le, "<=", col});
        i += 2;
      } else if (ch == '"') {
        std::string text;
        ++i;
        bool closed = false;
        while (i < s.size()) {
          char c = s[i];
          if (c == '"') {
            closed = true;
            ++i;
            break;
          }
          if (c == '\\') {
            if (i + 1 >= s.size()) break;
            char e = s[i + 1];
            switch (e) {
              case '"': text.push_back('"'); break;
              case '\\': text.push_back('\\'); break;
              case 'n': text.push_back('\n'); break;
              case 't': text.push_back('\t'); break;
              default: fail(static_cast<int>(i) + 1, std::string("unknown escape '\\") + e + "'");
            }
            i += 2;
            continue;
          }
          text.push_back(c);
          ++i;
        }
        if (!closed) fail(col, "unterminated string");
        out.push_back({Tok::String, std::move(text), col});
      } else if (name_char(ch)) {
        std::size_t j = i;
        while (j < s.size() && name_char(s[j])) ++j;
        out.push_back({Tok::Word, std::string(s.substr(i, j - i)), col});
        i = j;
      } else {
        fail(col, std::string("unexpected character '") + ch + "'");
      }
    }
    return out;
  }

  [[noreturn]] void fail(int col, const std::string& msg) const {
    throw SheetParseError(source_, line_, col, msg);
  }

 private:
  const std::string& source_;
  int line_;
};

class Parser {
 public:
  Parser(std::string_view text, const std::string& source) : text_(text), source_(source) {}

  std::vector<CountSheet> run() {
    std::size_t pos = 0;
    int line = 0;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      std::string_view raw = text_.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
      ++line;
      handle_line(raw, line);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (open_) throw SheetParseError(source_, line, 1, "missing 'end' for sheet '" + cur_.name + "'");
    return std::move(sheets_);
  }

 private:
  void handle_line(std::string_view raw, int line) {
    LineLexer lx(source_, line);
    std::vector<Token> toks = lx.lex(raw);
    if (toks.empty()) return;
    const int eol_col = static_cast<int>(raw.size()) + 1;
    auto at = [&](std::size_t i) -> const Token* { return i < toks.size() ? &toks[i] : nullptr; };
    auto col_of = [&](std::size_t i) { return i < toks.size() ? toks[i].col : eol_col; };
    auto expect_word = [&](std::size_t i, std::string_view w) {
      const Token* t = at(i);
      if (!t || t->kind != Tok::Word || t->text != w)
        lx.fail(col_of(i), "expected '" + std::string(w) + "'");
    };
    auto expect_int = [&](std::size_t i) -> long long {
      const Token* t = at(i);
      if (!t || t->kind != Tok::Word ||
          !std::all_of(t->text.begin(), t->text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        lx.fail(col_of(i), "expected a non-negative integer");
      if (t->text.size() > 13) lx.fail(t->col, "integer too large");
      long long v = std::stoll(t->text);
      if (v > kMaxInt) lx.fail(t->col, "integer too large");
      return v;
    };
    auto expect_end = [&](std::size_t i) {
      if (i < toks.size()) lx.fail(toks[i].col, "unexpected '" + toks[i].text + "'");
    };

    const Token& head = toks[0];
    if (!open_) {
      expect_word(0, "sheet");
      const Token* name = at(1);
      if (!name || name->kind != Tok::Word) lx.fail(col_of(1), "expected sheet name");
      if (names_.count(name->text)) lx.fail(name->col, "duplicate sheet name '" + name->text + "'");
      expect_word(2, "expect");
      const Token* rel = at(3);
      if (!rel || (rel->kind != Tok::Eq && rel->kind != Tok::Le))
        lx.fail(col_of(3), "expected '=' or '<='");
      long long target = expect_int(4);
      expect_end(5);
      cur_ = CountSheet{name->text, rel->kind == Tok::Eq ? Relation::Equals : Relation::AtMost,
                        target, {}};
      names_.insert(name->text);
      open_ = true;
      return;
    }
    if (head.kind == Tok::Word && head.text == "end") {
      expect_end(1);
      if (cur_.contributions.empty()) lx.fail(head.col, "empty sheet '" + cur_.name + "'");
      sheets_.push_back(std::move(cur_));
      open_ = false;
      return;
    }
    if (head.kind != Tok::Word || (head.text != "add" && head.text != "sub"))
      lx.fail(head.col, "expected 'add', 'sub' or 'end'");
    Contribution c{head.text == "add" ? 1 : -1, expect_int(1), {}, std::nullopt};
    const Token* desc = at(2);
    if (!desc || desc->kind != Tok::String) lx.fail(col_of(2), "expected a quoted description");
    c.description = desc->text;
    if (at(3)) {
      expect_word(3, "ref");
      const Token* ref = at(4);
      if (!ref || ref->kind != Tok::String) lx.fail(col_of(4), "expected a quoted reference");
      c.ref = ref->text;
      expect_end(5);
    }
    cur_.contributions.push_back(std::move(c));
  }

  std::string_view text_;
  const std::string& source_;
  std::vector<CountSheet> sheets_;
  std::set<std::string> names_;
  CountSheet cur_{};
  bool open_ = false;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(ch);
    }
  }
  return out + "\"";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CountSheet> parse_sheets(std::string_view text, const std::string& source) {
  return Parser(text, source).run();
}

std::string print_sheets(const std::vector<CountSheet>& sheets) {
  std::string out;
  for (std::size_t i = 0; i < sheets.size(); ++i) {
    const auto& s = sheets[i];
    if (i) out += "\n";
    out += "sheet " + s.name + " expect " + std::string(to_string(s.relation)) + " " +
           std::to_string(s.target) + "\n";
    for (const auto& c : s.contributions) {
      out += std::string("  ") + (c.sign > 0 ? "add " : "sub ") + std::to_string(c.amount) + " " +
             quote(c.description);
      if (c.ref) out += " ref " + quote(*c.ref);
      out += "\n";
    }
    out += "end\n";
  }
  return out;
}

AuditReport audit(const std::vector<CountSheet>& sheets) {
  AuditReport r;
  for (const auto& s : sheets) {
    SheetResult res{s.name, s.relation, s.total(), s.target, s.passes()};
    (res.pass ? r.passed : r.failed)++;
    r.sheets.push_back(std::move(res));
  }
  return r;
}

std::string format_report(const AuditReport& report) {
  std::size_t width = 5;
  for (const auto& s : report.sheets) width = std::max(width, s.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width) + 2) << "sheet" << std::setw(7) << "total"
     << std::setw(4) << "rel" << std::setw(8) << "target" << "status\n";
  for (const auto& s : report.sheets) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << s.name << std::setw(7) << s.total
       << std::setw(4) << to_string(s.relation) << std::setw(8) << s.target
       << (s.pass ? "pass" : "FAIL") << "\n";
  }
  os << report.passed << " passed, " << report.failed << " failed\n";
  return os.str();
}

std::vector<CountSheet> load_sheets(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".sheet")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else if (fs::exists(path)) {
    files.push_back(path);
  } else {
    throw std::runtime_error("no such file or directory: " + path.string());
  }
  std::vector<CountSheet> all;
  std::set<std::string> names;
  for (const auto& f : files) {
    for (auto& s : parse_sheets(read_file(f), f.filename().string())) {
      if (!names.insert(s.name).second)
        throw SheetParseError(f.filename().string(), 0, 0, "duplicate sheet name '" + s.name + "'");
      all.push_back(std::move(s));
    }
  }
  return all;
}

std::filesystem::path default_asset_dir() {
  if (const char* env = std::getenv("CUBICTK_ASSET_DIR"); env && *env) return env;
  return CUBICTK_ASSET_DIR;
}

std::vector<CountSheet> bundled_sheets() { return load_sheets(default_asset_dir() / "paper-sheets"); }

}  // namespace cubictk
