#pragma once

#include "groupeq/errors.hpp"
#include "groupeq/matrix.hpp"
#include "groupeq/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace groupeq {

namespace detail {

// word     = factor { "*" factor }
// factor   = atom [ "^" exponent ]
// atom     = NAME | "(" word ")"
// exponent = INT | "-" "(" word ")" | "(" word ")"
class WordParser {
 public:
  WordParser(std::string_view text, const SymbolTable& table) : text_(text), table_(table) {}

  SurfaceWord parse() {
    SurfaceWord w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  SurfaceWord word() {
    std::vector<SurfaceWord> factors;
    factors.push_back(factor());
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors.front());
    return SurfaceWord::concat(std::move(factors));
  }

  SurfaceWord factor() {
    SurfaceWord base = atom();
    if (!accept('^')) return base;
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      SurfaceWord by = word();
      expect(')');
      return SurfaceWord::conj(std::move(base), std::move(by));
    }
    if (peek() == '-') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (peek() == '(') {
        ++pos_;
        SurfaceWord by = word();
        expect(')');
        return SurfaceWord::conj(SurfaceWord::inv(std::move(base)), std::move(by));
      }
      pos_ = save;
    }
    return SurfaceWord::pow(std::move(base), integer());
  }

  SurfaceWord atom() {
    skip_ws();
    if (accept('(')) {
      SurfaceWord w = word();
      expect(')');
      return w;
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      if (pos_ >= text_.size()) fail("unexpected end of input, expected a symbol or '('");
      fail("expected a symbol or '(' but found '" + std::string(1, text_[pos_]) + "'");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!table_.contains(name)) throw ParseError("unknown symbol '" + name + "'", start);
    return SurfaceWord::atom(std::move(name));
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer exponent or '('");
    }
    std::int64_t v = 0;
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, v);
    if (ec != std::errc()) throw ParseError("exponent out of range", start);
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  const SymbolTable& table_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss{std::string(s)};
  while (std::getline(ss, cur, ',')) {
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

}  // namespace detail

inline SurfaceWord parse_word(std::string_view text, const SymbolTable& table) {
  return detail::WordParser(text, table).parse();
}

/// Contents of an equation file:
///
///     unknowns: x, y
///     coefficients: a, c
///     aimage: a = [1]
///     eq: x * x^-(a) * x^(a^2) * c^-1
///
/// Blank lines and lines starting with '#' are ignored. Declarations may
/// appear anywhere; equations are parsed after all declarations are read.
struct ProblemFile {
  EquationSystem system;
  std::map<std::string, std::vector<std::int64_t>> aimages;
};

class FileParseError : public ParseError {
 public:
  FileParseError(std::size_t line, const std::string& what, std::size_t position)
      : ParseError("line " + std::to_string(line) + ": " + what, position), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline ProblemFile parse_problem(std::string_view text) {
  struct Pending {
    std::size_t line;
    std::string body;
    std::size_t offset;
  };
  std::vector<std::string> unknowns, coefficients;
  std::vector<Pending> equations, images;

  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw FileParseError(line_no, "expected 'key: value'", 0);
    std::string key = detail::trim(line.substr(0, colon));
    std::string_view body = line.substr(colon + 1);
    if (key == "unknowns") {
      auto names = detail::split_names(body);
      unknowns.insert(unknowns.end(), names.begin(), names.end());
    } else if (key == "coefficients") {
      auto names = detail::split_names(body);
      coefficients.insert(coefficients.end(), names.begin(), names.end());
    } else if (key == "eq") {
      equations.push_back({line_no, std::string(body), colon + 1});
    } else if (key == "aimage") {
      images.push_back({line_no, std::string(body), colon + 1});
    } else {
      throw FileParseError(line_no, "unknown key '" + key + "'", 0);
    }
  }

  SymbolTable table;
  try {
    table = SymbolTable(unknowns, coefficients);
  } catch (const std::invalid_argument& e) {
    throw FileParseError(0, e.what(), 0);
  }

  std::vector<FlatWord> words;
  for (const auto& eq : equations) {
    try {
      words.push_back(flatten(parse_word(eq.body, table)));
    } catch (const ParseError& e) {
      throw FileParseError(eq.line, e.message(), eq.offset + e.position());
    }
  }

  ProblemFile out{EquationSystem(table, std::move(words)), {}};
  for (const auto& im : images) {
    std::size_t eqpos = im.body.find('=');
    std::size_t lb = im.body.find('['), rb = im.body.rfind(']');
    if (eqpos == std::string::npos || lb == std::string::npos || rb == std::string::npos || rb < lb)
      throw FileParseError(im.line, "expected 'aimage: NAME = [i1, ..., in]'", im.offset);
    std::string name = detail::trim(std::string_view(im.body).substr(0, eqpos));
    if (table.kind(name) != SymbolKind::coefficient)
      throw FileParseError(im.line, "'" + name + "' is not a declared coefficient", im.offset);
    std::vector<std::int64_t> vec;
    for (const auto& tok : detail::split_names(std::string_view(im.body).substr(lb + 1, rb - lb - 1))) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw FileParseError(im.line, "bad integer '" + tok + "' in image vector", im.offset + lb);
      vec.push_back(v);
    }
    if (vec.empty()) throw FileParseError(im.line, "image vector must be nonempty", im.offset + lb);
    if (!out.aimages.empty() && out.aimages.begin()->second.size() != vec.size())
      throw FileParseError(im.line, "image vectors must all have the same length", im.offset + lb);
    if (!out.aimages.emplace(name, std::move(vec)).second)
      throw FileParseError(im.line, "duplicate image for '" + name + "'", im.offset);
  }
  return out;
}

/// Integer matrix, one row per nonempty line, entries separated by spaces or commas.
inline IntMatrix parse_int_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (auto& ch : line)
      if (ch == ',' || ch == '[' || ch == ']' || ch == ';') ch = ' ';
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      try {
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size() || tok.find_first_not_of("0123456789", i) != std::string::npos)
          throw std::invalid_argument(tok);
        row.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
      } catch (const std::exception&) {
        throw FileParseError(line_no, "bad integer '" + tok + "'", 0);
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && rows.front().size() != row.size())
      throw FileParseError(line_no, "row length differs from the first row", 0);
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace groupeq
