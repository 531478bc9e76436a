#pragma once

#include "groupeq/errors.hpp"
#include "groupeq/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupeq {

enum class SymbolKind { unknown, coefficient };

/// Unknowns X and coefficient names from G. The unknown order fixes the
/// column order of every exponent matrix.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::vector<std::string> unknowns, std::vector<std::string> coefficients)
      : unknowns_(std::move(unknowns)), coefficients_(std::move(coefficients)) {
    std::vector<std::string> all = unknowns_;
    all.insert(all.end(), coefficients_.begin(), coefficients_.end());
    for (const auto& n : all)
      if (n.empty()) throw std::invalid_argument("symbol names must be nonempty");
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) throw std::invalid_argument("duplicate symbol name '" + *dup + "'");
  }

  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const std::vector<std::string>& coefficients() const { return coefficients_; }

  std::optional<SymbolKind> kind(const std::string& name) const {
    if (unknown_index(name)) return SymbolKind::unknown;
    if (std::find(coefficients_.begin(), coefficients_.end(), name) != coefficients_.end())
      return SymbolKind::coefficient;
    return std::nullopt;
  }
  bool contains(const std::string& name) const { return kind(name).has_value(); }

  std::optional<std::size_t> unknown_index(const std::string& name) const {
    auto it = std::find(unknowns_.begin(), unknowns_.end(), name);
    if (it == unknowns_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - unknowns_.begin());
  }

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  std::vector<std::string> unknowns_;
  std::vector<std::string> coefficients_;
};

struct Letter {
  std::string symbol;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {symbol, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letters cap for a single flattened word.
inline constexpr std::size_t kMaxWordLength = 1'000'000;

/// Freely reduced word over signed symbols. Only literal s s^-1 pairs cancel;
/// coefficients are not multiplied together.
class FlatWord {
 public:
  FlatWord() = default;
  explicit FlatWord(std::vector<Letter> letters) {
    for (auto& l : letters) push(std::move(l));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends a letter, cancelling against the last one when they are inverse.
  void push(Letter l) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().symbol == l.symbol && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(std::move(l));
  }

  FlatWord& operator*=(const FlatWord& o) {
    if (letters_.size() + o.letters_.size() > kMaxWordLength)
      throw CapExceeded("flattened word exceeds " + std::to_string(kMaxWordLength) + " letters");
    for (const auto& l : o.letters_) push(l);
    return *this;
  }
  friend FlatWord operator*(FlatWord a, const FlatWord& b) { return a *= b; }

  FlatWord inverse() const {
    FlatWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
  }

  FlatWord power(std::int64_t k) const {
    FlatWord base = k < 0 ? inverse() : *this;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    if (base.empty() || n == 0) return {};
    // The reduced power has at least n * (cyclically reduced length) letters.
    if (n > kMaxWordLength) throw CapExceeded("power exponent exceeds the word length cap");
    FlatWord out;
    for (std::uint64_t i = 0; i < n; ++i) out *= base;
    return out;
  }

  /// g^h = h^-1 g h.
  FlatWord conjugated_by(const FlatWord& h) const { return h.inverse() * *this * h; }

  friend bool operator==(const FlatWord&, const FlatWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Parse tree of a word before expansion.
struct SurfaceWord {
  enum class Kind { atom, power, conjugate, inverse, concat };

  Kind kind = Kind::concat;
  std::string name;                // atom
  std::int64_t exponent = 1;       // power
  std::vector<SurfaceWord> parts;  // power/inverse: [base]; conjugate: [base, conjugator]; concat: factors

  static SurfaceWord atom(std::string n) { return {Kind::atom, std::move(n), 1, {}}; }
  static SurfaceWord pow(SurfaceWord base, std::int64_t e) { return {Kind::power, {}, e, {std::move(base)}}; }
  static SurfaceWord inv(SurfaceWord base) { return {Kind::inverse, {}, 1, {std::move(base)}}; }
  static SurfaceWord conj(SurfaceWord base, SurfaceWord by) {
    return {Kind::conjugate, {}, 1, {std::move(base), std::move(by)}};
  }
  static SurfaceWord concat(std::vector<SurfaceWord> factors) { return {Kind::concat, {}, 1, std::move(factors)}; }

  friend bool operator==(const SurfaceWord&, const SurfaceWord&) = default;
};

/// Expands powers and conjugations and freely reduces.
inline FlatWord flatten(const SurfaceWord& w) {
  switch (w.kind) {
    case SurfaceWord::Kind::atom:
      return FlatWord({{w.name, 1}});
    case SurfaceWord::Kind::power:
      return flatten(w.parts.at(0)).power(w.exponent);
    case SurfaceWord::Kind::inverse:
      return flatten(w.parts.at(0)).inverse();
    case SurfaceWord::Kind::conjugate:
      return flatten(w.parts.at(0)).conjugated_by(flatten(w.parts.at(1)));
    case SurfaceWord::Kind::concat: {
      FlatWord out;
      for (const auto& p : w.parts) out *= flatten(p);
      return out;
    }
  }
  throw std::logic_error("unreachable surface word kind");
}

/// Re-embeds a flat word as a concatenation of (possibly inverted) atoms.
inline SurfaceWord embed(const FlatWord& w) {
  std::vector<SurfaceWord> parts;
  for (const auto& l : w.letters())
    parts.push_back(l.sign > 0 ? SurfaceWord::atom(l.symbol) : SurfaceWord::inv(SurfaceWord::atom(l.symbol)));
  return SurfaceWord::concat(std::move(parts));
}

/// Canonical rendering, e.g. "x * a^-1 * x^-1"; the empty word renders as "1".
inline std::string to_string(const FlatWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " * ";
    s += w.letters()[i].symbol;
    if (w.letters()[i].sign < 0) s += "^-1";
  }
  return s;
}

/// Equations w_i = 1 sharing one symbol table.
class EquationSystem {
 public:
  EquationSystem() = default;
  EquationSystem(SymbolTable table, std::vector<FlatWord> equations)
      : table_(std::move(table)), equations_(std::move(equations)) {
    for (const auto& w : equations_)
      for (const auto& l : w.letters())
        if (!table_.contains(l.symbol))
          throw std::invalid_argument("symbol '" + l.symbol + "' is not declared in the table");
  }

  const SymbolTable& table() const { return table_; }
  const std::vector<FlatWord>& equations() const { return equations_; }
  std::size_t size() const { return equations_.size(); }

 private:
  SymbolTable table_;
  std::vector<FlatWord> equations_;
};

inline std::int64_t exponent_sum(const FlatWord& w, const std::string& unknown) {
  std::int64_t s = 0;
  for (const auto& l : w.letters())
    if (l.symbol == unknown) s += l.sign;
  return s;
}

/// Exponent sum with the unknown checked against the table.
inline std::int64_t exponent_sum(const FlatWord& w, const std::string& unknown, const SymbolTable& table) {
  if (table.kind(unknown) != SymbolKind::unknown)
    throw std::invalid_argument("'" + unknown + "' is not a declared unknown");
  return exponent_sum(w, unknown);
}

/// Rows follow equation order, columns follow the table's unknown order.
inline IntMatrix exponent_matrix(const EquationSystem& sys) {
  const auto& xs = sys.table().unknowns();
  IntMatrix m(sys.size(), xs.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (const auto& l : sys.equations()[i].letters())
      if (auto j = sys.table().unknown_index(l.symbol)) m(i, *j) += l.sign;
  return m;
}

}  // namespace groupeq
