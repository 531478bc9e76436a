#pragma once

#include "groupeq/errors.hpp"
#include "groupeq/groups.hpp"
#include "groupeq/word.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace groupeq {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;
inline constexpr std::size_t kDefaultMaxUnknowns = 3;

/// A finite group as an indexed element list. Elements are keyed by their
/// canonical rendering; a full product table is cached for small groups.
template <GroupElement E>
class FiniteGroupTable {
 public:
  static constexpr std::size_t kTableLimit = 4096;

  explicit FiniteGroupTable(std::vector<E> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("a group has at least one element");
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (!index_.emplace(to_string(elements_[i]), i).second)
        throw std::invalid_argument("duplicate group element " + to_string(elements_[i]));
    auto id = index_of(elements_.front().identity());
    if (!id) throw std::invalid_argument("element list does not contain the identity");
    identity_ = *id;
    inverses_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) inverses_[i] = require(elements_[i].inverse());
    if (size() <= kTableLimit) {
      table_.resize(size() * size());
      for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
          table_[i * size() + j] = static_cast<std::uint32_t>(require(elements_[i] * elements_[j]));
    }
  }

  std::size_t size() const { return elements_.size(); }
  const E& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<E>& elements() const { return elements_; }
  std::size_t identity_index() const { return identity_; }
  const E& identity() const { return elements_[identity_]; }

  std::optional<std::size_t> index_of(const E& x) const {
    auto it = index_.find(to_string(x));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const E& x) const { return index_of(x).has_value(); }

  std::size_t mul(std::size_t i, std::size_t j) const {
    if (!table_.empty()) return table_[i * size() + j];
    return require(elements_[i] * elements_[j]);
  }
  std::size_t inv(std::size_t i) const { return inverses_[i]; }
  std::size_t conj(std::size_t x, std::size_t h) const { return mul(mul(inv(h), x), h); }
  std::size_t comm(std::size_t x, std::size_t y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  std::size_t pow(std::size_t x, std::int64_t k) const {
    std::size_t base = k < 0 ? inv(x) : x, out = identity_;
    for (std::int64_t n = k < 0 ? -k : k; n > 0; --n) out = mul(out, base);
    return out;
  }

 private:
  std::size_t require(const E& x) const {
    auto i = index_of(x);
    if (!i) throw std::invalid_argument("element list is not closed: " + to_string(x) + " is missing");
    return *i;
  }

  std::vector<E> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverses_;
  std::vector<std::uint32_t> table_;
};

/// Breadth-first closure of the generators under right multiplication.
/// In a finite group this is the generated subgroup.
template <GroupElement E>
FiniteGroupTable<E> group_closure(const std::vector<E>& generators, std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  std::vector<E> elements{generators.front().identity()};
  std::unordered_map<std::string, std::size_t> seen{{to_string(elements.front()), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      E next = elements[head] * g;
      std::string key = to_string(next);
      if (seen.contains(key)) continue;
      if (elements.size() >= cap)
        throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
      seen.emplace(std::move(key), elements.size());
      elements.push_back(std::move(next));
    }
  }
  return FiniteGroupTable<E>(std::move(elements));
}

template <GroupElement E>
FiniteGroupTable<E> derived_subgroup(const FiniteGroupTable<E>& g) {
  std::vector<E> commutators;
  std::vector<bool> taken(g.size(), false);
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      std::size_t c = g.comm(x, y);
      if (!taken[c]) {
        taken[c] = true;
        commutators.push_back(g.element(c));
      }
    }
  return group_closure(commutators, g.size());
}

template <GroupElement E>
bool is_abelian(const FiniteGroupTable<E>& g) {
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = x + 1; y < g.size(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

template <GroupElement E>
bool is_metabelian(const FiniteGroupTable<E>& g) {
  return derived_subgroup(derived_subgroup(g)).size() == 1;
}

/// Left-to-right product of the images of the letters.
template <GroupElement E>
E evaluate_word(const FlatWord& w, const std::map<std::string, E>& assignment, const E& identity) {
  E out = identity;
  for (const auto& l : w.letters()) {
    auto it = assignment.find(l.symbol);
    if (it == assignment.end()) throw std::invalid_argument("symbol '" + l.symbol + "' has no assigned value");
    out = out * (l.sign > 0 ? it->second : it->second.inverse());
  }
  return out;
}

/// Every assignment of the unknowns to elements of `g` that makes all
/// equations evaluate to the identity, in candidate-index order.
template <GroupElement E>
std::vector<std::map<std::string, E>> brute_force_solve(const EquationSystem& sys, const FiniteGroupTable<E>& g,
                                                        const std::map<std::string, E>& coefficients,
                                                        std::size_t max_unknowns = kDefaultMaxUnknowns) {
  const auto& xs = sys.table().unknowns();
  if (xs.size() > max_unknowns)
    throw CapExceeded("brute force supports at most " + std::to_string(max_unknowns) + " unknowns");
  std::map<std::string, std::size_t> coeff_idx;
  for (const auto& c : sys.table().coefficients()) {
    auto it = coefficients.find(c);
    if (it == coefficients.end()) throw std::invalid_argument("coefficient '" + c + "' has no assigned value");
    auto i = g.index_of(it->second);
    if (!i) throw std::invalid_argument("coefficient '" + c + "' is not an element of the group");
    coeff_idx[c] = *i;
  }

  // Letters compiled to (kind, index, sign): unknown slot or fixed element.
  struct Step {
    bool unknown;
    std::size_t index;
    int sign;
  };
  std::vector<std::vector<Step>> programs;
  for (const auto& w : sys.equations()) {
    std::vector<Step> prog;
    for (const auto& l : w.letters()) {
      if (auto j = sys.table().unknown_index(l.symbol))
        prog.push_back({true, *j, l.sign});
      else
        prog.push_back({false, coeff_idx.at(l.symbol), l.sign});
    }
    programs.push_back(std::move(prog));
  }

  std::vector<std::map<std::string, E>> solutions;
  std::vector<std::size_t> cand(xs.size(), 0);
  while (true) {
    bool ok = true;
    for (const auto& prog : programs) {
      std::size_t acc = g.identity_index();
      for (const auto& s : prog) {
        std::size_t v = s.unknown ? cand[s.index] : s.index;
        acc = g.mul(acc, s.sign > 0 ? v : g.inv(v));
      }
      if (acc != g.identity_index()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::map<std::string, E> sol;
      for (std::size_t j = 0; j < xs.size(); ++j) sol.emplace(xs[j], g.element(cand[j]));
      solutions.push_back(std::move(sol));
    }
    std::size_t j = xs.size();
    while (j > 0 && ++cand[j - 1] == g.size()) cand[--j] = 0;
    if (j == 0) break;
  }
  return solutions;
}

/// Exhaustive check of the metabelian identity
///   y^6, u in G'  =>  u u^y u^-y^3 u^-y^4 = 1,  u = x x^-y x^(y^2),
/// over all pairs (x, y). The literal reading u = x x^-y x y^2 is checked
/// alongside and reported separately.
struct Lemma1Report {
  std::size_t group_order = 0;
  std::size_t pairs_tested = 0;
  std::size_t hypothesis_pairs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  std::size_t literal_hypothesis_pairs = 0;
  std::size_t literal_violations = 0;
};

template <GroupElement E>
Lemma1Report lemma1_exhaustive(const FiniteGroupTable<E>& g) {
  const FiniteGroupTable<E> derived = derived_subgroup(g);
  if (derived_subgroup(derived).size() != 1) throw PreconditionError("group is not metabelian");
  std::vector<bool> in_derived(g.size(), false);
  for (const auto& d : derived.elements()) in_derived[*g.index_of(d)] = true;

  auto tail_product = [&](std::size_t u, std::size_t y) {
    // u * u^y * (u^-1)^(y^3) * (u^-1)^(y^4)
    std::size_t ui = g.inv(u);
    std::size_t y3 = g.pow(y, 3), y4 = g.pow(y, 4);
    return g.mul(g.mul(u, g.conj(u, y)), g.mul(g.conj(ui, y3), g.conj(ui, y4)));
  };

  Lemma1Report r;
  r.group_order = g.size();
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      ++r.pairs_tested;
      if (!in_derived[g.pow(y, 6)]) continue;
      std::size_t y2 = g.mul(y, y);
      std::size_t u = g.mul(g.mul(x, g.conj(g.inv(x), y)), g.conj(x, y2));
      if (in_derived[u]) {
        ++r.hypothesis_pairs;
        if (tail_product(u, y) != g.identity_index()) r.violations.emplace_back(x, y);
      }
      std::size_t lit = g.mul(g.mul(x, g.conj(g.inv(x), y)), g.mul(x, y2));
      if (in_derived[lit]) {
        ++r.literal_hypothesis_pairs;
        if (tail_product(lit, y) != g.identity_index()) ++r.literal_violations;
      }
    }
  }
  return r;
}

}  // namespace groupeq
