#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "demchar/weyl.hpp"

namespace demchar {

using Coeff = boost::multiprecision::cpp_int;

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Process-wide guard against runaway character sizes; operations throw
// BudgetExceeded instead of exhausting memory.
void set_term_budget(std::size_t budget);
std::size_t term_budget();

// ---------------------------------------------------------------------------
// Z[P]: finite integer formal sums of e(mu), mu a classical weight.

class Character {
public:
  using Map = std::unordered_map<Weight, Coeff, WeightHash>;

  Character() = default;
  static Character monomial(const Weight& mu, Coeff c = 1) {
    Character ch;
    if (c != 0) ch.terms_[mu] = std::move(c);
    return ch;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Weight& mu, const Coeff& c);

  Coeff dim() const {
    Coeff s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  friend Character operator+(const Character& a, const Character& b);
  friend Character operator-(const Character& a, const Character& b);
  friend Character operator*(const Character& a, const Character& b);
  Character scaled(const Coeff& k) const;

  friend bool operator==(const Character& a, const Character& b);
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

  // sorted by weight coordinates; the canonical order for serialization
  std::vector<std::pair<Weight, Coeff>> sorted_terms() const;

private:
  Map terms_;
};

bool w_invariant(const RootSystem& rs, const Character& ch);

// Exact division by a divisor whose support has a unique maximal weight
// (by height, then lex) with coefficient 1.  Returns the quotient iff the
// division is exact.
std::optional<Character> try_divide(const RootSystem& rs, const Character& num,
                                    const Character& den);

// ---------------------------------------------------------------------------
// Z[P^] at a fixed level: terms are (classical weight, delta exponent).

struct AffineTermKey {
  Weight classical;
  Rat delta;
  friend bool operator==(const AffineTermKey& a, const AffineTermKey& b) {
    return a.delta == b.delta && a.classical == b.classical;
  }
};

struct AffineTermKeyHash {
  std::size_t operator()(const AffineTermKey& k) const {
    uint64_t h = WeightHash{}(k.classical);
    h ^= 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(k.delta.num());
    h *= 1099511628211ull;
    h ^= static_cast<uint64_t>(k.delta.den());
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

class AffineCharacter {
public:
  using Map = std::unordered_map<AffineTermKey, Coeff, AffineTermKeyHash>;

  AffineCharacter() = default;
  explicit AffineCharacter(int64_t level) : level_(level) {}

  static AffineCharacter monomial(const AffineWeight& w, Coeff c = 1) {
    AffineCharacter ch(w.level);
    if (c != 0) ch.terms_[AffineTermKey{w.classical, w.delta}] = std::move(c);
    return ch;
  }

  int64_t level() const { return level_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Weight& mu, const Rat& delta) const {
    auto it = terms_.find(AffineTermKey{mu, delta});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Weight& mu, const Rat& delta, const Coeff& c);

  Coeff dim() const {
    Coeff s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  friend AffineCharacter operator+(const AffineCharacter& a, const AffineCharacter& b);
  friend AffineCharacter operator-(const AffineCharacter& a, const AffineCharacter& b);
  // levels and delta exponents add
  friend AffineCharacter operator*(const AffineCharacter& a, const AffineCharacter& b);

  friend bool operator==(const AffineCharacter& a, const AffineCharacter& b);
  friend bool operator!=(const AffineCharacter& a, const AffineCharacter& b) {
    return !(a == b);
  }

  std::vector<std::pair<AffineTermKey, Coeff>> sorted_terms() const;

private:
  int64_t level_ = 0;
  Map terms_;
};

// e(mu) -> e(mu + 0*Lambda0 + 0*delta)
AffineCharacter embed_level0(const Character& ch);

// set e(delta) = 1: sum over delta exponents per classical weight
Character project_mod_delta(const AffineCharacter& ch);

// Demazure operator D_i, term by term via the closed geometric-sum form.
AffineCharacter demazure_op(const RootSystem& rs, int i, const AffineCharacter& ch);

// D_{i_1} o ... o D_{i_r}: the last letter of word acts first, matching
// reduced words written left to right.
AffineCharacter apply_word(const RootSystem& rs, const std::vector<int>& word,
                           const AffineCharacter& ch);

}  // namespace demchar
