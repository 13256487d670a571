#include "demchar/charring.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace demchar {

namespace {
std::atomic<std::size_t> g_term_budget{5'000'000};

void check_budget(std::size_t n, const char* where) {
  if (n > g_term_budget.load(std::memory_order_relaxed))
    throw BudgetExceeded(std::string(where) + ": term budget exceeded (" +
                         std::to_string(n) + " terms)");
}
}  // namespace

void set_term_budget(std::size_t budget) { g_term_budget.store(budget); }
std::size_t term_budget() { return g_term_budget.load(); }

// --------------------------------------------------------------------------

void Character::add_term(const Weight& mu, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  check_budget(terms_.size(), "Character::add_term");
}

Character operator+(const Character& a, const Character& b) {
  Character r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

Character operator-(const Character& a, const Character& b) {
  Character r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
  return r;
}

Character operator*(const Character& a, const Character& b) {
  const Character& small = a.size() <= b.size() ? a : b;
  const Character& big = a.size() <= b.size() ? b : a;
  Character r;
  for (const auto& [wa, ca] : small.terms_)
    for (const auto& [wb, cb] : big.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

Character Character::scaled(const Coeff& k) const {
  Character r;
  if (k == 0) return r;
  for (const auto& [w, c] : terms_) r.terms_[w] = c * k;
  return r;
}

bool operator==(const Character& a, const Character& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [w, c] : a.terms_) {
    auto it = b.terms_.find(w);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::vector<std::pair<Weight, Coeff>> Character::sorted_terms() const {
  std::vector<std::pair<Weight, Coeff>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

bool w_invariant(const RootSystem& rs, const Character& ch) {
  for (int i = 0; i < rs.rank(); ++i)
    for (const auto& [w, c] : ch.terms()) {
      if (ch.coeff(rs.reflect(i, w)) != c) return false;
    }
  return true;
}

namespace {
// (scaled height, lex) key, ordered descending so a map's begin() is the top
struct OrderKey {
  int64_t h;
  Weight w;
  bool operator<(const OrderKey& o) const {
    if (h != o.h) return h > o.h;
    return o.w < w;
  }
};
}  // namespace

std::optional<Character> try_divide(const RootSystem& rs, const Character& num,
                                    const Character& den) {
  if (den.empty()) return std::nullopt;
  std::vector<std::pair<Weight, Coeff>> den_terms(den.terms().begin(), den.terms().end());
  const Weight* top = nullptr;
  int64_t top_h = 0, min_den = 0, min_num = 0;
  bool first = true;
  for (const auto& [w, c] : den_terms) {
    int64_t h = rs.scaled_height(w);
    if (first) {
      top = &w;
      top_h = min_den = h;
      first = false;
      continue;
    }
    if (h > top_h || (h == top_h && *top < w)) { top = &w; top_h = h; }
    min_den = std::min(min_den, h);
  }
  if (den.coeff(*top) != 1) return std::nullopt;
  if (num.empty()) return Character();

  std::map<OrderKey, Coeff> rem;
  first = true;
  for (const auto& [w, c] : num.terms()) {
    int64_t h = rs.scaled_height(w);
    min_num = first ? h : std::min(min_num, h);
    first = false;
    rem.emplace(OrderKey{h, w}, c);
  }
  // exact quotients live above min(num) - min(den) in the height order;
  // crossing that line or outrunning any possible quotient proves failure
  const int64_t floor_height = min_num - min_den + top_h;
  std::size_t iterations_left = 64 + 2 * num.size();

  Character quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->first.h < floor_height) return std::nullopt;
    if (iterations_left-- == 0) return std::nullopt;
    const Weight& rt = it->first.w;
    Weight q(rt.rank());
    for (std::size_t j = 0; j < q.rank(); ++j) q[j] = rt[j] - (*top)[j];
    Coeff c = it->second;
    quot.add_term(q, c);
    int64_t qh = it->first.h - top_h;
    for (const auto& [w, dc] : den_terms) {
      OrderKey key{qh + rs.scaled_height(w), w + q};
      auto [slot, inserted] = rem.try_emplace(key, Coeff(0));
      slot->second -= c * dc;
      if (slot->second == 0) rem.erase(slot);
    }
  }
  return quot;
}

// --------------------------------------------------------------------------

void AffineCharacter::add_term(const Weight& mu, const Rat& delta, const Coeff& c) {
  if (c == 0) return;
  AffineTermKey k{mu, delta};
  auto [it, inserted] = terms_.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  check_budget(terms_.size(), "AffineCharacter::add_term");
}

AffineCharacter operator+(const AffineCharacter& a, const AffineCharacter& b) {
  if (a.level_ != b.level_)
    throw std::invalid_argument("affine character addition: level mismatch");
  AffineCharacter r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.classical, k.delta, c);
  return r;
}

AffineCharacter operator-(const AffineCharacter& a, const AffineCharacter& b) {
  if (a.level_ != b.level_)
    throw std::invalid_argument("affine character subtraction: level mismatch");
  AffineCharacter r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.classical, k.delta, -c);
  return r;
}

AffineCharacter operator*(const AffineCharacter& a, const AffineCharacter& b) {
  AffineCharacter r(a.level_ + b.level_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.classical + kb.classical, ka.delta + kb.delta, ca * cb);
  return r;
}

bool operator==(const AffineCharacter& a, const AffineCharacter& b) {
  if (a.level_ != b.level_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [k, c] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::vector<std::pair<AffineTermKey, Coeff>> AffineCharacter::sorted_terms() const {
  std::vector<std::pair<AffineTermKey, Coeff>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first.classical != y.first.classical) return x.first.classical < y.first.classical;
    return x.first.delta < y.first.delta;
  });
  return v;
}

AffineCharacter embed_level0(const Character& ch) {
  AffineCharacter r(0);
  for (const auto& [w, c] : ch.terms()) r.add_term(w, Rat(0), c);
  return r;
}

Character project_mod_delta(const AffineCharacter& ch) {
  Character r;
  for (const auto& [k, c] : ch.terms()) r.add_term(k.classical, c);
  return r;
}

AffineCharacter demazure_op(const RootSystem& rs, int i, const AffineCharacter& ch) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("demazure_op: bad index");
  AffineCharacter out(ch.level());
  const Root& th = rs.theta();
  for (const auto& [key, c] : ch.terms()) {
    AffineWeight w{key.classical, ch.level(), key.delta};
    int64_t k = affine_pairing(rs, w, i);
    if (k >= 0) {
      // sum_{j=0..k} e(Lambda - j alpha_i)
      for (int64_t j = 0; j <= k; ++j) {
        Weight mu = key.classical;
        Rat delta = key.delta;
        if (i == 0) {
          for (int m = 0; m < rs.rank(); ++m) mu[m] += static_cast<int32_t>(j * th.wc[m]);
          delta -= Rat(j);
        } else {
          for (int m = 0; m < rs.rank(); ++m)
            mu[m] -= static_cast<int32_t>(j * rs.cartan(m, i - 1));
        }
        out.add_term(mu, delta, c);
      }
    } else if (k <= -2) {
      // -sum_{j=1..-k-1} e(Lambda + j alpha_i)
      for (int64_t j = 1; j <= -k - 1; ++j) {
        Weight mu = key.classical;
        Rat delta = key.delta;
        if (i == 0) {
          for (int m = 0; m < rs.rank(); ++m) mu[m] -= static_cast<int32_t>(j * th.wc[m]);
          delta += Rat(j);
        } else {
          for (int m = 0; m < rs.rank(); ++m)
            mu[m] += static_cast<int32_t>(j * rs.cartan(m, i - 1));
        }
        out.add_term(mu, delta, -c);
      }
    }
    // k == -1 contributes nothing
  }
  return out;
}

AffineCharacter apply_word(const RootSystem& rs, const std::vector<int>& word,
                           const AffineCharacter& ch) {
  AffineCharacter r = ch;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure_op(rs, *it, r);
  return r;
}

}  // namespace demchar
