#pragma once

#include <cstdint>
#include <vector>

#include "demchar/rootdata.hpp"

namespace demchar {

// Affine weight nu + k*Lambda0 + n*delta.  delta exponents are exact
// rationals: translations contribute (mu,mu)/2 which need not be integral.
struct AffineWeight {
  Weight classical;
  int64_t level = 0;
  Rat delta;

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.level == b.level && a.delta == b.delta && a.classical == b.classical;
  }
  friend bool operator!=(const AffineWeight& a, const AffineWeight& b) { return !(a == b); }
  std::string str() const;
};

// <Lambda, alpha_i^vee> for 0 <= i <= rank; alpha_0 = delta - theta
int64_t affine_pairing(const RootSystem& rs, const AffineWeight& w, int i);

// s_i(Lambda) = Lambda - <Lambda, alpha_i^vee> alpha_i
AffineWeight affine_reflect(const RootSystem& rs, int i, const AffineWeight& w);

bool affine_dominant(const RootSystem& rs, const AffineWeight& w);

// (classical norm) + 2*level*delta; invariant under the affine action
Rat extended_norm(const RootSystem& rs, const AffineWeight& w);

// Finite Weyl element stored as a word (i_1 .. i_r) in application order:
// act() applies s_{i_1} first, so the element is s_{i_r} ... s_{i_1}.
class FiniteWeyl {
public:
  FiniteWeyl() = default;
  explicit FiniteWeyl(std::vector<int> word) : word_(std::move(word)) {}

  const std::vector<int>& word() const { return word_; }
  bool is_identity_word() const { return word_.empty(); }

  Weight act(const RootSystem& rs, const Weight& w) const {
    Weight v = w;
    for (int i : word_) v = rs.reflect(i, v);
    return v;
  }
  Coords act_root(const RootSystem& rs, const Coords& rc) const {
    Coords v = rc;
    for (int i : word_) v = rs.reflect_root(i, v);
    return v;
  }
  FiniteWeyl inverse() const {
    return FiniteWeyl(std::vector<int>(word_.rbegin(), word_.rend()));
  }
  // this after other: (this * other)(x) = this(other(x))
  FiniteWeyl compose(const FiniteWeyl& other) const {
    std::vector<int> w = other.word_;
    w.insert(w.end(), word_.begin(), word_.end());
    return FiniteWeyl(std::move(w));
  }
  // canonical image of rho; equal images <=> equal elements
  Weight canonical(const RootSystem& rs) const { return act(rs, rs.rho()); }
  int length(const RootSystem& rs) const;

private:
  std::vector<int> word_;
};

// enumerate all elements of the finite Weyl group (by BFS over words)
std::vector<FiniteWeyl> enumerate_weyl_group(const RootSystem& rs);

// reduced word of the element sending rho to the given regular weight
FiniteWeyl finite_from_rho_image(const RootSystem& rs, const Weight& image);

// Element of W ltimes t_L acting as finite_part o t_translation.
struct ExtendedWeylElement {
  FiniteWeyl finite_part;
  Weight translation;  // mu = sum m_i d_i omega_i, checked on construction

  static ExtendedWeylElement make(const RootSystem& rs, FiniteWeyl w, Weight mu);
  static ExtendedWeylElement make_translation(const RootSystem& rs, const Weight& mu) {
    return make(rs, FiniteWeyl(), mu);
  }
};

// t_mu(Lambda) = (nu + k*mu) + k*Lambda0 + (n - (nu,mu) - k*(mu,mu)/2) delta
AffineWeight translate(const RootSystem& rs, const Weight& mu, const AffineWeight& w);

AffineWeight act(const RootSystem& rs, const ExtendedWeylElement& x, const AffineWeight& w);

// x * y (composition of actions)
ExtendedWeylElement compose(const RootSystem& rs, const ExtendedWeylElement& x,
                            const ExtendedWeylElement& y);

// Real affine root alpha + r*delta in root coordinates.
struct AffineRoot {
  Coords rc;
  int64_t r = 0;
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.r == b.r && a.rc == b.rc;
  }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    if (a.r != b.r) return a.r < b.r;
    return std::lexicographical_compare(a.rc.begin(), a.rc.end(), b.rc.begin(), b.rc.end());
  }
};

// { alpha in R^+_affine : x(alpha) negative }; pure-imaginary roots never occur
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const ExtendedWeylElement& x);

inline std::size_t length(const RootSystem& rs, const ExtendedWeylElement& x) {
  return inversion_set(rs, x).size();
}

struct DominantChamberResult {
  AffineWeight dominant;
  std::vector<int> word;  // application order: s_{word.back()} ... s_{word.front()} Lambda = dominant
};

// Descend Lambda (level > 0) to the dominant chamber, smallest negative index
// first.  Only strictly negative pairings are ever reflected.
DominantChamberResult to_dominant(const RootSystem& rs, const AffineWeight& w);

// Element spelled by an affine word (letters 0..rank, application order),
// with s_0 = s_theta t_{theta^vee}.
ExtendedWeylElement ext_from_affine_word(const RootSystem& rs, const std::vector<int>& word);

}  // namespace demchar
