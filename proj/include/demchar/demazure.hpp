#pragma once

#include <map>
#include <mutex>

#include "demchar/charring.hpp"

namespace demchar {

// (s_alpha, m_alpha) per positive root: lambda(h_alpha) = d_alpha*ell*(s-1) + m,
// 0 < m <= d_alpha*ell.
struct PresentationData {
  struct Entry {
    int64_t s = 1;
    int64_t m = 1;
  };
  std::vector<Entry> per_root;  // indexed like RootSystem::positive_roots()
};

PresentationData presentation_data(const RootSystem& rs, int64_t ell, const Weight& lambda);

// Graded character of D(ell,lambda): delta exponents normalized so the unique
// term of classical weight lambda sits at grade 0; all grades land in Z>=0.
// The e(ell*Lambda0) factor is stripped (level kept on the value for context).
AffineCharacter demazure_character_graded(const RootSystem& rs, int64_t ell,
                                          const Weight& lambda);

// Optional memo for the mod-delta characters; caller-owned, thread-safe.
// Keyed by (type, rank, level, lambda) so one cache can span root systems.
class CharCache {
public:
  const Character* find(const RootSystem& rs, int64_t ell, const Weight& lambda) const;
  const Character& store(const RootSystem& rs, int64_t ell, const Weight& lambda,
                         Character ch);

private:
  using Key = std::tuple<char, int, int64_t, Weight>;
  mutable std::mutex mu_;
  std::map<Key, Character> map_;
};

Character demazure_character(const RootSystem& rs, int64_t ell, const Weight& lambda,
                             CharCache* cache = nullptr);

Coeff demazure_dim(const RootSystem& rs, int64_t ell, const Weight& lambda,
                   CharCache* cache = nullptr);

// ch V(lambda), through the same operator pipeline at level max(1, lambda(h_theta))
Character irr_character(const RootSystem& rs, const Weight& lambda,
                        CharCache* cache = nullptr);

// Weyl dimension formula; the independent oracle for the pipeline
Coeff weyl_dim(const RootSystem& rs, const Weight& lambda);

// Greedy decomposition of a W-invariant character into irreducibles.
// Throws std::runtime_error("not a module character...") when impossible.
std::vector<std::pair<Weight, Coeff>> decompose(const RootSystem& rs, const Character& ch,
                                                CharCache* cache = nullptr);

// multiplicity of V(nu) in V(mu1) (x) V(mu2)
Coeff tensor_mult(const RootSystem& rs, const Weight& nu, const Weight& mu1,
                  const Weight& mu2, CharCache* cache = nullptr);

}  // namespace demchar
