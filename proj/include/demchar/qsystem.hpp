#pragma once

#include <set>

#include "demchar/demazure.hpp"

namespace demchar {

// omega_i(h_alpha) <= 1 for every positive root (1-based node index)
bool minuscule(const RootSystem& rs, int i);

// Mixed-level Q-system identity at character level (mod delta):
//   ch D(l,l*w_i) ch D(l,lam) =
//     ch D(l,l*nu1) ch D(l,nu0) + ch D(l+1,(l+1)w_i) ch D(l+1,lam-w_i)
// with nu = l*w_i + lam - lam(h_i) alpha_i split canonically.
bool qsystem_identity(const RootSystem& rs, int64_t ell, int i, const Weight& lambda,
                      CharCache* cache = nullptr);

// ch V(l*w_i)^2 = ch V((l+1)w_i) ch V((l-1)w_i) + prod_{j~i} ch D(l,l*w_j)
bool classical_qsystem(const RootSystem& rs, int64_t ell, int i, CharCache* cache = nullptr);

// For every nu on either side:
//   dim Hom(V(nu), V(d_i(l+1)w_i) (x) V(mu)) <=
//   dim Hom(V(nu), V(d_i*l*w_i)   (x) V(mu + d_i w_i))
bool schur_compare(const RootSystem& rs, int64_t ell, int i, const Weight& mu,
                   CharCache* cache = nullptr);

struct PrimeVerdict {
  bool prime = true;
  // present iff !prime
  Character factor1, factor2;
  std::vector<std::pair<Weight, Coeff>> factor1_decomp, factor2_decomp;
  Weight mu1, mu2;  // highest weights of the factors
  // exhaustion certificate
  std::size_t splittings_examined = 0;
  std::size_t candidates_examined = 0;
  std::size_t candidate_budget = 0;  // the bound the search ran under
};

// Character-level tensor-factorization search for ch D(ell,lambda).
// Throws BudgetExceeded (never reports Prime) when the candidate budget runs out.
PrimeVerdict prime_certificate(const RootSystem& rs, int64_t ell, const Weight& lambda,
                               CharCache* cache = nullptr,
                               std::size_t candidate_budget = 2'000'000);

bool support_disjoint(const Weight& mu1, const Weight& mu2);

// Connected type-A subdiagram meeting each non-zero support exactly once
// (types A, D, E; requires disjoint supports).  1-based node indices.
std::vector<int> choose_connected_j(const RootSystem& rs, const Weight& nu1,
                                    const Weight& nu2);

}  // namespace demchar
