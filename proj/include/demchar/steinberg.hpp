#pragma once

#include <optional>
#include <string>

#include "demchar/demazure.hpp"

namespace demchar {

// lambda = ell*mu + lambda0 with mu in L+ and lambda0(h_i) in [0, ell*d_i)
struct SteinbergSplit {
  Weight mu;       // coweight-lattice element
  Weight lambda0;  // remainder
  std::vector<int32_t> coweight_coeffs;  // mu = sum coeffs[i] * d_i omega_i
};

SteinbergSplit steinberg_split(const RootSystem& rs, int64_t ell, const Weight& lambda);

// ch D(ell,lambda) = ch D(ell,ell*mu) * ch D(ell,lambda0) for the canonical
// split, plus the coweight-basis dimension product refinement.
bool verify_factorization(const RootSystem& rs, int64_t ell, const Weight& lambda,
                          CharCache* cache = nullptr);

// |(ell*mu - lambda, alpha)| <= ell for every positive root
bool key_valid(const RootSystem& rs, int64_t ell, const Weight& lambda, const Weight& mu);

// smallest (lexicographic in coweight coefficients) valid mu with
// coefficients <= coord_bound, if any
std::optional<Weight> key_search_brute(const RootSystem& rs, int64_t ell,
                                       const Weight& lambda, int coord_bound = 3);

// constructive mu for the classical types and G2; requires lambda(h_i) <= d_i*ell.
// Throws std::invalid_argument for types E and F.
Weight key_construct(const RootSystem& rs, int64_t ell, const Weight& lambda);

// finite Weyl element taking ell*(-w0 mu) + w0(lambda) to the dominant chamber
// with value <= ell on h_theta; empty iff the key inequality fails for mu
std::optional<FiniteWeyl> dominant_witness(const RootSystem& rs, int64_t ell,
                                           const Weight& lambda, const Weight& mu);

// ---------------------------------------------------------------------------
// appendix-style fixtures

struct TableFixture {
  char type = '?';
  int rank = 0;
  int64_t ell = 0;
  std::vector<std::pair<Weight, Weight>> rows;  // (lambda, mu), printed order
};

// CSV: "type,rank,ell" header line, a value line, then lambda/mu coordinate rows
TableFixture load_fixture(const std::string& path);
TableFixture parse_fixture(const std::string& text, const std::string& origin);

struct TableReport {
  std::string configured_convention;
  std::vector<std::size_t> failing_rows;           // under the configured convention
  std::optional<std::string> passing_convention;   // convention validating all rows
  std::size_t rows_total = 0;
  bool ok() const { return passing_convention.has_value(); }
};

// Per-row key_valid under the configured numbering; on failure retries the
// other standard conventions and reports which (if any) validates every row.
TableReport verify_table(const TableFixture& fixture,
                         const std::string& convention = "bourbaki",
                         int threads = 1);

std::vector<std::string> known_conventions();

}  // namespace demchar
