#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "demchar/rational.hpp"

namespace demchar {

// Integral weight in fundamental-weight coordinates: c[i] = lambda(h_{i+1}).
// Also used for coweight-lattice elements and, with the obvious reading, for
// any integral vector indexed by the simple roots.
using Coords = boost::container::small_vector<int32_t, 8>;

struct Weight {
  Coords c;

  Weight() = default;
  explicit Weight(std::size_t rank) : c(rank, 0) {}
  Weight(std::initializer_list<int32_t> v) : c(v) {}

  std::size_t rank() const { return c.size(); }
  int32_t operator[](std::size_t i) const { return c[i]; }
  int32_t& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const {
    for (int32_t x : c)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a.c == b.c); }
  friend bool operator<(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend Weight operator*(int32_t k, const Weight& a) {
    Weight r = a;
    for (auto& x : r.c) x *= k;
    return r;
  }

  std::string str() const;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : w.c) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// A root carries both coordinate systems: rc in the simple-root basis and
// wc in the fundamental-weight basis (wc = Cartan * rc).
struct Root {
  Coords rc;
  Coords wc;
  int32_t d_alpha = 1;   // 2/(alpha,alpha)
  bool long_flag = true;
  int32_t height = 0;    // sum of rc
};

class RootSystem {
public:
  static RootSystem build(char type_letter, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }

  // cartan(i,j) = alpha_j(h_i), 0-based
  int32_t cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  int32_t d(int i) const { return d_[i]; }
  const std::vector<int32_t>& d() const { return d_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& theta() const { return positive_[theta_idx_]; }
  const Root& simple_root(int i) const { return positive_[simple_idx_[i]]; }

  // gram(i,j) = (alpha_i, alpha_j) under the normalization (theta,theta) = 2
  Rat gram(int i, int j) const { return Rat(cartan_[i * rank_ + j], d_[i]); }

  bool is_dominant(const Weight& w) const {
    for (int32_t x : w.c)
      if (x < 0) return false;
    return true;
  }

  // s_i action on weight coordinates
  Weight reflect(int i, const Weight& w) const {
    Weight r = w;
    int32_t k = w[i];
    for (int j = 0; j < rank_; ++j) r[j] -= k * cartan(j, i);
    return r;
  }

  // s_i action on root coordinates
  Coords reflect_root(int i, const Coords& rc) const {
    int64_t k = 0;
    for (int j = 0; j < rank_; ++j) k += int64_t(cartan(i, j)) * rc[j];
    Coords r = rc;
    r[i] -= static_cast<int32_t>(k);
    return r;
  }

  // (lambda, alpha) for an integral weight and a root
  Rat pairing(const Weight& lambda, const Root& alpha) const {
    Rat s(0);
    for (int j = 0; j < rank_; ++j)
      if (alpha.rc[j] != 0) s += Rat(int64_t(alpha.rc[j]) * lambda[j], d_[j]);
    return s;
  }

  // same, for a rational coordinate vector
  Rat pairing(const std::vector<Rat>& lambda, const Root& alpha) const {
    Rat s(0);
    for (int j = 0; j < rank_; ++j)
      if (alpha.rc[j] != 0) s += lambda[j] * Rat(alpha.rc[j], d_[j]);
    return s;
  }

  // lambda(h_alpha) = d_alpha * (lambda, alpha); always an integer
  int64_t eval_coroot(const Weight& lambda, const Root& alpha) const {
    return (Rat(alpha.d_alpha) * pairing(lambda, alpha)).as_integer();
  }

  // (lambda, mu) for two integral weights
  Rat pairing_weights(const Weight& lambda, const Weight& mu) const {
    Rat s(0);
    for (int j = 0; j < rank_; ++j)
      if (lambda[j] != 0) s += Rat(lambda[j]) * omega_pairing(j, mu);
    return s;
  }

  // sum of simple-root coordinates of mu; positive on Q+ \ {0}
  Rat height_of_weight(const Weight& mu) const {
    Rat s(0);
    for (int j = 0; j < rank_; ++j)
      if (mu[j] != 0) s += Rat(mu[j]) * height_col_[j];
    return s;
  }

  // the same functional cleared of denominators; order-equivalent and cheap
  int64_t scaled_height(const Weight& mu) const {
    int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += mu[j] * height_int_[j];
    return s;
  }

  // whether mu lies in Q+ (all simple-root coordinates non-negative integers)
  bool in_positive_root_lattice(const Weight& mu) const;

  std::vector<Weight> coweight_basis() const {
    std::vector<Weight> basis;
    for (int i = 0; i < rank_; ++i) {
      Weight w(rank_);
      w[i] = d_[i];
      basis.push_back(w);
    }
    return basis;
  }

  // reduced word for w0; application order, see weyl.hpp conventions
  const std::vector<int>& w0_word() const { return w0_word_; }
  Weight w0_on(const Weight& lambda) const;

  Weight rho() const {
    Weight w(rank_);
    for (auto& x : w.c) x = 1;
    return w;
  }

  // leading principal minors of the Gram matrix, for the definiteness check
  std::vector<Rat> gram_leading_minors() const;

private:
  RootSystem() = default;

  Rat omega_pairing(int i, const Weight& mu) const {
    // (omega_i, mu) via mu's simple-root coordinates: sum_j r_j(mu) / d_i * delta...
    // (omega_i, alpha_j) = delta_ij / d_j, so (omega_i, mu) = r_i(mu) / d_i.
    Rat r(0);
    for (int j = 0; j < rank_; ++j)
      if (mu[j] != 0) r += inv_cartan_[i * rank_ + j] * Rat(mu[j]);
    return r / Rat(d_[i]);
  }

  char type_ = '?';
  int rank_ = 0;
  std::vector<int32_t> cartan_;
  std::vector<int32_t> d_;
  std::vector<Root> positive_;
  std::vector<std::size_t> simple_idx_;
  std::size_t theta_idx_ = 0;
  std::vector<Rat> inv_cartan_;   // row-major, inv_cartan[i][j]: root coords of omega_j are column j
  std::vector<Rat> height_col_;   // height_col_[j] = sum_i inv_cartan[i][j]
  std::vector<int64_t> height_int_;  // height_col_ scaled by the common denominator
  std::vector<int> w0_word_;
};

// classical positive-root counts, used as an independent oracle in tests
int expected_positive_root_count(char type, int rank);

}  // namespace demchar
