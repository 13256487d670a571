#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "demchar/rootdata.hpp"

using namespace demchar;

namespace {
// classical counts, tabulated independently of the closure generator
const std::vector<std::tuple<char, int, int>> kCounts = {
    {'A', 1, 1},  {'A', 2, 3},  {'A', 3, 6},  {'A', 5, 15}, {'B', 2, 4},
    {'B', 3, 9},  {'B', 5, 25}, {'C', 2, 4},  {'C', 3, 9},  {'C', 5, 25},
    {'D', 3, 6},  {'D', 4, 12}, {'D', 5, 20}, {'E', 6, 36}, {'E', 7, 63},
    {'E', 8, 120}, {'F', 4, 24}, {'G', 2, 6},
};
}  // namespace

TEST_CASE("positive root counts match the classical tables") {
  for (auto [t, n, count] : kCounts) {
    RootSystem rs = RootSystem::build(t, n);
    CHECK(static_cast<int>(rs.positive_roots().size()) == count);
  }
}

TEST_CASE("invalid type or rank combinations are rejected") {
  CHECK_THROWS_AS(RootSystem::build('D', 2), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('C', 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('F', 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('H', 3), std::invalid_argument);
}

TEST_CASE("A1 basics") {
  RootSystem rs = RootSystem::build('A', 1);
  CHECK(rs.positive_roots().size() == 1);
  CHECK(rs.theta().rc == Coords{1});
  CHECK(rs.d(0) == 1);
  Weight omega{1};
  CHECK(rs.pairing(omega, rs.theta()) == Rat(1));
  CHECK(rs.eval_coroot(omega, rs.theta()) == 1);
  CHECK(rs.coweight_basis() == std::vector<Weight>{Weight{1}});
}

TEST_CASE("G2: short simple root has d = 3, normalized pairings") {
  RootSystem rs = RootSystem::build('G', 2);
  CHECK(rs.positive_roots().size() == 6);
  CHECK(rs.d(0) == 1);  // alpha_1 long
  CHECK(rs.d(1) == 3);  // alpha_2 short
  Weight w1{1, 0}, w2{0, 1};
  CHECK(rs.pairing(w1, rs.simple_root(0)) == Rat(1));
  CHECK(rs.pairing(w2, rs.simple_root(1)) == Rat(1, 3));
  // theta = 2 alpha_1 + 3 alpha_2 = omega_1
  CHECK(rs.theta().rc == Coords{2, 3});
  CHECK(rs.theta().wc == Coords{1, 0});
}

TEST_CASE("F4: 24 roots, theta dominant, coroot identity across all roots") {
  RootSystem rs = RootSystem::build('F', 4);
  CHECK(rs.positive_roots().size() == 24);
  Weight sum{1, 1, 1, 1};
  for (const Root& a : rs.positive_roots()) {
    // lambda(h_alpha) = d_alpha (lambda, alpha), exactly
    Rat lhs(rs.eval_coroot(sum, a));
    CHECK(lhs == Rat(a.d_alpha) * rs.pairing(sum, a));
  }
  for (int i = 0; i < 4; ++i) CHECK(rs.theta().wc[i] >= 0);
}

TEST_CASE("B2: omega_2(h_theta) via the normalized form") {
  RootSystem rs = RootSystem::build('B', 2);
  Weight w2{0, 1};
  // 2 (omega_2, theta) / (theta, theta) with (theta,theta) = 2
  Rat norm(0);
  const Root& th = rs.theta();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (th.rc[i] && th.rc[j]) norm += Rat(th.rc[i] * th.rc[j]) * rs.gram(i, j);
  CHECK(norm == Rat(2));
  CHECK(Rat(rs.eval_coroot(w2, th)) == Rat(2) * rs.pairing(w2, th) / norm);
}

TEST_CASE("C3: coweight basis pairs integrally against simple roots") {
  RootSystem rs = RootSystem::build('C', 3);
  auto basis = rs.coweight_basis();
  CHECK(basis[0] == Weight{2, 0, 0});
  CHECK(basis[2] == Weight{0, 0, 1});  // alpha_3 long in C3
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(rs.pairing(basis[i], rs.simple_root(j)) == Rat(i == j ? 1 : 0));
}

TEST_CASE("C2 coweight basis matches the d table") {
  RootSystem rs = RootSystem::build('C', 2);
  auto basis = rs.coweight_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Weight{2, 0});
  CHECK(basis[1] == Weight{0, 1});
}

TEST_CASE("coweight lattice pairs integrally with the root lattice") {
  for (char t : {'A', 'B', 'C', 'D', 'F', 'G'}) {
    int n = (t == 'F') ? 4 : (t == 'G') ? 2 : 3;
    if (t == 'B' || t == 'C') n = 3;
    RootSystem rs = RootSystem::build(t, n);
    auto basis = rs.coweight_basis();
    // mu = combination with coefficients 1..n
    Weight mu(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) mu[j] += (i + 1) * basis[i][j];
    for (const Root& a : rs.positive_roots()) CHECK(rs.pairing(mu, a).is_integer());
  }
}

TEST_CASE("w0 word has length |R+| and sends positive roots to negative") {
  for (auto [t, n, count] : kCounts) {
    if (n > 5) continue;
    RootSystem rs = RootSystem::build(t, n);
    CHECK(static_cast<int>(rs.w0_word().size()) == count);
    for (const Root& a : rs.positive_roots()) {
      Coords img = a.rc;
      for (int i : rs.w0_word()) img = rs.reflect_root(i, img);
      for (int32_t x : img) CHECK(x <= 0);
    }
  }
}

TEST_CASE("A2 w0 word") {
  RootSystem rs = RootSystem::build('A', 2);
  CHECK(rs.w0_word().size() == 3);
  CHECK(rs.w0_on(Weight{1, 0}) == Weight{0, -1});
}

TEST_CASE("Cartan symmetrizer identity c_ij/d_i = c_ji/d_j") {
  for (auto [t, n, count] : kCounts) {
    RootSystem rs = RootSystem::build(t, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(Rat(rs.cartan(i, j), rs.d(i)) == Rat(rs.cartan(j, i), rs.d(j)));
  }
}

TEST_CASE("each root has (alpha,alpha) = 2/d_alpha and theta is long") {
  for (auto [t, n, count] : kCounts) {
    RootSystem rs = RootSystem::build(t, n);
    for (const Root& a : rs.positive_roots()) {
      Rat norm(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (a.rc[i] && a.rc[j]) norm += Rat(a.rc[i] * a.rc[j]) * rs.gram(i, j);
      CHECK(norm == Rat(2, a.d_alpha));
    }
    CHECK(rs.theta().d_alpha == 1);
  }
}

TEST_CASE("Gram matrices are positive definite") {
  for (auto [t, n, count] : kCounts) {
    RootSystem rs = RootSystem::build(t, n);
    for (const Rat& minor : rs.gram_leading_minors()) CHECK(minor > Rat(0));
  }
}

TEST_CASE("pairing is bilinear") {
  RootSystem rs = RootSystem::build('B', 3);
  Weight a{1, 2, 0}, b{0, 1, 3};
  const Root& r = rs.positive_roots()[5];
  CHECK(rs.pairing(a + b, r) == rs.pairing(a, r) + rs.pairing(b, r));
  CHECK(rs.pairing(3 * a, r) == Rat(3) * rs.pairing(a, r));
  CHECK(rs.pairing_weights(a, b) == rs.pairing_weights(b, a));
}
