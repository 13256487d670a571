#include "demchar/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace demchar {

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

int expected_positive_root_count(char type, int rank) {
  switch (type) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

namespace {

struct TypeData {
  std::vector<int32_t> cartan;  // row-major, c[i][j] = alpha_j(h_i)
  std::vector<int32_t> d;
};

TypeData type_data(char type, int n) {
  auto bad = [&](const std::string& why) {
    std::ostringstream os;
    os << "invalid simple type " << type << n << ": " << why;
    throw std::invalid_argument(os.str());
  };
  if (n < 1) bad("rank must be positive");
  if (n > 64) bad("rank exceeds supported limit 64");

  TypeData t;
  t.cartan.assign(std::size_t(n) * n, 0);
  t.d.assign(n, 1);
  auto C = [&](int i, int j) -> int32_t& { return t.cartan[std::size_t(i) * n + j]; };
  for (int i = 0; i < n; ++i) C(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) { C(i, i + 1) = -1; C(i + 1, i) = -1; }
  };

  switch (type) {
    case 'A':
      chain(n);
      break;
    case 'B':
      if (n < 2) bad("type B needs rank >= 2");
      chain(n);
      C(n - 1, n - 2) = -2;  // alpha_n short
      t.d[n - 1] = 2;
      break;
    case 'C':
      if (n < 2) bad("type C needs rank >= 2");
      chain(n);
      C(n - 2, n - 1) = -2;  // alpha_n long, the rest short
      for (int i = 0; i + 1 < n; ++i) t.d[i] = 2;
      break;
    case 'D':
      if (n < 3) bad("type D needs rank >= 3");
      chain(n - 1);
      C(n - 3, n - 1) = -1;
      C(n - 1, n - 3) = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) bad("type E needs rank 6, 7 or 8");
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4
      auto link = [&](int a, int b) { C(a - 1, b - 1) = -1; C(b - 1, a - 1) = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int a = 4; a < n; ++a) link(a, a + 1);
      break;
    }
    case 'F':
      if (n != 4) bad("type F needs rank 4");
      t.cartan = {2, -1, 0, 0, -1, 2, -1, 0, 0, -2, 2, -1, 0, 0, -1, 2};
      t.d = {1, 1, 2, 2};
      break;
    case 'G':
      if (n != 2) bad("type G needs rank 2");
      t.cartan = {2, -1, -3, 2};
      t.d = {1, 3};
      break;
    default:
      bad("unknown type letter");
  }
  return t;
}

}  // namespace

RootSystem RootSystem::build(char type_letter, int rank) {
  TypeData td = type_data(type_letter, rank);
  RootSystem rs;
  rs.type_ = type_letter;
  rs.rank_ = rank;
  rs.cartan_ = std::move(td.cartan);
  rs.d_ = std::move(td.d);
  const int n = rank;

  // positive roots by closure from the simple roots, height-increasing frontier
  std::set<Coords> known;
  std::vector<Coords> by_height_order;
  for (int i = 0; i < n; ++i) {
    Coords rc(n, 0);
    rc[i] = 1;
    known.insert(rc);
    by_height_order.push_back(rc);
  }
  std::vector<Coords> frontier = by_height_order;
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const Coords& rc : frontier) {
      for (int i = 0; i < n; ++i) {
        // alpha(h_i)
        int64_t k = 0;
        for (int j = 0; j < n; ++j) k += int64_t(rs.cartan(i, j)) * rc[j];
        // p = largest step down the alpha_i string
        int p = 0;
        Coords down = rc;
        while (true) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int32_t x) { return x == 0; });
          if (zero) break;  // hit the origin, string ends below alpha_i
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - k >= 1) {
          Coords up = rc;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    // deterministic ordering inside a height level
    std::sort(next.begin(), next.end());
    for (auto& rc : next) by_height_order.push_back(rc);
    frontier = std::move(next);
  }

  std::stable_sort(by_height_order.begin(), by_height_order.end(),
                   [](const Coords& a, const Coords& b) {
                     int ha = 0, hb = 0;
                     for (int32_t x : a) ha += x;
                     for (int32_t x : b) hb += x;
                     if (ha != hb) return ha < hb;
                     return a < b;
                   });

  for (const Coords& rc : by_height_order) {
    Root r;
    r.rc = rc;
    r.wc.assign(n, 0);
    int h = 0;
    for (int i = 0; i < n; ++i) {
      int64_t w = 0;
      for (int j = 0; j < n; ++j) w += int64_t(rs.cartan(i, j)) * rc[j];
      r.wc[i] = static_cast<int32_t>(w);
      h += rc[i];
    }
    r.height = h;
    // (alpha,alpha) = sum_ij rc_i rc_j (alpha_i,alpha_j)
    Rat norm(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rc[i] && rc[j]) norm += Rat(int64_t(rc[i]) * rc[j]) * rs.gram(i, j);
    Rat da = Rat(2) / norm;
    r.d_alpha = static_cast<int32_t>(da.as_integer());
    r.long_flag = (r.d_alpha == 1);
    rs.positive_.push_back(std::move(r));
  }
  rs.theta_idx_ = rs.positive_.size() - 1;
  rs.simple_idx_.assign(n, 0);
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    const Root& r = rs.positive_[k];
    if (r.height == 1)
      for (int i = 0; i < n; ++i)
        if (r.rc[i] == 1) rs.simple_idx_[i] = k;
  }

  // sanity: theta unique at maximal height and dominant
  {
    const Root& th = rs.positive_[rs.theta_idx_];
    if (rs.positive_.size() >= 2 &&
        rs.positive_[rs.positive_.size() - 2].height == th.height)
      throw std::logic_error("root closure produced a non-unique highest root");
    for (int i = 0; i < n; ++i)
      if (th.wc[i] < 0) throw std::logic_error("highest root is not dominant");
    if (!th.long_flag) throw std::logic_error("highest root is not long");
  }

  // exact inverse of the Cartan matrix (Gauss-Jordan over Rat)
  {
    std::vector<Rat> m(std::size_t(n) * 2 * n);
    auto M = [&](int i, int j) -> Rat& { return m[std::size_t(i) * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M(i, j) = Rat(rs.cartan(i, j));
      M(i, n + i) = Rat(1);
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!M(r, col).is_zero()) { piv = r; break; }
      if (piv < 0) throw std::logic_error("Cartan matrix is singular");
      if (piv != col)
        for (int j = 0; j < 2 * n; ++j) std::swap(M(piv, j), M(col, j));
      Rat inv = Rat(1) / M(col, col);
      for (int j = 0; j < 2 * n; ++j) M(col, j) *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || M(r, col).is_zero()) continue;
        Rat f = M(r, col);
        for (int j = 0; j < 2 * n; ++j) M(r, j) -= f * M(col, j);
      }
    }
    rs.inv_cartan_.resize(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rs.inv_cartan_[std::size_t(i) * n + j] = M(i, n + j);
    rs.height_col_.assign(n, Rat(0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) rs.height_col_[j] += rs.inv_cartan_[std::size_t(i) * n + j];
    int64_t lcm = 1;
    for (int j = 0; j < n; ++j)
      lcm = std::lcm(lcm, rs.height_col_[j].den());
    rs.height_int_.assign(n, 0);
    for (int j = 0; j < n; ++j)
      rs.height_int_[j] = (rs.height_col_[j] * Rat(lcm)).as_integer();
  }

  // w0 word by descent from a strictly anti-dominant weight; recorded in
  // application order (first reflection applied first)
  {
    Weight v(n);
    for (int i = 0; i < n; ++i) v[i] = -1;
    std::vector<int> word;
    const std::size_t cap = 4 * rs.positive_.size() + 16;
    while (true) {
      int i = -1;
      for (int j = 0; j < n; ++j)
        if (v[j] < 0) { i = j; break; }
      if (i < 0) break;
      v = rs.reflect(i, v);
      word.push_back(i);
      if (word.size() > cap) throw std::logic_error("w0 descent failed to terminate");
    }
    if (word.size() != rs.positive_.size())
      throw std::logic_error("w0 word length does not match the positive-root count");
    rs.w0_word_ = std::move(word);
  }

  if (static_cast<int>(rs.positive_.size()) != expected_positive_root_count(type_letter, rank))
    throw std::logic_error("root closure count disagrees with the classical count");

  return rs;
}

bool RootSystem::in_positive_root_lattice(const Weight& mu) const {
  for (int i = 0; i < rank_; ++i) {
    Rat ri(0);
    for (int j = 0; j < rank_; ++j)
      if (mu[j] != 0) ri += inv_cartan_[std::size_t(i) * rank_ + j] * Rat(mu[j]);
    if (!ri.is_integer() || ri.as_integer() < 0) return false;
  }
  return true;
}

Weight RootSystem::w0_on(const Weight& lambda) const {
  // w0 = s_{i_r} ... s_{i_1} for word (i_1 .. i_r) in application order
  Weight v = lambda;
  for (int i : w0_word_) v = reflect(i, v);
  return v;
}

std::vector<Rat> RootSystem::gram_leading_minors() const {
  std::vector<Rat> minors;
  // fraction-free enough at rank <= 8: plain Gaussian elimination per minor
  for (int k = 1; k <= rank_; ++k) {
    std::vector<Rat> m(std::size_t(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[std::size_t(i) * k + j] = gram(i, j);
    Rat det(1);
    bool zero = false;
    for (int col = 0; col < k && !zero; ++col) {
      int piv = -1;
      for (int r = col; r < k; ++r)
        if (!m[std::size_t(r) * k + col].is_zero()) { piv = r; break; }
      if (piv < 0) { zero = true; break; }
      if (piv != col) {
        for (int j = 0; j < k; ++j)
          std::swap(m[std::size_t(piv) * k + j], m[std::size_t(col) * k + j]);
        det = -det;
      }
      Rat p = m[std::size_t(col) * k + col];
      det *= p;
      for (int r = col + 1; r < k; ++r) {
        Rat f = m[std::size_t(r) * k + col] / p;
        if (f.is_zero()) continue;
        for (int j = col; j < k; ++j)
          m[std::size_t(r) * k + j] -= f * m[std::size_t(col) * k + j];
      }
    }
    minors.push_back(zero ? Rat(0) : det);
  }
  return minors;
}

}  // namespace demchar
