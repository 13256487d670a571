#include "demchar/qsystem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "demchar/steinberg.hpp"

namespace demchar {

bool minuscule(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("minuscule: bad node index");
  Weight w(rs.rank());
  w[i - 1] = 1;
  for (const Root& a : rs.positive_roots())
    if (rs.eval_coroot(w, a) > 1) return false;
  return true;
}

namespace {
Weight fundamental(const RootSystem& rs, int i, int64_t scale = 1) {
  Weight w(rs.rank());
  w[i - 1] = static_cast<int32_t>(scale);
  return w;
}

int64_t max_coroot_value(const RootSystem& rs, const Weight& lambda) {
  int64_t m = 0;
  for (const Root& a : rs.positive_roots())
    m = std::max(m, rs.eval_coroot(lambda, a));
  return m;
}
}  // namespace

bool qsystem_identity(const RootSystem& rs, int64_t ell, int i, const Weight& lambda,
                      CharCache* cache) {
  if (rs.type() != 'A' && rs.type() != 'D')
    throw std::invalid_argument("qsystem_identity: requires type A or D");
  if (!minuscule(rs, i))
    throw std::invalid_argument("qsystem_identity: node " + std::to_string(i) +
                                " is not minuscule");
  if (!rs.is_dominant(lambda) || lambda[i - 1] < 1)
    throw std::invalid_argument("qsystem_identity: requires lambda(h_i) >= 1");
  if (ell < max_coroot_value(rs, lambda))
    throw std::invalid_argument("qsystem_identity: requires ell >= max lambda(h_alpha)");

  CharCache local;
  if (!cache) cache = &local;

  // nu = ell*omega_i + lambda - lambda(h_i) alpha_i
  Weight nu = lambda;
  nu[i - 1] += static_cast<int32_t>(ell);
  int32_t li = lambda[i - 1];
  for (int j = 0; j < rs.rank(); ++j) nu[j] -= li * rs.cartan(j, i - 1);
  if (!rs.is_dominant(nu)) throw std::logic_error("qsystem_identity: nu not dominant");

  SteinbergSplit sp = steinberg_split(rs, ell, nu);
  Weight ellnu1 = sp.mu;
  for (auto& x : ellnu1.c) x = static_cast<int32_t>(x * ell);

  Weight lam_minus = lambda;
  lam_minus[i - 1] -= 1;

  Character lhs = demazure_character(rs, ell, fundamental(rs, i, ell), cache) *
                  demazure_character(rs, ell, lambda, cache);
  Character rhs = demazure_character(rs, ell, ellnu1, cache) *
                      demazure_character(rs, ell, sp.lambda0, cache) +
                  demazure_character(rs, ell + 1, fundamental(rs, i, ell + 1), cache) *
                      demazure_character(rs, ell + 1, lam_minus, cache);
  return lhs == rhs;
}

bool classical_qsystem(const RootSystem& rs, int64_t ell, int i, CharCache* cache) {
  bool simply_laced = rs.type() == 'A' || rs.type() == 'D' || rs.type() == 'E';
  if (!(rs.type() == 'A' || (simply_laced && minuscule(rs, i))))
    throw std::invalid_argument("classical_qsystem: needs type A or a minuscule node in ADE");
  if (ell < 1) throw std::invalid_argument("classical_qsystem: level must be >= 1");

  CharCache local;
  if (!cache) cache = &local;

  Character lhs = irr_character(rs, fundamental(rs, i, ell), cache);
  lhs = lhs * lhs;
  Character image = irr_character(rs, fundamental(rs, i, ell + 1), cache) *
                    irr_character(rs, fundamental(rs, i, ell - 1), cache);
  Character kernel = Character::monomial(Weight(rs.rank()));
  for (int j = 1; j <= rs.rank(); ++j) {
    if (j == i || rs.cartan(i - 1, j - 1) == 0) continue;
    kernel = kernel * demazure_character(rs, ell, fundamental(rs, j, ell), cache);
  }
  return lhs == image + kernel;
}

bool schur_compare(const RootSystem& rs, int64_t ell, int i, const Weight& mu,
                   CharCache* cache) {
  if (!minuscule(rs, i))
    throw std::invalid_argument("schur_compare: node " + std::to_string(i) +
                                " fails omega_i(h_alpha) <= 1");
  if (!rs.is_dominant(mu)) throw std::invalid_argument("schur_compare: mu must be dominant");
  int64_t di = rs.d(i - 1);
  if (ell - di < max_coroot_value(rs, mu))
    throw std::invalid_argument("schur_compare: requires ell - d_i >= max mu(h_alpha)");

  CharCache local;
  if (!cache) cache = &local;

  Weight mu_plus = mu;
  mu_plus[i - 1] += static_cast<int32_t>(di);
  Character big = irr_character(rs, fundamental(rs, i, di * (ell + 1)), cache) *
                  irr_character(rs, mu, cache);
  Character small = irr_character(rs, fundamental(rs, i, di * ell), cache) *
                    irr_character(rs, mu_plus, cache);

  std::map<Weight, Coeff> lhs, rhs;
  for (auto& [w, c] : decompose(rs, big, cache)) lhs[w] = c;
  for (auto& [w, c] : decompose(rs, small, cache)) rhs[w] = c;
  for (const auto& [w, c] : lhs) {
    auto it = rhs.find(w);
    if (it == rhs.end() ? c > 0 : c > it->second) return false;
  }
  return true;
}

PrimeVerdict prime_certificate(const RootSystem& rs, int64_t ell, const Weight& lambda,
                               CharCache* cache, std::size_t candidate_budget) {
  if (!(rs.type() == 'A' || rs.type() == 'D' || rs.type() == 'E'))
    throw std::invalid_argument("prime_certificate: requires a simply-laced type");
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("prime_certificate: lambda must be dominant");

  CharCache local;
  if (!cache) cache = &local;
  const Character chi = demazure_character(rs, ell, lambda, cache);

  PrimeVerdict verdict;
  verdict.candidate_budget = candidate_budget;

  // splittings lambda = mu1 + mu2, both non-zero dominant, by |supp mu1| then lex
  std::vector<Weight> mu1s;
  {
    std::vector<int> c(rs.rank(), 0);
    while (true) {
      Weight m(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) m[j] = c[j];
      if (!m.is_zero() && m != lambda) mu1s.push_back(m);
      int j = rs.rank() - 1;
      while (j >= 0 && c[j] == lambda[j]) c[j--] = 0;
      if (j < 0) break;
      ++c[j];
    }
    std::stable_sort(mu1s.begin(), mu1s.end(), [](const Weight& a, const Weight& b) {
      int sa = 0, sb = 0;
      for (auto x : a.c) sa += x > 0;
      for (auto x : b.c) sb += x > 0;
      return sa < sb;
    });
  }

  const Coeff chi_dim = chi.dim();

  for (const Weight& mu1 : mu1s) {
    ++verdict.splittings_examined;
    Weight mu2 = lambda - mu1;

    // candidate constituents: dominant nu < mu1, i.e. dominant weights of V(mu1)
    Character v1 = irr_character(rs, mu1, cache);
    std::vector<Weight> nus;
    std::vector<int64_t> bounds;
    for (const auto& [w, c] : v1.terms()) {
      if (w == mu1 || !rs.is_dominant(w)) continue;
      Weight shifted = w + mu2;
      Coeff b = chi.coeff(shifted);
      if (b <= 0) continue;
      nus.push_back(w);
      bounds.push_back(b.convert_to<int64_t>());
    }
    // deterministic order
    {
      std::vector<std::size_t> idx(nus.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](std::size_t a, std::size_t b) { return nus[a] < nus[b]; });
      std::vector<Weight> n2;
      std::vector<int64_t> b2;
      for (auto k : idx) { n2.push_back(nus[k]); b2.push_back(bounds[k]); }
      nus = std::move(n2);
      bounds = std::move(b2);
    }
    std::vector<Character> nu_chars;
    std::vector<Coeff> nu_dims;
    for (const Weight& nu : nus) {
      nu_chars.push_back(irr_character(rs, nu, cache));
      nu_dims.push_back(nu_chars.back().dim());
    }
    const Coeff v1_dim = v1.dim();

    // all coefficient vectors in the box, by increasing total count
    std::vector<std::vector<int64_t>> cands;
    std::size_t total = 1;
    for (int64_t b : bounds) {
      total *= static_cast<std::size_t>(b + 1);
      if (total > candidate_budget)
        throw BudgetExceeded("prime_certificate: inconclusive, candidate box exceeds budget");
    }
    std::vector<int64_t> vec(nus.size(), 0);
    while (true) {
      cands.push_back(vec);
      int j = static_cast<int>(nus.size()) - 1;
      while (j >= 0 && vec[j] == bounds[j]) vec[j--] = 0;
      if (j < 0) break;
      ++vec[j];
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
                       int64_t sa = std::accumulate(a.begin(), a.end(), int64_t(0));
                       int64_t sb = std::accumulate(b.begin(), b.end(), int64_t(0));
                       return sa < sb;
                     });

    for (const auto& cand : cands) {
      if (++verdict.candidates_examined > candidate_budget)
        throw BudgetExceeded("prime_certificate: inconclusive, candidate budget exhausted");
      // a genuine factor's dimension divides dim(chi); this screens out
      // nearly every candidate before any character arithmetic
      Coeff cand_dim = v1_dim;
      for (std::size_t k = 0; k < cand.size(); ++k)
        if (cand[k] > 0) cand_dim += nu_dims[k] * cand[k];
      if (chi_dim % cand_dim != 0) continue;
      Character chi1 = v1;
      for (std::size_t k = 0; k < cand.size(); ++k)
        if (cand[k] > 0) chi1 = chi1 + nu_chars[k].scaled(Coeff(cand[k]));
      auto quot = try_divide(rs, chi, chi1);
      if (!quot) continue;
      std::vector<std::pair<Weight, Coeff>> d2;
      try {
        d2 = decompose(rs, *quot, cache);
      } catch (const std::runtime_error&) {
        continue;  // quotient is not a module character
      }
      verdict.prime = false;
      verdict.factor1 = std::move(chi1);
      verdict.factor2 = std::move(*quot);
      verdict.factor1_decomp.emplace_back(mu1, 1);
      for (std::size_t k = 0; k < cand.size(); ++k)
        if (cand[k] > 0) verdict.factor1_decomp.emplace_back(nus[k], Coeff(cand[k]));
      verdict.factor2_decomp = std::move(d2);
      verdict.mu1 = mu1;
      verdict.mu2 = mu2;
      return verdict;
    }
  }
  return verdict;
}

bool support_disjoint(const Weight& mu1, const Weight& mu2) {
  for (std::size_t i = 0; i < mu1.rank(); ++i)
    if (mu1[i] > 0 && mu2[i] > 0) return false;
  return true;
}

namespace {

std::vector<int> support_nodes(const Weight& w) {
  std::vector<int> s;
  for (std::size_t i = 0; i < w.rank(); ++i)
    if (w[i] > 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

// positions of the two supports along an ordered path; the interval construction
std::vector<int> path_interval(const std::vector<int>& path, std::vector<int> s1,
                               std::vector<int> s2) {
  auto pos = [&](int node) {
    return static_cast<int>(std::find(path.begin(), path.end(), node) - path.begin());
  };
  std::vector<int> p1, p2;
  for (int x : s1) p1.push_back(pos(x));
  for (int x : s2) p2.push_back(pos(x));
  int m1 = *std::max_element(p1.begin(), p1.end());
  int m2 = *std::max_element(p2.begin(), p2.end());
  if (m1 > m2) { std::swap(p1, p2); std::swap(m1, m2); }
  // now the maximal support position belongs to "2"
  int i1 = *std::max_element(p1.begin(), p1.end());
  int i2 = static_cast<int>(path.size());
  for (int x : p2)
    if (x > i1) i2 = std::min(i2, x);
  std::vector<int> out;
  for (int k = i1; k <= i2; ++k) out.push_back(path[k]);
  return out;
}

}  // namespace

std::vector<int> choose_connected_j(const RootSystem& rs, const Weight& nu1,
                                    const Weight& nu2) {
  if (!(rs.type() == 'A' || rs.type() == 'D' || rs.type() == 'E'))
    throw std::invalid_argument("choose_connected_j: requires type A, D or E");
  if (!support_disjoint(nu1, nu2))
    throw std::invalid_argument("choose_connected_j: supports must be disjoint");
  const int n = rs.rank();

  std::vector<int> s1 = support_nodes(nu1), s2 = support_nodes(nu2);
  if (s1.empty() && s2.empty()) return {};
  if (s1.empty()) return {s2.front()};
  if (s2.empty()) return {s1.front()};

  // adjacency of the Dynkin graph (1-based)
  std::vector<std::vector<int>> adj(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && rs.cartan(i - 1, j - 1) != 0) adj[i].push_back(j);

  int trivalent = 0;
  for (int i = 1; i <= n; ++i)
    if (adj[i].size() == 3) trivalent = i;

  auto result_check = [&](std::vector<int> J) {
    std::sort(J.begin(), J.end());
    // connected path of simple edges, meeting each support once
    for (std::size_t k = 0; k < J.size(); ++k) {
      int deg = 0;
      for (int other : J)
        if (other != J[k] &&
            std::find(adj[J[k]].begin(), adj[J[k]].end(), other) != adj[J[k]].end())
          ++deg;
      if (deg > 2) throw std::logic_error("choose_connected_j: not type A");
    }
    if (!J.empty()) {
      std::deque<int> q{J.front()};
      std::vector<int> seen{J.front()};
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[x])
          if (std::find(J.begin(), J.end(), y) != J.end() &&
              std::find(seen.begin(), seen.end(), y) == seen.end()) {
            seen.push_back(y);
            q.push_back(y);
          }
      }
      if (seen.size() != J.size()) throw std::logic_error("choose_connected_j: not connected");
    }
    for (const auto* s : {&s1, &s2}) {
      std::size_t cnt = 0;
      for (int x : *s)
        if (std::find(J.begin(), J.end(), x) != J.end()) ++cnt;
      if (cnt != 1) throw std::logic_error("choose_connected_j: support met " +
                                           std::to_string(cnt) + " times");
    }
    return J;
  };

  if (trivalent == 0) {
    // the diagram is a path (type A, or D3); order it end to end
    int leaf = 0;
    for (int i = 1; i <= n && !leaf; ++i)
      if (adj[i].size() <= 1) leaf = i;
    std::vector<int> path{leaf};
    while (true) {
      int cur = path.back();
      int nxt = 0;
      for (int y : adj[cur])
        if (path.size() < 2 || y != path[path.size() - 2]) nxt = y;
      if (!nxt) break;
      path.push_back(nxt);
    }
    return result_check(path_interval(path, s1, s2));
  }

  // legs of the trivalent node, each ordered from the node outward
  std::vector<std::vector<int>> legs;
  for (int y : adj[trivalent]) {
    std::vector<int> leg{y};
    int prev = trivalent;
    while (true) {
      int cur = leg.back(), nxt = 0;
      for (int z : adj[cur])
        if (z != prev) nxt = z;
      if (!nxt) break;
      prev = cur;
      leg.push_back(nxt);
    }
    legs.push_back(std::move(leg));
  }
  // i1: leaf of a length-1 leg, largest index; swap roles if it supports nu2
  int i1 = 0;
  for (const auto& leg : legs)
    if (leg.size() == 1) i1 = std::max(i1, leg.front());
  if (std::find(s2.begin(), s2.end(), i1) != s2.end()) std::swap(s1, s2);

  std::vector<int> s1p = s1;
  s1p.erase(std::remove(s1p.begin(), s1p.end(), i1), s1p.end());

  if (s1p.empty()) {
    // path from i1 to the nearest support node of nu2 (tree BFS)
    std::vector<int> parent(n + 1, 0);
    std::deque<int> q{i1};
    parent[i1] = i1;
    int best = 0;
    while (!q.empty() && !best) {
      int x = q.front();
      q.pop_front();
      if (x != i1 && std::find(s2.begin(), s2.end(), x) != s2.end()) { best = x; break; }
      std::vector<int> nb = adj[x];
      std::sort(nb.begin(), nb.end());
      for (int y : nb)
        if (!parent[y]) {
          parent[y] = x;
          q.push_back(y);
        }
    }
    if (!best) throw std::logic_error("choose_connected_j: disconnected diagram");
    std::vector<int> J;
    for (int x = best; x != i1; x = parent[x]) J.push_back(x);
    J.push_back(i1);
    return result_check(J);
  }

  // remaining supports avoid i1's leg: restrict to the path through the
  // other two legs and reuse the type-A interval construction
  std::vector<const std::vector<int>*> others;
  for (const auto& leg : legs)
    if (!(leg.size() == 1 && leg.front() == i1)) others.push_back(&leg);
  if (others.size() != 2) throw std::logic_error("choose_connected_j: leg bookkeeping");
  std::vector<int> path(others[0]->rbegin(), others[0]->rend());
  path.push_back(trivalent);
  path.insert(path.end(), others[1]->begin(), others[1]->end());
  for (int x : s1p)
    if (std::find(path.begin(), path.end(), x) == path.end())
      throw std::logic_error("choose_connected_j: support outside the two legs");
  return result_check(path_interval(path, s1p, s2));
}

}  // namespace demchar
