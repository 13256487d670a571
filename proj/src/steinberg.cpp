#include "demchar/steinberg.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace demchar {

SteinbergSplit steinberg_split(const RootSystem& rs, int64_t ell, const Weight& lambda) {
  if (ell < 1) throw std::invalid_argument("steinberg_split: level must be >= 1");
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("steinberg_split: lambda must be dominant");
  SteinbergSplit sp;
  sp.mu = Weight(rs.rank());
  sp.lambda0 = lambda;
  for (int i = 0; i < rs.rank(); ++i) {
    int64_t m = lambda[i] / (ell * rs.d(i));
    sp.coweight_coeffs.push_back(static_cast<int32_t>(m));
    sp.mu[i] = static_cast<int32_t>(m * rs.d(i));
    sp.lambda0[i] = static_cast<int32_t>(lambda[i] - ell * sp.mu[i]);
  }
  return sp;
}

bool verify_factorization(const RootSystem& rs, int64_t ell, const Weight& lambda,
                          CharCache* cache) {
  CharCache local;
  if (!cache) cache = &local;
  SteinbergSplit sp = steinberg_split(rs, ell, lambda);

  Character whole = demazure_character(rs, ell, lambda, cache);
  Weight ellmu = sp.mu;
  for (auto& x : ellmu.c) x = static_cast<int32_t>(x * ell);
  Character part_mu = demazure_character(rs, ell, ellmu, cache);
  Character part_0 = demazure_character(rs, ell, sp.lambda0, cache);
  if (!(whole == part_mu * part_0)) return false;

  // finer refinement: dim D(ell, ell*mu) = prod_i dim D(ell, ell*d_i*omega_i)^{m_i}
  Coeff prod = 1;
  for (int i = 0; i < rs.rank(); ++i) {
    if (sp.coweight_coeffs[i] == 0) continue;
    Weight base(rs.rank());
    base[i] = static_cast<int32_t>(ell * rs.d(i));
    Coeff di = demazure_dim(rs, ell, base, cache);
    for (int32_t k = 0; k < sp.coweight_coeffs[i]; ++k) prod *= di;
  }
  return prod == part_mu.dim();
}

bool key_valid(const RootSystem& rs, int64_t ell, const Weight& lambda, const Weight& mu) {
  for (int i = 0; i < rs.rank(); ++i)
    if (mu[i] % rs.d(i) != 0) return false;  // mu must lie in L
  Weight diff = lambda;  // ell*mu - lambda
  for (int i = 0; i < rs.rank(); ++i)
    diff[i] = static_cast<int32_t>(ell * mu[i] - lambda[i]);
  Rat bound(ell);
  for (const Root& a : rs.positive_roots())
    if (rs.pairing(diff, a).abs() > bound) return false;
  return true;
}

std::optional<Weight> key_search_brute(const RootSystem& rs, int64_t ell,
                                       const Weight& lambda, int coord_bound) {
  const int n = rs.rank();
  std::vector<int> c(n, 0);
  while (true) {
    Weight mu(n);
    for (int i = 0; i < n; ++i) mu[i] = c[i] * rs.d(i);
    if (key_valid(rs, ell, lambda, mu)) return mu;
    // odometer with the first coefficient fastest: (1,0,..) precedes (0,1,..)
    int i = 0;
    while (i < n && c[i] == coord_bound) c[i++] = 0;
    if (i >= n) return std::nullopt;
    ++c[i];
  }
}

namespace {

// Iterative form of the type-C induction: scan the nested subdiagrams
// C_1 = {alpha_n} up to C_n, testing the new long highest root each time.
// lam is given in (possibly rational) weight coordinates of C_n.
std::vector<int> construct_type_c(const RootSystem& cn, int64_t ell,
                                  const std::vector<Rat>& lam) {
  const int n = cn.rank();
  std::vector<int> s(std::max(0, n - 1), 0);
  for (int i = n - 2; i >= 0; --i) {
    // theta_i = 2(alpha_{i+1} + ... + alpha_{n-1}) + alpha_n, 0-based at i
    Root theta_i;
    theta_i.rc.assign(n, 0);
    for (int j = i; j < n - 1; ++j) theta_i.rc[j] = 2;
    theta_i.rc[n - 1] = 1;
    Rat lam_th = cn.pairing(lam, theta_i);
    // (mu', theta_i) with mu' = 2 sum_{j>i} s_j omega_j
    Rat mu_th(0);
    for (int j = i + 1; j < n - 1; ++j)
      if (s[j]) mu_th += Rat(2 * theta_i.rc[j], cn.d(j));
    if ((lam_th - Rat(ell) * mu_th).abs() > Rat(ell)) s[i] = 1;
  }
  return s;
}

std::vector<Rat> rat_coords(const Weight& w) {
  std::vector<Rat> v;
  for (int32_t x : w.c) v.emplace_back(x);
  return v;
}

}  // namespace

Weight key_construct(const RootSystem& rs, int64_t ell, const Weight& lambda) {
  if (ell < 1) throw std::invalid_argument("key_construct: level must be >= 1");
  for (int i = 0; i < rs.rank(); ++i)
    if (lambda[i] < 0 || lambda[i] > rs.d(i) * ell)
      throw std::invalid_argument("key_construct: requires 0 <= lambda(h_i) <= d_i*ell");

  const int n = rs.rank();
  Weight mu(n);

  switch (rs.type()) {
    case 'C': {
      std::vector<int> s = construct_type_c(rs, ell, rat_coords(lambda));
      for (int i = 0; i + 1 < n; ++i) mu[i] = 2 * s[i];
      break;
    }
    case 'A': {
      // view 2*lambda inside C_{n+1}; the flags halve back to A_n fundamentals
      RootSystem cn = RootSystem::build('C', n + 1);
      std::vector<Rat> lamc(n + 1, Rat(0));
      for (int i = 0; i < n; ++i) lamc[i] = Rat(2 * lambda[i]);
      std::vector<int> s = construct_type_c(cn, ell, lamc);
      for (int i = 0; i < n; ++i) mu[i] = s[i];
      break;
    }
    case 'D': {
      // short roots of C_n form D_n; swap the spin coordinates if needed so
      // the transported weight is C_n-dominant (the sigma of the construction)
      int32_t r1 = lambda[n - 2], r2 = lambda[n - 1];
      if (r2 < r1) std::swap(r1, r2);
      RootSystem cn = RootSystem::build('C', n);
      std::vector<Rat> lamc(n, Rat(0));
      for (int i = 0; i < n - 2; ++i) lamc[i] = Rat(2 * lambda[i]);
      lamc[n - 2] = Rat(2 * r1);
      lamc[n - 1] = Rat(r2 - r1);
      std::vector<int> s = construct_type_c(cn, ell, lamc);
      for (int i = 0; i < n - 2; ++i) mu[i] = s[i];
      mu[n - 2] = s[n - 2];
      mu[n - 1] = s[n - 2];  // equal on both spin nodes, hence sigma-fixed
      break;
    }
    case 'B': {
      // fold D_{n+1}: spin coordinates r_n/2 each, then the D_{n+1} route
      RootSystem cn = RootSystem::build('C', n + 1);
      std::vector<Rat> lamc(n + 1, Rat(0));
      for (int i = 0; i < n - 1; ++i) lamc[i] = Rat(2 * lambda[i]);
      lamc[n - 1] = Rat(lambda[n - 1]);  // 2 * (r_n / 2)
      lamc[n] = Rat(0);                  // spin coordinates equal
      std::vector<int> s = construct_type_c(cn, ell, lamc);
      for (int i = 0; i < n - 1; ++i) mu[i] = s[i];
      mu[n - 1] = 2 * s[n - 1];
      break;
    }
    case 'G': {
      // four-case solution on the two long-root pairings
      Root t1;  // 2 alpha_1 + 3 alpha_2 (the highest root)
      t1.rc = {2, 3};
      Root t2;  // alpha_1 + 3 alpha_2
      t2.rc = {1, 3};
      Rat p1 = rs.pairing(lambda, t1), p2 = rs.pairing(lambda, t2);
      Rat L(ell);
      if (p1 <= L) {
        // mu = 0
      } else if (p1 <= Rat(3) * L && p2 <= Rat(2) * L) {
        mu[0] = 1;
      } else if (p1 > Rat(2) * L && p1 <= Rat(4) * L && p2 > Rat(2) * L) {
        mu[1] = 3;
      } else if (p1 > Rat(4) * L && p1 <= Rat(5) * L) {
        mu[0] = 1;
        mu[1] = 3;
      } else {
        throw std::logic_error("key_construct: G2 cases not exhaustive");
      }
      break;
    }
    default:
      throw std::invalid_argument(
          std::string("key_construct: constructive algorithm unavailable for type ") +
          rs.type() + "; use key_search_brute");
  }

  if (!key_valid(rs, ell, lambda, mu))
    throw std::logic_error("key_construct: output " + mu.str() +
                           " fails the key inequality for lambda=" + lambda.str());
  return mu;
}

std::optional<FiniteWeyl> dominant_witness(const RootSystem& rs, int64_t ell,
                                           const Weight& lambda, const Weight& mu) {
  // nu = ell*(-w0 mu) + w0(lambda); -w0 matches the coweight to the chamber,
  // and is the identity whenever w0 = -1 (so for F4/E8 this is ell*mu + w0 lambda)
  Weight mustar = rs.w0_on(mu);
  for (auto& x : mustar.c) x = -x;
  Weight nu = rs.w0_on(lambda);
  for (int i = 0; i < rs.rank(); ++i)
    nu[i] = static_cast<int32_t>(ell * mustar[i] + nu[i]);

  std::vector<int> steps;
  Weight v = nu;
  const std::size_t cap = 64 * rs.positive_roots().size() + 4096;
  while (true) {
    int idx = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (v[i] < 0) { idx = i; break; }
    if (idx < 0) break;
    v = rs.reflect(idx, v);
    steps.push_back(idx);
    if (steps.size() > cap)
      throw std::runtime_error("dominant_witness: descent failed to terminate");
  }
  if (rs.eval_coroot(v, rs.theta()) > ell) return std::nullopt;
  return FiniteWeyl(std::move(steps));
}

// ---------------------------------------------------------------------------

TableFixture parse_fixture(const std::string& text, const std::string& origin) {
  TableFixture f;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + why);
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') { out.push_back(cur); cur.clear(); }
      else if (!isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    out.push_back(cur);
    return out;
  };

  int stage = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split(line);
    if (stage == 0) {
      if (cells != std::vector<std::string>{"type", "rank", "ell"})
        fail("expected header 'type,rank,ell'");
      stage = 1;
    } else if (stage == 1) {
      if (cells.size() != 3 || cells[0].size() != 1) fail("expected '<type>,<rank>,<ell>'");
      f.type = cells[0][0];
      f.rank = std::stoi(cells[1]);
      f.ell = std::stoll(cells[2]);
      if (f.rank < 1 || f.ell < 1) fail("bad rank or ell");
      stage = 2;
    } else {
      if (cells.size() != std::size_t(2 * f.rank))
        fail("expected " + std::to_string(2 * f.rank) + " integers");
      Weight lam(f.rank), mu(f.rank);
      try {
        for (int i = 0; i < f.rank; ++i) lam[i] = std::stoi(cells[i]);
        for (int i = 0; i < f.rank; ++i) mu[i] = std::stoi(cells[f.rank + i]);
      } catch (const std::exception&) {
        fail("non-integer cell");
      }
      f.rows.emplace_back(std::move(lam), std::move(mu));
    }
  }
  if (stage < 2) fail("missing header");
  return f;
}

TableFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str(), path);
}

std::vector<std::string> known_conventions() { return {"bourbaki", "reversed"}; }

namespace {
Weight permuted(const Weight& w, const std::string& convention) {
  if (convention == "bourbaki") return w;
  if (convention == "reversed") {
    Weight r = w;
    std::reverse(r.c.begin(), r.c.end());
    return r;
  }
  throw std::invalid_argument("unknown numbering convention " + convention);
}

std::vector<std::size_t> failing_rows_under(const RootSystem& rs, const TableFixture& f,
                                            const std::string& convention, int threads) {
  const std::size_t n = f.rows.size();
  std::vector<char> bad(n, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      const auto& [lam, mu] = f.rows[i];
      if (!key_valid(rs, f.ell, permuted(lam, convention), permuted(mu, convention)))
        bad[i] = 1;
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (bad[i]) out.push_back(i);
  return out;
}
}  // namespace

TableReport verify_table(const TableFixture& fixture, const std::string& convention,
                         int threads) {
  RootSystem rs = RootSystem::build(fixture.type, fixture.rank);
  TableReport rep;
  rep.configured_convention = convention;
  rep.rows_total = fixture.rows.size();
  rep.failing_rows = failing_rows_under(rs, fixture, convention, threads);
  if (rep.failing_rows.empty()) {
    rep.passing_convention = convention;
    return rep;
  }
  for (const std::string& alt : known_conventions()) {
    if (alt == convention) continue;
    if (failing_rows_under(rs, fixture, alt, threads).empty()) {
      rep.passing_convention = alt;
      return rep;
    }
  }
  return rep;
}

}  // namespace demchar
