#include "demchar/demazure.hpp"

#include <algorithm>
#include <stdexcept>

namespace demchar {

PresentationData presentation_data(const RootSystem& rs, int64_t ell, const Weight& lambda) {
  if (ell < 1) throw std::invalid_argument("presentation_data: level must be >= 1");
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("presentation_data: lambda must be dominant");
  PresentationData pd;
  for (const Root& a : rs.positive_roots()) {
    int64_t v = rs.eval_coroot(lambda, a);
    int64_t de = int64_t(a.d_alpha) * ell;
    // unique pair with v = de*(s-1) + m, 0 < m <= de; v = 0 forces s = 0
    int64_t s = v == 0 ? 0 : (v + de - 1) / de;
    int64_t m = v - de * (s - 1);
    if (m <= 0 || m > de || de * (s - 1) + m != v)
      throw std::logic_error("presentation_data: branch error");
    pd.per_root.push_back({s, m});
  }
  return pd;
}

AffineCharacter demazure_character_graded(const RootSystem& rs, int64_t ell,
                                          const Weight& lambda) {
  if (ell < 1) throw std::invalid_argument("demazure_character: level must be >= 1");
  if (static_cast<int>(lambda.rank()) != rs.rank())
    throw std::invalid_argument("demazure_character: rank mismatch");
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("demazure_character: lambda must be dominant");

  // Lambda' = w0(lambda) + ell*Lambda0, walked up to the dominant chamber;
  // the recorded word then spells the Demazure operator composition.
  AffineWeight start{rs.w0_on(lambda), ell, Rat(0)};
  DominantChamberResult dc = to_dominant(rs, start);

  AffineCharacter ch = apply_word(rs, dc.word, AffineCharacter::monomial(dc.dominant));

  // locate the unique term of classical weight lambda and put it at grade 0
  Rat grade0;
  bool found = false;
  for (const auto& [k, c] : ch.terms()) {
    if (k.classical == lambda) {
      if (found) throw std::logic_error("demazure_character: lambda term not unique");
      if (c != 1) throw std::logic_error("demazure_character: lambda coefficient != 1");
      grade0 = k.delta;
      found = true;
    }
  }
  if (!found) throw std::logic_error("demazure_character: lambda term missing");

  AffineCharacter out(ell);
  for (const auto& [k, c] : ch.terms()) {
    Rat grade = k.delta - grade0;
    if (!grade.is_integer() || grade.as_integer() < 0)
      throw std::logic_error("demazure_character: grade outside Z>=0");
    out.add_term(k.classical, grade, c);
  }
  return out;
}

const Character* CharCache::find(const RootSystem& rs, int64_t ell,
                                 const Weight& lambda) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = map_.find({rs.type(), rs.rank(), ell, lambda});
  return it == map_.end() ? nullptr : &it->second;
}

const Character& CharCache::store(const RootSystem& rs, int64_t ell, const Weight& lambda,
                                  Character ch) {
  std::lock_guard<std::mutex> lk(mu_);
  return map_.emplace(Key{rs.type(), rs.rank(), ell, lambda}, std::move(ch)).first->second;
}

Character demazure_character(const RootSystem& rs, int64_t ell, const Weight& lambda,
                             CharCache* cache) {
  if (cache)
    if (const Character* hit = cache->find(rs, ell, lambda)) return *hit;
  Character ch = project_mod_delta(demazure_character_graded(rs, ell, lambda));
  if (cache) return cache->store(rs, ell, lambda, std::move(ch));
  return ch;
}

Coeff demazure_dim(const RootSystem& rs, int64_t ell, const Weight& lambda,
                   CharCache* cache) {
  return demazure_character(rs, ell, lambda, cache).dim();
}

Character irr_character(const RootSystem& rs, const Weight& lambda, CharCache* cache) {
  // level ell* = max(1, lambda(h_theta)) makes D(ell*, lambda) an evaluation
  // module: lambda(h_alpha) <= d_alpha * lambda(h_theta) for dominant lambda.
  int64_t ell = std::max<int64_t>(1, rs.eval_coroot(lambda, rs.theta()));
  return demazure_character(rs, ell, lambda, cache);
}

Coeff weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("weyl_dim: non-dominant weight");
  Weight lr = lambda + rs.rho();
  Coeff num = 1, den = 1;
  for (const Root& a : rs.positive_roots()) {
    Rat q = rs.pairing(lr, a) / rs.pairing(rs.rho(), a);
    num *= q.num();
    den *= q.den();
    Coeff g = boost::multiprecision::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  if (den != 1 || num <= 0) throw std::logic_error("weyl_dim: non-integral product");
  return num;
}

std::vector<std::pair<Weight, Coeff>> decompose(const RootSystem& rs, const Character& ch,
                                                CharCache* cache) {
  CharCache local;
  if (!cache) cache = &local;
  if (!w_invariant(rs, ch))
    throw std::runtime_error("not a module character: not W-invariant");

  Character rem = ch;
  std::vector<std::pair<Weight, Coeff>> out;
  while (!rem.empty()) {
    // maximal support weight under (height, lex); must be dominant
    const Weight* best = nullptr;
    int64_t besth = 0;
    for (const auto& [w, c] : rem.terms()) {
      int64_t h = rs.scaled_height(w);
      if (!best || h > besth || (h == besth && *best < w)) {
        best = &w;
        besth = h;
      }
    }
    Weight top = *best;
    if (!rs.is_dominant(top))
      throw std::runtime_error("not a module character: maximal weight " + top.str() +
                               " is not dominant");
    Coeff mult = rem.coeff(top);
    if (mult < 0)
      throw std::runtime_error("not a module character: negative multiplicity at " +
                               top.str());
    rem = rem - irr_character(rs, top, cache).scaled(mult);
    out.emplace_back(std::move(top), std::move(mult));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Coeff tensor_mult(const RootSystem& rs, const Weight& nu, const Weight& mu1,
                  const Weight& mu2, CharCache* cache) {
  CharCache local;
  if (!cache) cache = &local;
  Character prod = irr_character(rs, mu1, cache) * irr_character(rs, mu2, cache);
  for (auto& [w, c] : decompose(rs, prod, cache))
    if (w == nu) return c;
  return 0;
}

}  // namespace demchar
