#include "demchar/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace demchar {

std::string AffineWeight::str() const {
  std::ostringstream os;
  os << classical.str() << " + " << level << "*L0 + (" << delta.str() << ")*delta";
  return os.str();
}

int64_t affine_pairing(const RootSystem& rs, const AffineWeight& w, int i) {
  if (i == 0) return w.level - rs.eval_coroot(w.classical, rs.theta());
  return w.classical[i - 1];
}

AffineWeight affine_reflect(const RootSystem& rs, int i, const AffineWeight& w) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine_reflect: bad index");
  int64_t k = affine_pairing(rs, w, i);
  AffineWeight r = w;
  if (i == 0) {
    // alpha_0 = delta - theta: subtract k*delta, add k*theta
    const Root& th = rs.theta();
    for (int j = 0; j < rs.rank(); ++j) r.classical[j] += static_cast<int32_t>(k * th.wc[j]);
    r.delta -= Rat(k);
  } else {
    for (int j = 0; j < rs.rank(); ++j)
      r.classical[j] -= static_cast<int32_t>(k * rs.cartan(j, i - 1));
  }
  return r;
}

bool affine_dominant(const RootSystem& rs, const AffineWeight& w) {
  for (int i = 0; i <= rs.rank(); ++i)
    if (affine_pairing(rs, w, i) < 0) return false;
  return true;
}

Rat extended_norm(const RootSystem& rs, const AffineWeight& w) {
  return rs.pairing_weights(w.classical, w.classical) + Rat(2 * w.level) * w.delta;
}

int FiniteWeyl::length(const RootSystem& rs) const {
  int count = 0;
  for (const Root& a : rs.positive_roots()) {
    Coords img = act_root(rs, a.rc);
    bool neg = false;
    for (int32_t x : img)
      if (x < 0) { neg = true; break; }
    if (neg) ++count;
  }
  return count;
}

std::vector<FiniteWeyl> enumerate_weyl_group(const RootSystem& rs) {
  std::map<Weight, FiniteWeyl> seen;
  seen.emplace(rs.rho(), FiniteWeyl());
  std::vector<FiniteWeyl> frontier{FiniteWeyl()};
  std::vector<FiniteWeyl> all{FiniteWeyl()};
  while (!frontier.empty()) {
    std::vector<FiniteWeyl> next;
    for (const FiniteWeyl& w : frontier) {
      for (int i = 0; i < rs.rank(); ++i) {
        std::vector<int> word = w.word();
        word.push_back(i);  // s_i applied after w... appended in application order
        FiniteWeyl cand(std::move(word));
        Weight key = cand.canonical(rs);
        if (seen.emplace(key, cand).second) {
          next.push_back(cand);
          all.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

FiniteWeyl finite_from_rho_image(const RootSystem& rs, const Weight& image) {
  // peel descents: image = w(rho), tau[i] < 0 means w = s_i w' with shorter w'
  Weight tau = image;
  std::vector<int> outer;  // letters applied last, outermost first
  const std::size_t cap = 4 * rs.positive_roots().size() + 16;
  while (!rs.is_dominant(tau)) {
    int i = -1;
    for (int j = 0; j < rs.rank(); ++j)
      if (tau[j] < 0) { i = j; break; }
    tau = rs.reflect(i, tau);
    outer.push_back(i);
    if (outer.size() > cap)
      throw std::invalid_argument("finite_from_rho_image: not a rho image");
  }
  if (tau != rs.rho())
    throw std::invalid_argument("finite_from_rho_image: not in the orbit of rho");
  // application order: the first peeled letter acts last
  return FiniteWeyl(std::vector<int>(outer.rbegin(), outer.rend()));
}

ExtendedWeylElement ExtendedWeylElement::make(const RootSystem& rs, FiniteWeyl w, Weight mu) {
  if (static_cast<int>(mu.rank()) != rs.rank())
    throw std::invalid_argument("translation rank mismatch");
  for (int i = 0; i < rs.rank(); ++i)
    if (mu[i] % rs.d(i) != 0)
      throw std::invalid_argument("translation " + mu.str() + " is not in the coweight lattice");
  return ExtendedWeylElement{std::move(w), std::move(mu)};
}

AffineWeight translate(const RootSystem& rs, const Weight& mu, const AffineWeight& w) {
  AffineWeight r = w;
  Rat numu = rs.pairing_weights(w.classical, mu);
  Rat mumu = rs.pairing_weights(mu, mu);
  for (int j = 0; j < rs.rank(); ++j)
    r.classical[j] += static_cast<int32_t>(w.level * mu[j]);
  r.delta = w.delta - numu - Rat(w.level) * mumu / Rat(2);
  return r;
}

AffineWeight act(const RootSystem& rs, const ExtendedWeylElement& x, const AffineWeight& w) {
  AffineWeight t = translate(rs, x.translation, w);
  t.classical = x.finite_part.act(rs, t.classical);
  return t;
}

ExtendedWeylElement compose(const RootSystem& rs, const ExtendedWeylElement& x,
                            const ExtendedWeylElement& y) {
  // (w1, mu1)(w2, mu2) = (w1 w2, w2^{-1} mu1 + mu2)
  FiniteWeyl w = x.finite_part.compose(y.finite_part);
  Weight mu = y.finite_part.inverse().act(rs, x.translation) + y.translation;
  return ExtendedWeylElement::make(rs, std::move(w), std::move(mu));
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const ExtendedWeylElement& x) {
  // x(alpha + r delta) = w(alpha) + (r - (alpha,mu)) delta
  int64_t maxpair = 0;
  std::vector<int64_t> pair_with_mu;
  for (const Root& a : rs.positive_roots()) {
    int64_t p = rs.pairing(x.translation, a).as_integer();
    pair_with_mu.push_back(p);
    maxpair = std::max(maxpair, std::abs(p));
  }
  const int64_t B = 1 + maxpair;

  std::vector<AffineRoot> inv;
  auto negative_classical = [](const Coords& rc) {
    for (int32_t v : rc)
      if (v > 0) return false;
    return true;
  };
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const Root& a = rs.positive_roots()[k];
    Coords wpos = x.finite_part.act_root(rs, a.rc);
    Coords wneg = wpos;
    for (auto& v : wneg) v = -v;
    for (int sign = 0; sign < 2; ++sign) {
      // sign 0: alpha + r delta (r >= 0); sign 1: -alpha + r delta (r >= 1)
      int64_t p = sign == 0 ? pair_with_mu[k] : -pair_with_mu[k];
      const Coords& img = sign == 0 ? wpos : wneg;
      bool img_neg = negative_classical(img);
      for (int64_t r = (sign == 0 ? 0 : 1); r <= B; ++r) {
        int64_t s = r - p;
        if (s < 0 || (s == 0 && img_neg)) {
          AffineRoot ar;
          ar.rc = a.rc;
          if (sign == 1)
            for (auto& v : ar.rc) v = -v;
          ar.r = r;
          inv.push_back(std::move(ar));
        }
      }
    }
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

ExtendedWeylElement ext_from_affine_word(const RootSystem& rs, const std::vector<int>& word) {
  ExtendedWeylElement x = ExtendedWeylElement::make(rs, FiniteWeyl(), Weight(rs.rank()));
  for (int i : word) {
    ExtendedWeylElement gen = [&] {
      if (i == 0) {
        // s_0 = s_theta o t_{-theta^vee} in the (finite o translation) form;
        // theta^vee lies in M, hence in L
        Weight thv(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) thv[j] = -rs.theta().wc[j];
        Weight image = rs.rho();
        int64_t k = rs.eval_coroot(image, rs.theta());
        for (int j = 0; j < rs.rank(); ++j)
          image[j] -= static_cast<int32_t>(k * rs.theta().wc[j]);
        return ExtendedWeylElement::make(rs, finite_from_rho_image(rs, image), thv);
      }
      return ExtendedWeylElement::make(rs, FiniteWeyl(std::vector<int>{i - 1}),
                                       Weight(rs.rank()));
    }();
    // application order: each later letter composes on the left
    x = compose(rs, gen, x);
  }
  return x;
}

DominantChamberResult to_dominant(const RootSystem& rs, const AffineWeight& w) {
  if (w.level <= 0) throw std::invalid_argument("to_dominant requires positive level");
  int64_t coordsum = 0;
  for (int32_t x : w.classical.c) coordsum += std::abs(int64_t(x));
  const int64_t cap = 100 + 20 * (w.level + coordsum);

  DominantChamberResult res;
  res.dominant = w;
  int64_t steps = 0;
  while (true) {
    int idx = -1;
    for (int i = 0; i <= rs.rank(); ++i) {
      if (affine_pairing(rs, res.dominant, i) < 0) { idx = i; break; }
    }
    if (idx < 0) break;
    res.dominant = affine_reflect(rs, idx, res.dominant);
    res.word.push_back(idx);
    if (++steps > cap)
      throw std::runtime_error("to_dominant: iteration cap exceeded (internal bug)");
  }
  return res;
}

}  // namespace demchar
