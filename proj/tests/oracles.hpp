// Independent reference implementations used only by the tests: a no-frills
// Buchberger without criteria, subset enumeration for dimension, power
// search for radical membership, combinatorics for monomial ideals, and
// seeded random polynomial generators.
#pragma once

#include <queue>
#include <random>

#include "minvar/ideal.hpp"

namespace oracles {

using namespace minvar;

// Plain multivariate division, first divisor in sequence order.
template <class F>
Poly<F> naive_normal_form(const Poly<F>& f, const std::vector<Poly<F>>& G) {
  const std::size_t w = f.width();
  const auto& fld = f.ring()->field;
  Poly<F> p = f;
  Poly<F> r = Poly<F>::zero(f.ring());
  while (!p.is_zero()) {
    bool hit = false;
    for (const auto& g : G) {
      if (g.is_zero() || !kern::ops().divides(g.lm(), p.lm(), w)) continue;
      std::vector<Exp> q(w);
      kern::ops().sub(p.lm(), g.lm(), q.data(), w);
      p = p - g.mul_term(fld.div(p.lc(), g.lc()), q.data());
      hit = true;
      break;
    }
    if (!hit) {
      auto lt = Poly<F>::from_terms(f.ring(), {p.lc()}, std::vector<Exp>(p.lm(), p.lm() + w));
      r = r + lt;
      p = p - lt;
    }
  }
  return r;
}

// Buchberger with no pair criteria and FIFO selection.
template <class F>
std::vector<Poly<F>> naive_buchberger(const std::vector<Poly<F>>& gens) {
  std::vector<Poly<F>> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return G;
  std::queue<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.push({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop();
    auto r = naive_normal_form(spoly(G[i], G[j]), G);
    if (r.is_zero()) continue;
    G.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.push({k, G.size() - 1});
  }
  return G;
}

template <class F>
bool naive_member(const Poly<F>& f, const std::vector<Poly<F>>& naive_gb) {
  return naive_normal_form(f, naive_gb).is_zero();
}

// f^k in (G) for some k <= kmax, membership via the naive division.
template <class F>
bool power_search_member(const Poly<F>& f, const std::vector<Poly<F>>& gens, int kmax) {
  auto gb = naive_buchberger(gens);
  Poly<F> p = Poly<F>::one(f.ring());
  for (int k = 1; k <= kmax; ++k) {
    p = p * f;
    if (naive_member(p, gb)) return true;
  }
  return false;
}

// monomial ideal combinatorics: a monomial lies in the ideal iff some
// generator divides it; it lies in the radical iff some generator's support
// is contained in its support
template <class F>
bool monomial_in_ideal(const Poly<F>& mono, const std::vector<Poly<F>>& gens) {
  const std::size_t w = mono.width();
  for (const auto& g : gens)
    if (kern::ops().divides(g.lm(), mono.lm(), w)) return true;
  return false;
}

template <class F>
bool monomial_in_radical(const Poly<F>& mono, const std::vector<Poly<F>>& gens) {
  const std::size_t w = mono.width();
  for (const auto& g : gens) {
    bool contained = true;
    for (std::size_t v = 0; v < w && contained; ++v)
      if (g.lm()[v] > 0 && mono.lm()[v] == 0) contained = false;
    if (contained) return true;
  }
  return false;
}

// Exhaustive independent-set dimension over all variable subsets (w <= 20).
template <class F>
int brute_dimension(const Ideal<F>& I) {
  const auto& gb = I.reduced_gb();
  const std::size_t w = I.ring()->width();
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.basis) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < w; ++v)
      if (g.lm()[v]) mask |= std::uint32_t(1) << v;
    supports.push_back(mask);
  }
  int best = -1;
  for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << w); ++sub) {
    bool independent = true;
    for (auto s : supports)
      if ((s & sub) == s) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, std::popcount(sub));
  }
  return best;
}

// seeded random polynomials: nterms terms, per-variable exponents <= maxexp
template <class F>
class RandomPolys {
 public:
  RandomPolys(RingPtr<F> ring, std::uint64_t seed, int maxexp = 3, int maxterms = 4)
      : ring_(std::move(ring)), rng_(seed), maxexp_(maxexp), maxterms_(maxterms) {}

  Poly<F> operator()() {
    std::uniform_int_distribution<int> nterms(1, maxterms_);
    std::uniform_int_distribution<int> expd(0, maxexp_);
    std::uniform_int_distribution<long> coeffd(-9, 9);
    const std::size_t w = ring_->width();
    std::vector<typename F::Elem> cs;
    std::vector<Exp> es;
    int n = nterms(rng_);
    for (int i = 0; i < n; ++i) {
      long c = coeffd(rng_);
      if (c == 0) c = 1;
      cs.push_back(ring_->field.from_long(c));
      for (std::size_t v = 0; v < w; ++v) es.push_back(static_cast<Exp>(expd(rng_)));
    }
    return Poly<F>::from_terms(ring_, std::move(cs), std::move(es));
  }

  Poly<F> monomial() {
    std::uniform_int_distribution<int> expd(0, maxexp_);
    const std::size_t w = ring_->width();
    std::vector<Exp> es;
    for (std::size_t v = 0; v < w; ++v) es.push_back(static_cast<Exp>(expd(rng_)));
    return Poly<F>::from_terms(ring_, {ring_->field.one()}, std::move(es));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  RingPtr<F> ring_;
  std::mt19937_64 rng_;
  int maxexp_;
  int maxterms_;
};

}  // namespace oracles
