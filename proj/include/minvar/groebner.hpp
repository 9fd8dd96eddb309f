// Buchberger's algorithm with the product and chain criteria, normal forms,
// and the canonical reduced basis.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>

#include "minvar/poly.hpp"

namespace minvar {

struct GBStats {
  std::uint64_t reductions = 0;
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t zero_reductions = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;
  std::vector<Poly<F>> basis;
  bool reduced = false;
  GBStats stats;
};

namespace detail {

// Reducer choice inside Buchberger: among the divisors of m, the one with
// the fewest terms (ties by position). The public normal_form keeps the
// first-in-sequence rule instead.
template <class F>
int pick_reducer(const Exp* m, const std::vector<Poly<F>>& G, std::size_t w) {
  int best = -1;
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (!kern::ops().divides(G[k].lm(), m, w)) continue;
    if (best < 0 || G[k].nterms() < G[static_cast<std::size_t>(best)].nterms())
      best = static_cast<int>(k);
  }
  return best;
}

// Geobucket accumulator for long reductions: terms live in buckets of
// geometrically growing capacity, so each subtraction costs the reducer's
// length instead of the whole polynomial's.
template <class F>
class Geobucket {
 public:
  using Elem = typename F::Elem;

  explicit Geobucket(const Poly<F>& p) : ring_(p.ring()), w_(p.width()) {
    add(p.cs(), p.es(), 0);
  }

  // Pop the leading term across all buckets; false when the bucket is empty.
  // Cancelling leads are consumed on the way.
  bool pop_lead(Elem& c, std::vector<Exp>& m) {
    const auto& fld = ring_->field;
    while (true) {
      int best = -1;
      for (std::size_t b = 0; b < buckets_.size(); ++b) {
        if (buckets_[b].empty()) continue;
        if (best < 0 ||
            ring_->cmp(buckets_[b].lm(w_), buckets_[static_cast<std::size_t>(best)].lm(w_)) > 0)
          best = static_cast<int>(b);
      }
      if (best < 0) return false;
      auto& bb = buckets_[static_cast<std::size_t>(best)];
      m.assign(bb.lm(w_), bb.lm(w_) + w_);
      c = bb.cs[bb.off];
      ++bb.off;
      for (auto& other : buckets_) {
        if (other.empty()) continue;
        if (kern::ops().equal(other.lm(w_), m.data(), w_)) {
          c = fld.add(c, other.cs[other.off]);
          ++other.off;
        }
      }
      if (!fld.is_zero(c)) return true;
    }
  }

  // add c * x^m * g, skipping the first skip terms of g
  void add_mul(const Elem& c, const Exp* m, const Poly<F>& g, std::size_t skip) {
    const auto& fld = ring_->field;
    std::vector<Elem> cs;
    std::vector<Exp> es;
    cs.reserve(g.nterms() - skip);
    es.resize((g.nterms() - skip) * w_);
    for (std::size_t i = skip; i < g.nterms(); ++i) {
      cs.push_back(fld.mul(c, g.coeff(i)));
      kern::ops().add(g.mono(i), m, es.data() + (i - skip) * w_, w_);
    }
    add(std::move(cs), std::move(es), 0);
  }

  Poly<F> to_poly() {
    Stream acc;
    for (auto& b : buckets_) {
      if (b.empty()) continue;
      acc = merge(acc, b);
      b = Stream{};
    }
    buckets_.clear();
    return Poly<F>::from_sorted_terms(ring_, std::move(acc.cs), std::move(acc.es));
  }

 private:
  struct Stream {
    std::vector<Elem> cs;
    std::vector<Exp> es;
    std::size_t off = 0;
    bool empty() const { return off >= cs.size(); }
    std::size_t size() const { return cs.size() - off; }
    const Exp* lm(std::size_t w) const { return es.data() + off * w; }
  };

  // strictly-descending merge with coefficient addition
  Stream merge(const Stream& a, const Stream& b) {
    const auto& fld = ring_->field;
    Stream out;
    out.cs.reserve(a.size() + b.size());
    out.es.reserve((a.size() + b.size()) * w_);
    std::size_t i = a.off, j = b.off;
    while (i < a.cs.size() || j < b.cs.size()) {
      int cv;
      if (i == a.cs.size())
        cv = -1;
      else if (j == b.cs.size())
        cv = 1;
      else
        cv = ring_->cmp(a.es.data() + i * w_, b.es.data() + j * w_);
      if (cv > 0) {
        out.cs.push_back(a.cs[i]);
        out.es.insert(out.es.end(), a.es.begin() + i * w_, a.es.begin() + (i + 1) * w_);
        ++i;
      } else if (cv < 0) {
        out.cs.push_back(b.cs[j]);
        out.es.insert(out.es.end(), b.es.begin() + j * w_, b.es.begin() + (j + 1) * w_);
        ++j;
      } else {
        Elem s = fld.add(a.cs[i], b.cs[j]);
        if (!fld.is_zero(s)) {
          out.cs.push_back(std::move(s));
          out.es.insert(out.es.end(), a.es.begin() + i * w_, a.es.begin() + (i + 1) * w_);
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  void add(std::vector<Elem> cs, std::vector<Exp> es, std::size_t off) {
    Stream s;
    s.cs = std::move(cs);
    s.es = std::move(es);
    s.off = off;
    if (s.empty()) return;
    // bucket index by size; carry upward while occupied
    std::size_t idx = slot(s.size());
    while (true) {
      if (buckets_.size() <= idx) buckets_.resize(idx + 1);
      if (buckets_[idx].empty()) {
        buckets_[idx] = std::move(s);
        return;
      }
      s = merge(buckets_[idx], s);
      buckets_[idx] = Stream{};
      if (s.empty()) return;
      idx = std::max(idx + 1, slot(s.size()));
    }
  }

  static std::size_t slot(std::size_t n) {
    std::size_t idx = 0, cap = 4;
    while (cap < n) {
      cap *= 4;
      ++idx;
    }
    return idx;
  }

  RingPtr<F> ring_;
  std::size_t w_;
  std::vector<Stream> buckets_;
};

}  // namespace detail

// Remainder of multivariate division of f by the sequence G: no term of the
// result is divisible by any leading monomial of G, f - r lies in (G), and
// the divisor is always the first match in sequence order.
template <class F>
Poly<F> normal_form(const Poly<F>& f, std::span<const Poly<F>> G, GBStats* stats = nullptr,
                    std::uint64_t budget = kDefaultBudget) {
  for (const auto& g : G) check_same_ring(f.ring(), g.ring());
  const std::size_t w = f.width();
  const auto& fld = f.ring()->field;
  detail::Geobucket<F> bucket(f);
  // successive irreducible leads are strictly descending, so the remainder
  // can be assembled by appending
  std::vector<typename F::Elem> rc;
  std::vector<Exp> re;
  typename F::Elem c;
  std::vector<Exp> m(w), q(w);
  while (bucket.pop_lead(c, m)) {
    int k = -1;
    for (std::size_t idx = 0; idx < G.size(); ++idx) {
      if (!G[idx].is_zero() && kern::ops().divides(G[idx].lm(), m.data(), w)) {
        k = static_cast<int>(idx);
        break;
      }
    }
    if (k < 0) {
      rc.push_back(c);
      re.insert(re.end(), m.begin(), m.end());
      continue;
    }
    if (stats && ++stats->reductions > budget)
      throw BudgetExceededError("reduction budget exhausted");
    const auto& g = G[static_cast<std::size_t>(k)];
    kern::ops().sub(m.data(), g.lm(), q.data(), w);
    bucket.add_mul(fld.neg(fld.div(c, g.lc())), q.data(), g, 1);
  }
  return Poly<F>::from_sorted_terms(f.ring(), std::move(rc), std::move(re));
}

template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& G, GBStats* stats = nullptr,
                    std::uint64_t budget = kDefaultBudget) {
  return normal_form(f, std::span<const Poly<F>>(G), stats, budget);
}

// Division with explicit quotients: f = sum q_i g_i + r.
template <class F>
std::pair<Poly<F>, std::vector<Poly<F>>> divide_with_quotients(const Poly<F>& f,
                                                               std::span<const Poly<F>> G) {
  for (const auto& g : G) check_same_ring(f.ring(), g.ring());
  const std::size_t w = f.width();
  const auto& fld = f.ring()->field;
  Poly<F> p = f;
  Poly<F> r = Poly<F>::zero(f.ring());
  std::vector<Poly<F>> qs(G.size(), Poly<F>::zero(f.ring()));
  while (!p.is_zero()) {
    bool stepped = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      const auto& g = G[k];
      if (g.is_zero() || !kern::ops().divides(g.lm(), p.lm(), w)) continue;
      std::vector<Exp> q(w);
      kern::ops().sub(p.lm(), g.lm(), q.data(), w);
      auto c = fld.div(p.lc(), g.lc());
      qs[k] = qs[k] + Poly<F>::from_terms(f.ring(), {c}, q);
      p = p.sub_mul(c, q.data(), g);
      stepped = true;
      break;
    }
    if (stepped) continue;
    auto lt = Poly<F>::from_terms(f.ring(), {p.lc()}, std::vector<Exp>(p.lm(), p.lm() + w));
    r = r + lt;
    p = p - lt;
  }
  return {r, qs};
}

template <class F>
Poly<F> spoly(const Poly<F>& f, const Poly<F>& g) {
  check_same_ring(f.ring(), g.ring());
  const std::size_t w = f.width();
  const auto& fld = f.ring()->field;
  std::vector<Exp> l(w), a(w), b(w);
  kern::ops().max(f.lm(), g.lm(), l.data(), w);
  kern::ops().sub(l.data(), f.lm(), a.data(), w);
  kern::ops().sub(l.data(), g.lm(), b.data(), w);
  return f.mul_term(fld.inv(f.lc()), a.data()) - g.mul_term(fld.inv(g.lc()), b.data());
}

namespace detail {

// For Q, strip integer content and normalize the sign of the leading
// coefficient; keeps intermediate bases integral. For other fields this is
// just monic scaling.
inline Poly<QField> gb_normalize(const Poly<QField>& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (std::size_t i = 0; i < p.nterms(); ++i) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), p.coeff(i).get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p.coeff(i).get_den().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.lc()) < 0) scale = -scale;
  return p.scale(scale);
}

template <class F>
Poly<F> gb_normalize(const Poly<F>& p) {
  return p.monic();
}

}  // namespace detail

struct BuchbergerOptions {
  // Pair selection: plain lcm-degree order measures far better than sugar on
  // the unit-detection workloads this engine mostly runs.
  bool sugar = false;
  bool tail_reduce = true;  // keep new basis elements' tails in normal form
};

// Buchberger with the sugar selection strategy, Gebauer-Moeller pair
// pruning, and tail reduction of new basis elements. Returns an unreduced
// basis; collapses to {1} as soon as a unit turns up.
template <class F>
GroebnerBasis<F> buchberger(std::span<const Poly<F>> gens,
                            std::uint64_t budget = kDefaultBudget,
                            BuchbergerOptions opts = {}) {
  GroebnerBasis<F> out;
  GBStats& stats = out.stats;
  if (gens.empty()) throw ValueError("buchberger needs at least one generator to fix the ring");
  RingPtr<F> ring = gens.front().ring();
  out.ring = ring;
  const std::size_t w = ring->width();
  const auto& fld = ring->field;

  std::vector<Poly<F>> G;
  std::vector<std::uint32_t> sugar;
  for (const auto& g : gens) {
    check_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    auto n = detail::gb_normalize(g);
    if (n.is_constant()) {
      out.basis = {Poly<F>::one(ring)};
      return out;
    }
    G.push_back(std::move(n));
    sugar.push_back(G.back().total_degree());
  }
  if (G.empty()) {
    out.basis = {};
    return out;
  }

  struct Pair {
    std::uint32_t key;  // sugar or lcm degree, per strategy
    std::uint32_t lcm_deg;
    std::uint32_t sugar;
    std::uint32_t i, j;
    std::vector<Exp> lcm;
    bool operator<(const Pair& o) const {
      if (key != o.key) return key < o.key;
      if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<Pair> pending;

  auto make_pair_entry = [&](std::uint32_t i, std::uint32_t j) {
    Pair pr;
    pr.i = i;
    pr.j = j;
    pr.lcm.resize(w);
    kern::ops().max(G[i].lm(), G[j].lm(), pr.lcm.data(), w);
    pr.lcm_deg = kern::ops().total_deg(pr.lcm.data(), w);
    std::uint32_t di = kern::ops().total_deg(G[i].lm(), w);
    std::uint32_t dj = kern::ops().total_deg(G[j].lm(), w);
    pr.sugar = std::max(sugar[i] + pr.lcm_deg - di, sugar[j] + pr.lcm_deg - dj);
    pr.key = opts.sugar ? pr.sugar : pr.lcm_deg;
    return pr;
  };

  // Gebauer-Moeller update: add the pairs (i, n) for all i < n, pruning new
  // and old pairs through the lcm divisibility rules.
  auto gm_update = [&](std::uint32_t n) {
    std::vector<Pair> cand;
    cand.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) cand.push_back(make_pair_entry(i, n));
    // prune old pairs strictly covered by the new element
    for (auto it = pending.begin(); it != pending.end();) {
      if (kern::ops().divides(G[n].lm(), it->lcm.data(), w) &&
          !kern::ops().equal(cand[it->i].lcm.data(), it->lcm.data(), w) &&
          !kern::ops().equal(cand[it->j].lcm.data(), it->lcm.data(), w)) {
        it = pending.erase(it);
        ++stats.pairs_skipped;
      } else {
        ++it;
      }
    }
    // drop candidates whose lcm is a proper multiple of another candidate's
    std::vector<bool> dead(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || dead[a] || dead[b]) continue;
        if (kern::ops().divides(cand[b].lcm.data(), cand[a].lcm.data(), w) &&
            !kern::ops().equal(cand[b].lcm.data(), cand[a].lcm.data(), w))
          dead[a] = true;
      }
    }
    // per equal-lcm class: a coprime member kills the class, else keep one
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      bool coprime = kern::ops().disjoint(G[cand[a].i].lm(), G[n].lm(), w);
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (dead[b] || !kern::ops().equal(cand[a].lcm.data(), cand[b].lcm.data(), w)) continue;
        dead[b] = true;
        if (kern::ops().disjoint(G[cand[b].i].lm(), G[n].lm(), w)) coprime = true;
      }
      if (coprime) dead[a] = true;
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a])
        ++stats.pairs_skipped;
      else
        pending.insert(std::move(cand[a]));
    }
  };

  // seed pairwise via repeated updates
  for (std::uint32_t n = 1; n < G.size(); ++n) gm_update(n);

  typename F::Elem c;
  std::vector<Exp> m(w), q(w);
  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    ++stats.pairs_considered;

    detail::Geobucket<F> bucket(spoly(G[pr.i], G[pr.j]));
    std::uint32_t psugar = pr.sugar;
    // reduce; with tail_reduce the loop runs to full normal form, otherwise
    // it stops at the first irreducible lead
    std::vector<typename F::Elem> rc;
    std::vector<Exp> re;
    while (bucket.pop_lead(c, m)) {
      int k = detail::pick_reducer(m.data(), G, w);
      if (k < 0) {
        rc.push_back(c);
        re.insert(re.end(), m.begin(), m.end());
        if (!opts.tail_reduce) break;
        continue;
      }
      if (++stats.reductions > budget)
        throw BudgetExceededError("reduction budget exhausted");
      const auto& g = G[static_cast<std::size_t>(k)];
      kern::ops().sub(m.data(), g.lm(), q.data(), w);
      psugar = std::max(psugar,
                        sugar[static_cast<std::size_t>(k)] +
                            kern::ops().total_deg(q.data(), w));
      bucket.add_mul(fld.neg(fld.div(c, g.lc())), q.data(), g, 1);
    }
    Poly<F> head = Poly<F>::from_sorted_terms(ring, std::move(rc), std::move(re));
    Poly<F> p = opts.tail_reduce ? std::move(head) : head + bucket.to_poly();
    if (p.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    if (p.is_constant()) {
      out.basis = {Poly<F>::one(ring)};
      return out;
    }
    G.push_back(detail::gb_normalize(p));
    sugar.push_back(psugar);
    gm_update(static_cast<std::uint32_t>(G.size()) - 1);
  }
  out.basis = std::move(G);
  return out;
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Poly<F>>& gens,
                            std::uint64_t budget = kDefaultBudget,
                            BuchbergerOptions opts = {}) {
  return buchberger(std::span<const Poly<F>>(gens), budget, opts);
}

// The unique reduced basis: monic generators, no term of one divisible by
// the leading monomial of another, sorted ascending by leading monomial.
template <class F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& gb) {
  GroebnerBasis<F> out;
  out.ring = gb.ring;
  out.stats = gb.stats;
  out.reduced = true;
  const std::size_t w = gb.ring->width();

  std::vector<Poly<F>> work;
  for (const auto& g : gb.basis)
    if (!g.is_zero()) work.push_back(g.monic());
  std::sort(work.begin(), work.end(), [&](const Poly<F>& a, const Poly<F>& b) {
    return gb.ring->cmp(a.lm(), b.lm()) < 0;
  });
  // minimal basis: drop anything whose lead is divisible by a kept lead
  std::vector<Poly<F>> minimal;
  for (const auto& g : work) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (kern::ops().divides(h.lm(), g.lm(), w)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  // tail-reduce each against the others; leading terms are untouched
  std::vector<Poly<F>> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly<F>> others;
    others.reserve(reduced.size() - 1);
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], std::span<const Poly<F>>(others)).monic();
  }
  out.basis = std::move(reduced);
  return out;
}

// Convenience: reduced Groebner basis of the given generators.
template <class F>
GroebnerBasis<F> groebner(std::span<const Poly<F>> gens, std::uint64_t budget = kDefaultBudget) {
  return reduce_basis(buchberger(gens, budget));
}

template <class F>
GroebnerBasis<F> groebner(const std::vector<Poly<F>>& gens,
                          std::uint64_t budget = kDefaultBudget) {
  return groebner(std::span<const Poly<F>>(gens), budget);
}

}  // namespace minvar
