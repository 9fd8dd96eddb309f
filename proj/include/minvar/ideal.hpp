// Ideal-level predicates: membership, radical membership via the
// Rabinowitsch trick, radical containment/equality, intersection by tag
// variable elimination, Krull dimension and height.
#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "minvar/groebner.hpp"

namespace minvar {

template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Poly<F>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) check_same_ring(ring_, g.ring());
  }

  Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lock(o.mutex_);
    cache_ = o.cache_;
  }
  Ideal& operator=(const Ideal& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mutex_, o.mutex_);
    ring_ = o.ring_;
    gens_ = o.gens_;
    cache_ = o.cache_;
    return *this;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Poly<F>>& generators() const { return gens_; }

  // Reduced basis under the ring's own order, computed once and cached.
  const GroebnerBasis<F>& reduced_gb(std::uint64_t budget = kDefaultBudget) const {
    return reduced_gb_under(ring_->order, budget);
  }

  // Reduced basis under any order, cached per order. The returned basis
  // lives in a ring that shares variables and field but carries the
  // requested order.
  const GroebnerBasis<F>& reduced_gb_under(const TermOrder& order,
                                           std::uint64_t budget = kDefaultBudget) const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::string key = order.to_string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    GroebnerBasis<F> gb;
    RingPtr<F> target = order == ring_->order ? ring_ : with_order(ring_, order);
    std::vector<Poly<F>> gens;
    for (const auto& g : gens_)
      if (!g.is_zero()) gens.push_back(target == ring_ ? g : g.lift(target));
    if (gens.empty())
      gb = GroebnerBasis<F>{target, {}, true, {}};
    else
      gb = groebner(gens, budget);
    return cache_.emplace(key, std::move(gb)).first->second;
  }

  bool is_unit(std::uint64_t budget = kDefaultBudget) const {
    const auto& gb = reduced_gb(budget);
    return gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero();
  }

 private:
  RingPtr<F> ring_;
  std::vector<Poly<F>> gens_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, GroebnerBasis<F>> cache_;
};

template <class F>
bool ideal_membership(const Poly<F>& f, const Ideal<F>& I,
                      std::uint64_t budget = kDefaultBudget) {
  check_same_ring(f.ring(), I.ring());
  return normal_form(f, I.reduced_gb(budget).basis).is_zero();
}

struct RadicalWitness {
  bool in_radical = false;
  std::uint64_t reductions = 0;
  std::size_t gb_size = 0;
};

// f lies in the radical of I iff 1 lies in I + (1 - w f) for a fresh
// variable w. The extended check always runs under degrevlex with w last.
template <class F>
RadicalWitness radical_membership_witness(const Poly<F>& f, const Ideal<F>& I,
                                          std::uint64_t budget = kDefaultBudget) {
  check_same_ring(f.ring(), I.ring());
  if (f.is_zero()) {
    // 0 is in every radical of an ideal; no extension needed
    return {true, 0, 0};
  }
  const RingPtr<F>& ring = f.ring();
  std::vector<std::string> names = ring->vars.names();
  names.push_back(ring->fresh_name("w"));
  auto ext = make_ring<F>(std::move(names), ring->field, TermOrder::degrevlex());
  std::vector<Poly<F>> gens;
  gens.reserve(I.generators().size() + 1);
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g.lift(ext));
  auto w = Poly<F>::variable(ext, ext->width() - 1);
  gens.push_back(Poly<F>::one(ext) - w * f.lift(ext));
  auto gb = buchberger(gens, budget);
  RadicalWitness out;
  out.reductions = gb.stats.reductions;
  out.gb_size = gb.basis.size();
  out.in_radical =
      gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero();
  return out;
}

template <class F>
bool radical_membership(const Poly<F>& f, const Ideal<F>& I,
                        std::uint64_t budget = kDefaultBudget) {
  return radical_membership_witness(f, I, budget).in_radical;
}

// I is contained in the radical of J; generator-wise radical membership.
template <class F>
bool radical_contains(const Ideal<F>& I, const Ideal<F>& J,
                      std::uint64_t budget = kDefaultBudget) {
  check_same_ring(I.ring(), J.ring());
  for (const auto& g : I.generators())
    if (!radical_membership(g, J, budget)) return false;
  return true;
}

template <class F>
bool radical_equal(const Ideal<F>& I, const Ideal<F>& J,
                   std::uint64_t budget = kDefaultBudget) {
  return radical_contains(I, J, budget) && radical_contains(J, I, budget);
}

// I cap J = (u I + (1-u) J) cap R, by eliminating a fresh tag variable u
// with a block order.
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J,
                   std::uint64_t budget = kDefaultBudget) {
  check_same_ring(I.ring(), J.ring());
  const RingPtr<F>& ring = I.ring();
  std::vector<std::string> names;
  names.push_back(ring->fresh_name("u"));
  for (const auto& n : ring->vars.names()) names.push_back(n);
  auto ext = make_ring<F>(std::move(names), ring->field,
                          TermOrder::block(1, ring->order));
  auto u = Poly<F>::variable(ext, 0);
  auto one_minus_u = Poly<F>::one(ext) - u;
  std::vector<Poly<F>> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(u * g.lift(ext));
  for (const auto& g : J.generators())
    if (!g.is_zero()) gens.push_back(one_minus_u * g.lift(ext));
  if (gens.empty()) return Ideal<F>(ring, {});
  auto gb = groebner(gens, budget);
  std::vector<Poly<F>> result;
  for (const auto& g : gb.basis) {
    bool has_u = false;
    for (std::size_t i = 0; i < g.nterms() && !has_u; ++i)
      if (g.mono(i)[0] != 0) has_u = true;
    if (!has_u) result.push_back(g.lift(ring));
  }
  return Ideal<F>(ring, std::move(result));
}

namespace detail {

// Minimum hitting set over the supports of the leading monomials, by branch
// and bound. Supports are bitmasks over at most 64 variables.
inline void min_hitting_set(const std::vector<std::uint64_t>& supports, std::uint64_t chosen,
                            int size, int& best) {
  if (size >= best) return;
  std::uint64_t uncovered = 0;
  for (auto s : supports)
    if ((s & chosen) == 0) {
      uncovered = s;
      break;
    }
  if (uncovered == 0) {
    best = size;
    return;
  }
  while (uncovered) {
    std::uint64_t bit = uncovered & (~uncovered + 1);
    uncovered ^= bit;
    min_hitting_set(supports, chosen | bit, size + 1, best);
  }
}

}  // namespace detail

// Krull dimension of R/I: the largest variable subset S such that no
// leading monomial of the reduced basis lives entirely inside S.
template <class F>
int krull_dimension(const Ideal<F>& I, std::uint64_t budget = kDefaultBudget) {
  const auto& gb = I.reduced_gb(budget);
  const std::size_t w = I.ring()->width();
  if (w > 64) throw ValueError("dimension supports at most 64 variables");
  if (I.is_unit(budget)) throw UnitIdealError("Krull dimension of the unit ideal");
  std::vector<std::uint64_t> supports;
  for (const auto& g : gb.basis) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < w; ++v)
      if (g.lm()[v]) mask |= std::uint64_t(1) << v;
    supports.push_back(mask);
  }
  // keep only minimal supports; supersets are implied
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    bool dominated = false;
    for (auto m : supports)
      if (m != s && (m & s) == m) {
        dominated = true;
        break;
      }
    if (!dominated && std::find(minimal.begin(), minimal.end(), s) == minimal.end())
      minimal.push_back(s);
  }
  int best = static_cast<int>(w);
  detail::min_hitting_set(minimal, 0, 0, best);
  return static_cast<int>(w) - best;
}

template <class F>
int height(const Ideal<F>& I, std::uint64_t budget = kDefaultBudget) {
  return static_cast<int>(I.ring()->width()) - krull_dimension(I, budget);
}

}  // namespace minvar
