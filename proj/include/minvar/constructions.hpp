// Candidate defining-equation sets and the two radical-combination rules
// they are built from.
#pragma once

#include <cassert>
#include <map>
#include <numeric>

#include "minvar/barred.hpp"

namespace minvar {

// One step of a verification ladder: a polynomial claimed to lie in the
// radical of the equation set. Exact steps carry a power and cofactors over
// the pool (set polynomials followed by the previously established members)
// so that the claim member^power == sum cofactor_i * pool_i reduces to an
// arithmetic identity; the remaining steps are left to a radical membership
// check. Ladders only accelerate verification - every step is re-checked,
// and enriching a generating set by members of its radical never changes
// the radical.
template <class F>
struct LadderStep {
  Poly<F> member;
  bool exact = false;
  unsigned power = 1;
  std::vector<std::pair<std::size_t, Poly<F>>> cofactors;  // pool index -> cofactor
};

template <class F>
struct EquationSet {
  std::string label;
  std::vector<std::string> names;  // aligned with polys
  std::vector<Poly<F>> polys;
  std::map<std::string, std::string> metadata;  // construction trace
  std::vector<LadderStep<F>> ladder;

  std::size_t size() const { return polys.size(); }
};

// Split G = P*v1 - Q*v2: every term divisible by v1 goes to P, the rest
// must be divisible by v2 and goes to -Q*v2.
template <class F>
std::pair<Poly<F>, Poly<F>> extract_pq(const Poly<F>& G, std::size_t v1, std::size_t v2) {
  const auto& ring = G.ring();
  const std::size_t w = G.width();
  const auto& fld = ring->field;
  std::vector<typename F::Elem> pc, qc;
  std::vector<Exp> pe, qe;
  for (std::size_t i = 0; i < G.nterms(); ++i) {
    const Exp* m = G.mono(i);
    std::vector<Exp> d(m, m + w);
    if (m[v1] >= 1) {
      d[v1] -= 1;
      pc.push_back(G.coeff(i));
      pe.insert(pe.end(), d.begin(), d.end());
    } else if (m[v2] >= 1) {
      d[v2] -= 1;
      qc.push_back(fld.neg(G.coeff(i)));
      qe.insert(qe.end(), d.begin(), d.end());
    } else {
      throw ValueError("polynomial is not in the ideal of the two split variables");
    }
  }
  return {Poly<F>::from_terms(ring, std::move(pc), std::move(pe)),
          Poly<F>::from_terms(ring, std::move(qc), std::move(qe))};
}

template <class F>
std::pair<Poly<F>, Poly<F>> extract_pq(const Poly<F>& G) {
  int v1 = G.ring()->vars.index("x1");
  int v2 = G.ring()->vars.index("x2");
  if (v1 < 0 || v2 < 0) throw ValueError("ring lacks x1, x2");
  return extract_pq(G, static_cast<std::size_t>(v1), static_cast<std::size_t>(v2));
}

// Greedy decomposition of G over the listed variables: G = sum vars[k] *
// result[k], each term assigned to the first variable dividing it. Fails if
// a term is divisible by none.
template <class F>
std::vector<Poly<F>> decompose_over(const Poly<F>& G, const std::vector<std::size_t>& vars) {
  const auto& ring = G.ring();
  const std::size_t w = G.width();
  std::vector<std::vector<typename F::Elem>> cs(vars.size());
  std::vector<std::vector<Exp>> es(vars.size());
  for (std::size_t i = 0; i < G.nterms(); ++i) {
    const Exp* m = G.mono(i);
    bool placed = false;
    for (std::size_t k = 0; k < vars.size() && !placed; ++k) {
      if (m[vars[k]] >= 1) {
        std::vector<Exp> d(m, m + w);
        d[vars[k]] -= 1;
        cs[k].push_back(G.coeff(i));
        es[k].insert(es[k].end(), d.begin(), d.end());
        placed = true;
      }
    }
    if (!placed) throw ValueError("polynomial is not in the ideal of the given variables");
  }
  std::vector<Poly<F>> out;
  for (std::size_t k = 0; k < vars.size(); ++k)
    out.push_back(Poly<F>::from_terms(ring, std::move(cs[k]), std::move(es[k])));
  return out;
}

// The two-polynomial radical combination: the triple
// (a1 b1 - a2 b2, b1 g, b2 g) and the pair
// (a1 (a1 b1 - a2 b2) + b2 g, a2 (a1 b1 - a2 b2) + b1 g) generate the same
// radical.
template <class F>
std::pair<Poly<F>, Poly<F>> radical_pair_combine(const Poly<F>& a1, const Poly<F>& a2,
                                                 const Poly<F>& b1, const Poly<F>& b2,
                                                 const Poly<F>& g) {
  auto delta = a1 * b1 - a2 * b2;
  return {a1 * delta + b2 * g, a2 * delta + b1 * g};
}

// Grouped radical combination: replaces the elements of each group by the
// sum of their e(p)-th powers, provided the product of any two distinct
// group members lies in the radical of I plus all earlier groups. The
// hypothesis is checked; a failure names the offending pair.
template <class F>
std::vector<Poly<F>> radical_group_combine(
    const Ideal<F>& I, const std::vector<std::vector<Poly<F>>>& groups,
    const std::vector<std::vector<unsigned>>& exponents = {},
    std::uint64_t budget = kDefaultBudget) {
  if (!exponents.empty() && exponents.size() != groups.size())
    throw ValueError("one exponent list per group required");
  const auto& ring = I.ring();
  std::vector<Poly<F>> prefix = I.generators();
  std::vector<Poly<F>> combined;
  for (std::size_t l = 0; l < groups.size(); ++l) {
    const auto& group = groups[l];
    if (!exponents.empty() && exponents[l].size() != group.size())
      throw ValueError("one exponent per group element required");
    Ideal<F> Il(ring, prefix);
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        if (group[a] == group[b]) continue;
        if (!radical_membership(group[a] * group[b], Il, budget))
          throw HypothesisError(l, group[a].format(), group[b].format());
      }
    Poly<F> q = Poly<F>::zero(ring);
    for (std::size_t a = 0; a < group.size(); ++a) {
      unsigned e = exponents.empty() ? 1 : exponents[l][a];
      if (e < 1) throw ValueError("exponents must be positive");
      Poly<F> pw = group[a];
      for (unsigned k = 1; k < e; ++k) pw = pw * group[a];
      q = q + pw;
    }
    combined.push_back(std::move(q));
    for (const auto& p : group) prefix.push_back(p);
  }
  return combined;
}

// Defining set of size t+1 for the s = 2 family, built recursively from the
// two base equations; the homogeneous flavour raises the z factors to the
// minimal powers that keep every polynomial homogeneous. The recursion also
// emits the verification ladder that retraces it downwards.
template <class F>
EquationSet<F> stci_set_s2(int t, bool homogeneous, const RingPtr<F>& ring) {
  if (t < 1) throw ValueError("t must be at least 1");
  auto var = [&](const std::string& n) { return Poly<F>::variable(ring, n); };
  auto varpow = [&](const std::string& n, unsigned e) {
    int idx = ring->vars.index(n);
    if (idx < 0) throw ValueError("ring lacks variable '" + n + "'");
    return Poly<F>::variable(ring, static_cast<std::size_t>(idx), static_cast<Exp>(e));
  };

  EquationSet<F> out;
  out.label = "stci_s2(t=" + std::to_string(t) + (homogeneous ? ",homogeneous)" : ")");

  auto x1 = var("x1"), x2 = var("x2"), x3 = var("x3"), x4 = var("x4");
  auto one = Poly<F>::one(ring);
  auto minor = x1 * x4 - x2 * x3;
  unsigned e0 = homogeneous ? 2 : 1;

  // levels[k] holds the k+1 polynomials of recursion depth k+1; Ps/Qs/e12s
  // and eis[..][i] record the split and the z exponents used at each depth
  std::vector<std::vector<Poly<F>>> levels;
  std::vector<Poly<F>> Ps(static_cast<std::size_t>(t) + 1, one),
      Qs(static_cast<std::size_t>(t) + 1, one);
  std::vector<unsigned> e12s(static_cast<std::size_t>(t) + 1, 1);
  std::vector<std::vector<unsigned>> eis(static_cast<std::size_t>(t) + 1);

  levels.push_back({x4 * minor + x2 * varpow("z1", e0), x3 * minor + x1 * varpow("z1", e0)});
  out.metadata["zexp.F1@t=1"] = std::to_string(e0);
  out.metadata["zexp.F2@t=1"] = std::to_string(e0);

  for (int tau = 2; tau <= t; ++tau) {
    const std::string at = "@t=" + std::to_string(tau);
    const auto& G = levels.back();
    auto [P, Q] = extract_pq(G[0]);
    out.metadata["P" + at] = P.format();
    out.metadata["Q" + at] = Q.format();
    std::string zt = "z" + std::to_string(tau);

    std::vector<Poly<F>> next;
    unsigned e12 = 1;
    if (homogeneous) {
      assert(P.total_degree() == Q.total_degree());
      e12 = Q.total_degree() + G[0].total_degree() - 1;
    }
    next.push_back(Q * G[0] + x1 * varpow(zt, e12));
    next.push_back(P * G[0] + x2 * varpow(zt, e12));
    out.metadata["zexp.F1" + at] = std::to_string(e12);
    out.metadata["zexp.F2" + at] = std::to_string(e12);
    eis[static_cast<std::size_t>(tau)].assign(static_cast<std::size_t>(tau) + 2, 1);
    for (int i = 3; i <= tau + 1; ++i) {
      const auto& prev = G[static_cast<std::size_t>(i) - 2];
      unsigned ei = homogeneous ? prev.total_degree() - 1 : 1;
      next.push_back(prev + var("y" + std::to_string(i - 3)) * varpow(zt, ei));
      out.metadata["zexp.F" + std::to_string(i) + at] = std::to_string(ei);
      eis[static_cast<std::size_t>(tau)][static_cast<std::size_t>(i)] = ei;
    }
    Ps[static_cast<std::size_t>(tau)] = P;
    Qs[static_cast<std::size_t>(tau)] = Q;
    e12s[static_cast<std::size_t>(tau)] = e12;
    levels.push_back(std::move(next));
  }

  out.polys = levels.back();
  for (std::size_t i = 0; i < out.polys.size(); ++i)
    out.names.push_back("F" + std::to_string(i + 1));

  // The ladder retraces the recursion downwards. The first polynomial of
  // the lower level enters through the square identity G1^2 = x1 F2 - x2 F1,
  // the x z and lower-level polynomials through exact rearrangements, the
  // y z products through the square (y z)^2 = y z F_i - y z G_{i-1} with
  // G_{i-1} decomposed over the variables it is known to live in. With
  // uniform z exponents every step is an arithmetic identity; the
  // homogeneous variant mixes exponents, so its y z steps stay radical
  // checks.
  std::size_t pool_count = out.polys.size();
  auto emit_power = [&](Poly<F> member, unsigned power,
                        std::vector<std::pair<std::size_t, Poly<F>>> cofs) {
    out.ladder.push_back({std::move(member), true, power, std::move(cofs)});
    return pool_count++;
  };
  auto emit_radical = [&](Poly<F> member) {
    out.ladder.push_back({std::move(member), false, 1, {}});
    return pool_count++;
  };
  auto vidx = [&](const std::string& n) {
    int i = ring->vars.index(n);
    if (i < 0) throw ValueError("ring lacks variable '" + n + "'");
    return static_cast<std::size_t>(i);
  };

  std::vector<std::size_t> S(out.polys.size());
  std::iota(S.begin(), S.end(), std::size_t{0});
  for (int tau = t; tau >= 2; --tau) {
    const auto& G = levels[static_cast<std::size_t>(tau) - 2];
    const auto& P = Ps[static_cast<std::size_t>(tau)];
    const auto& Q = Qs[static_cast<std::size_t>(tau)];
    std::string zt = "z" + std::to_string(tau);
    auto Z = varpow(zt, e12s[static_cast<std::size_t>(tau)]);

    std::size_t iG1 = emit_power(G[0], 2, {{S[1], x1}, {S[0], -x2}});
    std::size_t ix1z = emit_power(x1 * Z, 1, {{S[0], one}, {iG1, -Q}});
    std::size_t ix2z = emit_power(x2 * Z, 1, {{S[1], one}, {iG1, -P}});

    std::vector<std::size_t> newS(static_cast<std::size_t>(tau));
    newS[0] = iG1;
    std::vector<std::size_t> iyzs;  // established y_j z entries of this level
    for (int i = 3; i <= tau + 1; ++i) {
      unsigned ei = eis[static_cast<std::size_t>(tau)][static_cast<std::size_t>(i)];
      const auto& Gprev = G[static_cast<std::size_t>(i) - 2];
      auto y = var("y" + std::to_string(i - 3));
      auto yz = y * varpow(zt, ei);
      std::size_t iyz;
      if (!homogeneous) {
        std::vector<std::size_t> cover = {vidx("x1"), vidx("x2")};
        for (int j = 0; j <= i - 4; ++j) cover.push_back(vidx("y" + std::to_string(j)));
        auto parts = decompose_over(Gprev, cover);
        std::vector<std::pair<std::size_t, Poly<F>>> cofs = {{S[static_cast<std::size_t>(i) - 1], yz}};
        cofs.push_back({ix1z, -(parts[0] * y)});
        cofs.push_back({ix2z, -(parts[1] * y)});
        for (int j = 0; j <= i - 4; ++j)
          cofs.push_back({iyzs[static_cast<std::size_t>(j)],
                          -(parts[static_cast<std::size_t>(j) + 2] * y)});
        iyz = emit_power(yz, 2, std::move(cofs));
      } else {
        iyz = emit_radical(yz);
      }
      iyzs.push_back(iyz);
      newS[static_cast<std::size_t>(i) - 2] =
          emit_power(Gprev, 1, {{S[static_cast<std::size_t>(i) - 1], one}, {iyz, -one}});
    }
    S = std::move(newS);
  }
  std::size_t im = emit_power(minor, 2, {{S[0], x1}, {S[1], -x2}});
  emit_power(x2 * varpow("z1", e0), 1, {{S[0], one}, {im, -x4}});
  emit_power(x1 * varpow("z1", e0), 1, {{S[1], one}, {im, -x3}});
  return out;
}

template <class F>
EquationSet<F> stci_set_s2(int t, bool homogeneous, F field,
                           TermOrder order = TermOrder::degrevlex()) {
  auto m = build_matrix(BarredMatrixSpec::distinct(2, t));
  auto ring = make_matrix_ring<F>(m, std::move(field), std::move(order));
  return stci_set_s2(t, homogeneous, ring);
}

// Defining set of size 2s+t-2 for s >= 3: sliding-diagonal sums T_h over the
// monomial generators, anti-diagonal minor sums S_k, and the mixed sums
// U_l = S_l + T_{l+t+1}. Emitted as (T_1..T_{t+1}, U_1..U_{s-2},
// S_{s-1}..S_{2s-3}).
template <class F>
EquationSet<F> diagonal_sum_set(const BarredMatrix& m, const RingPtr<F>& ring) {
  const int s = m.s, t = m.t;
  if (s < 3) throw ValueError("the diagonal-sum set needs s >= 3");
  if (t < 1) throw ValueError("the diagonal-sum set needs t >= 1");
  auto entry = [&](int idx) { return Poly<F>::variable(ring, static_cast<std::size_t>(idx)); };
  auto xi = [&](int i) { return entry(m.row1[i - 1]); };
  auto zv = [&](int j) { return entry(m.row2[m.s + j - 1]); };

  auto T = [&](int h) {
    Poly<F> sum = Poly<F>::zero(ring);
    for (int i = 1; i <= s + t - 1; ++i) {
      int j = i + t - h;
      if (1 <= j && j <= t) sum = sum + xi(i) * zv(j);
    }
    return sum;
  };
  auto S = [&](int k) {
    Poly<F> sum = Poly<F>::zero(ring);
    for (int i = 1; i < s; ++i) {
      int j = k + 2 - i;
      if (i < j && j <= s) sum = sum + big_block_minor(m, ring, i, j);
    }
    return sum;
  };

  EquationSet<F> out;
  out.label = "diagonal_sums(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")";
  for (int h = 1; h <= t + 1; ++h) {
    out.names.push_back("T" + std::to_string(h));
    out.polys.push_back(T(h));
  }
  for (int l = 1; l <= s - 2; ++l) {
    out.names.push_back("U" + std::to_string(l));
    out.polys.push_back(S(l) + T(l + t + 1));
  }
  for (int k = s - 1; k <= 2 * s - 3; ++k) {
    out.names.push_back("S" + std::to_string(k));
    out.polys.push_back(S(k));
  }
  return out;
}

// Anti-diagonal minor sums S_1..S_{2s-3} alone (they cut out the pure minor
// ideal up to radical).
template <class F>
std::vector<Poly<F>> minor_diagonal_sums(const BarredMatrix& m, const RingPtr<F>& ring) {
  std::vector<Poly<F>> sums;
  for (int k = 1; k <= 2 * m.s - 3; ++k) {
    Poly<F> sum = Poly<F>::zero(ring);
    for (int i = 1; i < m.s; ++i) {
      int j = k + 2 - i;
      if (i < j && j <= m.s) sum = sum + big_block_minor(m, ring, i, j);
    }
    sums.push_back(std::move(sum));
  }
  return sums;
}

// The hand-built minimal sets for (s, t) = (3,1), (4,1), (5,1): 4, 6 and 8
// polynomials respectively.
template <class F>
EquationSet<F> small_cases_set(int s, const BarredMatrix& m, const RingPtr<F>& ring) {
  if (m.s != s || m.t != 1) throw ValueError("the small-case sets live on (s, 1) matrices");
  auto entry = [&](int idx) { return Poly<F>::variable(ring, static_cast<std::size_t>(idx)); };
  auto x = [&](int i) { return entry(i <= m.s ? m.row1[i - 1] : m.row2[i - m.s - 1]); };
  auto mi = [&](int i, int j) { return big_block_minor(m, ring, i, j); };
  auto z1 = entry(m.row2[m.s]);

  EquationSet<F> out;
  out.label = "small_cases(s=" + std::to_string(s) + ")";
  std::vector<Poly<F>> F_;
  switch (s) {
    case 3:
      F_ = {mi(2, 3),
            x(1) * z1 + x(4) * mi(1, 2),
            mi(1, 3) + x(2) * z1 + x(5) * mi(1, 2),
            x(3) * z1 + x(6) * mi(1, 2)};
      break;
    case 4:
      F_ = {mi(2, 4),
            mi(1, 4) + mi(2, 3),
            mi(3, 4) + x(1) * z1 + x(5) * mi(1, 2),
            mi(1, 3) + x(2) * z1 + x(6) * mi(1, 2),
            x(3) * z1 + x(7) * mi(1, 2),
            x(4) * z1 + x(8) * mi(1, 2)};
      break;
    case 5:
      F_ = {mi(1, 4) + mi(2, 3),
            mi(1, 5) + mi(2, 4),
            mi(2, 5) + mi(3, 4),
            mi(3, 5) + x(1) * z1 + x(6) * mi(1, 2),
            mi(1, 3) + x(2) * z1 + x(7) * mi(1, 2),
            mi(4, 5) + x(3) * z1 + x(8) * mi(1, 2),
            x(4) * z1 + x(9) * mi(1, 2),
            x(5) * z1 + x(10) * mi(1, 2)};
      break;
    default:
      throw ValueError("small-case sets exist for s = 3, 4, 5 only");
  }
  out.polys = std::move(F_);
  for (std::size_t i = 0; i < out.polys.size(); ++i)
    out.names.push_back("F" + std::to_string(i + 1));
  return out;
}

template <class F>
EquationSet<F> small_cases_set(int s, F field, TermOrder order = TermOrder::degrevlex()) {
  auto m = build_matrix(BarredMatrixSpec::distinct(s, 1));
  auto ring = make_matrix_ring<F>(m, std::move(field), std::move(order));
  return small_cases_set(s, m, ring);
}

}  // namespace minvar
