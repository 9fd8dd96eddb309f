// Two-row barred matrices and the ideals attached to them: the two-minors of
// the generic block, the variable products, the prime components, and the
// closed-form bounds table.
#pragma once

#include <optional>

#include "minvar/ideal.hpp"

namespace minvar {

// Identification scheme for the entries of the matrix. "bar" merges the
// maximal admissible set (fewest variables); "custom" supplies explicit
// identifications.
struct BarredMatrixSpec {
  enum class Scheme { Distinct, Bar, Custom };

  int s = 2;
  int t = 1;
  Scheme scheme = Scheme::Distinct;
  // custom only: x_{2s} = y_0, and z_i = y_j pairs with 1 <= i <= j <= t-1
  bool x2s_eq_y0 = false;
  std::vector<std::pair<int, int>> z_eq_y;

  static BarredMatrixSpec distinct(int s, int t) { return {s, t, Scheme::Distinct, false, {}}; }
  static BarredMatrixSpec bar(int s, int t) { return {s, t, Scheme::Bar, false, {}}; }
  static BarredMatrixSpec custom(int s, int t, bool x2s_eq_y0,
                                 std::vector<std::pair<int, int>> z_eq_y) {
    return {s, t, Scheme::Custom, x2s_eq_y0, std::move(z_eq_y)};
  }
  static BarredMatrixSpec parse(int s, int t, const std::string& ident);

  void validate() const;
  std::string ident_string() const;
};

// The resolved matrix: a big block of s columns plus t single columns, each
// entry an index into var_names. First row (x_1..x_s, y_0..y_{t-1}), second
// row (x_{s+1}..x_{2s}, z_1..z_t), with identifications applied.
struct BarredMatrix {
  int s = 0;
  int t = 0;
  std::vector<std::string> var_names;
  std::vector<int> row1, row2;  // length s + t each

  int n_vars() const { return static_cast<int>(var_names.size()); }
};

BarredMatrix build_matrix(const BarredMatrixSpec& spec);

template <class F>
RingPtr<F> make_matrix_ring(const BarredMatrix& m, F field,
                            TermOrder order = TermOrder::degrevlex()) {
  return make_ring<F>(m.var_names, std::move(field), std::move(order));
}

// [ij]: the 2x2 minor of columns i < j of the big block (1-based columns).
template <class F>
Poly<F> big_block_minor(const BarredMatrix& m, const RingPtr<F>& ring, int i, int j) {
  if (!(1 <= i && i < j && j <= m.s)) throw ValueError("minor columns out of range");
  auto e = [&](int idx) { return Poly<F>::variable(ring, static_cast<std::size_t>(idx)); };
  return e(m.row1[i - 1]) * e(m.row2[j - 1]) - e(m.row1[j - 1]) * e(m.row2[i - 1]);
}

// Generator classes of the attached ideal:
//   (I)   two-minors of the big block,
//   (II)  products x_i z_j for 1 <= i <= s, 1 <= j <= t,
//   (III) products y_i z_j for 0 <= i <= j-2 <= t-2.
template <class F>
std::vector<Poly<F>> ideal_J_generators(const BarredMatrix& m, const RingPtr<F>& ring) {
  auto e = [&](int idx) { return Poly<F>::variable(ring, static_cast<std::size_t>(idx)); };
  std::vector<Poly<F>> gens;
  for (int i = 1; i <= m.s; ++i)
    for (int j = i + 1; j <= m.s; ++j) gens.push_back(big_block_minor(m, ring, i, j));
  for (int i = 1; i <= m.s; ++i)
    for (int j = 1; j <= m.t; ++j)
      gens.push_back(e(m.row1[i - 1]) * e(m.row2[m.s + j - 1]));
  for (int j = 2; j <= m.t; ++j)
    for (int i = 0; i <= j - 2; ++i)
      gens.push_back(e(m.row1[m.s + i]) * e(m.row2[m.s + j - 1]));
  return gens;
}

template <class F>
Ideal<F> build_ideal_J(const BarredMatrix& m, const RingPtr<F>& ring) {
  return Ideal<F>(ring, ideal_J_generators(m, ring));
}

template <class F>
Ideal<F> build_ideal_J(const BarredMatrixSpec& spec, F field,
                       TermOrder order = TermOrder::degrevlex()) {
  auto m = build_matrix(spec);
  auto ring = make_matrix_ring<F>(m, std::move(field), std::move(order));
  return build_ideal_J(m, ring);
}

// The pure minor ideal of the big block (the t = 0 ideal).
template <class F>
Ideal<F> build_ideal_Is(const BarredMatrix& m, const RingPtr<F>& ring) {
  std::vector<Poly<F>> gens;
  for (int i = 1; i <= m.s; ++i)
    for (int j = i + 1; j <= m.s; ++j) gens.push_back(big_block_minor(m, ring, i, j));
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
Ideal<F> build_ideal_Is(int s, F field, TermOrder order = TermOrder::degrevlex()) {
  auto m = build_matrix(BarredMatrixSpec::distinct(s, 0));
  auto ring = make_matrix_ring<F>(m, std::move(field), std::move(order));
  return build_ideal_Is(m, ring);
}

// The monomial ideal of classes (II) + (III): with xi_1..xi_{s+t} the first
// row, generators are xi_i z_j for 1 <= i <= s+t-1, i-s+1 <= j <= t.
template <class F>
Ideal<F> build_ideal_Lst(const BarredMatrix& m, const RingPtr<F>& ring) {
  if (m.t < 1) throw ValueError("L_{s,t} needs t >= 1");
  auto e = [&](int idx) { return Poly<F>::variable(ring, static_cast<std::size_t>(idx)); };
  std::vector<Poly<F>> gens;
  for (int i = 1; i <= m.s + m.t - 1; ++i)
    for (int j = std::max(1, i - m.s + 1); j <= m.t; ++j)
      gens.push_back(e(m.row1[i - 1]) * e(m.row2[m.s + j - 1]));
  return Ideal<F>(ring, std::move(gens));
}

// Prime components J_0 = (minors, z_1..z_t) and, for 1 <= i <= t,
// J_i = (x_1..x_s, y_0..y_{i-2}, z_{i+1}..z_t).
template <class F>
std::vector<Ideal<F>> prime_components(const BarredMatrix& m, const RingPtr<F>& ring) {
  if (m.t < 1) throw ValueError("prime components need t >= 1");
  auto e = [&](int idx) { return Poly<F>::variable(ring, static_cast<std::size_t>(idx)); };
  std::vector<Ideal<F>> comps;
  {
    std::vector<Poly<F>> gens;
    for (int i = 1; i <= m.s; ++i)
      for (int j = i + 1; j <= m.s; ++j) gens.push_back(big_block_minor(m, ring, i, j));
    for (int k = 1; k <= m.t; ++k) gens.push_back(e(m.row2[m.s + k - 1]));
    comps.emplace_back(ring, std::move(gens));
  }
  for (int i = 1; i <= m.t; ++i) {
    std::vector<Poly<F>> gens;
    for (int c = 1; c <= m.s; ++c) gens.push_back(e(m.row1[c - 1]));
    for (int k = 1; k <= i - 1; ++k) gens.push_back(e(m.row1[m.s + k - 1]));
    for (int k = i + 1; k <= m.t; ++k) gens.push_back(e(m.row2[m.s + k - 1]));
    comps.emplace_back(ring, std::move(gens));
  }
  return comps;
}

// Closed-form table: height, the two-sided arithmetical-rank bounds, the
// exactly known ranks, and the cohomological dimension by characteristic.
struct BoundsReport {
  int s = 0;
  int t = 0;
  std::uint32_t characteristic = 0;
  int height = 0;
  int ara_lower = 0;
  int ara_upper = 0;
  std::optional<int> ara_exact;
  int cd = 0;
};

BoundsReport bounds_oracle(int s, int t, std::uint32_t characteristic);

}  // namespace minvar
