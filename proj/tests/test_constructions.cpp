#include <doctest.h>

#include <algorithm>

#include "minvar/verify.hpp"
#include "oracles.hpp"

using namespace minvar;

namespace {

template <class F>
std::vector<std::string> formatted(const std::vector<Poly<F>>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.format());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("base equations of the s = 2 family") {
  auto eqs = stci_set_s2(1, false, QField{});
  const auto& ring = eqs.polys[0].ring();
  REQUIRE(eqs.size() == 2);
  CHECK(eqs.polys[0] == Poly<QField>::parse("x1*x4^2 - x2*x3*x4 + x2*z1", ring));
  CHECK(eqs.polys[1] == Poly<QField>::parse("x1*x3*x4 - x2*x3^2 + x1*z1", ring));
  CHECK(eqs.names == std::vector<std::string>{"F1", "F2"});
}

TEST_CASE("recursive step reproduces the printed t = 2 polynomials and split") {
  auto eqs = stci_set_s2(2, false, QField{});
  const auto& ring = eqs.polys[0].ring();
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };
  REQUIRE(eqs.size() == 3);
  CHECK(eqs.polys[0] ==
        P("x1*x3*x4^3 - x1*x4^2*z1 - x2*x3^2*x4^2 + 2*x2*x3*x4*z1 - x2*z1^2 + x1*z2"));
  CHECK(eqs.polys[1] == P("x1*x4^4 - x2*x3*x4^3 + x2*x4^2*z1 + x2*z2"));
  CHECK(eqs.polys[2] == P("x1*x4*x3 - x2*x3^2 + x1*z1 + y0*z2"));
  CHECK(eqs.metadata.at("P@t=2") == P("x4^2").format());
  CHECK(eqs.metadata.at("Q@t=2") == P("x3*x4 - z1").format());
}

TEST_CASE("the t = 3 split matches the printed P and Q") {
  auto eqs = stci_set_s2(3, false, QField{});
  const auto& ring = eqs.polys[0].ring();
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };
  REQUIRE(eqs.size() == 4);
  CHECK(eqs.metadata.at("P@t=3") == P("x3*x4^3 - x4^2*z1 + z2").format());
  CHECK(eqs.metadata.at("Q@t=3") == P("x3^2*x4^2 - 2*x3*x4*z1 + z1^2").format());
  CHECK(eqs.polys[3] == P("x1*x3*x4 - x2*x3^2 + x1*z1 + y0*z2 + y1*z3"));
}

TEST_CASE("membership conditions of the recursion hold") {
  auto eqs = stci_set_s2(4, false, QField{});
  const auto& ring = eqs.polys[0].ring();
  auto var = [&](const std::string& n) { return Poly<QField>::variable(ring, n); };
  Ideal<QField> x1x2(ring, {var("x1"), var("x2")});
  CHECK(ideal_membership(eqs.polys[0], x1x2));
  CHECK(ideal_membership(eqs.polys[1], x1x2));
  for (std::size_t i = 3; i <= eqs.size(); ++i) {
    std::vector<Poly<QField>> gens = {var("x1"), var("x2")};
    for (std::size_t j = 0; j + 3 <= i; ++j) gens.push_back(var("y" + std::to_string(j)));
    CHECK(ideal_membership(eqs.polys[i - 1], Ideal<QField>(ring, gens)));
  }
}

TEST_CASE("homogeneous variant") {
  for (int t = 1; t <= 3; ++t) {
    auto eqs = stci_set_s2(t, true, QField{});
    CHECK(eqs.size() == static_cast<std::size_t>(t) + 1);
    for (const auto& f : eqs.polys) CHECK(f.is_homogeneous());
  }
  // the base case squares the z factor
  auto base = stci_set_s2(1, true, QField{});
  const auto& ring = base.polys[0].ring();
  CHECK(base.polys[0] == Poly<QField>::parse("x1*x4^2 - x2*x3*x4 + x2*z1^2", ring));
  CHECK(base.metadata.at("zexp.F1@t=1") == "2");
  // plain variant is generally inhomogeneous from t = 1 on
  auto plain = stci_set_s2(1, false, QField{});
  CHECK_FALSE(plain.polys[0].is_homogeneous());
}

TEST_CASE("ladder steps certify themselves") {
  for (bool homogeneous : {false, true}) {
    for (int t = 1; t <= (homogeneous ? 3 : 5); ++t) {
      auto eqs = stci_set_s2(t, homogeneous, QField{});
      const auto& ring = eqs.polys[0].ring();
      std::vector<Poly<QField>> pool = eqs.polys;
      for (const auto& step : eqs.ladder) {
        if (step.exact) {
          Poly<QField> sum = Poly<QField>::zero(ring);
          for (const auto& [idx, cof] : step.cofactors) {
            REQUIRE(idx < pool.size());
            sum = sum + cof * pool[idx];
          }
          Poly<QField> powered = step.member;
          for (unsigned k = 1; k < step.power; ++k) powered = powered * step.member;
          CHECK(sum == powered);
        }
        pool.push_back(step.member);
      }
      // the ladder ends with every generator of J in the pool
      auto m = build_matrix(BarredMatrixSpec::distinct(2, t));
      if (!homogeneous) {
        auto strings = formatted(pool);
        for (const auto& g : ideal_J_generators(m, ring))
          CHECK(std::binary_search(strings.begin(), strings.end(), g.format()));
      }
    }
  }
}

TEST_CASE("splitting off the two marked variables") {
  auto eqs = stci_set_s2(2, false, QField{});
  const auto& ring = eqs.polys[0].ring();
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };

  auto [p, q] = extract_pq(P("x1*x4^2 - x2*x3*x4 + x2*z1"));
  CHECK(p == P("x4^2"));
  CHECK(q == P("x3*x4 - z1"));

  auto [p2, q2] = extract_pq(P("x1"));
  CHECK(p2 == Poly<QField>::one(ring));
  CHECK(q2.is_zero());

  CHECK_THROWS_AS(extract_pq(P("x3")), ValueError);
  CHECK_THROWS_AS(extract_pq(P("x1*x4 + z1")), ValueError);

  // random reassembly: P x1 - Q x2 recovers any member of (x1, x2)
  oracles::RandomPolys<QField> gen(ring, 73, 2, 4);
  auto x1 = P("x1"), x2 = P("x2");
  for (int i = 0; i < 100; ++i) {
    auto G = gen() * x1 + gen() * x2;
    if (G.is_zero()) continue;
    auto [pp, qq] = extract_pq(G);
    CHECK(pp * x1 - qq * x2 == G);
  }
}

TEST_CASE("decomposition over a variable list") {
  auto ring = make_ring<QField>({"x1", "x2", "y0", "z1"}, QField{});
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };
  auto f = P("x1*z1 + x2*y0 + y0^2");
  auto parts = decompose_over(
      f, {static_cast<std::size_t>(ring->vars.index("x1")),
          static_cast<std::size_t>(ring->vars.index("x2")),
          static_cast<std::size_t>(ring->vars.index("y0"))});
  CHECK(parts[0] * P("x1") + parts[1] * P("x2") + parts[2] * P("y0") == f);
  CHECK_THROWS_AS(decompose_over(f, {static_cast<std::size_t>(ring->vars.index("x1"))}),
                  ValueError);
}

TEST_CASE("diagonal sums for the smallest case") {
  auto m = build_matrix(BarredMatrixSpec::distinct(3, 1));
  auto ring = make_matrix_ring<QField>(m, QField{});
  auto eqs = diagonal_sum_set(m, ring);
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };
  REQUIRE(eqs.size() == 5);  // 2s + t - 2
  CHECK(eqs.names == std::vector<std::string>{"T1", "T2", "U1", "S2", "S3"});
  CHECK(eqs.polys[0] == P("x1*z1"));
  CHECK(eqs.polys[1] == P("x2*z1"));
  CHECK(eqs.polys[2] == P("x1*x5 - x2*x4 + x3*z1"));
  CHECK(eqs.polys[3] == P("x1*x6 - x3*x4"));
  CHECK(eqs.polys[4] == P("x2*x6 - x3*x5"));
}

TEST_CASE("diagonal sum set sizes and the leading T") {
  for (int s = 3; s <= 5; ++s)
    for (int t = 1; t <= 4; ++t) {
      auto m = build_matrix(BarredMatrixSpec::distinct(s, t));
      auto ring = make_matrix_ring<QField>(m, QField{});
      auto eqs = diagonal_sum_set(m, ring);
      CHECK(eqs.size() == static_cast<std::size_t>(2 * s + t - 2));
      // T_1 is always the single product x1 z_t
      auto x1zt = Poly<QField>::parse("x1*z" + std::to_string(t), ring);
      CHECK(eqs.polys[0] == x1zt);
    }
  auto m = build_matrix(BarredMatrixSpec::distinct(2, 1));
  auto ring = make_matrix_ring<QField>(m, QField{});
  CHECK_THROWS_AS(diagonal_sum_set(m, ring), ValueError);
}

TEST_CASE("the T summands are exactly the generators of L") {
  for (int s = 3; s <= 5; ++s)
    for (int t = 1; t <= 5; ++t) {
      auto m = build_matrix(BarredMatrixSpec::distinct(s, t));
      auto ring = make_matrix_ring<QField>(m, QField{});
      auto eqs = diagonal_sum_set(m, ring);
      auto S = minor_diagonal_sums(m, ring);
      // reconstruct T_1..T_{s+t-1}: the first t+1 entries, then U_l - S_l
      std::vector<Poly<QField>> T(eqs.polys.begin(), eqs.polys.begin() + t + 1);
      for (int l = 1; l <= s - 2; ++l)
        T.push_back(eqs.polys[static_cast<std::size_t>(t) + l] -
                    S[static_cast<std::size_t>(l) - 1]);
      std::vector<Poly<QField>> summands;
      for (const auto& th : T)
        for (std::size_t i = 0; i < th.nterms(); ++i)
          summands.push_back(Poly<QField>::from_terms(
              ring, {th.coeff(i)},
              std::vector<Exp>(th.mono(i), th.mono(i) + ring->width())));
      CHECK(formatted(summands) == formatted(build_ideal_Lst(m, ring).generators()));
    }
}

TEST_CASE("hand-built minimal sets for t = 1") {
  auto m3 = build_matrix(BarredMatrixSpec::distinct(3, 1));
  auto r3 = make_matrix_ring<QField>(m3, QField{});
  auto e3 = small_cases_set(3, m3, r3);
  auto P3 = [&](const char* s) { return Poly<QField>::parse(s, r3); };
  REQUIRE(e3.size() == 4);
  CHECK(e3.polys[0] == P3("x2*x6 - x3*x5"));
  CHECK(e3.polys[1] == P3("x1*z1 + x1*x4*x5 - x2*x4^2"));
  CHECK(e3.polys[2] == P3("x1*x6 - x3*x4 + x2*z1 + x1*x5^2 - x2*x4*x5"));
  CHECK(e3.polys[3] == P3("x3*z1 + x1*x5*x6 - x2*x4*x6"));

  auto m4 = build_matrix(BarredMatrixSpec::distinct(4, 1));
  auto r4 = make_matrix_ring<QField>(m4, QField{});
  auto e4 = small_cases_set(4, m4, r4);
  REQUIRE(e4.size() == 6);
  CHECK(e4.polys[1] == Poly<QField>::parse("x1*x8 - x4*x5 + x2*x7 - x3*x6", r4));

  auto m5 = build_matrix(BarredMatrixSpec::distinct(5, 1));
  auto r5 = make_matrix_ring<QField>(m5, QField{});
  auto e5 = small_cases_set(5, m5, r5);
  REQUIRE(e5.size() == 8);
  CHECK(e5.polys[7] == Poly<QField>::parse("x5*z1 + x1*x7*x10 - x2*x6*x10", r5));

  CHECK_THROWS_AS(small_cases_set(6, QField{}), ValueError);
  CHECK_THROWS_AS(small_cases_set(3, m4, r4), ValueError);
}

TEST_CASE("the diagonal sums also define the merged-variable ideals") {
  FpField fp(32003);
  auto spec = BarredMatrixSpec::bar(3, 2);
  auto m = build_matrix(spec);
  auto ring = make_matrix_ring<FpField>(m, fp);
  auto eqs = diagonal_sum_set(m, ring);
  CHECK(eqs.size() == 6);
  auto cert = verify_defining_set(spec, m, ring, eqs);
  CHECK(cert.verdict == Verdict::Proved);
}

TEST_CASE("minor sums cut out the minor ideal up to radical") {
  FpField fp(32003);
  auto m = build_matrix(BarredMatrixSpec::distinct(3, 0));
  auto ring = make_matrix_ring<FpField>(m, fp);
  auto I = build_ideal_Is(m, ring);
  Ideal<FpField> S(ring, minor_diagonal_sums(m, ring));
  CHECK(S.generators().size() == 3);
  CHECK(radical_equal(I, S));
}

TEST_CASE("pairwise radical combination") {
  auto ring = make_ring<QField>({"x1", "x2", "x3", "x4", "y0", "z1"}, QField{});
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };

  auto [f1, f2] = radical_pair_combine(P("x4"), P("x3"), P("x1"), P("x2"), P("z1"));
  CHECK(f1 == P("x1*x4^2 - x2*x3*x4 + x2*z1"));
  CHECK(f2 == P("x1*x3*x4 - x2*x3^2 + x1*z1"));

  auto delta = P("x1*x4 - x2*x3");
  auto [g1, g2] = radical_pair_combine(P("x4"), P("x3"), P("x1"), P("x2"), P("0"));
  CHECK(g1 == P("x4") * delta);
  CHECK(g2 == P("x3") * delta);

  // the combination preserves the radical (spot checks; the acceptance suite
  // runs the full randomized batch)
  FpField fp(32003);
  auto fring = make_ring<FpField>({"a", "b", "c", "d", "e"}, fp);
  oracles::RandomPolys<FpField> gen(fring, 79, 2, 2);
  for (int i = 0; i < 5; ++i) {
    auto a1 = gen(), a2 = gen(), b1 = gen(), b2 = gen(), g = gen();
    auto [c1, c2] = radical_pair_combine(a1, a2, b1, b2, g);
    Ideal<FpField> lhs(fring, {a1 * b1 - a2 * b2, b1 * g, b2 * g});
    Ideal<FpField> rhs(fring, {c1, c2});
    CHECK(radical_equal(lhs, rhs));
  }
}

TEST_CASE("grouped radical combination") {
  auto ring = make_ring<QField>({"x", "y", "z"}, QField{});
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };

  // a single singleton group passes through
  Ideal<QField> I(ring, {P("z")});
  auto qs = radical_group_combine(I, {{P("x")}});
  REQUIRE(qs.size() == 1);
  CHECK(qs[0] == P("x"));

  // exponents take powers
  auto qs2 = radical_group_combine(I, {{P("x")}}, {{2}});
  CHECK(qs2[0] == P("x^2"));

  // a failing pairwise-product hypothesis names the offending pair
  Ideal<QField> Z3(ring, {P("z^3")});
  try {
    radical_group_combine(Z3, {{P("x"), P("y")}});
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisError& e) {
    CHECK(e.group_index == 0);
    CHECK(e.first == "x");
    CHECK(e.second == "y");
  }
}

TEST_CASE("grouped combination recovers the diagonal sums of L") {
  FpField fp(32003);
  auto m = build_matrix(BarredMatrixSpec::distinct(3, 2));
  auto ring = make_matrix_ring<FpField>(m, fp);
  auto eqs = diagonal_sum_set(m, ring);
  auto S = minor_diagonal_sums(m, ring);
  const int s = 3, t = 2;
  std::vector<Poly<FpField>> T(eqs.polys.begin(), eqs.polys.begin() + t + 1);
  for (int l = 1; l <= s - 2; ++l)
    T.push_back(eqs.polys[static_cast<std::size_t>(t) + l] - S[static_cast<std::size_t>(l) - 1]);

  // groups are the monomial summands of T_2 .. T_{s+t-1}
  std::vector<std::vector<Poly<FpField>>> groups;
  for (std::size_t h = 1; h < T.size(); ++h) {
    std::vector<Poly<FpField>> grp;
    for (std::size_t i = 0; i < T[h].nterms(); ++i)
      grp.push_back(Poly<FpField>::from_terms(
          ring, {T[h].coeff(i)}, std::vector<Exp>(T[h].mono(i), T[h].mono(i) + ring->width())));
    groups.push_back(std::move(grp));
  }
  Ideal<FpField> I(ring, {T[0]});
  auto qs = radical_group_combine(I, groups);
  REQUIRE(qs.size() == T.size() - 1);
  for (std::size_t h = 1; h < T.size(); ++h) CHECK(qs[h - 1] == T[h]);

  // and the combined sums still cut out L up to radical
  std::vector<Poly<FpField>> combined = {T[0]};
  for (const auto& q : qs) combined.push_back(q);
  CHECK(radical_equal(Ideal<FpField>(ring, combined), build_ideal_Lst(m, ring)));
}

TEST_CASE("grouped combination on randomized monomial instances") {
  FpField fp(32003);
  auto ring = make_ring<FpField>({"a", "b", "c", "v"}, fp);
  oracles::RandomPolys<FpField> gen(ring, 83, 2, 1);
  auto v = Poly<FpField>::variable(ring, std::string("v"));
  auto v2 = Poly<FpField>::parse("v^2", ring);
  std::uniform_int_distribution<int> groupsize(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    // every group element is divisible by v and the base ideal contains v^2,
    // so the pairwise-product hypothesis holds by construction
    Ideal<FpField> I(ring, {v2});
    std::vector<std::vector<Poly<FpField>>> groups(2);
    std::vector<Poly<FpField>> all = {v2};
    for (auto& grp : groups) {
      int n = groupsize(gen.rng());
      for (int i = 0; i < n; ++i) {
        grp.push_back(gen.monomial() * v);
        all.push_back(grp.back());
      }
    }
    auto qs = radical_group_combine(I, groups);
    std::vector<Poly<FpField>> combined = {v2};
    for (const auto& q : qs) combined.push_back(q);
    CHECK(radical_equal(Ideal<FpField>(ring, combined), Ideal<FpField>(ring, all)));
  }
}
