#include <doctest.h>

#include "minvar/constructions.hpp"
#include "minvar/ideal.hpp"
#include "oracles.hpp"

using namespace minvar;

namespace {

RingPtr<QField> ring_2_1() {
  return make_ring<QField>({"x1", "x2", "x3", "x4", "y0", "z1"}, QField{});
}

Ideal<QField> J21(const RingPtr<QField>& ring) {
  return Ideal<QField>(ring, {Poly<QField>::parse("x1*x4 - x2*x3", ring),
                              Poly<QField>::parse("x1*z1", ring),
                              Poly<QField>::parse("x2*z1", ring)});
}

}  // namespace

TEST_CASE("ideal membership") {
  auto ring = ring_2_1();
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };

  Ideal<QField> x1(ring, {P("x1")});
  CHECK(ideal_membership(P("x1*z1"), x1));
  CHECK_FALSE(ideal_membership(P("z1"), x1));

  // the first base equation lies in (x1, x2)
  Ideal<QField> x1x2(ring, {P("x1"), P("x2")});
  CHECK(ideal_membership(P("x1*x4^2 - x2*x3*x4 + x2*z1"), x1x2));
  CHECK(ideal_membership(P("x1*x3*x4 - x2*x3^2 + x1*z1"), x1x2));

  // against ideals generated by variables, membership means every term is
  // divisible by one of them
  oracles::RandomPolys<QField> gen(ring, 59, 3, 5);
  for (int i = 0; i < 100; ++i) {
    auto f = gen();
    bool expected = true;
    for (std::size_t k = 0; k < f.nterms(); ++k)
      if (f.mono(k)[0] == 0 && f.mono(k)[1] == 0) expected = false;
    CHECK(ideal_membership(f, x1x2) == expected);
  }
}

TEST_CASE("radical membership via the extended-variable check") {
  auto ring = ring_2_1();
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };
  auto J = J21(ring);

  // members are radical members
  for (const auto& g : J.generators()) CHECK(radical_membership(g, J));

  // x^2 in (x^4) fails plain membership but passes the radical one
  Ideal<QField> pow4(ring, {P("x1^4")});
  CHECK_FALSE(ideal_membership(P("x1^2"), pow4));
  CHECK(radical_membership(P("x1^2"), pow4));
  CHECK_FALSE(radical_membership(P("x2"), pow4));
  CHECK(radical_membership(P("0"), pow4));

  // the recursion's first two polynomials already cut out x1 z2 and x2 z2 up
  // to radical
  auto m2 = build_matrix(BarredMatrixSpec::distinct(2, 2));
  auto r2 = make_matrix_ring<QField>(m2, QField{});
  auto eqs = stci_set_s2(2, false, r2);
  Ideal<QField> F12(r2, {eqs.polys[0], eqs.polys[1]});
  CHECK(radical_membership(Poly<QField>::parse("x1*z2", r2), F12));
  CHECK(radical_membership(Poly<QField>::parse("x2*z2", r2), F12));
  CHECK_FALSE(radical_membership(Poly<QField>::parse("y0*z2", r2), F12));
}

TEST_CASE("radical membership agrees with power search on monomial ideals") {
  FpField fp(32003);
  auto ring = make_ring<FpField>({"a", "b", "c", "d"}, fp);
  oracles::RandomPolys<FpField> gen(ring, 61, 3, 1);
  std::uniform_int_distribution<int> ngens(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Poly<FpField>> gens;
    int n = ngens(gen.rng());
    for (int i = 0; i < n; ++i) gens.push_back(gen.monomial());
    auto f = gen.monomial();
    Ideal<FpField> I(ring, gens);
    bool via_rabinowitsch = radical_membership(f, I);
    bool via_powers = oracles::power_search_member(f, gens, 12);
    CHECK(via_rabinowitsch == via_powers);
  }
}

TEST_CASE("radical containment and equality") {
  auto ring = ring_2_1();
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };
  auto J = J21(ring);

  CHECK(radical_contains(J, J));

  // the two base equations define J(2,1) up to radical
  Ideal<QField> F(ring, {P("x1*x4^2 - x2*x3*x4 + x2*z1"), P("x1*x3*x4 - x2*x3^2 + x1*z1")});
  CHECK(radical_contains(J, F));
  CHECK(radical_contains(F, J));
  CHECK(radical_equal(F, J));
  CHECK(radical_equal(J, F));

  Ideal<QField> xsq(ring, {P("x1^2")});
  Ideal<QField> x(ring, {P("x1")});
  Ideal<QField> y(ring, {P("x2")});
  CHECK(radical_equal(xsq, x));
  CHECK_FALSE(radical_equal(x, y));

  // monomial ideals: containment in the radical is a support condition
  FpField fp(32003);
  auto fring = make_ring<FpField>({"a", "b", "c", "d"}, fp);
  oracles::RandomPolys<FpField> gen(fring, 67, 3, 1);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly<FpField>> gi, gj;
    for (int i = 0; i < 2; ++i) gi.push_back(gen.monomial());
    for (int i = 0; i < 2; ++i) gj.push_back(gen.monomial());
    Ideal<FpField> I(fring, gi), Jm(fring, gj);
    bool expected = true;
    for (const auto& m : gi)
      if (!oracles::monomial_in_radical(m, gj)) expected = false;
    CHECK(radical_contains(I, Jm) == expected);
  }
}

TEST_CASE("ideal intersection by tag elimination") {
  auto ring = ring_2_1();
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };

  Ideal<QField> x(ring, {P("x1")});
  Ideal<QField> y(ring, {P("x2")});
  auto meet = intersect(x, y);
  CHECK(meet.reduced_gb().basis.size() == 1);
  CHECK(meet.reduced_gb().basis[0] == P("x1*x2"));

  // intersecting with the whole ring gives the ideal back (J is radical)
  auto J = J21(ring);
  Ideal<QField> unit(ring, {Poly<QField>::one(ring)});
  auto meet2 = intersect(J, unit);
  CHECK(meet2.reduced_gb().basis == J.reduced_gb().basis);
  CHECK(radical_equal(meet2, J));

  // commutativity up to reduced-basis equality
  auto a = intersect(x, J), b = intersect(J, x);
  CHECK(a.reduced_gb().basis == b.reduced_gb().basis);
}

TEST_CASE("Krull dimension and height") {
  auto ring = make_ring<QField>({"v1", "v2", "v3", "v4", "v5", "v6"}, QField{});
  auto P = [&](const char* s) { return Poly<QField>::parse(s, ring); };

  for (int k = 1; k <= 4; ++k) {
    std::vector<Poly<QField>> gens;
    for (int i = 1; i <= k; ++i) gens.push_back(P(("v" + std::to_string(i)).c_str()));
    Ideal<QField> I(ring, gens);
    CHECK(height(I) == k);
    CHECK(krull_dimension(I) == 6 - k);
  }

  Ideal<QField> zero(ring, {});
  CHECK(krull_dimension(zero) == 6);

  Ideal<QField> unit(ring, {P("2")});
  CHECK_THROWS_AS(krull_dimension(unit), UnitIdealError);

  // the ideal of a 2x2 generic matrix minor has height 1
  Ideal<QField> minor(ring, {P("v1*v4 - v2*v3")});
  CHECK(height(minor) == 1);
}

TEST_CASE("dimension agrees with subset enumeration") {
  auto ring = make_ring<QField>({"a", "b", "c", "d", "e"}, QField{});
  oracles::RandomPolys<QField> gen(ring, 71, 2, 2);
  std::uniform_int_distribution<int> ngens(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly<QField>> gens;
    int n = ngens(gen.rng());
    for (int i = 0; i < n; ++i) gens.push_back(gen());
    Ideal<QField> I(ring, gens);
    if (I.is_unit()) continue;
    CHECK(krull_dimension(I) == oracles::brute_dimension(I));
  }
}

TEST_CASE("height of the (2,2) ideal matches the closed form") {
  auto m = build_matrix(BarredMatrixSpec::distinct(2, 2));
  auto ring = make_matrix_ring<QField>(m, QField{});
  auto J = build_ideal_J(m, ring);
  CHECK(height(J) == 3);  // s + t - 1
  CHECK(krull_dimension(J) == 8 - 3);
  CHECK(oracles::brute_dimension(J) == 5);
}

TEST_CASE("hand-checked decomposition cross-check for (3,1)") {
  // J(3,1) = (minors of the 2x3 block) + (x z) products. Its components are
  // (minors, z1) and (x1, x2, x3), both of height 3 in 8 variables, so the
  // dimension of the intersection is 5.
  auto m = build_matrix(BarredMatrixSpec::distinct(3, 1));
  auto ring = make_matrix_ring<QField>(m, QField{});
  auto J = build_ideal_J(m, ring);
  CHECK(height(J) == 3);
  CHECK(oracles::brute_dimension(J) == static_cast<int>(ring->width()) - 3);

  auto comps = prime_components(m, ring);
  REQUIRE(comps.size() == 2);
  CHECK(krull_dimension(comps[0]) == 5);
  CHECK(krull_dimension(comps[1]) == 5);
  CHECK(krull_dimension(J) == std::max(krull_dimension(comps[0]), krull_dimension(comps[1])));
}

TEST_CASE("reduced bases are cached per term order") {
  auto ring = ring_2_1();
  auto J = J21(ring);
  const auto& grevlex_gb = J.reduced_gb();
  const auto& lex_gb = J.reduced_gb_under(TermOrder::lex());
  CHECK(lex_gb.ring->order == TermOrder::lex());
  CHECK(grevlex_gb.ring->order == TermOrder::degrevlex());
  // both bases generate the ideal: every generator reduces to zero
  for (const auto& g : J.generators()) {
    CHECK(normal_form(g, grevlex_gb.basis).is_zero());
    CHECK(normal_form(g.lift(lex_gb.ring), lex_gb.basis).is_zero());
  }
  // the cache hands back the same object
  CHECK(&J.reduced_gb_under(TermOrder::lex()) == &lex_gb);
}

TEST_CASE("generators lie in the radical of their own ideal") {
  auto m = build_matrix(BarredMatrixSpec::distinct(2, 2));
  auto ring = make_matrix_ring<QField>(m, QField{});
  auto J = build_ideal_J(m, ring);
  for (const auto& g : J.generators()) CHECK(radical_membership(g, J));
}
