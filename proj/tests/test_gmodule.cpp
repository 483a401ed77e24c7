#include "glab/gmodule.hpp"

#include "doctest.h"
#include "oracles.hpp"
#include "random_modules.hpp"

using namespace glab;

namespace {

const RootDatum kA1 = root_datum_a(1);

std::map<long, long> a1_char(const GModule& m) {
  std::map<long, long> chi;
  for (const auto& [w, mult] : character(m)) chi[w.coords[0]] += mult;
  return chi;
}

}  // namespace

TEST_CASE("standard rep validates; character q + 1/q") {
  GModule v = standard_rep(kA1, ring_z());
  CHECK(validate(v).ok());
  CHECK(a1_char(v) == std::map<long, long>{{1, 1}, {-1, 1}});
  // no invariants: isotypic multiplicity of weight 0 is zero
  CHECK(oracle::a1_isotypic_multiplicity(a1_char(v), 0) == 0);
  CHECK(invariants(v, SubgroupTag::FullG).count() == 0);
  CHECK_THROWS_AS(standard_rep(root_datum_a(2), ring_z()), std::invalid_argument);
}

TEST_CASE("adjoint: weights, validation, unipotent flow matches the matrix model") {
  GModule g = adjoint_sl2(ring_z());
  CHECK(validate(g).ok());
  CHECK(a1_char(g) == std::map<long, long>{{2, 1}, {0, 1}, {-2, 1}});
  CHECK(invariants(g, SubgroupTag::FullG).count() == 0);

  // one-parameter flow sum_n a^n (-1)^n F^(n) at a = 1 sends
  // X -> X + H - Y, H -> H - 2Y, Y -> Y  (conjugation by a unipotent)
  ZMat u = ZMat::Identity(3, 3) - g.lowering_op(0, 1) + g.lowering_op(0, 2);
  ZVec x = vec_of({1, 0, 0}), h = vec_of({0, 1, 0}), y = vec_of({0, 0, 1});
  CHECK(eq(u * x, vec_of({1, 1, -1})));
  CHECK(eq(u * h, vec_of({0, 1, -2})));
  CHECK(eq(u * y, y));
}

TEST_CASE("adjoint: invariant of the second symmetric power is H^2 + 4XY") {
  GModule s2 = sym_power(adjoint_sl2(ring_z()), 2);
  CHECK(validate(s2).ok());
  auto inv = invariants(s2, SubgroupTag::FullG);
  REQUIRE(inv.count() == 1);
  // monomial order over (X,H,Y): X^2, X*H, X*Y, H^2, H*Y, Y^2
  ZVec expected = vec_of({0, 0, 4, 1, 0, 0});
  CHECK((eq(inv.basis.col(0), expected) || eq(inv.basis.col(0), ZVec(-expected))));
  CHECK(s2.basis_labels[3] == "H^2");
}

TEST_CASE("validate flags a broken module") {
  GModule v = standard_rep(kA1, ring_z());
  v.raising[0][0] *= 2;
  auto rep = validate(v);
  CHECK(!rep.ok());
}

TEST_CASE("dual: weights negate, double dual is the identity, standard is self-dual") {
  GModule t = trivial_rep(kA1, ring_z(), 3);
  CHECK(eq_mod(dual(t).raising_op(0, 1), t.raising_op(0, 1), ring_z()));
  CHECK(dual(t).weights == t.weights);

  GModule v = standard_rep(kA1, ring_z());
  GModule vd = dual(v);
  CHECK(validate(vd).ok());
  CHECK(a1_char(vd) == a1_char(v));

  GModule vdd = dual(vd);
  CHECK(vdd.weights == v.weights);
  for (long n = 1; n < v.nilpotency[0]; ++n) {
    CHECK(eq(vdd.raising_op(0, n), v.raising_op(0, n)));
    CHECK(eq(vdd.lowering_op(0, n), v.lowering_op(0, n)));
  }

  // hom rank oracle: S^m V is self-dual over Q
  for (long m = 1; m <= 3; ++m) {
    GModule sm = sym_power(v, m);
    CHECK(oracle::a1_hom_rank(a1_char(sm), a1_char(dual(sm))) == 1);
    CHECK(hom_g(sm, dual(sm)).size() == 1);
  }
}

TEST_CASE("tensor: unit, weights, Schur line") {
  GModule v = standard_rep(kA1, ring_z());
  GModule unit = trivial_rep(kA1, ring_z(), 1);
  GModule vu = tensor(v, unit);
  CHECK(vu.weights == v.weights);
  for (long n = 1; n < v.nilpotency[0]; ++n) CHECK(eq(vu.raising_op(0, n), v.raising_op(0, n)));

  GModule vv = tensor(v, v);
  CHECK(validate(vv).ok());
  CHECK(a1_char(vv) == std::map<long, long>{{2, 1}, {0, 2}, {-2, 1}});

  // standard ⊗ dual(standard): one invariant line, spanned by the identity
  GModule endo = tensor(dual(v), v);
  auto maps = hom_g(v, v);
  REQUIRE(maps.size() == 1);
  CHECK((eq(maps[0], ZMat::Identity(2, 2)) || eq(maps[0], ZMat(-ZMat::Identity(2, 2)))));
  CHECK(invariants(endo, SubgroupTag::FullG).count() == 1);

  GModule w = standard_rep(kA1, ring_zn(5));
  CHECK_THROWS_AS(tensor(v, w), std::invalid_argument);
}

TEST_CASE("sym power: base cases and the divided-power derivation rule") {
  GModule v = standard_rep(kA1, ring_z());
  CHECK(sym_power(v, 0).rank == 1);
  CHECK(sym_power(v, 0).weights[0].is_zero());
  GModule s1 = sym_power(v, 1);
  CHECK(s1.weights == v.weights);
  CHECK(eq(s1.raising_op(0, 1), v.raising_op(0, 1)));

  CHECK(a1_char(sym_power(v, 2)) == std::map<long, long>{{2, 1}, {0, 1}, {-2, 1}});

  // independent oracle: E^(n)(x^a y^b) = binom(b, n) x^(a+n) y^(b-n)
  // and F^(n)(x^a y^b) = binom(a, n) x^(a-n) y^(b+n)
  for (long d = 1; d <= 5; ++d) {
    GModule s = sym_power(v, d);
    auto mons = sym_monomials(2, d);
    for (long n = 1; n < s.nilpotency[0]; ++n) {
      ZMat e_expected = ZMat::Zero(s.rank, s.rank);
      ZMat f_expected = ZMat::Zero(s.rank, s.rank);
      for (index_t col = 0; col < s.rank; ++col) {
        long b = static_cast<long>(std::count(mons[col].begin(), mons[col].end(), 1));
        long a = d - b;
        if (b >= n) e_expected(col - n, col) = binomial(b, n);  // fewer y's: earlier monomial
        if (a >= n) f_expected(col + n, col) = binomial(a, n);
      }
      CHECK(eq(s.raising_op(0, n), e_expected));
      CHECK(eq(s.lowering_op(0, n), f_expected));
    }
  }

  // pinned: E^(2) (x y^2) = x^3 in S^3
  GModule s3 = sym_power(v, 3);
  ZVec xyy = vec_of({0, 0, 1, 0});  // monomials: x^3, x^2 y, x y^2, y^3
  CHECK(s3.basis_labels[2] == "x*y^2");
  ZVec img = s3.raising_op(0, 2) * xyy;
  CHECK(eq(img, vec_of({1, 0, 0, 0})));
}

TEST_CASE("character is multiplicative under tensor; Clebsch-Gordan") {
  GModule v = standard_rep(kA1, ring_z());
  GModule vv = tensor(v, v);
  // chi(V ⊗ V) = chi(S^2 V) + chi(trivial)
  auto lhs = a1_char(vv);
  auto rhs = a1_char(sym_power(v, 2));
  rhs[0] += 1;
  CHECK(lhs == rhs);
  CHECK(a1_char(trivial_rep(kA1, ring_z(), 2)) == std::map<long, long>{{0, 2}});
}

TEST_CASE("invariants: subgroup tags") {
  GModule t3 = trivial_rep(kA1, ring_z(), 3);
  CHECK(invariants(t3, SubgroupTag::FullG).count() == 3);

  GModule g = adjoint_sl2(ring_z());
  auto up = invariants(g, SubgroupTag::UPlus);
  REQUIRE(up.count() == 1);
  CHECK(up.col_weights[0] == weight1(2));  // the X line
  CHECK(eq(up.basis.col(0), vec_of({1, 0, 0})));
  auto um = invariants(g, SubgroupTag::UMinus);
  REQUIRE(um.count() == 1);
  CHECK(um.col_weights[0] == weight1(-2));
  CHECK(invariants(g, SubgroupTag::Torus).count() == 1);
  CHECK(invariants(g, SubgroupTag::BorelPlus).count() == 0);

  // conjugation module: the trace spans the invariant line
  GModule conj = conjugation_dual(ring_z());
  CHECK(validate(conj).ok());
  auto inv = invariants(conj, SubgroupTag::FullG);
  REQUIRE(inv.count() == 1);
  ZVec trace = vec_of({1, 0, 0, 1});  // a + d
  CHECK((eq(inv.basis.col(0), trace) || eq(inv.basis.col(0), ZVec(-trace))));
}

TEST_CASE("hom_g: identity, adjoint, Schur with saturation") {
  GModule g = adjoint_sl2(ring_z());
  bool found_identity = false;
  for (const ZMat& m : hom_g(g, g))
    if (eq(m, ZMat::Identity(3, 3)) || eq(m, ZMat(-ZMat::Identity(3, 3)))) found_identity = true;
  CHECK(found_identity);

  CHECK(hom_g(trivial_rep(kA1, ring_z(), 1), g).empty());

  GModule s2v = sym_power(standard_rep(kA1, ring_z()), 2);
  auto maps = hom_g(s2v, s2v);
  REQUIRE(maps.size() == 1);
  CHECK((eq(maps[0], ZMat::Identity(3, 3)) || eq(maps[0], ZMat(-ZMat::Identity(3, 3)))));
}

TEST_CASE("hom_g maps are equivariant; rank matches the character oracle") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 12; ++trial) {
    GModule m = testutil::random_module(rng, ring_z(), 24, 6);
    GModule n = testutil::random_module(rng, ring_z(), 24, 6);
    auto maps = hom_g(m, n);
    CHECK(static_cast<long>(maps.size()) == oracle::a1_hom_rank(a1_char(m), a1_char(n)));
    for (const ZMat& a : maps) CHECK(equivariance_errors(m, n, a).empty());
  }
}

TEST_CASE("invariants are saturated over Z and have dominant U+ weights") {
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 12; ++trial) {
    GModule m = testutil::random_module(rng, ring_z(), 30, 6);
    auto inv = invariants(m, SubgroupTag::UPlus);
    for (const Weight& w : inv.col_weights) CHECK(is_dominant(m.datum, w));
    if (inv.count() > 0) {
      auto c = smith_normal_form(inv.basis);
      for (index_t i = 0; i < c.rank(); ++i) CHECK(c.factors[i] == 1);
    }
    // full invariants match the character oracle in rank
    CHECK(invariants(m, SubgroupTag::FullG).count() ==
          oracle::a1_isotypic_multiplicity(a1_char(m), 0));
  }
}

TEST_CASE("functoriality: sym and tensor of equivariant maps are equivariant") {
  GModule v = standard_rep(kA1, ring_z());
  GModule s2 = sym_power(v, 2);
  // the squaring-style map V ⊗ V -> S^2 V is the symmetrization quotient;
  // build an equivariant map from hom_g instead: identity on S^2 V
  GMap id2{s2, s2, ZMat::Identity(3, 3)};
  GMap t = tensor_map(id2, id2);
  CHECK(is_equivariant(t));
  GMap s = sym_power_map(id2, 2);
  CHECK(is_equivariant(s));

  // a genuinely non-identity map: V -> V ⊗ trivial
  GModule vu = tensor(v, trivial_rep(kA1, ring_z(), 1));
  GMap j{v, vu, ZMat::Identity(2, 2)};
  REQUIRE(is_equivariant(j));
  CHECK(is_equivariant(sym_power_map(j, 3)));
  CHECK(is_equivariant(tensor_map(j, j)));
}

TEST_CASE("base-change compatibility: reduction maps invariants into invariants") {
  GModule g = adjoint_sl2(ring_z());
  GModule s2 = sym_power(g, 2);
  auto inv_z = invariants(s2, SubgroupTag::FullG);
  GModule s2_mod2 = sym_power(adjoint_sl2(ring_zn(2)), 2);
  auto inv_2 = invariants(s2_mod2, SubgroupTag::FullG);
  // image of the Z-invariants lies in the mod-2 invariants
  for (index_t j = 0; j < inv_z.count(); ++j) {
    ZVec r = inv_z.basis.col(j);
    CHECK(solve(inv_2.basis, r, ring_zn(2)).has_value());
  }
  // the jump: H is a mod-2 invariant of the adjoint that does not lift
  auto adj2 = invariants(adjoint_sl2(ring_zn(2)), SubgroupTag::FullG);
  CHECK(module_structure(adj2.basis, ring_zn(2)).n_generators() == 1);
  CHECK(invariants(g, SubgroupTag::FullG).count() == 0);
}

TEST_CASE("every sampled construction validates, including duals") {
  std::mt19937 rng(1618);
  for (int trial = 0; trial < 15; ++trial) {
    GModule m = testutil::random_module(rng, ring_z(), 24, 6);
    CHECK(validate(m).ok());
    CHECK(validate(dual(m)).ok());
    GModule m3 = testutil::random_module(rng, ring_zn(3), 18, 6);
    CHECK(validate(m3).ok());
  }
}
