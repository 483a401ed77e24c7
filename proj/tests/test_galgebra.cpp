#include "glab/galgebra.hpp"

#include "doctest.h"

using namespace glab;

namespace {

const RootDatum kA1 = root_datum_a(1);

ZVec unit_vec(index_t n, index_t i) {
  ZVec v = ZVec::Zero(n);
  v(i) = 1;
  return v;
}

}  // namespace

TEST_CASE("sym algebra: truncation zero and axioms on small fixtures") {
  GradedGAlgebra a0 = sym_algebra(adjoint_sl2(ring_z()), 0);
  CHECK(a0.degree.size() == 1);
  CHECK(a0.degree[0].rank == 1);
  CHECK(a0.check_axioms().ok());

  GradedGAlgebra adj = sym_algebra(adjoint_sl2(ring_z()), 3);
  CHECK(adj.check_axioms().ok());
  CHECK(adj.degree[2].rank == 6);

  GradedGAlgebra conj = sym_algebra(conjugation_dual(ring_z()), 3);
  CHECK(conj.check_axioms().ok());
  CHECK(conj.degree[3].rank == 20);  // monomials in a,b,c,d

  GradedGAlgebra mod2 = sym_algebra(adjoint_sl2(ring_zn(2)), 3);
  CHECK(mod2.check_axioms().ok());
}

TEST_CASE("ideal closure: principal (2) and the restriction kernel") {
  GradedGAlgebra a = sym_algebra(adjoint_sl2(ring_z()), 3);
  ZVec two = ZVec::Zero(1);
  two(0) = 2;
  EquivariantIdeal j = ideal_closure(a, {{0, two}});
  for (long d = 0; d <= 3; ++d) {
    // (2) in degree d is 2 * everything
    CHECK(j.closure[d].cols() == a.degree[d].rank);
    CHECK(lattice_eq(j.closure[d], ZMat(Int(2) * ZMat::Identity(a.degree[d].rank, a.degree[d].rank))));
  }

  GradedGAlgebra c = sym_algebra(conjugation_dual(ring_z()), 3);
  // kernel of restriction to the homothety line: b, c, a - d
  std::vector<std::pair<long, ZVec>> gens = {
      {1, vec_of({0, 1, 0, 0})}, {1, vec_of({0, 0, 1, 0})}, {1, vec_of({1, 0, 0, -1})}};
  EquivariantIdeal jk = ideal_closure(c, gens);
  CHECK(jk.closure[1].cols() == 3);
  CHECK(jk.closure[2].cols() == 9);
  CHECK(jk.closure[3].cols() == 19);
}

TEST_CASE("quotient: empty, restriction to a line, and mod 2") {
  GradedGAlgebra a = sym_algebra(conjugation_dual(ring_z()), 3);
  AlgebraQuotient same = quotient(a, {});
  CHECK(same.algebra.check_axioms().ok());
  for (long d = 0; d <= 3; ++d) CHECK(same.algebra.degree[d].rank == a.degree[d].rank);

  // Z[a,b,c,d] mod the restriction kernel: one monomial per degree
  std::vector<std::pair<long, ZVec>> gens = {
      {1, vec_of({0, 1, 0, 0})}, {1, vec_of({0, 0, 1, 0})}, {1, vec_of({1, 0, 0, -1})}};
  AlgebraQuotient line = quotient(a, gens);
  CHECK(line.algebra.check_axioms().ok());
  for (long d = 0; d <= 3; ++d) {
    CHECK(line.algebra.degree[d].rank == 1);
    CHECK(line.algebra.degree[d].weights[0].is_zero());
  }
  // the projection is an algebra map: lambda^2 * lambda = lambda^3
  ZVec l1 = unit_vec(1, 0);
  CHECK(line.algebra.multiply(1, l1, 2, line.algebra.multiply(1, l1, 1, l1))(0) == 1);

  // S(sl2) mod (2) = F2[X, H, Y] truncated
  GradedGAlgebra s = sym_algebra(adjoint_sl2(ring_z()), 3);
  ZVec two = ZVec::Zero(1);
  two(0) = 2;
  AlgebraQuotient mod2 = quotient(s, {{0, two}});
  CHECK(mod2.algebra.ring == ring_zn(2));
  CHECK(mod2.algebra.check_axioms().ok());
  for (long d = 0; d <= 3; ++d) CHECK(mod2.algebra.degree[d].rank == s.degree[d].rank);

  ZVec unit_ideal = ZVec::Zero(1);
  unit_ideal(0) = 1;
  CHECK_THROWS_AS(quotient(s, {{0, unit_ideal}}), std::invalid_argument);
}

TEST_CASE("invariant subalgebra: conjugation has the trace and the determinant") {
  GradedGAlgebra a = sym_algebra(conjugation_dual(ring_z()), 4);
  InvariantSubalgebra inv = invariant_subalgebra(a, SubgroupTag::FullG);
  // per-degree ranks 1, 2, 2, 3 (monomials in t and D)
  CHECK(inv.per_degree[1].count() == 1);
  CHECK(inv.per_degree[2].count() == 2);
  CHECK(inv.per_degree[3].count() == 2);
  CHECK(inv.per_degree[4].count() == 3);
  REQUIRE(inv.generators.size() == 2);
  CHECK(inv.generators[0].first == 1);
  CHECK(inv.generators[1].first == 2);
  // the generators are +-(a + d) and a quadratic congruent to the
  // determinant modulo the square of the trace
  ZVec t = inv.generators[0].second;
  CHECK((eq(ZMat(t), ZMat(vec_of({1, 0, 0, 1}))) || eq(ZMat(t), ZMat(vec_of({-1, 0, 0, -1})))));
}

TEST_CASE("invariant subalgebra: adjoint has one generator in degree two") {
  GradedGAlgebra a = sym_algebra(adjoint_sl2(ring_z()), 4);
  InvariantSubalgebra inv = invariant_subalgebra(a, SubgroupTag::FullG);
  REQUIRE(inv.generators.size() == 1);
  CHECK(inv.generators[0].first == 2);
  CHECK(inv.per_degree[1].count() == 0);
  CHECK(inv.per_degree[2].count() == 1);
  CHECK(inv.per_degree[3].count() == 0);
  CHECK(inv.per_degree[4].count() == 1);
  // degree 4 invariants equal the span of the generator's square
  ZVec g = inv.generators[0].second;
  ZVec g2 = a.power(2, g, 2);
  CHECK(lattice_eq(inv.per_degree[4].basis, ZMat(g2)));
  CHECK(inv.generator_labels[0] == "4*X*Y + H^2");
}

TEST_CASE("unipotent invariants of the polynomial algebra on the standard module") {
  GradedGAlgebra a = sym_algebra(standard_rep(kA1, ring_z()), 4);
  InvariantSubalgebra inv = invariant_subalgebra(a, SubgroupTag::UPlus);
  // powers of x only: one invariant line per degree, one generator x
  for (long d = 1; d <= 4; ++d) {
    CHECK(inv.per_degree[d].count() == 1);
    CHECK(eq(inv.per_degree[d].basis.col(0), unit_vec(a.degree[d].rank, 0)));
  }
  REQUIRE(inv.generators.size() == 1);
  CHECK(inv.generators[0].first == 1);
  CHECK(inv.generator_labels[0] == "x");
}

TEST_CASE("grosshans graded algebra: heights and multiplication") {
  GradedGAlgebra a = sym_algebra(adjoint_sl2(ring_z()), 4);
  GrosshansGradedAlgebra gr = grosshans_graded_algebra(a);
  CHECK(gr.algebra.degree[1].rank == 3);
  CHECK(gr.algebra.heights[1] == std::vector<long>{2, 2, 2});

  // trivial-action algebra: gr is the algebra itself
  GradedGAlgebra t = sym_algebra(trivial_rep(kA1, ring_z(), 2), 3);
  GrosshansGradedAlgebra grt = grosshans_graded_algebra(t);
  for (long d = 0; d <= 3; ++d) {
    CHECK(grt.algebra.degree[d].rank == t.degree[d].rank);
    for (long h : grt.algebra.heights[d]) CHECK(h == 0);
    for (long e = 0; d + e <= 3; ++e) {
      // multiplication agrees up to the identification (identity lifts)
      CHECK(eq(grt.algebra.mult(d, e), t.mult(d, e)));
    }
  }

  // X^k sits at height 2k: the top piece of degree k contains the pure power
  for (long k = 1; k <= 4; ++k) {
    const GrosshansFiltration& f = gr.filtrations[k];
    long top = -1;
    for (const auto& p : f.pieces) top = std::max(top, p.height);
    CHECK(top == 2 * k);
  }
}

TEST_CASE("hull algebra of the adjoint: degree-one cokernel of order two; embedding is an algebra map") {
  GradedGAlgebra a = sym_algebra(adjoint_sl2(ring_z()), 4);
  HullAlgebra h = hull_algebra(a);

  auto factors1 = cokernel_structure(h.embedding_matrix[1]);
  Int order = 1;
  for (const Int& f : factors1) {
    REQUIRE(f != 0);
    order *= f;
  }
  CHECK(order == 2);

  // unit degree: the embedding is an isomorphism in degree zero
  for (const Int& f : cokernel_structure(h.embedding_matrix[0])) CHECK(f == 1);

  // algebra map within truncation
  for (long d = 0; d <= 4; ++d)
    for (long e = 0; d + e <= 4; ++e) {
      ZMat lhs = h.embedding_matrix[d + e] * h.gr.algebra.mult(d, e);
      ZMat rhs = h.algebra.mult(d, e) * kron(h.embedding_matrix[d], h.embedding_matrix[e]);
      CHECK(eq(lhs, rhs));
    }

  // hull of a good-filtration algebra: embedding is an isomorphism
  GradedGAlgebra mc = multicone({1}, 4, ring_z());
  HullAlgebra hmc = hull_algebra(mc);
  for (long d = 0; d <= 4; ++d)
    for (const Int& f : cokernel_structure(hmc.embedding_matrix[d])) CHECK(f == 1);
}

TEST_CASE("torsion bound: good filtration gives 1; the adjoint at D=2 gives 2") {
  CHECK(torsion_bound(multicone({1}, 3, ring_z())).bound == 1);

  TorsionBound tb = torsion_bound(sym_algebra(adjoint_sl2(ring_z()), 2));
  CHECK(tb.bound == 2);

  // monotone under refinement: the D=2 bound divides the D=3 and D=4 bound
  TorsionBound tb3 = torsion_bound(sym_algebra(adjoint_sl2(ring_z()), 3));
  CHECK(tb3.bound % tb.bound == 0);

  TorsionBound conj2 = torsion_bound(sym_algebra(conjugation_dual(ring_z()), 2));
  TorsionBound conj3 = torsion_bound(sym_algebra(conjugation_dual(ring_z()), 3));
  CHECK(conj3.bound % conj2.bound == 0);
}

TEST_CASE("schur cone pair: lambda = 1 is an equality, lambda = 2 has index two") {
  SchurConePair p1 = schur_cone_pair(weight1(1), 3, 4);
  CHECK(p1.t == 1);
  for (long s : p1.relation_degree) CHECK(s == 1);

  SchurConePair p2 = schur_cone_pair(weight1(2), 3, 4);
  CHECK(p2.t == 2);
  std::vector<Int> deg1_nontrivial;
  for (const Int& f : p2.factors_per_degree[1])
    if (f > 1) deg1_nontrivial.push_back(f);
  CHECK(deg1_nontrivial == std::vector<Int>{2});
  // every degree-one basis vector of S' carries a monic relation over S
  for (long s : p2.relation_degree) {
    CHECK(s >= 1);
    CHECK(s <= 2);
  }
}

TEST_CASE("schur cone pair: rational agreement over a large prime") {
  // over Z/p with p > 2 D lambda the binomials are invertible and S_d spans
  SchurConePair p2 = schur_cone_pair(weight1(2), 2, 4);
  const Int p = 17;
  for (long d = 0; d <= 2; ++d) {
    ZMat full = ZMat::Identity(p2.s_prime.degree[d].rank, p2.s_prime.degree[d].rank);
    CHECK(lattice_contains(reduced(p2.s_lattice[d], ring_zn(p)), full, ring_zn(p)));
  }
}

TEST_CASE("multicone: generated degrees, trivial case, surjective products mod 2") {
  GradedGAlgebra mc = multicone({1}, 4, ring_z());
  for (long d = 0; d <= 4; ++d) CHECK(mc.degree[d].rank == d + 1);
  CHECK(mc.check_axioms().ok());

  GradedGAlgebra empty = multicone({}, 3, ring_z());
  CHECK(empty.degree[0].rank == 1);
  for (long d = 1; d <= 3; ++d) CHECK(empty.degree[d].rank == 0);

  GradedGAlgebra gaps = multicone({2, 3}, 5, ring_z());
  CHECK(gaps.degree[1].rank == 0);
  for (long d : {2L, 3L, 4L, 5L}) CHECK(gaps.degree[d].rank == d + 1);

  GradedGAlgebra mc2 = multicone({1}, 4, ring_zn(2));
  for (long d = 1; d <= 2; ++d)
    for (long e = d; d + e <= 4; ++e)
      CHECK(module_structure(mc2.mult(d, e), ring_zn(2)).n_generators() == mc2.degree[d + e].rank);
}

TEST_CASE("gr and hull algebras satisfy the algebra axioms") {
  GradedGAlgebra a = sym_algebra(adjoint_sl2(ring_z()), 4);
  HullAlgebra h = hull_algebra(a);
  CHECK(h.gr.algebra.check_axioms().ok());
  CHECK(h.algebra.check_axioms().ok());

  GradedGAlgebra c = sym_algebra(conjugation_dual(ring_z()), 2);
  HullAlgebra hc = hull_algebra(c);
  CHECK(hc.gr.algebra.check_axioms().ok());
  CHECK(hc.algebra.check_axioms().ok());
}
