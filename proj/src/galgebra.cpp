#include "glab/galgebra.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace glab {

namespace {

ZVec kron_vec(const ZVec& a, const ZVec& b) {
  ZVec v = ZVec::Zero(a.size() * b.size());
  for (index_t i = 0; i < a.size(); ++i) {
    if (a(i) == 0) continue;
    for (index_t j = 0; j < b.size(); ++j) v(i * b.size() + j) = a(i) * b(j);
  }
  return v;
}

/// Canonical generating columns over the ring (shared with grosshans.cpp
/// in spirit; duplicated to keep the translation units independent).
ZMat canonical_cols(const ZMat& cols, const Ring& ring) {
  if (ring.is_z()) return hermite_basis(cols);
  ZMat nid = ZMat::Identity(cols.rows(), cols.rows());
  nid *= ring.modulus;
  ZMat h = reduced(hermite_basis(hstack(cols, nid)), ring);
  std::vector<index_t> nonzero;
  for (index_t j = 0; j < h.cols(); ++j)
    if (!is_zero(h.col(j))) nonzero.push_back(j);
  return select_cols(h, nonzero);
}

}  // namespace

ZVec GradedGAlgebra::multiply(long d, const ZVec& a, long e, const ZVec& b) const {
  if (d + e > truncation) throw std::out_of_range("multiply: product degree exceeds truncation");
  ZVec v = mult(d, e) * kron_vec(a, b);
  for (index_t i = 0; i < v.size(); ++i) v(i) = reduce(v(i), ring);
  return v;
}

ZVec GradedGAlgebra::power(long d, const ZVec& x, long k) const {
  if (k < 1) throw std::invalid_argument("power: exponent must be positive");
  ZVec acc = x;
  for (long i = 1; i < k; ++i) acc = multiply(d * i, acc, d, x);
  return acc;
}

ValidationReport GradedGAlgebra::check_axioms() const {
  ValidationReport rep;
  if (degree.empty() || degree[0].rank < 1) {
    rep.violations.push_back("degree zero must contain the unit");
    return rep;
  }
  ZVec unit = ZVec::Zero(degree[0].rank);
  unit(0) = 1;
  for (long d = 0; d <= truncation; ++d) {
    for (index_t j = 0; j < degree[d].rank; ++j) {
      ZVec e = ZVec::Zero(degree[d].rank);
      e(j) = 1;
      if (!eq_mod(multiply(0, unit, d, e), e, ring) || !eq_mod(multiply(d, e, 0, unit), e, ring))
        rep.violations.push_back("unit fails in degree " + std::to_string(d));
    }
  }
  for (long d = 0; d <= truncation; ++d)
    for (long e = 0; d + e <= truncation; ++e) {
      // commutativity against the swapped table
      const ZMat& de = mult(d, e);
      const ZMat& ed = mult(e, d);
      for (index_t i = 0; i < degree[d].rank; ++i)
        for (index_t j = 0; j < degree[e].rank; ++j)
          if (!eq_mod(ZMat(de.col(i * degree[e].rank + j)), ZMat(ed.col(j * degree[d].rank + i)),
                      ring))
            rep.violations.push_back("commutativity fails at degrees (" + std::to_string(d) + "," +
                                     std::to_string(e) + ")");
      // equivariance
      GModule src = tensor(degree[d], degree[e]);
      auto errs = equivariance_errors(src, degree[d + e], de);
      for (const auto& err : errs)
        rep.violations.push_back("mult(" + std::to_string(d) + "," + std::to_string(e) + "): " + err);
    }
  for (long d = 1; d <= truncation; ++d)
    for (long e = d; d + e <= truncation; ++e)
      for (long f = e; d + e + f <= truncation; ++f)
        for (index_t i = 0; i < degree[d].rank; ++i)
          for (index_t j = 0; j < degree[e].rank; ++j)
            for (index_t k = 0; k < degree[f].rank; ++k) {
              ZVec a = ZVec::Zero(degree[d].rank), b = ZVec::Zero(degree[e].rank),
                   c = ZVec::Zero(degree[f].rank);
              a(i) = 1;
              b(j) = 1;
              c(k) = 1;
              ZVec left = multiply(d + e, multiply(d, a, e, b), f, c);
              ZVec right = multiply(d, a, e + f, multiply(e, b, f, c));
              if (!eq_mod(ZMat(left), ZMat(right), ring)) {
                rep.violations.push_back("associativity fails at (" + std::to_string(d) + "," +
                                         std::to_string(e) + "," + std::to_string(f) + ")");
                i = degree[d].rank;
                j = degree[e].rank;
                break;
              }
            }
  return rep;
}

GradedGAlgebra sym_algebra(const GModule& m, long truncation) {
  if (truncation < 0) throw std::invalid_argument("sym_algebra: negative truncation");
  GradedGAlgebra a;
  a.datum = m.datum;
  a.ring = m.ring;
  a.truncation = truncation;
  a.mult_table.resize((truncation + 1) * (truncation + 1));
  std::vector<std::vector<std::vector<int>>> mons(truncation + 1);
  std::vector<std::map<std::vector<int>, index_t>> index_of(truncation + 1);
  for (long d = 0; d <= truncation; ++d) {
    a.degree.push_back(sym_power(m, d));
    mons[d] = sym_monomials(m.rank, d);
    for (index_t k = 0; k < static_cast<index_t>(mons[d].size()); ++k) index_of[d][mons[d][k]] = k;
  }
  for (long d = 0; d <= truncation; ++d)
    for (long e = 0; d + e <= truncation; ++e) {
      ZMat t = ZMat::Zero(a.degree[d + e].rank, a.degree[d].rank * a.degree[e].rank);
      for (index_t i = 0; i < a.degree[d].rank; ++i)
        for (index_t j = 0; j < a.degree[e].rank; ++j) {
          std::vector<int> merged = mons[d][i];
          merged.insert(merged.end(), mons[e][j].begin(), mons[e][j].end());
          std::sort(merged.begin(), merged.end());
          t(index_of[d + e].at(merged), i * a.degree[e].rank + j) = 1;
        }
      a.mult(d, e) = std::move(t);
    }
  return a;
}

// Ideal closure ---------------------------------------------------------------

EquivariantIdeal ideal_closure(const GradedGAlgebra& a,
                               const std::vector<std::pair<long, ZVec>>& gens) {
  EquivariantIdeal out;
  out.generators = gens;
  out.closure.assign(a.truncation + 1, ZMat(0, 0));
  for (long d = 0; d <= a.truncation; ++d) out.closure[d] = ZMat(a.degree[d].rank, 0);

  // principal constant ideal (c): the closure in degree d is c times the
  // whole degree, already stable and multiplicatively closed
  bool constants_only = !gens.empty();
  for (const auto& [d, v] : gens)
    if (d != 0) constants_only = false;
  if (constants_only) {
    if (a.degree[0].rank != 1)
      throw std::invalid_argument("ideal_closure: degree zero must be a line");
    Int c = 0;
    for (const auto& [d, v] : gens) c = gcd(c, reduce(v(0), a.ring));
    for (long d = 0; d <= a.truncation; ++d) {
      if (c == 0) continue;
      ZMat scaled = ZMat::Identity(a.degree[d].rank, a.degree[d].rank);
      scaled *= c;
      out.closure[d] = reduced(scaled, a.ring);
    }
    return out;
  }

  // weight components of the generators (torus stability)
  std::vector<std::vector<ZMat>> seeds(a.truncation + 1);
  for (const auto& [d, v] : gens) {
    if (d < 0 || d > a.truncation)
      throw std::invalid_argument("ideal_closure: generator degree outside the truncation");
    for (const auto& [w, idx] : a.degree[d].weight_spaces()) {
      ZVec comp = ZVec::Zero(a.degree[d].rank);
      bool nonzero = false;
      for (index_t i : idx) {
        comp(i) = v(i);
        if (reduce(v(i), a.ring) != 0) nonzero = true;
      }
      if (nonzero) seeds[d].push_back(ZMat(comp));
    }
  }

  for (long d = 0; d <= a.truncation; ++d) {
    ZMat cur(a.degree[d].rank, 0);
    for (const ZMat& s : seeds[d]) cur = hstack(cur, s);
    // ideal property: products of lower-degree closure with whole degrees
    for (long e = 1; e <= d; ++e) {
      const ZMat& lower = out.closure[d - e];
      for (index_t j = 0; j < lower.cols(); ++j)
        for (index_t i = 0; i < a.degree[e].rank; ++i) {
          ZVec b = ZVec::Zero(a.degree[e].rank);
          b(i) = 1;
          cur = hstack(cur, ZMat(a.multiply(e, b, d - e, ZVec(lower.col(j)))));
        }
    }
    cur = canonical_cols(cur, a.ring);
    // operator closure to a fixed point
    const GModule& mod = a.degree[d];
    for (int round = 0; round < 200; ++round) {
      ZMat grown = cur;
      for (long alpha = 0; alpha < mod.n_alpha(); ++alpha)
        for (long n = 1; n < mod.nilpotency[alpha]; ++n) {
          grown = hstack(grown, ZMat(mod.raising[alpha][n - 1] * cur));
          grown = hstack(grown, ZMat(mod.lowering[alpha][n - 1] * cur));
        }
      grown = canonical_cols(grown, a.ring);
      if (eq(grown, cur)) break;
      cur = std::move(grown);
      if (round == 199) throw std::logic_error("ideal_closure: operator closure did not stabilize");
    }
    out.closure[d] = std::move(cur);
  }
  return out;
}

// Quotient --------------------------------------------------------------------

namespace {

struct DegreeQuotient {
  ZMat lift;  // ambient x q, weight-homogeneous columns
  ZMat proj;  // q x ambient, true retraction on the whole space
  std::vector<Weight> weights;
};

/// Quotient of the full degree module by a graded sublattice, blockwise by
/// weight. Over Z the sublattice must be saturated; over a prime field any
/// subspace works.
DegreeQuotient full_quotient(const GModule& mod, const ZMat& sub, const Ring& ring) {
  DegreeQuotient out;
  out.lift = ZMat(mod.rank, 0);
  out.proj = ZMat(0, mod.rank);
  for (const auto& [w, idx] : mod.weight_spaces()) {
    // restrict the sublattice to this weight block
    std::vector<index_t> sub_cols;
    for (index_t j = 0; j < sub.cols(); ++j) {
      bool in_block = false, nonzero = false;
      for (index_t i : idx)
        if (sub(i, j) != 0) in_block = true;
      for (index_t i = 0; i < mod.rank; ++i)
        if (sub(i, j) != 0) nonzero = true;
      if (in_block && nonzero) sub_cols.push_back(j);
    }
    ZMat b = select_rows(select_cols(sub, sub_cols), idx);  // block coords
    const index_t k = static_cast<index_t>(idx.size());

    ZMat lift_c, proj_c;
    if (ring.is_z()) {
      SnfCertificate c = b.cols() == 0 ? smith_normal_form(ZMat::Zero(k, 1)) : smith_normal_form(b);
      index_t r = c.rank();
      for (index_t t = 0; t < r; ++t)
        if (c.factors[t] != 1)
          throw std::invalid_argument("quotient: ideal is not saturated in some degree");
      std::vector<index_t> tail;
      for (index_t t = r; t < k; ++t) tail.push_back(t);
      lift_c = select_cols(c.left_inv, tail);
      proj_c = select_rows(c.left, tail);
    } else {
      // prime field: greedily extend the subspace by unit vectors
      ZMat span = reduced(b, ring);
      std::vector<index_t> chosen;
      for (index_t t = 0; t < k; ++t) {
        ZVec e = ZVec::Zero(k);
        e(t) = 1;
        if (span.cols() > 0 && solve(span, e, ring)) continue;
        span = hstack(span, ZMat(e));
        chosen.push_back(t);
      }
      ZMat lifts = ZMat::Zero(k, static_cast<index_t>(chosen.size()));
      for (size_t t = 0; t < chosen.size(); ++t) lifts(chosen[t], static_cast<index_t>(t)) = 1;
      ZMat s = hstack(reduced(b, ring), lifts);
      auto t = left_inverse(s, ring);
      if (!t) throw std::logic_error("quotient: retraction failed over the field");
      lift_c = lifts;
      proj_c = t->bottomRows(lifts.cols());
    }

    ZMat lift_full = ZMat::Zero(mod.rank, lift_c.cols());
    ZMat proj_full = ZMat::Zero(lift_c.cols(), mod.rank);
    for (size_t r2 = 0; r2 < idx.size(); ++r2) {
      lift_full.row(idx[r2]) = lift_c.row(static_cast<index_t>(r2));
      proj_full.col(idx[r2]) = proj_c.col(static_cast<index_t>(r2));
    }
    out.lift = hstack(out.lift, lift_full);
    out.proj = vstack(out.proj, proj_full);
    for (index_t j = 0; j < lift_c.cols(); ++j) out.weights.push_back(w);
  }
  return out;
}

GModule quotient_module(const GModule& mod, const DegreeQuotient& q, const Ring& ring) {
  GModule r;
  r.datum = mod.datum;
  r.ring = ring;
  r.rank = q.lift.cols();
  r.weights = q.weights;
  r.nilpotency = mod.nilpotency;
  r.raising.resize(mod.n_alpha());
  r.lowering.resize(mod.n_alpha());
  for (long a = 0; a < mod.n_alpha(); ++a)
    for (long n = 1; n < mod.nilpotency[a]; ++n) {
      r.raising[a].push_back(reduced(q.proj * mod.raising[a][n - 1] * q.lift, ring));
      r.lowering[a].push_back(reduced(q.proj * mod.lowering[a][n - 1] * q.lift, ring));
    }
  for (index_t j = 0; j < r.rank; ++j) {
    // label by a representative
    std::ostringstream s;
    bool first = true;
    for (index_t i = 0; i < mod.rank; ++i) {
      if (q.lift(i, j) == 0) continue;
      if (!first) s << "+";
      if (q.lift(i, j) != 1) s << q.lift(i, j) << "*";
      s << mod.label(i);
      first = false;
    }
    r.basis_labels.push_back("[" + s.str() + "]");
  }
  return r;
}

GradedGAlgebra base_change_algebra(const GradedGAlgebra& a, const Int& n) {
  GradedGAlgebra r = a;
  r.ring = ring_zn(n);
  for (GModule& m : r.degree) m = base_change(m, n);
  for (ZMat& t : r.mult_table)
    if (t.size() > 0) t = reduced(t, r.ring);
  return r;
}

}  // namespace

AlgebraQuotient quotient(const GradedGAlgebra& a, const std::vector<std::pair<long, ZVec>>& gens) {
  EquivariantIdeal j = ideal_closure(a, gens);
  if (a.degree[0].rank != 1)
    throw std::invalid_argument("quotient: degree zero must be a line");

  // modulus cut out in degree zero
  Int m = 0;
  for (index_t c = 0; c < j.closure[0].cols(); ++c) m = gcd(m, j.closure[0](0, c));
  if (!a.ring.is_z() && m != 0)
    throw std::invalid_argument("quotient: degree-zero ideal over Z/n is not supported");
  if (m == 1) throw std::invalid_argument("quotient: ideal contains the unit");

  GradedGAlgebra base = a;
  std::vector<ZMat> jm = j.closure;
  Ring ring = a.ring;
  if (m != 0) {
    ring = ring_zn(m);
    base = base_change_algebra(a, m);
    for (ZMat& cols : jm) cols = canonical_cols(cols, ring);
    bool all_zero = true;
    for (const ZMat& cols : jm)
      if (cols.cols() > 0) all_zero = false;
    if (all_zero) {
      // pure base change: keep the original basis in every degree
      AlgebraQuotient out;
      out.algebra = std::move(base);
      for (long d = 0; d <= a.truncation; ++d) {
        out.projection.push_back(ZMat::Identity(a.degree[d].rank, a.degree[d].rank));
        out.section.push_back(ZMat::Identity(a.degree[d].rank, a.degree[d].rank));
      }
      return out;
    }
    if (!is_prime(m))
      throw std::invalid_argument("quotient: composite modulus with residual generators");
  }

  AlgebraQuotient out;
  out.algebra.datum = base.datum;
  out.algebra.ring = ring;
  out.algebra.truncation = base.truncation;
  out.algebra.mult_table.resize((base.truncation + 1) * (base.truncation + 1));
  std::vector<DegreeQuotient> quots;
  for (long d = 0; d <= base.truncation; ++d) {
    DegreeQuotient q = full_quotient(base.degree[d], jm[d], ring);
    out.algebra.degree.push_back(quotient_module(base.degree[d], q, ring));
    out.projection.push_back(q.proj);
    out.section.push_back(q.lift);
    quots.push_back(std::move(q));
  }
  for (long d = 0; d <= base.truncation; ++d)
    for (long e = 0; d + e <= base.truncation; ++e)
      out.algebra.mult(d, e) =
          reduced(quots[d + e].proj * base.mult(d, e) * kron(quots[d].lift, quots[e].lift), ring);
  return out;
}

// Invariant subalgebra ---------------------------------------------------------

InvariantSubalgebra invariant_subalgebra(const GradedGAlgebra& a, SubgroupTag h) {
  InvariantSubalgebra out;
  for (long d = 0; d <= a.truncation; ++d) out.per_degree.push_back(invariants(a.degree[d], h));

  out.generated_span.assign(a.truncation + 1, ZMat(0, 0));
  ZVec unit = ZVec::Zero(a.degree[0].rank);
  unit(0) = 1;
  out.generated_span[0] = ZMat(unit);
  for (long d = 1; d <= a.truncation; ++d) {
    ZMat span(a.degree[d].rank, 0);
    for (long e = 1; e < d; ++e) {
      const ZMat& lo = out.generated_span[e];
      const ZMat& hi = out.generated_span[d - e];
      for (index_t i = 0; i < lo.cols(); ++i)
        for (index_t j = 0; j < hi.cols(); ++j)
          span = hstack(span, ZMat(a.multiply(e, ZVec(lo.col(i)), d - e, ZVec(hi.col(j)))));
    }
    span = canonical_cols(span, a.ring);
    const InvariantLattice& inv = out.per_degree[d];
    for (index_t c = 0; c < inv.count(); ++c) {
      ZVec b = inv.basis.col(c);
      bool inside = span.cols() > 0 && solve(span, b, a.ring).has_value();
      if (!inside && span.cols() == 0) inside = is_zero(reduced(ZMat(b), a.ring));
      if (!inside) {
        out.generators.emplace_back(d, b);
        out.generator_labels.push_back(vector_label(a, d, b));
        span = canonical_cols(hstack(span, ZMat(b)), a.ring);
      }
    }
    out.generated_span[d] = std::move(span);
  }
  return out;
}

// Grosshans graded algebra -----------------------------------------------------

GrosshansGradedAlgebra grosshans_graded_algebra(const GradedGAlgebra& a) {
  GrosshansGradedAlgebra out;
  out.algebra.datum = a.datum;
  out.algebra.ring = a.ring;
  out.algebra.truncation = a.truncation;
  out.algebra.mult_table.resize((a.truncation + 1) * (a.truncation + 1));
  for (long d = 0; d <= a.truncation; ++d) {
    out.filtrations.push_back(graded(a.degree[d]));
    out.algebra.degree.push_back(out.filtrations[d].total);
    std::vector<long> hs;
    const GrosshansFiltration& f = out.filtrations[d];
    for (size_t p = 0; p < f.pieces.size(); ++p)
      for (index_t c = 0; c < f.pieces[p].piece.rank; ++c) hs.push_back(f.pieces[p].height);
    out.algebra.heights.push_back(std::move(hs));
  }
  for (long d = 0; d <= a.truncation; ++d)
    for (long e = 0; d + e <= a.truncation; ++e) {
      const GrosshansFiltration& fd = out.filtrations[d];
      const GrosshansFiltration& fe = out.filtrations[e];
      const GrosshansFiltration& ft = out.filtrations[d + e];
      ZMat t = ZMat::Zero(ft.total.rank, fd.total.rank * fe.total.rank);
      for (size_t p = 0; p < fd.pieces.size(); ++p)
        for (size_t q = 0; q < fe.pieces.size(); ++q) {
          long target_height = fd.pieces[p].height + fe.pieces[q].height;
          long r = ft.piece_index_of_height(target_height);
          if (r < 0) continue;  // the class vanishes in the graded algebra
          const GrosshansPiece& tp = ft.pieces[r];
          for (index_t i = 0; i < fd.pieces[p].piece.rank; ++i)
            for (index_t j = 0; j < fe.pieces[q].piece.rank; ++j) {
              ZVec prod = a.multiply(d, ZVec(fd.pieces[p].lift.col(i)), e,
                                     ZVec(fe.pieces[q].lift.col(j)));
              ZVec cls = tp.projection * prod;
              index_t col = (fd.offsets[p] + i) * fe.total.rank + (fe.offsets[q] + j);
              for (index_t row = 0; row < tp.piece.rank; ++row)
                t(ft.offsets[r] + row, col) = reduce(cls(row), a.ring);
            }
        }
      out.algebra.mult(d, e) = std::move(t);
    }
  return out;
}

// Hull algebra -------------------------------------------------------------------

HullAlgebra hull_algebra(const GradedGAlgebra& a) {
  HullAlgebra out;
  out.gr = grosshans_graded_algebra(a);
  for (long d = 0; d <= a.truncation; ++d) {
    out.embeddings.push_back(hull_embedding(a.degree[d], out.gr.filtrations[d]));
    out.embedding_matrix.push_back(out.embeddings[d].map.matrix);
  }
  out.algebra.datum = a.datum;
  out.algebra.ring = a.ring;
  out.algebra.truncation = a.truncation;
  out.algebra.mult_table.resize((a.truncation + 1) * (a.truncation + 1));
  for (long d = 0; d <= a.truncation; ++d) out.algebra.degree.push_back(out.embeddings[d].h.total);

  for (long d = 0; d <= a.truncation; ++d)
    for (long e = 0; d + e <= a.truncation; ++e) {
      const HullModule& hd = out.embeddings[d].h;
      const HullModule& he = out.embeddings[e].h;
      const HullModule& ht = out.embeddings[d + e].h;
      ZMat t = ZMat::Zero(ht.total.rank, hd.total.rank * he.total.rank);
      for (size_t p = 0; p < hd.summands.size(); ++p)
        for (size_t q = 0; q < he.summands.size(); ++q) {
          const HullSummand& sp = hd.summands[p];
          const HullSummand& sq = he.summands[q];
          Weight target = sp.lambda + sq.lambda;
          const index_t w1 = sp.w_basis.cols(), w2 = sq.w_basis.cols();
          // locate the target summand
          long ti = -1;
          for (size_t r = 0; r < ht.summands.size(); ++r)
            if (ht.summands[r].lambda == target) ti = static_cast<long>(r);
          // invariant products, expressed in the target multiplicity space
          ZMat wprod(ti < 0 ? 0 : ht.summands[ti].w_basis.cols(), w1 * w2);
          for (index_t j1 = 0; j1 < w1; ++j1)
            for (index_t j2 = 0; j2 < w2; ++j2) {
              ZVec u = a.multiply(d, ZVec(sp.w_basis.col(j1)), e, ZVec(sq.w_basis.col(j2)));
              if (ti < 0) {
                if (!is_zero(reduced(ZMat(u), a.ring)))
                  throw std::logic_error("hull_algebra: invariant product misses its summand");
                continue;
              }
              auto c = solve(ht.summands[ti].w_basis, u, a.ring);
              if (!c) throw std::logic_error("hull_algebra: invariant product outside the lattice");
              wprod.col(j1 * w2 + j2) = *c;
            }
          if (ti < 0) continue;
          const HullSummand& st = ht.summands[ti];
          const index_t wt = st.w_basis.cols();
          long am = sp.lambda.coords[0], bm = sq.lambda.coords[0];
          for (index_t ia = 0; ia <= am; ++ia)
            for (index_t ib = 0; ib <= bm; ++ib)
              for (index_t j1 = 0; j1 < w1; ++j1)
                for (index_t j2 = 0; j2 < w2; ++j2) {
                  index_t col = (hd.offsets[p] + ia * w1 + j1) * he.total.rank +
                                (he.offsets[q] + ib * w2 + j2);
                  for (index_t k = 0; k < wt; ++k) {
                    Int v = wprod(k, j1 * w2 + j2);
                    if (v == 0) continue;
                    t(ht.offsets[ti] + (ia + ib) * wt + k, col) = reduce(v, a.ring);
                  }
                }
        }
      out.algebra.mult(d, e) = std::move(t);
    }
  return out;
}

// Torsion bound --------------------------------------------------------------------

TorsionBound torsion_bound(const HullAlgebra& h) {
  const Ring& ring = h.algebra.ring;
  if (!ring.is_z()) throw std::invalid_argument("torsion_bound: defined over Z");
  TorsionBound out;
  for (long d = 0; d < static_cast<long>(h.embedding_matrix.size()); ++d) {
    std::vector<Int> factors = cokernel_structure(h.embedding_matrix[d]);
    for (const Int& f : factors) {
      if (f == 0)
        throw TorsionBoundError("hull embedding has free cokernel in degree " + std::to_string(d));
      if (f > 1) out.bound = lcm(out.bound, f);
    }
    out.factors_per_degree.push_back(std::move(factors));
  }
  return out;
}

TorsionBound torsion_bound(const GradedGAlgebra& a) { return torsion_bound(hull_algebra(a)); }

// Schur cone pair --------------------------------------------------------------------

SchurConePair schur_cone_pair(const Weight& lambda, long truncation, long exponent_bound) {
  if (lambda.rank() != 1 || lambda.coords[0] < 0)
    throw std::invalid_argument("schur_cone_pair: dominant A1 weight required");
  const long m = lambda.coords[0];
  SchurConePair out;
  out.s_prime.datum = root_datum_a(1);
  out.s_prime.ring = ring_z();
  out.s_prime.truncation = truncation;
  out.s_prime.mult_table.resize((truncation + 1) * (truncation + 1));
  std::vector<CostandardModule> nablas;
  for (long d = 0; d <= truncation; ++d) {
    nablas.push_back(costandard(weight1(d * m), ring_z()));
    out.s_prime.degree.push_back(nablas[d].underlying);
  }
  for (long d = 0; d <= truncation; ++d)
    for (long e = 0; d + e <= truncation; ++e)
      out.s_prime.mult(d, e) = cartan_multiply(nablas[d], nablas[e]).matrix;

  // S: the subalgebra generated by the standard lattice in degree one
  out.s_lattice.assign(truncation + 1, ZMat(0, 0));
  ZVec unit = ZVec::Zero(1);
  unit(0) = 1;
  out.s_lattice[0] = ZMat(unit);
  if (truncation >= 1) out.s_lattice[1] = standard_module(lambda, ring_z()).embedding.matrix;
  for (long d = 2; d <= truncation; ++d) {
    ZMat cols(out.s_prime.degree[d].rank, 0);
    const ZMat& lo = out.s_lattice[1];
    const ZMat& hi = out.s_lattice[d - 1];
    for (index_t i = 0; i < lo.cols(); ++i)
      for (index_t j = 0; j < hi.cols(); ++j)
        cols = hstack(cols,
                      ZMat(out.s_prime.multiply(1, ZVec(lo.col(i)), d - 1, ZVec(hi.col(j)))));
    out.s_lattice[d] = hermite_basis(cols);
  }
  for (long d = 0; d <= truncation; ++d) {
    std::vector<Int> factors = cokernel_structure(out.s_lattice[d]);
    for (const Int& f : factors) {
      if (f == 0)
        throw std::logic_error("schur_cone_pair: sublattice drops rank within the truncation");
      if (f > 1) out.t = lcm(out.t, f);
    }
    out.factors_per_degree.push_back(std::move(factors));
  }

  // monic relations for the degree-one basis of S'
  if (truncation >= 1) {
    const index_t r1 = out.s_prime.degree[1].rank;
    for (index_t bi = 0; bi < r1; ++bi) {
      ZVec b = ZVec::Zero(r1);
      b(bi) = 1;
      long found = -1;
      for (long s = 1; s <= std::min(exponent_bound, truncation) && found < 0; ++s) {
        ZVec bs = out.s_prime.power(1, b, s);
        // lattice sum over i of S_i * b^(s-i)
        ZMat cols(out.s_prime.degree[s].rank, 0);
        for (long i = 1; i <= s; ++i) {
          ZVec bpow = (s - i == 0) ? unit : out.s_prime.power(1, b, s - i);
          for (index_t c = 0; c < out.s_lattice[i].cols(); ++c)
            cols = hstack(cols, ZMat(out.s_prime.multiply(i, ZVec(out.s_lattice[i].col(c)),
                                                         s - i, bpow)));
        }
        if (cols.cols() > 0 && solve(cols, bs, ring_z())) found = s;
      }
      out.relation_degree.push_back(found);
    }
  }
  return out;
}

// Multicone -----------------------------------------------------------------------

GradedGAlgebra multicone(const std::vector<long>& generators, long truncation, const Ring& ring) {
  for (long g : generators)
    if (g <= 0) throw std::invalid_argument("multicone: generators must be positive");
  std::vector<bool> reachable(truncation + 1, false);
  reachable[0] = true;
  for (long d = 1; d <= truncation; ++d)
    for (long g : generators)
      if (g <= d && reachable[d - g]) reachable[d] = true;

  GradedGAlgebra a;
  a.datum = root_datum_a(1);
  a.ring = ring;
  a.truncation = truncation;
  a.mult_table.resize((truncation + 1) * (truncation + 1));
  std::vector<CostandardModule> nablas;
  for (long d = 0; d <= truncation; ++d) {
    if (reachable[d]) {
      nablas.push_back(costandard(weight1(d), ring));
      a.degree.push_back(nablas.back().underlying);
    } else {
      nablas.push_back(costandard(weight1(-1), ring));  // zero module
      a.degree.push_back(nablas.back().underlying);
    }
  }
  for (long d = 0; d <= truncation; ++d)
    for (long e = 0; d + e <= truncation; ++e) {
      if (reachable[d] && reachable[e]) {
        CostandardModule cd = costandard(weight1(d), ring);
        CostandardModule ce = costandard(weight1(e), ring);
        a.mult(d, e) = cartan_multiply(cd, ce).matrix;
      } else {
        a.mult(d, e) = ZMat::Zero(a.degree[d + e].rank, a.degree[d].rank * a.degree[e].rank);
      }
    }
  return a;
}

// Labels ----------------------------------------------------------------------------

std::string basis_label(const GradedGAlgebra& a, long d, index_t i) { return a.degree[d].label(i); }

std::string vector_label(const GradedGAlgebra& a, long d, const ZVec& v) {
  std::ostringstream s;
  bool first = true;
  for (index_t i = 0; i < v.size(); ++i) {
    Int c = reduce(v(i), a.ring);
    if (c == 0) continue;
    bool neg = c < 0;
    Int mag = abs(c);
    if (first) {
      if (neg) s << "-";
    } else {
      s << (neg ? " - " : " + ");
    }
    if (mag != 1) s << mag << "*";
    s << basis_label(a, d, i);
    first = false;
  }
  if (first) s << "0";
  return s.str();
}

}  // namespace glab
