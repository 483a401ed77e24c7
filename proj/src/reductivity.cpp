#include "glab/reductivity.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <random>
#include <sstream>

namespace glab {

namespace {

Int image_gcd(const ZVec& values, const Int& modulus) {
  Int g = modulus;
  for (index_t i = 0; i < values.size(); ++i) g = gcd(g, values(i));
  return g;
}

}  // namespace

std::vector<std::string> cyclic_surjection_errors(const CyclicSurjection& phi, SubgroupTag subgroup) {
  std::vector<std::string> errs;
  const GModule& m = phi.source;
  const Int& n = phi.target.modulus;
  if (phi.row.size() != m.rank) {
    errs.push_back("coefficient row size mismatch");
    return errs;
  }
  Int g = image_gcd(phi.row, n);
  if (g != 1) errs.push_back("phi is not surjective onto the cyclic target");

  const bool torus_part = subgroup == SubgroupTag::FullG || subgroup == SubgroupTag::Torus ||
                          subgroup == SubgroupTag::BorelPlus || subgroup == SubgroupTag::BorelMinus;
  const bool raising_part = subgroup == SubgroupTag::FullG || subgroup == SubgroupTag::UPlus ||
                            subgroup == SubgroupTag::BorelPlus;
  const bool lowering_part = subgroup == SubgroupTag::FullG || subgroup == SubgroupTag::UMinus ||
                             subgroup == SubgroupTag::BorelMinus;
  if (torus_part) {
    for (index_t i = 0; i < m.rank; ++i)
      if (!m.weights[i].is_zero() && reduce(phi.row(i), n) != 0) {
        errs.push_back("phi does not kill a nonzero weight space");
        break;
      }
  }
  auto check_ops = [&](const std::vector<std::vector<ZMat>>& ops, const char* what) {
    for (const auto& per_alpha : ops)
      for (const ZMat& op : per_alpha) {
        ZMat composed = phi.row.transpose() * op;
        if (!is_zero(reduced(composed, Ring(n)))) {
          errs.push_back(std::string("phi does not kill the image of a ") + what + " operator");
          return;
        }
      }
  };
  if (raising_part) check_ops(m.raising, "raising");
  if (lowering_part) check_ops(m.lowering, "lowering");
  return errs;
}

PowerReductivityResult check_power_reductivity(const CyclicSurjection& phi, long d_max,
                                               SubgroupTag subgroup) {
  auto errs = cyclic_surjection_errors(phi, subgroup);
  if (!errs.empty()) throw std::invalid_argument("check_power_reductivity: " + errs.front());
  if (!phi.source.ring.is_z())
    throw std::invalid_argument("check_power_reductivity: source must live over Z");

  PowerReductivityResult out;
  const Int& n = phi.target.modulus;
  for (long d = 1; d <= d_max; ++d) {
    GModule sd = sym_power(phi.source, d);
    InvariantLattice inv = invariants(sd, subgroup);
    // S^d(phi) on a monomial is the product of the coefficients
    auto mons = sym_monomials(phi.source.rank, d);
    ZVec mon_image(static_cast<index_t>(mons.size()));
    for (size_t k = 0; k < mons.size(); ++k) {
      Int prod = 1;
      for (int i : mons[k]) prod *= phi.row(i);
      mon_image(static_cast<index_t>(k)) = reduce(prod, n);
    }
    ZVec values(inv.count());
    for (index_t c = 0; c < inv.count(); ++c) {
      Int v = 0;
      for (index_t k = 0; k < sd.rank; ++k) v += inv.basis(k, c) * mon_image(k);
      values(c) = reduce(v, n);
    }
    // cokernel of the subgroup-invariants hitting S^d L: the target modulo
    // the subgroup generated by the image values (and the modulus itself)
    Int g = image_gcd(values, n);
    out.cokernel_order.push_back(g);
    if (g == 1) {
      out.witness_degree = d;
      // Bezout combination of the values gives the witness invariant
      ZVec combo = ZVec::Zero(inv.count());
      Int acc = n;  // combining the modulus first keeps the witness canonical
      for (index_t c = 0; c < inv.count(); ++c) {
        if (values(c) == 0) continue;
        if (acc == 0) {
          acc = values(c);
          combo(c) = 1;
          continue;
        }
        Int u, v;
        Int g2 = gcdext(acc, values(c), u, v);
        for (index_t t = 0; t < inv.count(); ++t) combo(t) *= u;
        combo(c) += v;
        acc = g2;
        if (acc == 1) break;
      }
      if (abs(acc) != 1) throw std::logic_error("check_power_reductivity: witness assembly failed");
      if (acc == -1) combo = -combo;
      out.witness_invariant = inv.basis * combo;
      return out;
    }
  }
  return out;
}

// Algebra maps -----------------------------------------------------------------

std::vector<std::string> AlgebraMap::algebra_map_errors() const {
  std::vector<std::string> errs;
  const Ring& ring = target.ring;
  if (static_cast<long>(matrix.size()) < truncation() + 1) {
    errs.push_back("missing degree matrices");
    return errs;
  }
  for (long d = 0; d <= truncation(); ++d)
    if (matrix[d].rows() != target.degree[d].rank || matrix[d].cols() != source.degree[d].rank) {
      errs.push_back("degree-" + std::to_string(d) + " matrix has wrong dimensions");
      return errs;
    }
  ZVec unit_src = ZVec::Zero(source.degree[0].rank);
  unit_src(0) = 1;
  ZVec unit_tgt = ZVec::Zero(target.degree[0].rank);
  unit_tgt(0) = 1;
  if (!eq_mod(ZMat(matrix[0] * unit_src), ZMat(unit_tgt), ring))
    errs.push_back("unit is not preserved");
  for (long d = 0; d <= truncation(); ++d)
    for (long e = 0; d + e <= truncation(); ++e) {
      ZMat lhs = matrix[d + e] * source.mult(d, e);
      ZMat rhs = target.mult(d, e) * kron(matrix[d], matrix[e]);
      if (!eq_mod(lhs, rhs, ring)) {
        errs.push_back("multiplicativity fails at degrees (" + std::to_string(d) + "," +
                       std::to_string(e) + ")");
      }
    }
  return errs;
}

AlgebraMap hull_inclusion_map(const HullAlgebra& h) {
  AlgebraMap f;
  f.source = h.gr.algebra;
  f.target = h.algebra;
  f.matrix = h.embedding_matrix;
  return f;
}

std::vector<PowerTestElement> default_test_set(const GradedGAlgebra& target, long max_degree,
                                               unsigned seed, long pair_cap_per_degree) {
  std::vector<PowerTestElement> out;
  std::mt19937 rng(seed);
  for (long d = 1; d <= std::min(max_degree, target.truncation); ++d) {
    const index_t r = target.degree[d].rank;
    for (index_t i = 0; i < r; ++i) {
      PowerTestElement e;
      e.degree = d;
      e.element = ZVec::Zero(r);
      e.element(i) = 1;
      e.label = basis_label(target, d, i);
      out.push_back(std::move(e));
    }
    std::vector<std::pair<index_t, index_t>> pairs;
    for (index_t i = 0; i < r; ++i)
      for (index_t j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    if (static_cast<long>(pairs.size()) > pair_cap_per_degree) pairs.resize(pair_cap_per_degree);
    std::sort(pairs.begin(), pairs.end());
    for (auto [i, j] : pairs) {
      PowerTestElement e;
      e.degree = d;
      e.element = ZVec::Zero(r);
      e.element(i) = 1;
      e.element(j) = 1;
      e.label = basis_label(target, d, i) + " + " + basis_label(target, d, j);
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

PowerSurjectivityVerdict power_search(const AlgebraMap& f,
                                      const std::vector<PowerTestElement>& test_set,
                                      const SearchBounds& bounds,
                                      const std::function<bool(long)>& exponent_allowed) {
  PowerSurjectivityVerdict verdict;
  verdict.bounds = bounds;
  verdict.proven_within_bounds = true;
  const long truncation = f.truncation();
  std::vector<std::unique_ptr<Solver>> solvers(truncation + 1);
  auto solver_for = [&](long deg) -> Solver& {
    if (!solvers[deg]) solvers[deg] = std::make_unique<Solver>(f.matrix[deg], f.target.ring);
    return *solvers[deg];
  };
  for (const PowerTestElement& el : test_set) {
    PowerWitness w;
    w.element = el;
    for (long s = 1; s <= bounds.exponent_bound && s * el.degree <= truncation; ++s) {
      if (!exponent_allowed(s)) continue;
      ZVec pw = f.target.power(el.degree, el.element, s);
      if (solver_for(s * el.degree).solve(pw)) {
        w.exponent = s;
        break;
      }
    }
    if (w.exponent < 0) verdict.proven_within_bounds = false;
    verdict.witnesses.push_back(std::move(w));
  }
  return verdict;
}

}  // namespace

PowerSurjectivityVerdict power_surjectivity(const AlgebraMap& f,
                                            const std::vector<PowerTestElement>& test_set,
                                            const SearchBounds& bounds) {
  return power_search(f, test_set, bounds, [](long) { return true; });
}

PowerSurjectivityVerdict p_power_surjectivity(const AlgebraMap& f, const Int& p,
                                              const std::vector<PowerTestElement>& test_set,
                                              const SearchBounds& bounds) {
  if (!is_prime(p)) throw std::invalid_argument("p_power_surjectivity: p must be prime");
  return power_search(f, test_set, bounds, [&](long s) {
    Int v = s;
    while (v % p == 0) v /= p;
    return v == 1;
  });
}

AlgebraMap reduce_map_mod(const AlgebraMap& f, const Int& p) {
  if (!f.source.ring.is_z() || !f.target.ring.is_z())
    throw std::invalid_argument("reduce_map_mod: map must live over Z");
  AlgebraMap r;
  ZVec punit = ZVec::Zero(1);
  punit(0) = p;
  AlgebraQuotient qs = quotient(f.source, {{0, punit}});
  AlgebraQuotient qt = quotient(f.target, {{0, punit}});
  r.source = qs.algebra;
  r.target = qt.algebra;
  // conjugate into the quotient coordinates on both sides
  for (size_t d = 0; d < f.matrix.size(); ++d)
    r.matrix.push_back(reduced(qt.projection[d] * f.matrix[d] * qs.section[d], ring_zn(p)));
  return r;
}

UniversalityCertificate universal_power_surjectivity(const AlgebraMap& f, const SearchBounds& bounds,
                                                     unsigned seed) {
  if (!f.target.ring.is_z())
    throw std::invalid_argument("universal_power_surjectivity: defined over Z");
  UniversalityCertificate cert;
  cert.t = 1;
  for (long d = 0; d <= f.truncation(); ++d) {
    for (const Int& factor : cokernel_structure(f.matrix[d])) {
      if (factor == 0) {
        cert.t = 0;
        return cert;  // free cokernel: no certificate at this truncation
      }
      if (factor > 1) cert.t = lcm(cert.t, factor);
    }
  }
  Int rest = cert.t;
  Int p = 2;
  while (rest > 1) {
    if (p * p > rest) {
      cert.primes.push_back(rest);
      break;
    }
    if (rest % p == 0) {
      cert.primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  cert.universal_within_bounds = true;
  for (const Int& p : cert.primes) {
    AlgebraMap fp = reduce_map_mod(f, p);
    auto tests = default_test_set(fp.target, bounds.max_test_degree, seed);
    cert.per_prime.push_back(p_power_surjectivity(fp, p, tests, bounds));
    if (!cert.per_prime.back().proven_within_bounds) cert.universal_within_bounds = false;
  }
  return cert;
}

// Lifting of invariants ----------------------------------------------------------

LiftVerdict lift_invariants(const GradedGAlgebra& a,
                            const std::vector<std::pair<long, ZVec>>& ideal_gens,
                            const SearchBounds& bounds) {
  AlgebraQuotient q = quotient(a, ideal_gens);
  const GradedGAlgebra& qa = q.algebra;
  LiftVerdict verdict;
  verdict.bounds = bounds;
  verdict.proven_within_bounds = true;

  // invariants of A per degree, pushed через the projection
  std::vector<ZMat> image(a.truncation + 1);
  for (long d = 0; d <= a.truncation; ++d)
    image[d] = reduced(q.projection[d] * invariants(a.degree[d], SubgroupTag::FullG).basis, qa.ring);

  for (long d = 1; d <= std::min(bounds.max_test_degree, qa.truncation); ++d) {
    InvariantLattice inv = invariants(qa.degree[d], SubgroupTag::FullG);
    for (index_t c = 0; c < inv.count(); ++c) {
      LiftWitness w;
      w.degree = d;
      w.element = inv.basis.col(c);
      w.label = vector_label(qa, d, w.element);
      for (long m = 1; m <= bounds.exponent_bound && m * d <= qa.truncation; ++m) {
        ZVec pw = qa.power(d, w.element, m);
        if (image[m * d].cols() > 0 && solve(image[m * d], pw, qa.ring)) {
          w.exponent = m;
          break;
        }
        if (image[m * d].cols() == 0 && is_zero(reduced(ZMat(pw), qa.ring))) {
          w.exponent = m;
          break;
        }
      }
      if (w.exponent < 0) verdict.proven_within_bounds = false;
      verdict.witnesses.push_back(std::move(w));
    }
  }
  return verdict;
}

IntegralityVerdict int_property_witness(const GradedGAlgebra& a,
                                        const std::vector<std::pair<long, ZVec>>& ideal_gens,
                                        const SearchBounds& bounds) {
  AlgebraQuotient q = quotient(a, ideal_gens);
  const GradedGAlgebra& qa = q.algebra;
  IntegralityVerdict verdict;
  verdict.bounds = bounds;
  verdict.proven_within_bounds = true;

  std::vector<InvariantLattice> inv_a(a.truncation + 1);
  std::vector<ZMat> image(a.truncation + 1);
  for (long d = 0; d <= a.truncation; ++d) {
    inv_a[d] = invariants(a.degree[d], SubgroupTag::FullG);
    image[d] = reduced(q.projection[d] * inv_a[d].basis, qa.ring);
  }

  for (long d = 1; d <= std::min(bounds.max_test_degree, qa.truncation); ++d) {
    InvariantLattice inv = invariants(qa.degree[d], SubgroupTag::FullG);
    for (index_t c = 0; c < inv.count(); ++c) {
      IntegralityWitness w;
      w.degree = d;
      w.element = inv.basis.col(c);
      w.label = vector_label(qa, d, w.element);
      for (long s = 1; s <= bounds.exponent_bound && s * d <= qa.truncation; ++s) {
        // monic relation: b^s = sum_i c_i b^(s-i), c_i in the invariant image
        ZVec bs = qa.power(d, w.element, s);
        std::vector<std::pair<long, index_t>> col_origin;
        ZMat cols(qa.degree[s * d].rank, 0);
        for (long i = 1; i <= s; ++i) {
          const ZMat& img = image[i * d];
          for (index_t j = 0; j < img.cols(); ++j) {
            ZVec term = img.col(j);
            if (s - i > 0) term = qa.multiply(i * d, term, (s - i) * d, qa.power(d, w.element, s - i));
            cols = hstack(cols, ZMat(term));
            col_origin.emplace_back(i, j);
          }
        }
        std::optional<ZVec> sol;
        if (cols.cols() > 0) sol = solve(cols, bs, qa.ring);
        if (!sol && is_zero(reduced(ZMat(bs), qa.ring))) {
          w.relation_degree = s;  // b^s = 0 is already monic
          break;
        }
        if (sol) {
          w.relation_degree = s;
          // pull the coefficients back to invariants of A (degreewise sums)
          std::map<long, ZVec> coeff;
          for (size_t t = 0; t < col_origin.size(); ++t) {
            auto [i, j] = col_origin[t];
            Int c_val = (*sol)(static_cast<index_t>(t));
            if (c_val == 0) continue;
            if (!coeff.count(i)) coeff[i] = ZVec::Zero(a.degree[i * d].rank);
            coeff[i] += c_val * ZVec(inv_a[i * d].basis.col(j));
          }
          for (auto& [i, v] : coeff) w.coefficients.emplace_back(i, std::move(v));
          break;
        }
      }
      if (w.relation_degree < 0) verdict.proven_within_bounds = false;
      verdict.witnesses.push_back(std::move(w));
    }
  }
  return verdict;
}

// gr A -> gr(A/pA) ------------------------------------------------------------------

GrModPComparison gr_mod_p_comparison(const GradedGAlgebra& a, const Int& p, const SearchBounds& bounds,
                                     unsigned seed) {
  if (!is_prime(p)) throw std::invalid_argument("gr_mod_p_comparison: p must be prime");
  if (!a.ring.is_z()) throw std::invalid_argument("gr_mod_p_comparison: algebra must live over Z");

  GrosshansGradedAlgebra gr_z = grosshans_graded_algebra(a);
  ZVec punit = ZVec::Zero(1);
  punit(0) = p;
  AlgebraQuotient qp = quotient(a, {{0, punit}});
  GrosshansGradedAlgebra gr_p = grosshans_graded_algebra(qp.algebra);

  GrModPComparison out;
  out.map.source = gr_z.algebra;
  out.map.target = gr_p.algebra;
  const Ring ring = ring_zn(p);
  for (long d = 0; d <= a.truncation; ++d) {
    const GrosshansFiltration& fz = gr_z.filtrations[d];
    const GrosshansFiltration& fp = gr_p.filtrations[d];
    ZMat m = ZMat::Zero(fp.total.rank, fz.total.rank);
    // reduction into the mod-p coordinates of the quotient algebra
    ZMat to_ap = qp.projection[d];
    for (size_t pi = 0; pi < fz.pieces.size(); ++pi) {
      long h = fz.pieces[pi].height;
      long qi = fp.piece_index_of_height(h);
      if (qi < 0) continue;  // the class dies modulo p
      const GrosshansPiece& tp = fp.pieces[qi];
      ZMat block = reduced(ZMat(tp.projection * reduced(to_ap * fz.pieces[pi].lift, ring)), ring);
      m.block(fp.offsets[qi], fz.offsets[pi], tp.piece.rank, fz.pieces[pi].piece.rank) = block;
    }
    out.map.matrix.push_back(std::move(m));
  }
  auto errs = out.map.algebra_map_errors();
  if (!errs.empty())
    throw std::logic_error("gr_mod_p_comparison: induced map is not an algebra map: " + errs.front());
  auto tests = default_test_set(out.map.target, bounds.max_test_degree, seed);
  out.verdict = p_power_surjectivity(out.map, p, tests, bounds);
  return out;
}

}  // namespace glab
