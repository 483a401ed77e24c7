#include "glab/induction.hpp"

#include <cassert>
#include <sstream>

namespace glab {

namespace {

long a1_value(const Weight& w) {
  if (w.rank() != 1) throw std::invalid_argument("induction: A1 weights only");
  return w.coords[0];
}

}  // namespace

CostandardModule costandard(const Weight& lambda, const Ring& ring) {
  long m = a1_value(lambda);
  CostandardModule c;
  c.highest_weight = lambda;
  c.highest_vector_index = 0;
  const RootDatum a1 = root_datum_a(1);
  if (m < 0) {
    c.underlying = zero_module(a1, ring);
    return c;
  }
  c.underlying = sym_power(standard_rep(a1, ring), m);
  return c;
}

StandardModule standard_module(const Weight& lambda, const Ring& ring) {
  long m = a1_value(lambda);
  if (m < 0) throw std::invalid_argument("standard_module: weight must be dominant");

  // Build over Z, then reduce; base change is exact on these free modules.
  CostandardModule nabla_z = costandard(lambda, ring_z());
  GModule delta_z = dual(nabla_z.underlying);
  auto maps = hom_g(delta_z, nabla_z.underlying);
  if (maps.size() != 1)
    throw std::logic_error("standard_module: equivariant map lattice is not a line");
  ZMat emb = maps[0];
  // top line of the dual module is the dual of the lowest monomial y^m
  index_t top_src = m;
  index_t top_tgt = nabla_z.highest_vector_index;
  if (abs(emb(top_tgt, top_src)) != 1)
    throw std::logic_error("standard_module: embedding is not primitive on the top line");
  if (emb(top_tgt, top_src) < 0) emb = -emb;

  StandardModule s;
  s.highest_weight = lambda;
  if (ring.is_z()) {
    s.underlying = delta_z;
    s.embedding = GMap{delta_z, nabla_z.underlying, emb};
  } else {
    GModule delta = base_change(delta_z, ring.modulus);
    CostandardModule nabla = costandard(lambda, ring);
    s.underlying = delta;
    s.embedding = GMap{delta, nabla.underlying, reduced(emb, ring)};
  }
  return s;
}

TMap evaluation_map(const Weight& lambda, const Ring& ring) {
  long m = a1_value(lambda);
  if (m < 0) throw std::invalid_argument("evaluation_map: weight must be dominant");
  CostandardModule c = costandard(lambda, ring);
  TMap t;
  t.weight = lambda;
  t.matrix = ZMat::Zero(1, c.rank());
  t.matrix(0, c.highest_vector_index) = 1;
  return t;
}

GModule base_change(const GModule& m, const Int& n) {
  if (n < 2) throw std::invalid_argument("base_change: modulus must be >= 2");
  if (!m.ring.is_z()) throw std::invalid_argument("base_change: source must live over Z");
  GModule r = m;
  r.ring = ring_zn(n);
  for (auto& per_alpha : r.raising)
    for (ZMat& op : per_alpha) op = reduced(op, r.ring);
  for (auto& per_alpha : r.lowering)
    for (ZMat& op : per_alpha) op = reduced(op, r.ring);
  return r;
}

UniversalWeylMap universal_weyl_map(const Weight& lambda, const GModule& m) {
  long lv = a1_value(lambda);
  if (lv < 0) throw std::invalid_argument("universal_weyl_map: weight must be dominant");
  bool occurs = false;
  for (const Weight& w : m.weights) {
    if (w == lambda) occurs = true;
    if (w.coords[0] > lv && (w.coords[0] - lv) % 2 == 0)
      throw std::invalid_argument("universal_weyl_map: lambda is not maximal in M");
  }
  if (!occurs) throw std::invalid_argument("universal_weyl_map: lambda is not a weight of M");

  StandardModule delta = standard_module(lambda, m.ring);
  InvariantLattice uplus = invariants(m, SubgroupTag::UPlus);
  ZMat w = uplus.of_weight(lambda);
  const index_t mult = w.cols();

  // evaluation of each equivariant map at the top vector of Delta
  auto homs = hom_g(delta.underlying, m);
  index_t top = static_cast<index_t>(lv);  // dual-basis index of the top line
  ZMat evals(m.rank, static_cast<index_t>(homs.size()));
  for (size_t t = 0; t < homs.size(); ++t) evals.col(t) = homs[t].col(top);
  if (kernel_basis(evals, m.ring).cols() != 0)
    throw std::logic_error("universal_weyl_map: evaluation at the top line is not injective");

  UniversalWeylMap out;
  out.multiplicity = mult;
  GModule source = tensor(delta.underlying, trivial_rep(m.datum, m.ring, mult));
  ZMat matrix = ZMat::Zero(m.rank, source.rank);
  for (index_t j = 0; j < mult; ++j) {
    auto coeff = solve(evals, ZVec(w.col(j)), m.ring);
    if (!coeff) throw std::logic_error("universal_weyl_map: top vector misses the Hom image");
    ZMat phi = ZMat::Zero(m.rank, delta.underlying.rank);
    for (size_t t = 0; t < homs.size(); ++t) phi += (*coeff)(t) * homs[t];
    for (index_t i = 0; i < delta.underlying.rank; ++i) matrix.col(i * mult + j) = phi.col(i);
  }
  matrix = reduced(matrix, m.ring);
  out.map = GMap{source, m, matrix};

  // kernel has lower weights: no kernel vector meets the lambda block
  ZMat k = kernel_basis(matrix, m.ring);
  out.kernel_has_lower_weights = true;
  for (index_t j = 0; j < k.cols(); ++j)
    for (index_t i = 0; i < source.rank; ++i)
      if (k(i, j) != 0 && source.weights[i] == lambda) out.kernel_has_lower_weights = false;

  // lambda not a weight of the cokernel: the lambda block is surjective
  std::vector<index_t> rows, cols;
  for (index_t i = 0; i < m.rank; ++i)
    if (m.weights[i] == lambda) rows.push_back(i);
  for (index_t i = 0; i < source.rank; ++i)
    if (source.weights[i] == lambda) cols.push_back(i);
  ZMat block = select_rows(select_cols(matrix, cols), rows);
  out.lambda_not_in_cokernel = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    ZVec unit = ZVec::Zero(static_cast<index_t>(rows.size()));
    unit(static_cast<index_t>(i)) = 1;
    if (!solve(block, unit, m.ring)) out.lambda_not_in_cokernel = false;
  }
  return out;
}

std::pair<ModuleStructure, ModuleStructure> hom_group_comparison(const Weight& lambda,
                                                                 const GModule& m) {
  if (a1_value(lambda) < 0)
    throw std::invalid_argument("hom_group_comparison: weight must be dominant");
  StandardModule delta = standard_module(lambda, m.ring);
  auto homs = hom_g(delta.underlying, m);
  ZMat flat(m.rank * delta.underlying.rank, static_cast<index_t>(homs.size()));
  for (size_t t = 0; t < homs.size(); ++t) {
    const ZMat& a = homs[t];
    for (index_t j = 0; j < a.cols(); ++j)
      for (index_t i = 0; i < a.rows(); ++i) flat(j * a.rows() + i, static_cast<index_t>(t)) = a(i, j);
  }
  ModuleStructure lhs = module_structure(flat, m.ring);
  ModuleStructure rhs = module_structure(invariants(m, SubgroupTag::UPlus).of_weight(lambda), m.ring);
  return {lhs, rhs};
}

GMap cartan_multiply(const CostandardModule& a, const CostandardModule& b) {
  long am = a1_value(a.highest_weight), bm = a1_value(b.highest_weight);
  if (am < 0 || bm < 0) throw std::invalid_argument("cartan_multiply: weights must be dominant");
  if (!(a.underlying.ring == b.underlying.ring))
    throw std::invalid_argument("cartan_multiply: ring mismatch");
  CostandardModule c = costandard(weight1(am + bm), a.underlying.ring);
  GMap f;
  f.source = tensor(a.underlying, b.underlying);
  f.target = c.underlying;
  f.matrix = ZMat::Zero(c.rank(), f.source.rank);
  for (long i = 0; i <= am; ++i)
    for (long j = 0; j <= bm; ++j) f.matrix(i + j, i * (bm + 1) + j) = 1;
  return f;
}

}  // namespace glab
