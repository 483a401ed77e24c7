#include "glab/grosshans.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace glab {

namespace {

void require_supported_ring(const Ring& ring, const char* who) {
  if (ring.is_z()) return;
  if (!is_prime(ring.modulus))
    throw std::invalid_argument(std::string(who) +
                                ": composite moduli are not supported for subquotients");
}

/// Canonical generating columns over the ring.
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

/// Row matrix whose kernel is exactly the span of cols (cols saturated
/// over Z, or any columns over a prime field).
ZMat vanishing_functionals(const ZMat& cols, const Ring& ring) {
  return kernel_basis(ZMat(cols.transpose()), ring).transpose();
}

using WeightCols = std::map<Weight, ZMat>;

InvariantLattice to_lattice(const GModule& m, const WeightCols& cols) {
  InvariantLattice out;
  out.basis = ZMat(m.rank, 0);
  for (const auto& [w, c] : cols) {
    out.basis = hstack(out.basis, c);
    for (index_t j = 0; j < c.cols(); ++j) out.col_weights.push_back(w);
  }
  return out;
}

}  // namespace

long GrosshansFiltration::piece_index_of_height(long height) const {
  for (size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].height == height) return static_cast<long>(i);
  return -1;
}

InvariantLattice filtration_level(const GModule& m, long i) {
  require_supported_ring(m.ring, "filtration_level");

  // start from the full weight spaces of height <= i
  WeightCols cur;
  for (const auto& [w, idx] : m.weight_spaces()) {
    if (grosshans_height(m.datum, w) > i) continue;
    ZMat cols = ZMat::Zero(m.rank, static_cast<index_t>(idx.size()));
    for (size_t t = 0; t < idx.size(); ++t) cols(idx[t], static_cast<index_t>(t)) = 1;
    cur[w] = std::move(cols);
  }

  auto all_ops = [&](auto&& visit) {
    for (long a = 0; a < m.n_alpha(); ++a)
      for (long n = 1; n < m.nilpotency[a]; ++n) {
        visit(m.raising[a][n - 1], m.datum.simple_root(a) * n);
        visit(m.lowering[a][n - 1], m.datum.simple_root(a) * (-n));
      }
  };

  for (long round = 0; round <= m.rank + 1; ++round) {
    // snapshot of the membership functionals per weight
    std::map<Weight, ZMat> functionals;
    for (const auto& [w, cols] : cur) functionals[w] = vanishing_functionals(cols, m.ring);

    WeightCols next;
    bool changed = false;
    for (const auto& [w, cols] : cur) {
      ZMat conditions(0, cols.cols());
      all_ops([&](const ZMat& op, const Weight& shift) {
        ZMat image = op * cols;
        if (is_zero(reduced(image, m.ring))) return;
        Weight target = w + shift;
        auto it = cur.find(target);
        // outside the candidate: the image must vanish outright
        ZMat cond = (it == cur.end()) ? image : ZMat(functionals.at(target) * image);
        conditions = vstack(conditions, cond);
      });
      ZMat x = conditions.rows() == 0 ? ZMat(ZMat::Identity(cols.cols(), cols.cols()))
                                      : kernel_basis(conditions, m.ring);
      ZMat refined = canonical_cols(cols * x, m.ring);
      if (refined.cols() != cols.cols()) changed = true;
      if (refined.cols() > 0) next[w] = std::move(refined);
      else changed = true;
    }
    if (!changed) return to_lattice(m, next);
    cur = std::move(next);
  }
  throw std::logic_error("filtration_level: closure failed to stabilize");
}

namespace {

/// Columns of `cur` completing `prev` to a basis of span(cur), expressed
/// in ambient coordinates, together with the quotient retraction.
struct QuotientData {
  ZMat lift;  // ambient x q
  ZMat proj;  // q x ambient, defined on span(cur)
};

QuotientData weight_block_quotient(const ZMat& cur, const ZMat& prev, index_t ambient,
                                   const std::vector<index_t>& idx, const Ring& ring) {
  // work in the coordinates of this weight space
  ZMat cur_c = select_rows(cur, idx);
  ZMat prev_c = select_rows(prev, idx);

  ZMat lift_c;  // coordinates x q
  if (ring.is_z()) {
    if (prev_c.cols() == 0) {
      lift_c = cur_c;
    } else {
      ZMat p(cur_c.cols(), prev_c.cols());
      for (index_t j = 0; j < prev_c.cols(); ++j) {
        auto x = solve(cur_c, ZVec(prev_c.col(j)), ring);
        if (!x) throw std::logic_error("quotient: previous level escapes the current one");
        p.col(j) = *x;
      }
      SnfCertificate c = smith_normal_form(p);
      for (index_t r = 0; r < c.rank(); ++r)
        if (c.factors[r] != 1) throw std::logic_error("quotient: sublattice is not pure");
      std::vector<index_t> tail;
      for (index_t j = c.rank(); j < p.rows(); ++j) tail.push_back(j);
      lift_c = cur_c * select_cols(c.left_inv, tail);
    }
  } else {
    // prime field: greedily extend prev to a basis of span(cur)
    ZMat b = prev_c;
    std::vector<index_t> chosen;
    for (index_t j = 0; j < cur_c.cols(); ++j) {
      if (b.cols() > 0 && solve(b, ZVec(cur_c.col(j)), ring)) continue;
      if (b.cols() == 0 && is_zero(reduced(cur_c.col(j), ring))) continue;
      b = hstack(b, ZMat(cur_c.col(j)));
      chosen.push_back(j);
    }
    lift_c = select_cols(cur_c, chosen);
  }

  ZMat s = hstack(prev_c, lift_c);
  QuotientData out;
  out.lift = ZMat::Zero(ambient, lift_c.cols());
  out.proj = ZMat::Zero(lift_c.cols(), ambient);
  if (lift_c.cols() == 0) return out;
  auto t = left_inverse(s, ring);
  if (!t) throw std::logic_error("quotient: retraction does not exist");
  ZMat proj_c = t->bottomRows(lift_c.cols());
  for (size_t r = 0; r < idx.size(); ++r) {
    out.lift.row(idx[r]) = lift_c.row(static_cast<index_t>(r));
    out.proj.col(idx[r]) = proj_c.col(static_cast<index_t>(r));
  }
  return out;
}

}  // namespace

std::optional<ZMat> left_inverse(const ZMat& s, const Ring& ring) {
  Solver solver(ZMat(s.transpose()), ring);
  ZMat t(s.cols(), s.rows());
  for (index_t j = 0; j < s.cols(); ++j) {
    ZVec e = ZVec::Zero(s.cols());
    e(j) = 1;
    auto col = solver.solve(e);
    if (!col) return std::nullopt;
    t.row(j) = col->transpose();
  }
  return t;
}

GrosshansFiltration graded(const GModule& m) {
  require_supported_ring(m.ring, "graded");
  GrosshansFiltration out;
  out.base = m;

  std::set<long> heights;
  for (const Weight& w : m.weights) {
    long h = grosshans_height(m.datum, w);
    if (h >= 0) heights.insert(h);
  }

  InvariantLattice prev;
  prev.basis = ZMat(m.rank, 0);
  index_t covered = 0;
  for (long h : heights) {
    InvariantLattice cur = filtration_level(m, h);
    if (cur.count() != prev.count()) out.levels.emplace_back(h, cur);
    if (cur.count() > prev.count()) {
      GrosshansPiece piece;
      piece.height = h;
      // quotient weight space by weight space
      auto spaces = m.weight_spaces();
      std::vector<Weight> piece_weights;
      ZMat lift(m.rank, 0), proj(0, m.rank);
      for (const auto& [w, idx] : spaces) {
        ZMat cur_w = cur.of_weight(w);
        if (cur_w.cols() == 0) continue;
        QuotientData q = weight_block_quotient(cur_w, prev.of_weight(w), m.rank, idx, m.ring);
        if (q.lift.cols() == 0) continue;
        lift = hstack(lift, q.lift);
        proj = vstack(proj, q.proj);
        for (index_t j = 0; j < q.lift.cols(); ++j) piece_weights.push_back(w);
      }
      // induced module structure on the subquotient
      GModule pm;
      pm.datum = m.datum;
      pm.ring = m.ring;
      pm.rank = lift.cols();
      pm.weights = piece_weights;
      pm.raising.resize(m.n_alpha());
      pm.lowering.resize(m.n_alpha());
      pm.nilpotency = m.nilpotency;
      for (long a = 0; a < m.n_alpha(); ++a) {
        pm.raising[a].clear();
        pm.lowering[a].clear();
        for (long n = 1; n < m.nilpotency[a]; ++n) {
          pm.raising[a].push_back(reduced(proj * m.raising[a][n - 1] * lift, m.ring));
          pm.lowering[a].push_back(reduced(proj * m.lowering[a][n - 1] * lift, m.ring));
        }
      }
      piece.piece = std::move(pm);
      piece.lift = std::move(lift);
      piece.projection = std::move(proj);
      out.pieces.push_back(std::move(piece));
      covered += out.pieces.back().piece.rank;
    }
    prev = std::move(cur);
  }
  if (covered != prev.count())
    throw std::logic_error("graded: filtration does not exhaust the module");

  out.total = zero_module(m.datum, m.ring);
  for (const auto& p : out.pieces) {
    out.offsets.push_back(out.total.rank);
    out.total = out.total.rank == 0 ? p.piece : direct_sum(out.total, p.piece);
  }
  return out;
}

HullModule hull(const GModule& m) {
  InvariantLattice uplus = invariants(m, SubgroupTag::UPlus);
  HullModule out;
  std::set<Weight> lambdas(uplus.col_weights.begin(), uplus.col_weights.end());
  for (const Weight& lambda : lambdas) {
    if (!is_dominant(m.datum, lambda))
      throw std::logic_error("hull: non-dominant weight among unipotent invariants");
    HullSummand s;
    s.lambda = lambda;
    s.height = grosshans_height(m.datum, lambda);
    s.nabla = costandard(lambda, m.ring);
    s.w_basis = uplus.of_weight(lambda);
    s.block = tensor(s.nabla.underlying, trivial_rep(m.datum, m.ring, s.w_basis.cols()));
    out.summands.push_back(std::move(s));
  }
  std::sort(out.summands.begin(), out.summands.end(),
            [](const HullSummand& a, const HullSummand& b) { return a.lambda < b.lambda; });
  out.total = zero_module(m.datum, m.ring);
  for (const auto& s : out.summands) {
    out.offsets.push_back(out.total.rank);
    out.total = out.total.rank == 0 ? s.block : direct_sum(out.total, s.block);
  }
  return out;
}

HullEmbedding hull_embedding(const GModule& m) { return hull_embedding(m, graded(m)); }

HullEmbedding hull_embedding(const GModule& m, GrosshansFiltration gr) {
  HullEmbedding out;
  out.gr = std::move(gr);
  out.h = hull(m);

  ZMat matrix = ZMat::Zero(out.h.total.rank, out.gr.total.rank);
  for (size_t si = 0; si < out.h.summands.size(); ++si) {
    const HullSummand& s = out.h.summands[si];
    long pi = out.gr.piece_index_of_height(s.height);
    if (pi < 0) throw std::logic_error("hull_embedding: hull summand without matching piece");
    const GrosshansPiece& piece = out.gr.pieces[pi];
    const index_t w = s.w_basis.cols();

    // canonical identification of the lambda weight space of the piece
    // with W_lambda: u_j = projection of the j-th invariant
    ZMat u = piece.projection * s.w_basis;
    auto c = left_inverse(u, m.ring);
    if (!c) throw std::logic_error("hull_embedding: weight space identification failed");
    // kill coordinates outside the lambda weight space
    for (index_t col = 0; col < c->cols(); ++col)
      if (!(piece.piece.weights[col] == s.lambda))
        for (index_t row = 0; row < c->rows(); ++row) (*c)(row, col) = 0;

    // solve for the unique equivariant map with that top-line behavior
    auto homs = hom_g(piece.piece, s.block);
    // rows of the block at the lambda line: indices top * w + j
    std::vector<index_t> top_rows;
    for (index_t j = 0; j < w; ++j)
      top_rows.push_back(s.nabla.highest_vector_index * w + j);
    ZMat system(w * piece.piece.rank, static_cast<index_t>(homs.size()));
    ZVec rhs(w * piece.piece.rank);
    for (index_t col = 0; col < piece.piece.rank; ++col)
      for (index_t j = 0; j < w; ++j) rhs(col * w + j) = (*c)(j, col);
    for (size_t t = 0; t < homs.size(); ++t)
      for (index_t col = 0; col < piece.piece.rank; ++col)
        for (index_t j = 0; j < w; ++j)
          system(col * w + j, static_cast<index_t>(t)) = homs[t](top_rows[j], col);
    auto coeff = solve(system, rhs, m.ring);
    if (!coeff) throw std::logic_error("hull_embedding: no equivariant map matches the top line");
    if (kernel_basis(system, m.ring).cols() != 0)
      throw std::logic_error("hull_embedding: equivariant map is not unique");
    ZMat phi = ZMat::Zero(s.block.rank, piece.piece.rank);
    for (size_t t = 0; t < homs.size(); ++t) phi += (*coeff)(static_cast<index_t>(t)) * homs[t];
    matrix.block(out.h.offsets[si], out.gr.offsets[pi], s.block.rank, piece.piece.rank) =
        reduced(phi, m.ring);
  }
  out.map = GMap{out.gr.total, out.h.total, std::move(matrix)};
  return out;
}

GoodFiltrationVerdict has_good_filtration(const GModule& m) {
  HullEmbedding e = hull_embedding(m);
  GoodFiltrationVerdict v;
  if (m.ring.is_z()) {
    v.cokernel_factors = cokernel_structure(e.map.matrix);
    v.good = true;
    for (const Int& f : v.cokernel_factors)
      if (f != 1) v.good = false;
  } else {
    auto s = module_structure(e.map.matrix, m.ring);
    v.good = s.n_generators() == e.h.total.rank;
    if (!v.good) v.cokernel_factors.push_back(0);
  }
  return v;
}

}  // namespace glab
