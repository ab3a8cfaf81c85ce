// Components of tensor powers of the (s,1)-Veronese bimodule over the
// s-Veronese ring, presented by degree-0 generators. A Veronese bimodule Y is
// generated in degree 0 as a left module (multiplication covering any total
// degree is surjective), so Y = (A (x) Y_0)/N with N_j = ker(A_j (x) Y_0 ->
// Y_j) computable per degree, and right-exactness of the tensor gives
//
//   (X (x)_A Y)_i = coker( sum_j X_{i-j} (x) N_j  ->  X_i (x) Y_0 ).
//
// This stays small: the generator space is X_i (x) Y_0 rather than the full
// composition sum. Right action tables on the quotients are built by lifting
// Y_j back through A_j (x) Y_0 and absorbing into X.
#pragma once

#include "homkoszul/algebra.hpp"

namespace homkoszul {

// A quotient of a generator space with its canonical (non-pivot) basis and
// the class vector of every generator.
template <class F>
struct QuotPres {
  std::uint64_t gen_count = 0;
  std::vector<SparseVec<F>> gen_class;    // per generator, over the basis
  std::vector<std::uint64_t> basis_gen;   // basis index -> generator index
  BlockInfo blocks;                       // of the basis
  std::uint64_t dim() const { return blocks.dim(); }
};

template <class F>
QuotPres<F> quotient_of(const F& field, const BlockInfo& gen_blocks,
                        const std::vector<SparseVec<F>>& rel_rows, const Budget& budget) {
  Eliminator<F> e(field, gen_blocks.dim(), budget);
  for (const auto& r : rel_rows) e.add_row(r);
  e.finalize_rref();
  QuotPres<F> q;
  q.gen_count = gen_blocks.dim();
  q.gen_class.resize(std::size_t(q.gen_count));
  std::vector<std::int64_t> to_basis(std::size_t(q.gen_count), -1);
  std::size_t next_pivot = 0;
  for (std::uint64_t c = 0; c < q.gen_count; ++c) {
    if (next_pivot < e.pivots().size() && e.pivots()[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    to_basis[std::size_t(c)] = std::int64_t(q.basis_gen.size());
    q.basis_gen.push_back(c);
    q.blocks.src.push_back(gen_blocks.src[std::size_t(c)]);
    q.blocks.tgt.push_back(gen_blocks.tgt[std::size_t(c)]);
  }
  for (std::uint64_t c = 0; c < q.gen_count; ++c)
    if (to_basis[std::size_t(c)] >= 0)
      q.gen_class[std::size_t(c)].push(std::uint64_t(to_basis[std::size_t(c)]), field.one());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const auto& row = e.rows()[r];
    auto& cls = q.gen_class[std::size_t(e.pivots()[r])];
    for (std::size_t t = 1; t < row.nnz(); ++t) {
      std::int64_t b = to_basis[std::size_t(row.idx[t])];
      require(b >= 0, ErrorKind::InputError, "non-reduced RREF row");
      cls.push(std::uint64_t(b), field.neg(row.val[t]));
    }
  }
  return q;
}

// Projects a generator-coordinate vector to quotient coordinates.
template <class F>
SparseVec<F> project_to_quotient(const F& field, const QuotPres<F>& q, const SparseVec<F>& gen_vec) {
  std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
  for (std::size_t t = 0; t < gen_vec.nnz(); ++t) {
    const auto& cls = q.gen_class[std::size_t(gen_vec.idx[t])];
    for (std::size_t u = 0; u < cls.nnz(); ++u)
      entries.emplace_back(cls.idx[u], field.mul(gen_vec.val[t], cls.val[u]));
  }
  return make_sparse(field, std::move(entries));
}

// Tensor powers of M = Lambda^{(s,1)} over A = Lambda^{(s)} for a fixed view.
template <class F>
class ModTensorTower {
 public:
  explicit ModTensorTower(const AlgebraView<F>& view) : view_(view), field_(view.field()) {}

  std::uint32_t s() const { return view_.s(); }

  // dim M_i = dim Lambda_{s i + 1}, dim A_j = dim Lambda_{s j}
  std::int64_t m_dim(std::uint32_t i) const { return view_.dim(s() * i + 1); }
  std::int64_t a_dim(std::uint32_t j) const { return view_.dim(s() * j); }

  const BlockInfo& m_blocks(std::uint32_t i) const { return view_.degree(s() * i + 1).blocks; }
  const BlockInfo& a_blocks(std::uint32_t j) const { return view_.degree(s() * j).blocks; }

  // Component of M^{(x)_A k} in degree i, as a quotient presentation with
  // generators (basis of previous level at degree i) x M_0.
  const QuotPres<F>& component(std::uint32_t k, std::uint32_t i) {
    require(k >= 1, ErrorKind::InputError, "tensor power needs k >= 1");
    auto key = std::make_pair(k, i);
    auto it = comps_.find(key);
    if (it != comps_.end()) return it->second;
    QuotPres<F> q;
    if (k == 1) {
      const BlockInfo& mb = m_blocks(i);
      q.gen_count = mb.dim();
      q.blocks = mb;
      q.basis_gen.resize(mb.dim());
      q.gen_class.resize(mb.dim());
      for (std::uint64_t c = 0; c < q.gen_count; ++c) {
        q.basis_gen[std::size_t(c)] = c;
        q.gen_class[std::size_t(c)].push(c, field_.one());
      }
    } else {
      const QuotPres<F>& x = component(k - 1, i);
      PairBasis gens = make_pair_basis(x.blocks, m_blocks(0));
      BlockInfo gb;
      for (auto [xi, y0] : gens.pairs) {
        gb.src.push_back(x.blocks.src[xi]);
        gb.tgt.push_back(m_blocks(0).tgt[y0]);
      }
      std::vector<SparseVec<F>> rels;
      for (std::uint32_t j = 1; j <= i; ++j) {
        const Subspace<F>& nj = action_kernel(j);
        if (nj.dim() == 0) continue;
        const auto& ra = right_action(k - 1, i - j, j);
        const PairBasis& np = a_m0_pairs(j);
        for (std::uint32_t xb = 0; xb < component(k - 1, i - j).dim(); ++xb) {
          for (const auto& nrow : nj.rows) {
            std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
            for (std::size_t t = 0; t < nrow.nnz(); ++t) {
              auto [a_idx, y0] = np.pairs[std::size_t(nrow.idx[t])];
              // x * a, a class over component(k-1, i); zero on block clash
              std::int64_t slot = ra.first.find(xb, a_idx);
              if (slot < 0) continue;
              const SparseVec<F>& prod = ra.second[std::size_t(slot)];
              for (std::size_t u = 0; u < prod.nnz(); ++u)
                entries.emplace_back(gens.index_of(std::uint32_t(prod.idx[u]), y0),
                                     field_.mul(nrow.val[t], prod.val[u]));
            }
            auto row = make_sparse(field_, std::move(entries));
            if (!row.empty()) rels.push_back(std::move(row));
          }
        }
      }
      q = quotient_of(field_, gb, rels, view_.budget());
      comp_gens_.emplace(key, std::move(gens));
    }
    return comps_.emplace(key, std::move(q)).first->second;
  }

  BlockDims component_block_dims(std::uint32_t k, std::uint32_t i) {
    const QuotPres<F>& q = component(k, i);
    BlockDims out = zero_block_dims(view_.quiver().vertex_count);
    for (std::size_t t = 0; t < q.blocks.dim(); ++t) ++out[q.blocks.src[t]][q.blocks.tgt[t]];
    return out;
  }

  // N_j = ker(A_j (x) M_0 -> M_j) in the valid-pair coordinates.
  const Subspace<F>& action_kernel(std::uint32_t j) {
    auto it = kernels_.find(j);
    if (it != kernels_.end()) return it->second;
    const auto& [pb, rows] = mult_table(s() * j, 1);
    LinearMap<F> lm{pb.size(), std::uint64_t(m_dim(j)), rows};
    auto ker = map_kernel(field_, lm, view_.budget());
    return kernels_.emplace(j, std::move(ker)).first->second;
  }

  // Canonical preimage of the M_j basis element under A_j (x) M_0 -> M_j.
  const SparseVec<F>& lift_m(std::uint32_t j, std::uint32_t m_idx) {
    auto key = std::make_pair(j, m_idx);
    auto it = lifts_.find(key);
    if (it != lifts_.end()) return it->second;
    const auto& [pb, rows] = mult_table(s() * j, 1);
    SparseVec<F> target;
    target.push(m_idx, field_.one());
    auto x = solve_row(field_, rows, std::uint64_t(m_dim(j)), target, view_.budget());
    return lifts_.emplace(key, std::move(x)).first->second;
  }

  // Right action of A_j on level-k components: for each (basis element of
  // component(k,i), A_j basis element) the class over component(k, i+j).
  // Stored as rows indexed by the valid pair basis.
  const std::pair<PairBasis, std::vector<SparseVec<F>>>& right_action(std::uint32_t k,
                                                                      std::uint32_t i,
                                                                      std::uint32_t j) {
    auto key = std::make_tuple(k, i, j);
    auto it = ractions_.find(key);
    if (it != ractions_.end()) return it->second;
    const QuotPres<F>& xi = component(k, i);
    PairBasis pb = make_pair_basis(xi.blocks, a_blocks(j));
    std::vector<SparseVec<F>> rows(std::size_t(pb.size()));
    if (k == 1) {
      // plain multiplication Lambda_{s i + 1} x Lambda_{s j}
      const auto& [mp, mrows] = mult_table(s() * i + 1, s() * j);
      for (std::size_t t = 0; t < pb.pairs.size(); ++t)
        rows[t] = mrows[std::size_t(mp.index_of(pb.pairs[t].first, pb.pairs[t].second))];
    } else {
      const QuotPres<F>& xip = component(k, i + j);
      const PairBasis& gens_ij = comp_gens_.at(std::make_pair(k, i + j));
      const PairBasis& gens_i = comp_gens_.at(std::make_pair(k, i));
      for (std::size_t t = 0; t < pb.pairs.size(); ++t) {
        auto [qb, a_idx] = pb.pairs[t];
        auto [xprev, y0] = gens_i.pairs[std::size_t(xi.basis_gen[qb])];
        // (x (x) y0) * a: multiply y0 * a in M_j, lift back through A_j (x) M_0
        const auto& [yp, yrows] = mult_table(1, s() * j);
        const SparseVec<F>& ya = yrows[std::size_t(yp.index_of(y0, a_idx))];
        std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
        for (std::size_t u = 0; u < ya.nnz(); ++u) {
          const SparseVec<F>& lift = lift_m(j, std::uint32_t(ya.idx[u]));
          const PairBasis& np = a_m0_pairs(j);
          for (std::size_t v = 0; v < lift.nnz(); ++v) {
            auto [ap, y0p] = np.pairs[std::size_t(lift.idx[v])];
            const auto& ra_prev = right_action(k - 1, i, j);
            std::int64_t slot = ra_prev.first.find(xprev, ap);
            if (slot < 0) continue;
            const SparseVec<F>& prod = ra_prev.second[std::size_t(slot)];
            typename F::Elem coeff = field_.mul(ya.val[u], lift.val[v]);
            for (std::size_t w = 0; w < prod.nnz(); ++w) {
              std::uint64_t gen = gens_ij.index_of(std::uint32_t(prod.idx[w]), y0p);
              const SparseVec<F>& cls = xip.gen_class[std::size_t(gen)];
              for (std::size_t z = 0; z < cls.nnz(); ++z)
                entries.emplace_back(cls.idx[z],
                                     field_.mul(field_.mul(coeff, prod.val[w]), cls.val[z]));
            }
          }
        }
        rows[t] = make_sparse(field_, std::move(entries));
      }
    }
    return ractions_.emplace(key, std::make_pair(std::move(pb), std::move(rows))).first->second;
  }

  // Multiplication tables of the underlying view, cached.
  const std::pair<PairBasis, std::vector<SparseVec<F>>>& mult_table(std::uint32_t p,
                                                                    std::uint32_t q) {
    auto key = std::make_pair(p, q);
    auto it = mults_.find(key);
    if (it != mults_.end()) return it->second;
    return mults_.emplace(key, view_.mult_pairs(p, q)).first->second;
  }

  const PairBasis& a_m0_pairs(std::uint32_t j) {
    return mult_table(s() * j, 1).first;
  }

  const AlgebraView<F>& view() const { return view_; }

 private:

  const AlgebraView<F>& view_;
  const F& field_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, QuotPres<F>> comps_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, PairBasis> comp_gens_;
  std::map<std::uint32_t, Subspace<F>> kernels_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, SparseVec<F>> lifts_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>,
           std::pair<PairBasis, std::vector<SparseVec<F>>>>
      ractions_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<PairBasis, std::vector<SparseVec<F>>>>
      mults_;
};

}  // namespace homkoszul
