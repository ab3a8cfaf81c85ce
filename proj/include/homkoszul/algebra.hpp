// Degree components of Lambda = T(U)/<R> by pure linear algebra, one degree
// at a time. The degree-n component is the cokernel of the relation rows
// inside Lambda_{n-1} (x) U; its canonical basis is the set of non-pivot
// candidate words, which coincides with the non-pivot words of the reduced
// row echelon form of I_n over the full path basis (the staircase splits as
// pivots(I_{n-1}) x arrows plus the pivots of the new rows). Normal words
// form a tree: each extends a normal word of the previous degree by one
// arrow, so every prefix of a normal word is normal.
//
// Nothing of exponential size is materialized unless an operation
// specifically asks for an ambient subspace (ideal/corelation components,
// projections); those go through the budget guards.
#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>

#include "homkoszul/presentation.hpp"

namespace homkoszul {

// Valid basis pairs of a tensor product X (x)_O Y, filtered by matching
// endpoint blocks. Pair order is row-major (left index major).
struct PairBasis {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  std::uint64_t size() const { return pairs.size(); }
  std::uint64_t index_of(std::uint32_t i, std::uint32_t j) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(i, j));
    require(it != pairs.end() && *it == std::make_pair(i, j), ErrorKind::InputError,
            "pair outside the tensor basis");
    return std::uint64_t(it - pairs.begin());
  }
  // -1 when the endpoints do not match (the product is zero over O).
  std::int64_t find(std::uint32_t i, std::uint32_t j) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(i, j));
    if (it == pairs.end() || *it != std::make_pair(i, j)) return -1;
    return std::int64_t(it - pairs.begin());
  }
};

// Endpoint blocks of the chosen basis of a graded component.
struct BlockInfo {
  std::vector<std::uint32_t> src, tgt;
  std::size_t dim() const { return src.size(); }
};

inline PairBasis make_pair_basis(const BlockInfo& x, const BlockInfo& y) {
  PairBasis pb;
  for (std::uint32_t i = 0; i < x.dim(); ++i)
    for (std::uint32_t j = 0; j < y.dim(); ++j)
      if (x.tgt[i] == y.src[j]) pb.pairs.emplace_back(i, j);
  return pb;
}

// D x D nonnegative block dimension matrix; entry (i, j) = dim e_i W e_j.
using BlockDims = std::vector<std::vector<std::int64_t>>;

inline BlockDims zero_block_dims(std::uint32_t d) {
  return BlockDims(d, std::vector<std::int64_t>(d, 0));
}

template <class F>
class AlgebraView {
 public:
  struct Degree {
    // Normal word i extends normal word parent[i] of the previous degree by
    // arrow letter[i]; at degree 0, parent is the vertex index.
    std::vector<std::uint32_t> parent, letter;
    BlockInfo blocks;
    // Candidate (v, a) layout of Lambda_{n-1} (x) U and the class vector of
    // every candidate in the normal basis of this degree. Degree 1 is laid
    // out by arrow index (the parent idempotent is implied by the source),
    // which keeps every basis in degree-lex word order.
    std::vector<std::uint64_t> cand_offset;  // per v; size dim_{n-1}+1
    std::vector<SparseVec<F>> red;           // per candidate
    std::uint64_t cand_count = 0;
    bool arrow_major = false;                // true exactly at degree 1
  };

  AlgebraView(const F& field, RelPresentation<F> pres, Budget budget = Budget::from_env())
      : field_(field), pres_(std::move(pres)), budget_(budget) {
    pres_.validate();
    if constexpr (std::is_same_v<F, RationalField>) budget_ = budget_.scaled_for_rationals();
    arrows_from_.assign(pres_.quiver.vertex_count, {});
    for (std::uint32_t a = 0; a < pres_.quiver.arrows.size(); ++a)
      arrows_from_[pres_.quiver.arrows[a].src].push_back(a);
    state_ = std::make_shared<State>();
  }

  const F& field() const { return field_; }
  const RelPresentation<F>& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  std::uint32_t s() const { return pres_.s; }
  const Budget& budget() const { return budget_; }

  std::int64_t dim(std::uint32_t n) const { return std::int64_t(degree(n).blocks.dim()); }

  BlockDims block_dims(std::uint32_t n) const {
    const Degree& d = degree(n);
    BlockDims out = zero_block_dims(quiver().vertex_count);
    for (std::size_t i = 0; i < d.blocks.dim(); ++i) ++out[d.blocks.src[i]][d.blocks.tgt[i]];
    return out;
  }

  // Builds (and caches) all degrees up to n; the reference stays valid for
  // the lifetime of the view (deque storage).
  const Degree& degree(std::uint32_t n) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    while (state_->degrees.size() <= n) build_next_degree_locked();
    return state_->degrees[n];
  }

  // The actual word of a normal basis element, by walking parents.
  Word word_of(std::uint32_t n, std::uint32_t i) const {
    Word w(n);
    std::uint32_t cur = i;
    for (std::uint32_t k = n; k > 0; --k) {
      const Degree& d = degree(k);
      w[k - 1] = d.letter[cur];
      cur = d.parent[cur];
    }
    return w;
  }

  // Class of (class vector over NW_k) * arrow inside NW_{k+1}.
  SparseVec<F> red_step(std::uint32_t k, const SparseVec<F>& cls, std::uint32_t arrow) const {
    const Degree& prev = degree(k);
    const Degree& next = degree(k + 1);
    return red_step_on(prev, next, cls, arrow);
  }

  // Normal form of an arbitrary word (class vector over NW_{|w|}).
  SparseVec<F> nf_word(const Word& w) const {
    if (!quiver().is_path(w)) return {};
    SparseVec<F> cls;
    cls.push(quiver().path_source(w, 0), field_.one());
    for (std::size_t k = 0; k < w.size(); ++k) cls = red_step(std::uint32_t(k), cls, w[k]);
    return cls;
  }

  // Left multiplication by an arrow: rows over NW_k -> classes in NW_{k+1};
  // cached per (arrow, k).
  const std::vector<SparseVec<F>>& lmult(std::uint32_t arrow, std::uint32_t k) const {
    degree(k + 1);  // make sure degrees exist before taking the lmult lock
    std::lock_guard<std::mutex> lock(state_->lmult_mutex);
    for (std::uint32_t j = 0; j <= k; ++j) {
      auto key = std::make_pair(arrow, j);
      if (state_->lmult.count(key)) continue;
      std::vector<SparseVec<F>> rows(degree(j).blocks.dim());
      if (j == 0) {
        const Degree& d1 = degree(1);
        std::uint32_t v = quiver().arrows[arrow].tgt;
        if (v < rows.size())
          for (std::uint32_t t = 0; t < d1.blocks.dim(); ++t)
            if (d1.letter[t] == arrow) rows[v].push(t, field_.one());
      } else {
        const auto& prev_rows = state_->lmult.at(std::make_pair(arrow, j - 1));
        const Degree& dj = degree(j);
        for (std::uint32_t i = 0; i < dj.blocks.dim(); ++i)
          rows[i] = red_step(j, prev_rows[dj.parent[i]], dj.letter[i]);
      }
      state_->lmult.emplace(key, std::move(rows));
    }
    return state_->lmult.at(std::make_pair(arrow, k));
  }

  // Class of prefix * cls where cls lives over NW_k.
  SparseVec<F> lmult_word(const Word& prefix, std::uint32_t k, const SparseVec<F>& cls) const {
    SparseVec<F> cur = cls;
    std::uint32_t deg = k;
    for (std::size_t i = prefix.size(); i-- > 0;) {
      const auto& rows = lmult(prefix[i], deg);
      std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
      for (std::size_t t = 0; t < cur.nnz(); ++t) {
        const auto& row = rows[std::size_t(cur.idx[t])];
        for (std::size_t u = 0; u < row.nnz(); ++u)
          entries.emplace_back(row.idx[u], field_.mul(cur.val[t], row.val[u]));
      }
      cur = make_sparse(field_, std::move(entries));
      ++deg;
    }
    return cur;
  }

  // Multiplication matrix Lambda_p (x) Lambda_q -> Lambda_{p+q} on the valid
  // pair basis. Row order follows the returned pair basis.
  std::pair<PairBasis, std::vector<SparseVec<F>>> mult_pairs(std::uint32_t p,
                                                             std::uint32_t q) const {
    const Degree& dp = degree(p);
    const Degree& dq = degree(q);
    degree(p + q);
    PairBasis pb = make_pair_basis(dp.blocks, dq.blocks);
    std::vector<SparseVec<F>> rows(std::size_t(pb.size()));
    for (std::uint32_t i = 0; i < dp.blocks.dim(); ++i) {
      // classes of i * (every normal word prefix), reusing the word tree
      std::vector<std::vector<SparseVec<F>>> level(q + 1);
      level[0].resize(degree(0).blocks.dim());
      level[0][dp.blocks.tgt[i]].push(i, field_.one());
      for (std::uint32_t k = 1; k <= q; ++k) {
        const Degree& dk = degree(k);
        level[k].resize(dk.blocks.dim());
        for (std::uint32_t j = 0; j < dk.blocks.dim(); ++j) {
          const SparseVec<F>& base = level[k - 1][dk.parent[j]];
          if (!base.empty()) level[k][j] = red_step(p + k - 1, base, dk.letter[j]);
        }
      }
      for (std::uint32_t j = 0; j < dq.blocks.dim(); ++j)
        if (dp.blocks.tgt[i] == dq.blocks.src[j])
          rows[std::size_t(pb.index_of(i, j))] = std::move(level[q][j]);
    }
    return {std::move(pb), std::move(rows)};
  }

  // I_n as a canonical subspace of the degree-n path ambient (guarded).
  Subspace<F> ideal_component(std::uint32_t n) const {
    PathIndexer ix(quiver(), n);
    budget_.check_ambient(ix.count());
    if (n < s()) return zero_subspace<F>(ix.count());
    PathIndexer six(quiver(), s());
    std::vector<SparseVec<F>> rows;
    for (std::uint32_t i = 0; i + s() <= n; ++i) {
      std::uint32_t j = n - s() - i;
      PathIndexer lix(quiver(), i), rix(quiver(), j);
      for (const auto& rel : pres_.relations.rows) {
        auto rel_block = six.block_of(rel.idx.front());
        for (std::uint64_t lr = 0; lr < lix.count(); ++lr) {
          Word u = lix.unrank(lr);
          if (quiver().path_target(u, std::uint32_t(lr)) != rel_block.first) continue;
          for (std::uint64_t rr = 0; rr < rix.count(); ++rr) {
            Word w = rix.unrank(rr);
            if (quiver().path_source(w, std::uint32_t(rr)) != rel_block.second) continue;
            budget_.check_cells(rows.size() + 1, ix.count());
            std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
            for (std::size_t t = 0; t < rel.nnz(); ++t) {
              Word full = u;
              Word mid = six.unrank(rel.idx[t]);
              full.insert(full.end(), mid.begin(), mid.end());
              full.insert(full.end(), w.begin(), w.end());
              entries.emplace_back(ix.rank(full), rel.val[t]);
            }
            rows.push_back(make_sparse(field_, std::move(entries)));
          }
        }
      }
    }
    return row_space(field_, ix.count(), rows, budget_);
  }

  // R_n, computed iteratively via R_n = (R_{n-1} (x) U) meet (U (x) R_{n-1})
  // for n > s (the two sides together run over every interposition); cached.
  const Subspace<F>& corelation_component(std::uint32_t n) const {
    std::lock_guard<std::mutex> lock(state_->corel_mutex);
    for (std::uint32_t k = n < s() ? n : s(); k <= n; ++k) {
      if (state_->corelations.count(k)) continue;
      Subspace<F> value;
      PathIndexer ix(quiver(), k);
      budget_.check_ambient(ix.count());
      if (k < s()) {
        value = full_subspace(field_, ix.count());
      } else if (k == s()) {
        value = pres_.relations;
      } else {
        const Subspace<F>& prev = state_->corelations.at(k - 1);
        auto right = tensor_with_arrows(prev, k - 1, /*on_right=*/true);
        auto left = tensor_with_arrows(prev, k - 1, /*on_right=*/false);
        value = subspace_intersect(field_, right, left, budget_);
      }
      state_->corelations.emplace(k, std::move(value));
    }
    return state_->corelations.at(n);
  }

  // (dim, projection U^{(x)n} -> Lambda_n); the projection is materialized
  // row by row (guarded) with kernel exactly I_n.
  std::pair<std::int64_t, LinearMap<F>> algebra_component(std::uint32_t n) const {
    PathIndexer ix(quiver(), n);
    budget_.check_ambient(ix.count());
    budget_.check_cells(ix.count(), std::uint64_t(dim(n)) + 1);
    LinearMap<F> proj;
    proj.domain_dim = ix.count();
    proj.codomain_dim = std::uint64_t(dim(n));
    proj.rows.reserve(std::size_t(ix.count()));
    for (std::uint64_t r = 0; r < ix.count(); ++r) {
      if (n == 0) {
        SparseVec<F> unit;
        unit.push(r, field_.one());
        proj.rows.push_back(std::move(unit));
      } else {
        proj.rows.push_back(nf_word(ix.unrank(r)));
      }
    }
    return {dim(n), std::move(proj)};
  }

  AlgebraView dual_view() const {
    return AlgebraView(field_, shriek_presentation(field_, pres_, budget_), budget_);
  }

  std::pair<std::uint32_t, std::uint32_t> relation_block(const SparseVec<F>& rel) const {
    PathIndexer six(quiver(), s());
    return six.block_of(rel.idx.front());
  }

  const std::vector<std::uint32_t>& arrows_from(std::uint32_t v) const { return arrows_from_[v]; }

 private:
  struct State {
    std::mutex mutex;
    std::deque<Degree> degrees;  // stable references
    std::mutex lmult_mutex;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<SparseVec<F>>> lmult;
    std::mutex corel_mutex;
    std::map<std::uint32_t, Subspace<F>> corelations;
  };

  SparseVec<F> red_step_on(const Degree& prev, const Degree& next, const SparseVec<F>& cls,
                           std::uint32_t arrow) const {
    std::uint32_t a_src = quiver().arrows[arrow].src;
    std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
    for (std::size_t t = 0; t < cls.nnz(); ++t) {
      std::uint32_t v = std::uint32_t(cls.idx[t]);
      if (prev.blocks.tgt[v] != a_src) continue;
      const SparseVec<F>& row = next.red[std::size_t(cand_index(next, v, arrow))];
      for (std::size_t u = 0; u < row.nnz(); ++u)
        entries.emplace_back(row.idx[u], field_.mul(cls.val[t], row.val[u]));
    }
    return make_sparse(field_, std::move(entries));
  }

  // Candidate slot of (v, arrow) in the layout of `next`.
  std::uint64_t cand_index(const Degree& next, std::uint32_t v, std::uint32_t arrow) const {
    if (next.arrow_major) return arrow;
    const auto& lst = arrows_from_[quiver().arrows[arrow].src];
    auto it = std::lower_bound(lst.begin(), lst.end(), arrow);
    return next.cand_offset[v] + std::uint64_t(it - lst.begin());
  }

  // S (x) U (append one arrow) or U (x) S (prepend one arrow) in path ranks.
  Subspace<F> tensor_with_arrows(const Subspace<F>& sub, std::uint32_t deg, bool on_right) const {
    PathIndexer ix(quiver(), deg), out_ix(quiver(), deg + 1);
    std::vector<SparseVec<F>> rows;
    for (const auto& row : sub.rows) {
      auto block = ix.block_of(row.idx.front());
      for (std::uint32_t a = 0; a < quiver().arrows.size(); ++a) {
        const Arrow& ar = quiver().arrows[a];
        if (on_right ? (ar.src != block.second) : (ar.tgt != block.first)) continue;
        std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
        for (std::size_t t = 0; t < row.nnz(); ++t) {
          Word w = ix.unrank(row.idx[t]);
          if (on_right)
            w.push_back(a);
          else
            w.insert(w.begin(), a);
          entries.emplace_back(out_ix.rank(w), row.val[t]);
        }
        rows.push_back(make_sparse(field_, std::move(entries)));
      }
    }
    return row_space(field_, out_ix.count(), rows, budget_);
  }

  void build_next_degree_locked() const {
    std::uint32_t n = std::uint32_t(state_->degrees.size());
    if (n > 0) budget_.check_ambient(path_count(quiver(), n));
    Degree d;
    if (n == 0) {
      d.parent.resize(quiver().vertex_count);
      d.letter.assign(quiver().vertex_count, 0);
      for (std::uint32_t v = 0; v < quiver().vertex_count; ++v) {
        d.parent[v] = v;
        d.blocks.src.push_back(v);
        d.blocks.tgt.push_back(v);
      }
      state_->degrees.push_back(std::move(d));
      return;
    }
    const Degree& prev = state_->degrees[n - 1];
    if (n == 1) {
      // degree-lex on one-letter words is plain arrow order
      d.arrow_major = true;
      d.cand_count = quiver().arrows.size();
      for (std::uint32_t a = 0; a < quiver().arrows.size(); ++a) {
        d.parent.push_back(quiver().arrows[a].src);
        d.letter.push_back(a);
        d.blocks.src.push_back(quiver().arrows[a].src);
        d.blocks.tgt.push_back(quiver().arrows[a].tgt);
      }
      d.red.resize(std::size_t(d.cand_count));
      for (std::uint64_t c = 0; c < d.cand_count; ++c) d.red[std::size_t(c)].push(c, field_.one());
      state_->degrees.push_back(std::move(d));
      return;
    }
    d.cand_offset.assign(prev.blocks.dim() + 1, 0);
    for (std::uint32_t v = 0; v < prev.blocks.dim(); ++v)
      d.cand_offset[v + 1] = d.cand_offset[v] + arrows_from_[prev.blocks.tgt[v]].size();
    d.cand_count = d.cand_offset.back();

    Eliminator<F> ker(field_, d.cand_count, budget_);
    if (n >= s()) {
      const Degree& base = state_->degrees[n - s()];
      PathIndexer six(quiver(), s());
      // dummy layout only used to address candidates while building rows
      for (const auto& rel : pres_.relations.rows) {
        auto rel_block = six.block_of(rel.idx.front());
        for (std::uint32_t b = 0; b < base.blocks.dim(); ++b) {
          if (base.blocks.tgt[b] != rel_block.first) continue;
          std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
          for (std::size_t t = 0; t < rel.nnz(); ++t) {
            Word p = six.unrank(rel.idx[t]);
            SparseVec<F> cls;
            cls.push(b, field_.one());
            for (std::uint32_t k = 0; k + 1 < s(); ++k) {
              const Degree& pk = state_->degrees[n - s() + k];
              const Degree& pk1 = state_->degrees[n - s() + k + 1];
              cls = red_step_on(pk, pk1, cls, p[k]);
            }
            std::uint32_t last = p[s() - 1];
            for (std::size_t u = 0; u < cls.nnz(); ++u)
              entries.emplace_back(cand_index(d, std::uint32_t(cls.idx[u]), last),
                                   field_.mul(rel.val[t], cls.val[u]));
          }
          SparseVec<F> row = make_sparse(field_, std::move(entries));
          if (!row.empty()) ker.add_row(row);
        }
      }
    }
    ker.finalize_rref();

    std::vector<std::int64_t> cand_to_nw(std::size_t(d.cand_count), -1);
    {
      std::size_t next_pivot = 0;
      std::uint32_t nw = 0;
      for (std::uint64_t c = 0; c < d.cand_count; ++c) {
        if (next_pivot < ker.pivots().size() && ker.pivots()[next_pivot] == c) {
          ++next_pivot;
          continue;
        }
        cand_to_nw[std::size_t(c)] = nw++;
      }
    }
    for (std::uint32_t v = 0; v < prev.blocks.dim(); ++v) {
      const auto& lst = arrows_from_[prev.blocks.tgt[v]];
      for (std::size_t pos = 0; pos < lst.size(); ++pos) {
        std::uint64_t c = d.cand_offset[v] + pos;
        if (cand_to_nw[std::size_t(c)] < 0) continue;
        d.parent.push_back(v);
        d.letter.push_back(lst[pos]);
        d.blocks.src.push_back(prev.blocks.src[v]);
        d.blocks.tgt.push_back(quiver().arrows[lst[pos]].tgt);
      }
    }
    d.red.resize(std::size_t(d.cand_count));
    for (std::uint64_t c = 0; c < d.cand_count; ++c)
      if (cand_to_nw[std::size_t(c)] >= 0)
        d.red[std::size_t(c)].push(std::uint64_t(cand_to_nw[std::size_t(c)]), field_.one());
    for (std::size_t r = 0; r < ker.rank(); ++r) {
      const SparseVec<F>& row = ker.rows()[r];
      SparseVec<F>& cls = d.red[std::size_t(ker.pivots()[r])];
      for (std::size_t t = 1; t < row.nnz(); ++t) {
        std::int64_t nw = cand_to_nw[std::size_t(row.idx[t])];
        require(nw >= 0, ErrorKind::InputError, "RREF row references a pivot column");
        cls.push(std::uint64_t(nw), field_.neg(row.val[t]));
      }
    }
    state_->degrees.push_back(std::move(d));
  }

  const F& field_;
  RelPresentation<F> pres_;
  Budget budget_;
  std::vector<std::vector<std::uint32_t>> arrows_from_;
  std::shared_ptr<State> state_;
};

}  // namespace homkoszul
