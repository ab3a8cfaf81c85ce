// Quivers with s-homogeneous relations and corelations, and the functors
// connecting them: dualization, kernel/cokernel swaps, and the shriek
// presentation R -> perp(R) on the dual quiver. Dual coordinates use the
// endpoint-consistent identification (U^{(x)s})* = (U*)^{(x)s} that reverses
// path words, so a dual path a_s*...a_1* pairs with the path a_1...a_s.
#pragma once

#include "homkoszul/quiver.hpp"
#include "homkoszul/subspace.hpp"

namespace homkoszul {

// Every canonical basis row of a presented subspace must be supported on
// paths with one fixed source and one fixed target; anything else is an
// input error rather than something to project away.
template <class F>
void check_block_pure(const Quiver& q, std::uint32_t n, const Subspace<F>& s) {
  PathIndexer ix(q, n);
  require(s.ambient == ix.count(), ErrorKind::AmbientMismatch,
          "subspace ambient differs from the degree-" + std::to_string(n) + " path count");
  for (const auto& row : s.rows) {
    std::pair<std::uint32_t, std::uint32_t> block{0, 0};
    for (std::size_t k = 0; k < row.nnz(); ++k) {
      auto b = ix.block_of(row.idx[k]);
      if (k == 0)
        block = b;
      else
        require(b == block, ErrorKind::BlockViolation,
                "relation row mixes vertex blocks; rows must respect e_i W e_j");
    }
  }
}

template <class F>
struct RelPresentation {
  Quiver quiver;
  std::uint32_t s = 2;
  Subspace<F> relations;  // R inside U^{(x)s}, canonical rows, block pure

  void validate() const {
    quiver.validate();
    require(s >= 2, ErrorKind::BadDegree, "relation degree s must be at least 2");
    check_block_pure(quiver, s, relations);
  }
  bool operator==(const RelPresentation& o) const {
    return quiver == o.quiver && s == o.s && relations == o.relations;
  }
};

template <class F>
struct CoRelPresentation {
  Quiver quiver;
  std::uint32_t s = 2;
  Subspace<F> kernel;  // Ker pi inside U^{(x)s}
  std::uint64_t corelation_dim = 0;

  void validate() const {
    quiver.validate();
    require(s >= 2, ErrorKind::BadDegree, "corelation degree s must be at least 2");
    check_block_pure(quiver, s, kernel);
    require(corelation_dim == kernel.ambient - kernel.dim(), ErrorKind::InputError,
            "corelation dimension inconsistent with kernel");
  }
};

// Transport of a degree-s subspace to the dual quiver: annihilator followed
// by the word-reversal reindexing.
template <class F>
Subspace<F> perp_on_dual(const F& field, const Quiver& q, std::uint32_t s,
                         const Subspace<F>& r, const Budget& budget = Budget{}) {
  Subspace<F> p = subspace_perp(field, r, budget);
  Quiver dq = q.dual();
  PathIndexer ix(q, s), dix(dq, s);
  std::vector<SparseVec<F>> rows;
  rows.reserve(p.rows.size());
  for (const auto& row : p.rows) {
    std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
    for (std::size_t k = 0; k < row.nnz(); ++k) {
      Word w = ix.unrank(row.idx[k]);
      std::reverse(w.begin(), w.end());
      entries.emplace_back(dix.rank(w), row.val[k]);
    }
    rows.push_back(make_sparse(field, std::move(entries)));
  }
  return row_space(field, p.ambient, rows, budget);
}

// D_R: (U, V, iota) -> (U*, V*, iota*). The corelation kernel is perp(R) and
// the corelation space has dim R.
template <class F>
CoRelPresentation<F> dualize_rel(const F& field, const RelPresentation<F>& p,
                                 const Budget& budget = Budget{}) {
  CoRelPresentation<F> c;
  c.quiver = p.quiver.dual();
  c.s = p.s;
  c.kernel = perp_on_dual(field, p.quiver, p.s, p.relations, budget);
  c.corelation_dim = p.relations.dim();
  return c;
}

template <class F>
RelPresentation<F> dualize_corel(const F& field, const CoRelPresentation<F>& c,
                                 const Budget& budget = Budget{}) {
  RelPresentation<F> p;
  p.quiver = c.quiver.dual();
  p.s = c.s;
  p.relations = perp_on_dual(field, c.quiver, c.s, c.kernel, budget);
  return p;
}

// Ker: (U, W, pi) -> (U, Ker pi, incl).
template <class F>
RelPresentation<F> ker_functor(const CoRelPresentation<F>& c) {
  return RelPresentation<F>{c.quiver, c.s, c.kernel};
}

// Coker: (U, V, iota) -> (U, U^s/R, proj).
template <class F>
CoRelPresentation<F> coker_functor(const RelPresentation<F>& p) {
  CoRelPresentation<F> c;
  c.quiver = p.quiver;
  c.s = p.s;
  c.kernel = p.relations;
  c.corelation_dim = p.relations.ambient - p.relations.dim();
  return c;
}

// (-)! on presentations: relations become perp(R) on the dual quiver.
// Identical to ker_functor(dualize_rel(p)).
template <class F>
RelPresentation<F> shriek_presentation(const F& field, const RelPresentation<F>& p,
                                       const Budget& budget = Budget{}) {
  RelPresentation<F> out;
  out.quiver = p.quiver.dual();
  out.s = p.s;
  out.relations = perp_on_dual(field, p.quiver, p.s, p.relations, budget);
  return out;
}

}  // namespace homkoszul
