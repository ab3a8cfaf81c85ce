// Canonical subspaces of k^ambient and linear maps in row-vector convention
// (a map sends the row vector x to x*M; matrix row i is the image of basis
// vector i). A Subspace is always held as the unique reduced row echelon
// basis, so equality of subspaces is equality of representations.
#pragma once

#include <cstdint>
#include <vector>

#include "homkoszul/elim.hpp"

namespace homkoszul {

template <class F>
struct Subspace {
  std::uint64_t ambient = 0;
  std::vector<SparseVec<F>> rows;      // RREF, sorted by pivot
  std::vector<std::uint64_t> pivots;   // increasing

  std::size_t dim() const { return rows.size(); }
  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && pivots == o.pivots && rows == o.rows;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
};

template <class F>
Subspace<F> subspace_from_eliminator(Eliminator<F>& e) {
  e.finalize_rref();
  Subspace<F> s;
  s.ambient = e.ncols();
  s.pivots = e.pivots();
  s.rows = e.take_rows();
  return s;
}

// Canonical row space of an arbitrary list of spanning rows.
template <class F>
Subspace<F> row_space(const F& field, std::uint64_t ambient,
                      const std::vector<SparseVec<F>>& spanning,
                      const Budget& budget = Budget{}) {
  Eliminator<F> e(field, ambient, budget);
  for (const auto& r : spanning) e.add_row(r);
  return subspace_from_eliminator(e);
}

template <class F>
Subspace<F> zero_subspace(std::uint64_t ambient) {
  Subspace<F> s;
  s.ambient = ambient;
  return s;
}

template <class F>
Subspace<F> full_subspace(const F& field, std::uint64_t ambient) {
  Subspace<F> s;
  s.ambient = ambient;
  s.rows.reserve(std::size_t(ambient));
  for (std::uint64_t i = 0; i < ambient; ++i) {
    SparseVec<F> r;
    r.push(i, field.one());
    s.rows.push_back(std::move(r));
    s.pivots.push_back(i);
  }
  return s;
}

template <class F>
bool subspace_contains(const F& field, const Subspace<F>& s, const SparseVec<F>& v,
                       const Budget& budget = Budget{}) {
  Eliminator<F> e(field, s.ambient, budget);
  for (const auto& r : s.rows) e.add_row(r);
  return e.contains(v);
}

template <class F>
Subspace<F> subspace_sum(const F& field, const Subspace<F>& a, const Subspace<F>& b,
                         const Budget& budget = Budget{}) {
  require(a.ambient == b.ambient, ErrorKind::AmbientMismatch,
          "subspace sum requires equal ambient dimensions");
  Eliminator<F> e(field, a.ambient, budget);
  for (const auto& r : a.rows) e.add_row(r);
  for (const auto& r : b.rows) e.add_row(r);
  return subspace_from_eliminator(e);
}

// Intersection via the kernel of the stacked coordinate-expression system:
// combinations (x, y) with x*A = y*B are found by eliminating the rows of A
// and B augmented with identity tags; tag rows whose plain part vanished
// give the intersection vectors x*A.
template <class F>
Subspace<F> subspace_intersect(const F& field, const Subspace<F>& a, const Subspace<F>& b,
                               const Budget& budget = Budget{}) {
  require(a.ambient == b.ambient, ErrorKind::AmbientMismatch,
          "subspace intersection requires equal ambient dimensions");
  const std::uint64_t n = a.ambient;
  const std::uint64_t ra = a.rows.size(), rb = b.rows.size();
  Eliminator<F> e(field, n + ra + rb, budget);
  for (std::uint64_t i = 0; i < ra; ++i) {
    SparseVec<F> r = a.rows[std::size_t(i)];
    r.push(n + i, field.one());
    e.add_row(r);
  }
  std::vector<SparseVec<F>> meet_rows;
  for (std::uint64_t j = 0; j < rb; ++j) {
    SparseVec<F> r = b.rows[std::size_t(j)];
    r.push(n + ra + j, field.one());
    e.add_row(r);
    // Rank not growing in the plain block shows up as a pivot in the tag
    // block; collect those as they appear below instead.
  }
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.pivots()[i] < n) continue;
    // Tag-only row: x*A - y*B = 0; reconstruct x*A from the A-tags.
    const auto& row = e.rows()[i];
    std::vector<std::pair<std::uint64_t, typename F::Elem>> expanded;
    for (std::size_t k = 0; k < row.nnz(); ++k) {
      std::uint64_t c = row.idx[k];
      if (c < n + ra) {
        require(c >= n, ErrorKind::InputError, "unexpected plain entry in kernel row");
        const auto& arow = a.rows[std::size_t(c - n)];
        for (std::size_t t = 0; t < arow.nnz(); ++t)
          expanded.emplace_back(arow.idx[t], field.mul(row.val[k], arow.val[t]));
      }
    }
    SparseVec<F> v = make_sparse(field, std::move(expanded));
    if (!v.empty()) meet_rows.push_back(std::move(v));
  }
  return row_space(field, n, meet_rows, budget);
}

// Annihilator {alpha : sum_c v_c alpha_c = 0 for all v in s} as a subspace of
// the same coordinate ambient. The quiver layer adds the dual-word
// reindexing on top of this.
template <class F>
Subspace<F> subspace_perp(const F& field, const Subspace<F>& s, const Budget& budget = Budget{}) {
  const std::uint64_t n = s.ambient;
  budget.check_cells(n - s.dim(), n);
  std::vector<SparseVec<F>> rows;
  rows.reserve(std::size_t(n - s.dim()));
  std::size_t next_pivot = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (next_pivot < s.pivots.size() && s.pivots[next_pivot] == j) {
      ++next_pivot;
      continue;
    }
    // Free column j: e_j - sum_i rows_i[j] e_{pivot_i}.
    std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
    entries.emplace_back(j, field.one());
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      auto c = s.rows[i].get(field, j);
      if (!field.is_zero(c)) entries.emplace_back(s.pivots[i], field.neg(c));
    }
    rows.push_back(make_sparse(field, std::move(entries)));
  }
  return row_space(field, n, rows, budget);
}

// A linear map of row vectors; matrix row i is the image of basis vector i.
template <class F>
struct LinearMap {
  std::uint64_t domain_dim = 0;
  std::uint64_t codomain_dim = 0;
  std::vector<SparseVec<F>> rows;  // one per domain basis vector

  SparseVec<F> apply(const F& field, const SparseVec<F>& x) const {
    std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
    for (std::size_t k = 0; k < x.nnz(); ++k) {
      const auto& r = rows[std::size_t(x.idx[k])];
      for (std::size_t t = 0; t < r.nnz(); ++t)
        entries.emplace_back(r.idx[t], field.mul(x.val[k], r.val[t]));
    }
    return make_sparse(field, std::move(entries));
  }
};

// Rank guarding is work-based: the eliminator counts entry operations and
// stored entries, so sparse rows over wide codomains stay cheap.
template <class F>
std::size_t map_rank(const F& field, const LinearMap<F>& f, const Budget& budget = Budget{}) {
  Eliminator<F> e(field, f.codomain_dim, budget);
  for (const auto& r : f.rows) e.add_row(r);
  return e.rank();
}

// (kernel, image) with kernel in the domain and image in the codomain;
// dim kernel + dim image = domain_dim.
template <class F>
std::pair<Subspace<F>, Subspace<F>> kernel_image(const F& field, const LinearMap<F>& f,
                                                 const Budget& budget = Budget{}) {
  const std::uint64_t n = f.codomain_dim, m = f.domain_dim;
  Eliminator<F> e(field, n + m, budget);
  for (std::uint64_t i = 0; i < m; ++i) {
    SparseVec<F> r = f.rows[std::size_t(i)];
    r.push(n + i, field.one());
    e.add_row(r);
  }
  std::vector<SparseVec<F>> ker_rows, im_rows;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const auto& row = e.rows()[i];
    if (e.pivots()[i] >= n) {
      SparseVec<F> tag;
      for (std::size_t k = 0; k < row.nnz(); ++k) tag.push(row.idx[k] - n, row.val[k]);
      ker_rows.push_back(std::move(tag));
    } else {
      SparseVec<F> plain;
      for (std::size_t k = 0; k < row.nnz() && row.idx[k] < n; ++k)
        plain.push(row.idx[k], row.val[k]);
      im_rows.push_back(std::move(plain));
    }
  }
  return {row_space(field, m, ker_rows, budget), row_space(field, n, im_rows, budget)};
}

template <class F>
Subspace<F> map_kernel(const F& field, const LinearMap<F>& f, const Budget& budget = Budget{}) {
  return kernel_image(field, f, budget).first;
}

// One solution x of x*M = target (row convention). The rows of M are
// eliminated with identity tags; reducing target leaves a remainder living
// purely in the tag block, and that remainder is -x. Requires target in the
// row space.
template <class F>
SparseVec<F> solve_row(const F& field, const std::vector<SparseVec<F>>& mat_rows,
                       std::uint64_t ncols, const SparseVec<F>& target,
                       const Budget& budget = Budget{}) {
  Eliminator<F> e(field, ncols + mat_rows.size(), budget);
  for (std::size_t i = 0; i < mat_rows.size(); ++i) {
    SparseVec<F> r = mat_rows[i];
    r.push(ncols + i, field.one());
    e.add_row(r);
  }
  SparseVec<F> rem;
  bool nonzero = e.reduce(target, rem);
  bool in_space = !nonzero || rem.leading() >= ncols;
  require(in_space, ErrorKind::InputError, "solve_row: target outside the row space");
  SparseVec<F> x;
  for (std::size_t k = 0; k < rem.nnz(); ++k) x.push(rem.idx[k] - ncols, field.neg(rem.val[k]));
  return x;
}

}  // namespace homkoszul
