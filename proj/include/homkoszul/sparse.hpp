// Sparse vectors with 64-bit column indices over an exact field. Rows of all
// matrices in this project are stored this way; elimination happens through a
// dense accumulator with a touched-column list (see elim.hpp).
#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "homkoszul/field.hpp"

namespace homkoszul {

template <class F>
struct SparseVec {
  using Elem = typename F::Elem;

  std::vector<std::uint64_t> idx;  // strictly increasing
  std::vector<Elem> val;           // same length, no explicit zeros

  std::size_t nnz() const { return idx.size(); }
  bool empty() const { return idx.empty(); }
  std::uint64_t leading() const { return idx.front(); }

  void push(std::uint64_t i, Elem v) {
    idx.push_back(i);
    val.push_back(std::move(v));
  }

  void clear() {
    idx.clear();
    val.clear();
  }

  // Coefficient lookup by binary search; zero when absent.
  Elem get(const F& field, std::uint64_t i) const {
    auto it = std::lower_bound(idx.begin(), idx.end(), i);
    if (it == idx.end() || *it != i) return field.zero();
    return val[std::size_t(it - idx.begin())];
  }

  bool operator==(const SparseVec& o) const { return idx == o.idx && val == o.val; }
};

// Entries may arrive unsorted or duplicated (duplicates are summed).
template <class F>
SparseVec<F> make_sparse(const F& field, std::vector<std::pair<std::uint64_t, typename F::Elem>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  for (auto& [i, v] : entries) {
    if (!out.idx.empty() && out.idx.back() == i) {
      out.val.back() = field.add(out.val.back(), v);
      if (field.is_zero(out.val.back())) {
        out.idx.pop_back();
        out.val.pop_back();
      }
    } else if (!field.is_zero(v)) {
      out.push(i, v);
    }
  }
  return out;
}

template <class F>
SparseVec<F> scaled(const F& field, const SparseVec<F>& v, const typename F::Elem& c) {
  SparseVec<F> out;
  if (field.is_zero(c)) return out;
  out.idx = v.idx;
  out.val.reserve(v.val.size());
  for (const auto& x : v.val) out.val.push_back(field.mul(x, c));
  return out;
}

// Merge-based a + c*b.
template <class F>
SparseVec<F> axpy(const F& field, const SparseVec<F>& a, const typename F::Elem& c,
                  const SparseVec<F>& b) {
  SparseVec<F> out;
  out.idx.reserve(a.nnz() + b.nnz());
  out.val.reserve(a.nnz() + b.nnz());
  std::size_t i = 0, j = 0;
  while (i < a.nnz() || j < b.nnz()) {
    if (j == b.nnz() || (i < a.nnz() && a.idx[i] < b.idx[j])) {
      out.push(a.idx[i], a.val[i]);
      ++i;
    } else if (i == a.nnz() || b.idx[j] < a.idx[i]) {
      auto v = field.mul(c, b.val[j]);
      if (!field.is_zero(v)) out.push(b.idx[j], v);
      ++j;
    } else {
      auto v = field.add(a.val[i], field.mul(c, b.val[j]));
      if (!field.is_zero(v)) out.push(a.idx[i], v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Tensor-position reindexing helper: shifts every index by `offset` after
// scaling by `stride` (idx -> idx * stride + offset).
template <class F>
SparseVec<F> reindexed(const SparseVec<F>& v, std::uint64_t stride, std::uint64_t offset) {
  SparseVec<F> out;
  out.idx.reserve(v.nnz());
  out.val = v.val;
  for (auto i : v.idx) out.idx.push_back(i * stride + offset);
  return out;
}

}  // namespace homkoszul
