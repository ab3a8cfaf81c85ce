// Online exact Gaussian elimination. Rows are fed one at a time; pivot rows
// are kept in echelon form (entries only at and right of the pivot, pivot
// coefficient 1). finalize_rref() back-substitutes to the unique reduced row
// echelon form. The accumulator is dense over the touched columns only, so
// wide-but-sparse inputs (tensor ambients) and narrow-but-dense inputs
// (quotient coordinates) share one code path: candidate columns come from a
// min-heap while the active row stays sparse and from a linear cursor once
// it densifies.
//
// GF(p) uses a lazy uint64 accumulator: with p < 2^20 products stay below
// 2^40 and ~2^24 accumulations fit without overflow, which covers every rank
// this project can reach; for larger p every touched entry is reduced
// immediately.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <unordered_map>
#include <vector>

#include "homkoszul/sparse.hpp"

namespace homkoszul {

// Work/memory envelope. `max_ambient` is the documented cap on a single
// tensor ambient dimension (env HOMKOSZUL_MAX_DIM, default 2,000,000);
// `max_cells` caps rows*cols of one elimination, `max_nnz` the stored
// entries of one eliminator.
struct Budget {
  std::uint64_t max_ambient = 2'000'000;
  std::uint64_t max_cells = 800'000'000;    // materialized matrix cells
  std::uint64_t max_nnz = 100'000'000;      // stored entries of one eliminator
  std::uint64_t max_ops = 8'000'000'000;    // entry operations of one elimination

  static Budget from_env();
  void check_ambient(std::uint64_t dim) const {
    require(dim <= max_ambient, ErrorKind::ResourceLimit,
            "ambient tensor dimension " + std::to_string(dim) + " exceeds cap " +
                std::to_string(max_ambient));
  }
  void check_cells(std::uint64_t rows, std::uint64_t cols) const {
    if (cols == 0 || rows == 0) return;
    require(rows <= max_cells / cols, ErrorKind::ResourceLimit,
            "elimination of " + std::to_string(rows) + "x" + std::to_string(cols) +
                " exceeds the work budget");
  }
  // Rational arithmetic is an order of magnitude slower per entry.
  Budget scaled_for_rationals() const {
    Budget b = *this;
    b.max_ops /= 16;
    return b;
  }
};

inline Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("HOMKOSZUL_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_ambient = v;
  }
  return b;
}

template <class F>
class Eliminator {
 public:
  using Elem = typename F::Elem;

  Eliminator(const F& field, std::uint64_t ncols, const Budget& budget = Budget{})
      : field_(field), ncols_(ncols), budget_(budget) {
    if (ncols_ <= kFlatPivotLimit) pivot_flat_.assign(std::size_t(ncols_), -1);
  }

  const F& field() const { return field_; }
  std::uint64_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<F>>& rows() const { return rows_; }
  const std::vector<std::uint64_t>& pivots() const { return pivots_; }

  // Reduces `v` against the current pivot rows and, if a nonzero remainder
  // survives, installs it as a new pivot row. Returns true when rank grew.
  bool add_row(const SparseVec<F>& v) { return process_impl(v, nullptr, true, nullptr); }

  // Echelon-reduces `v` without inserting; remainder returned via `out`.
  // Returns true iff the remainder is nonzero (v not in the row space).
  // Uses the internal workspace: not safe for concurrent calls.
  bool reduce(const SparseVec<F>& v, SparseVec<F>& out) {
    return process_impl(v, &out, false, nullptr);
  }

  bool contains(const SparseVec<F>& v) {
    SparseVec<F> rem;
    return !reduce(v, rem);
  }

  // Reduction that also reports the pivot-row combination used:
  // v = sum coeff_i * rows_[row_i] + remainder.
  bool reduce_tracked(const SparseVec<F>& v, SparseVec<F>& out,
                      std::vector<std::pair<std::size_t, Elem>>& combo) {
    combo.clear();
    return process_impl(v, &out, false, &combo);
  }

  // Back-substitution to the unique RREF; rows end up sorted by pivot column.
  void finalize_rref() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    for (std::size_t k = order.size(); k-- > 0;) {
      std::size_t r = order[k];
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t up = order[j];
        Elem c = rows_[up].get(field_, pivots_[r]);
        if (!field_.is_zero(c)) rows_[up] = axpy(field_, rows_[up], field_.neg(c), rows_[r]);
      }
    }
    std::vector<SparseVec<F>> rs;
    std::vector<std::uint64_t> ps;
    rs.reserve(rows_.size());
    ps.reserve(rows_.size());
    for (std::size_t i : order) {
      rs.push_back(std::move(rows_[i]));
      ps.push_back(pivots_[i]);
    }
    rows_ = std::move(rs);
    pivots_ = std::move(ps);
    rebuild_pivot_index();
  }

  std::vector<SparseVec<F>> take_rows() { return std::move(rows_); }

 private:
  static constexpr std::uint64_t kFlatPivotLimit = 1u << 22;
  static constexpr bool kPrime = std::is_same_v<F, PrimeField>;
  using Acc = std::conditional_t<kPrime, std::uint64_t, Elem>;

  long pivot_row_of(std::uint64_t col) const {
    if (!pivot_flat_.empty()) return pivot_flat_[std::size_t(col)];
    auto it = pivot_map_.find(col);
    return it == pivot_map_.end() ? -1 : long(it->second);
  }

  void set_pivot_row(std::uint64_t col, long row) {
    if (!pivot_flat_.empty())
      pivot_flat_[std::size_t(col)] = row;
    else
      pivot_map_[col] = std::size_t(row);
  }

  void rebuild_pivot_index() {
    if (!pivot_flat_.empty())
      std::fill(pivot_flat_.begin(), pivot_flat_.end(), -1);
    else
      pivot_map_.clear();
    for (std::size_t i = 0; i < pivots_.size(); ++i) set_pivot_row(pivots_[i], long(i));
  }

  void charge_ops(std::uint64_t n) {
    ops_ += n;
    require(ops_ <= budget_.max_ops, ErrorKind::ResourceLimit,
            "elimination exceeded the entry-operation budget");
  }

  // acc += c * row; previously untouched columns are recorded.
  void acc_axpy(const Elem& c, const SparseVec<F>& row, bool dense_mode) {
    if constexpr (kPrime) {
      const bool lazy = field_.p() < (1u << 20);
      for (std::size_t k = 0; k < row.nnz(); ++k) {
        std::size_t col = std::size_t(row.idx[k]);
        Acc before = acc_[col];
        std::uint64_t prod = std::uint64_t(c) * row.val[k];
        acc_[col] = lazy ? before + prod : field_.reduce(before + field_.reduce(prod));
        if (before == 0 && !dense_mode) heap_.push(row.idx[k]);
        if (before == 0) touched_.push_back(row.idx[k]);
      }
    } else {
      for (std::size_t k = 0; k < row.nnz(); ++k) {
        std::size_t col = std::size_t(row.idx[k]);
        bool was_zero = field_.is_zero(acc_[col]);
        acc_[col] += c * row.val[k];
        if (was_zero && !dense_mode) heap_.push(row.idx[k]);
        if (was_zero) touched_.push_back(row.idx[k]);
      }
    }
  }

  Elem acc_value(std::size_t col) {
    if constexpr (kPrime) {
      Elem r = field_.reduce(acc_[col]);
      acc_[col] = r;
      return r;
    } else {
      return acc_[col];
    }
  }

  bool process_impl(const SparseVec<F>& v, SparseVec<F>* out, bool insert,
                    std::vector<std::pair<std::size_t, Elem>>* combo) {
    if (out) out->clear();
    if (v.empty()) return false;
    charge_ops(v.nnz());
    if (acc_.size() < std::size_t(ncols_)) acc_.resize(std::size_t(ncols_), Acc{});
    heap_ = {};
    touched_.clear();
    for (std::size_t k = 0; k < v.nnz(); ++k) {
      std::size_t col = std::size_t(v.idx[k]);
      if constexpr (kPrime) {
        acc_[col] = v.val[k];
      } else {
        acc_[col] = v.val[k];
      }
      heap_.push(v.idx[k]);
      touched_.push_back(v.idx[k]);
    }

    SparseVec<F> rem;
    bool dense_mode = false;
    std::uint64_t cursor = 0;  // used once dense
    const std::size_t dense_threshold = std::size_t(ncols_ / 8) + 16;
    while (true) {
      std::uint64_t col;
      if (!dense_mode) {
        if (heap_.empty()) break;
        col = heap_.top();
        heap_.pop();
        while (!heap_.empty() && heap_.top() == col) heap_.pop();
        if (touched_.size() > dense_threshold) {
          dense_mode = true;
          cursor = col;
        }
      } else {
        std::uint64_t start = cursor;
        while (cursor < ncols_ && is_stored_zero(std::size_t(cursor))) ++cursor;
        charge_ops((cursor - start) / 8 + 1);
        if (cursor >= ncols_) break;
        col = cursor++;
      }
      Elem cv = acc_value(std::size_t(col));
      if (field_.is_zero(cv)) continue;
      long pr = pivot_row_of(col);
      if (pr >= 0) {
        charge_ops(rows_[std::size_t(pr)].nnz() + 1);
        Elem mult = field_.neg(cv);
        acc_axpy(mult, rows_[std::size_t(pr)], dense_mode);
        acc_[std::size_t(col)] = Acc{};
        if (combo) combo->emplace_back(std::size_t(pr), cv);
      } else {
        rem.push(col, cv);
        acc_[std::size_t(col)] = Acc{};
      }
    }
    for (auto c : touched_) acc_[std::size_t(c)] = Acc{};
    touched_.clear();

    if (rem.empty()) return false;
    if (!insert) {
      if (out) *out = std::move(rem);
      return true;
    }
    Elem lead_inv = field_.inv(rem.val.front());
    for (auto& x : rem.val) x = field_.mul(x, lead_inv);
    nnz_stored_ += rem.nnz();
    require(nnz_stored_ <= budget_.max_nnz, ErrorKind::ResourceLimit,
            "stored elimination entries exceed the memory budget");
    pivots_.push_back(rem.leading());
    set_pivot_row(rem.leading(), long(rows_.size()));
    rows_.push_back(std::move(rem));
    return true;
  }

  bool is_stored_zero(std::size_t col) const {
    if constexpr (kPrime)
      return acc_[col] == 0;
    else
      return sgn(acc_[col]) == 0;
  }

  const F& field_;
  std::uint64_t ncols_;
  Budget budget_;
  std::vector<SparseVec<F>> rows_;
  std::vector<std::uint64_t> pivots_;
  std::vector<long> pivot_flat_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_map_;
  std::vector<Acc> acc_;
  std::vector<std::uint64_t> touched_;
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap_;
  std::uint64_t nnz_stored_ = 0;
  std::uint64_t ops_ = 0;
};

}  // namespace homkoszul
