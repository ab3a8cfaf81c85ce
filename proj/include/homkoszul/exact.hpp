// Field-tagged scalars, matrices, subspaces and maps: the runtime-dispatched
// face of the exact linear algebra core. Values carry a FieldDesc and mixing
// descriptors raises FieldMismatch. storage() reports which representation
// the size/density rule selects (dense up to 4096 columns and at least 10%
// filled, sparse otherwise); results never depend on the representation.
#pragma once

#include <variant>

#include "homkoszul/subspace.hpp"

namespace homkoszul {

struct Scalar {
  FieldDesc field;
  std::variant<mpq_class, std::uint32_t> value;

  static Scalar rational(mpq_class v) { return {FieldDesc::rationals(), std::move(v)}; }
  static Scalar mod(std::uint32_t p, std::uint32_t v) { return {FieldDesc::prime(p), v}; }

  bool is_zero() const {
    if (field.kind == FieldDesc::QQ) return sgn(std::get<mpq_class>(value)) == 0;
    return std::get<std::uint32_t>(value) == 0;
  }
  std::string str() const {
    if (field.kind == FieldDesc::QQ) return std::get<mpq_class>(value).get_str();
    return std::to_string(std::get<std::uint32_t>(value));
  }
  bool operator==(const Scalar& o) const { return field == o.field && value == o.value; }
};

inline Scalar scalar_parse(const FieldDesc& fd, const std::string& text) {
  if (fd.kind == FieldDesc::QQ) return Scalar{fd, RationalField::parse(text)};
  PrimeField f(fd.p);
  return Scalar{fd, f.parse(text)};
}

namespace detail {

template <class Fn>
auto with_field(const FieldDesc& fd, Fn&& fn) {
  if (fd.kind == FieldDesc::QQ) {
    RationalField f;
    return fn(f);
  }
  PrimeField f(fd.p);
  return fn(f);
}

}  // namespace detail

// Dense-or-sparse exact matrix. Rows hold images of domain basis vectors when
// the matrix is read as a linear map of row vectors.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(FieldDesc fd, std::uint64_t rows, std::uint64_t cols)
      : field_(fd), nrows_(rows), ncols_(cols) {
    detail::with_field(field_, [&](auto& f) {
      using F = std::decay_t<decltype(f)>;
      rows_v_ = std::vector<SparseVec<F>>(std::size_t(rows));
      return 0;
    });
  }

  const FieldDesc& field() const { return field_; }
  std::uint64_t rows() const { return nrows_; }
  std::uint64_t cols() const { return ncols_; }

  enum class Storage { Dense, Sparse };
  Storage storage() const {
    if (ncols_ > 4096) return Storage::Sparse;
    std::uint64_t cells = nrows_ * ncols_;
    return (cells > 0 && nnz() * 10 < cells) ? Storage::Sparse : Storage::Dense;
  }

  std::uint64_t nnz() const {
    std::uint64_t n = 0;
    std::visit([&](const auto& rs) { for (const auto& r : rs) n += r.nnz(); }, rows_v_);
    return n;
  }

  void set(std::uint64_t r, std::uint64_t c, const Scalar& v) {
    require(v.field == field_, ErrorKind::FieldMismatch,
            "entry field " + v.field.str() + " differs from matrix field " + field_.str());
    detail::with_field(field_, [&](auto& f) {
      using F = std::decay_t<decltype(f)>;
      auto& row = std::get<std::vector<SparseVec<F>>>(rows_v_)[std::size_t(r)];
      std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
      for (std::size_t k = 0; k < row.nnz(); ++k)
        if (row.idx[k] != c) entries.emplace_back(row.idx[k], row.val[k]);
      auto ev = std::get<typename F::Elem>(v.value);
      if (!f.is_zero(ev)) entries.emplace_back(c, ev);
      row = make_sparse(f, std::move(entries));
      return 0;
    });
  }

  Scalar get(std::uint64_t r, std::uint64_t c) const {
    return detail::with_field(field_, [&](auto& f) {
      using F = std::decay_t<decltype(f)>;
      const auto& row = std::get<std::vector<SparseVec<F>>>(rows_v_)[std::size_t(r)];
      return Scalar{field_, row.get(f, c)};
    });
  }

  template <class F>
  const std::vector<SparseVec<F>>& typed_rows() const {
    return std::get<std::vector<SparseVec<F>>>(rows_v_);
  }
  template <class F>
  std::vector<SparseVec<F>>& typed_rows() {
    return std::get<std::vector<SparseVec<F>>>(rows_v_);
  }

  template <class F>
  static ExactMatrix from_rows(const FieldDesc& fd, std::uint64_t ncols,
                               std::vector<SparseVec<F>> rows) {
    ExactMatrix m;
    m.field_ = fd;
    m.nrows_ = rows.size();
    m.ncols_ = ncols;
    m.rows_v_ = std::move(rows);
    return m;
  }

  bool operator==(const ExactMatrix& o) const {
    return field_ == o.field_ && nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_v_ == o.rows_v_;
  }

 private:
  FieldDesc field_;
  std::uint64_t nrows_ = 0, ncols_ = 0;
  std::variant<std::vector<SparseVec<RationalField>>, std::vector<SparseVec<PrimeField>>> rows_v_;
};

inline void require_same_field(const FieldDesc& a, const FieldDesc& b) {
  require(a == b, ErrorKind::FieldMismatch,
          "mixed field descriptors: " + a.str() + " vs " + b.str());
}

// Unique reduced row echelon form; row space preserved.
inline ExactMatrix rref(const ExactMatrix& m) {
  return detail::with_field(m.field(), [&](auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto s = row_space<F>(f, m.cols(), m.typed_rows<F>());
    return ExactMatrix::from_rows<F>(m.field(), m.cols(), std::move(s.rows));
  });
}

struct TaggedSubspace {
  FieldDesc field;
  std::uint64_t ambient = 0;
  std::variant<Subspace<RationalField>, Subspace<PrimeField>> value;

  std::size_t dim() const {
    return std::visit([](const auto& s) { return s.dim(); }, value);
  }
  ExactMatrix basis() const {
    if (field.kind == FieldDesc::QQ) {
      auto s = std::get<Subspace<RationalField>>(value);
      return ExactMatrix::from_rows<RationalField>(field, ambient, std::move(s.rows));
    }
    auto s = std::get<Subspace<PrimeField>>(value);
    return ExactMatrix::from_rows<PrimeField>(field, ambient, std::move(s.rows));
  }
  bool operator==(const TaggedSubspace& o) const {
    return field == o.field && ambient == o.ambient && value == o.value;
  }
};

struct TaggedLinearMap {
  FieldDesc field;
  std::uint64_t domain_dim = 0, codomain_dim = 0;
  ExactMatrix matrix;  // domain_dim rows, codomain_dim cols
};

inline TaggedSubspace subspace_of(const ExactMatrix& m) {
  return detail::with_field(m.field(), [&](auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto s = row_space<F>(f, m.cols(), m.typed_rows<F>());
    return TaggedSubspace{m.field(), m.cols(), std::move(s)};
  });
}

inline TaggedLinearMap linear_map_of(const ExactMatrix& m, std::uint64_t dom,
                                     std::uint64_t codom) {
  require(m.rows() == dom && m.cols() == codom, ErrorKind::InputError,
          "matrix shape does not match declared dimensions");
  return TaggedLinearMap{m.field(), dom, codom, m};
}

inline std::pair<TaggedSubspace, TaggedSubspace> kernel_image(const TaggedLinearMap& f) {
  return detail::with_field(f.field, [&](auto& fld) {
    using F = std::decay_t<decltype(fld)>;
    LinearMap<F> lm{f.domain_dim, f.codomain_dim, f.matrix.typed_rows<F>()};
    auto [ker, im] = kernel_image(fld, lm);
    return std::make_pair(TaggedSubspace{f.field, f.domain_dim, std::move(ker)},
                          TaggedSubspace{f.field, f.codomain_dim, std::move(im)});
  });
}

inline TaggedSubspace subspace_sum(const TaggedSubspace& a, const TaggedSubspace& b) {
  require_same_field(a.field, b.field);
  require(a.ambient == b.ambient, ErrorKind::AmbientMismatch, "ambient dimensions differ");
  return detail::with_field(a.field, [&](auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto s = subspace_sum(f, std::get<Subspace<F>>(a.value), std::get<Subspace<F>>(b.value));
    return TaggedSubspace{a.field, a.ambient, std::move(s)};
  });
}

inline TaggedSubspace subspace_intersect(const TaggedSubspace& a, const TaggedSubspace& b) {
  require_same_field(a.field, b.field);
  require(a.ambient == b.ambient, ErrorKind::AmbientMismatch, "ambient dimensions differ");
  return detail::with_field(a.field, [&](auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto s = subspace_intersect(f, std::get<Subspace<F>>(a.value), std::get<Subspace<F>>(b.value));
    return TaggedSubspace{a.field, a.ambient, std::move(s)};
  });
}

inline TaggedSubspace perp(const TaggedSubspace& a) {
  return detail::with_field(a.field, [&](auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto s = subspace_perp(f, std::get<Subspace<F>>(a.value));
    return TaggedSubspace{a.field, a.ambient, std::move(s)};
  });
}

}  // namespace homkoszul
