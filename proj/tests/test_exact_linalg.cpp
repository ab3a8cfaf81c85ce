// Exact linear algebra substrate: canonical RREF, kernel/image, subspace
// calculus and the tagged field-descriptor surface.
#include <random>

#include "doctest.h"
#include "homkoszul/exact.hpp"

using namespace homkoszul;

namespace {

ExactMatrix qmat(std::uint64_t rows, std::uint64_t cols,
                 const std::vector<std::vector<long>>& data) {
  ExactMatrix m(FieldDesc::rationals(), rows, cols);
  for (std::uint64_t i = 0; i < rows; ++i)
    for (std::uint64_t j = 0; j < cols; ++j)
      if (data[i][j] != 0) m.set(i, j, Scalar::rational(mpq_class(data[i][j])));
  return m;
}

template <class F>
SparseVec<F> vec(const F& f, const std::vector<long>& dense) {
  std::vector<std::pair<std::uint64_t, typename F::Elem>> e;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) e.emplace_back(i, f.from_int(dense[i]));
  return make_sparse(f, std::move(e));
}

}  // namespace

TEST_CASE("rref collapses proportional rows") {
  auto m = qmat(2, 2, {{2, 4}, {1, 2}});
  auto r = rref(m);
  CHECK(r.rows() == 1);
  CHECK(r.get(0, 0) == Scalar::rational(1));
  CHECK(r.get(0, 1) == Scalar::rational(2));
}

TEST_CASE("rref fixes the identity") {
  auto m = qmat(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rref(m) == m);
}

TEST_CASE("rref sorts a row swap") {
  auto m = qmat(2, 2, {{0, 1}, {1, 0}});
  auto r = rref(m);
  CHECK(r.get(0, 0) == Scalar::rational(1));
  CHECK(r.get(0, 1) == Scalar::rational(0));
  CHECK(r.get(1, 1) == Scalar::rational(1));
}

TEST_CASE("rref is idempotent and row-space preserving on random matrices") {
  std::mt19937_64 rng(7);
  RationalField QF;
  PrimeField GF(32003);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint64_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
    std::vector<std::vector<long>> data(rows, std::vector<long>(cols));
    for (auto& r : data)
      for (auto& x : r) x = long(rng() % 7) - 3;
    auto m = qmat(rows, cols, data);
    auto r1 = rref(m);
    CHECK(rref(r1) == r1);
    // row space preserved: every original row reduces to zero against r1
    Eliminator<RationalField> e(QF, cols);
    for (const auto& row : r1.typed_rows<RationalField>()) e.add_row(row);
    for (const auto& row : m.typed_rows<RationalField>()) CHECK(e.contains(row));
    // same story over GF(p)
    Eliminator<PrimeField> ep(GF, cols);
    std::size_t rank_p = 0;
    for (const auto& r : data)
      if (ep.add_row(vec(GF, r))) ++rank_p;
    CHECK(rank_p <= r1.rows());  // mod-p rank can only drop
  }
}

TEST_CASE("kernel_image rank-1 map") {
  // f = [1,1]: k^2 -> k: kernel spanned by (1,-1), image = k
  auto m = qmat(2, 1, {{1}, {1}});
  auto f = linear_map_of(m, 2, 1);
  auto [ker, im] = kernel_image(f);
  CHECK(ker.dim() == 1);
  CHECK(im.dim() == 1);
  auto kb = ker.basis();
  CHECK(kb.get(0, 0) == Scalar::rational(1));
  CHECK(kb.get(0, 1) == Scalar::rational(-1));
}

TEST_CASE("kernel_image zero map") {
  ExactMatrix m(FieldDesc::rationals(), 3, 2);
  auto [ker, im] = kernel_image(linear_map_of(m, 3, 2));
  CHECK(ker.dim() == 3);
  CHECK(im.dim() == 0);
}

TEST_CASE("rank-nullity on random maps, both fields") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::uint64_t dom = 1 + rng() % 7, cod = 1 + rng() % 7;
    std::vector<std::vector<long>> data(dom, std::vector<long>(cod));
    for (auto& r : data)
      for (auto& x : r) x = long(rng() % 9) - 4;
    auto f = linear_map_of(qmat(dom, cod, data), dom, cod);
    auto [ker, im] = kernel_image(f);
    CHECK(ker.dim() + im.dim() == dom);

    PrimeField GF(32003);
    LinearMap<PrimeField> fp{dom, cod, {}};
    for (const auto& r : data) fp.rows.push_back(vec(GF, r));
    auto [kerp, imp] = kernel_image(GF, fp);
    CHECK(kerp.dim() + imp.dim() == dom);
  }
}

TEST_CASE("subspace sum and intersection: modular dimension law") {
  std::mt19937_64 rng(13);
  RationalField QF;
  for (int trial = 0; trial < 40; ++trial) {
    std::uint64_t n = 2 + rng() % 7;
    auto sample = [&](std::size_t rows) {
      std::vector<SparseVec<RationalField>> rs;
      for (std::size_t i = 0; i < rows; ++i) {
        std::vector<long> d(n);
        for (auto& x : d) x = long(rng() % 5) - 2;
        rs.push_back(vec(QF, d));
      }
      return row_space(QF, n, rs);
    };
    auto a = sample(1 + rng() % 4), b = sample(1 + rng() % 4);
    auto s = subspace_sum(QF, a, b);
    auto m = subspace_intersect(QF, a, b);
    CHECK(s.dim() + m.dim() == a.dim() + b.dim());
    // a + a = a, a ∩ a = a, a + 0 = a
    CHECK(subspace_sum(QF, a, a) == a);
    CHECK(subspace_intersect(QF, a, a) == a);
    CHECK(subspace_sum(QF, a, zero_subspace<RationalField>(n)) == a);
    // intersection is contained in both
    for (const auto& r : m.rows) {
      CHECK(subspace_contains(QF, a, r));
      CHECK(subspace_contains(QF, b, r));
    }
  }
}

TEST_CASE("perp dimensions and biduality") {
  RationalField QF;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::uint64_t n = 1 + rng() % 8;
    std::vector<SparseVec<RationalField>> rs;
    for (std::size_t i = 0; i < 1 + rng() % 4; ++i) {
      std::vector<long> d(n);
      for (auto& x : d) x = long(rng() % 5) - 2;
      rs.push_back(vec(QF, d));
    }
    auto s = row_space(QF, n, rs);
    auto p = subspace_perp(QF, s);
    CHECK(p.dim() == n - s.dim());
    CHECK(subspace_perp(QF, p) == s);
  }
  // perp(0) = everything, perp(full) = 0
  auto z = zero_subspace<RationalField>(4);
  CHECK(subspace_perp(QF, z).dim() == 4);
  CHECK(subspace_perp(QF, full_subspace(QF, 4)).dim() == 0);
}

TEST_CASE("perp of span(xy, yx) in k^4 is span(xx, yy)") {
  // words of length 2 over {x,y} in lex order: xx, xy, yx, yy
  RationalField QF;
  auto s = row_space(QF, 4, {vec(QF, {0, 1, 0, 0}), vec(QF, {0, 0, 1, 0})});
  auto p = subspace_perp(QF, s);
  REQUIRE(p.dim() == 2);
  CHECK(p.rows[0] == vec(QF, {1, 0, 0, 0}));
  CHECK(p.rows[1] == vec(QF, {0, 0, 0, 1}));
}

TEST_CASE("mixed field descriptors raise FieldMismatch") {
  ExactMatrix m(FieldDesc::rationals(), 2, 2);
  CHECK_THROWS_AS(m.set(0, 0, Scalar::mod(7, 3)), Error);
  auto a = subspace_of(qmat(1, 2, {{1, 0}}));
  ExactMatrix mp(FieldDesc::prime(7), 1, 2);
  mp.set(0, 0, Scalar::mod(7, 1));
  auto b = subspace_of(mp);
  CHECK_THROWS_AS(subspace_sum(a, b), Error);
  try {
    subspace_sum(a, b);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("ambient mismatch raises AmbientMismatch") {
  RationalField QF;
  auto a = row_space(QF, 3, {vec(QF, {1, 0, 0})});
  auto b = row_space(QF, 4, {vec(QF, {1, 0, 0, 0})});
  CHECK_THROWS_AS(subspace_sum(QF, a, b), Error);
  CHECK_THROWS_AS(subspace_intersect(QF, a, b), Error);
}

TEST_CASE("storage representation switches without observable effect") {
  // 2 x 5000 with a single entry: wide, so sparse
  ExactMatrix wide(FieldDesc::rationals(), 2, 5000);
  wide.set(0, 4321, Scalar::rational(3));
  CHECK(wide.storage() == ExactMatrix::Storage::Sparse);
  // small dense grid
  auto dense = qmat(2, 2, {{1, 2}, {3, 4}});
  CHECK(dense.storage() == ExactMatrix::Storage::Dense);
  // canonical results agree with hand RREF regardless of storage
  auto r = rref(wide);
  CHECK(r.rows() == 1);
  CHECK(r.get(0, 4321) == Scalar::rational(1));
}

TEST_CASE("solve_row finds an exact preimage") {
  RationalField QF;
  std::vector<SparseVec<RationalField>> rows = {vec(QF, {1, 2, 0}), vec(QF, {0, 1, 1})};
  auto target = vec(QF, {1, 4, 2});  // rows[0] + 2*rows[1]
  auto x = solve_row(QF, rows, 3, target);
  LinearMap<RationalField> m{2, 3, rows};
  CHECK(m.apply(QF, x) == target);
}

TEST_CASE("GF(p) scalar parsing and arithmetic") {
  PrimeField f(32003);
  CHECK(f.parse("-1") == 32002);
  CHECK(f.parse("3/2") == f.div(3, 2));
  CHECK(f.mul(f.parse("3/2"), 2) == 3);
  CHECK_THROWS_AS(f.parse("1.5"), Error);
  CHECK_THROWS_AS(PrimeField(32004), Error);
  CHECK(RationalField::parse("-7/3") == mpq_class(-7, 3));
  CHECK_THROWS_AS(RationalField::parse("0.5"), Error);
}
