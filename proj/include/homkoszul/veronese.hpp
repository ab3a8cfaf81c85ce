// Veronese rings and bimodules, the multiplication maps phi_n^{r,t} on
// components of Lambda^{(n,r)} (x)_{Lambda^{(n)}} Lambda^{(n,t)}, and the
// degreewise s-homogeneity report. Tensor components over the Veronese ring
// use the same degree-0-generated presentation as modtensor.hpp.
#pragma once

#include "homkoszul/modtensor.hpp"

namespace homkoszul {

// Components Lambda_{r i + t} for i = 0..N with left/right action by
// Lambda^{(r)}_1 = Lambda_r; the ring itself is the t = 0 case.
template <class F>
struct VeroneseData {
  std::uint32_t r = 1, t = 0, N = 0;
  std::vector<std::int64_t> dims;
  std::vector<BlockDims> blocks;
  // action tables by Lambda_r: rows over valid pairs, classes in the next
  // component's normal basis
  std::vector<std::pair<PairBasis, std::vector<SparseVec<F>>>> left_action, right_action;
};

template <class F>
VeroneseData<F> veronese_bimodule(const AlgebraView<F>& a, std::uint32_t r, std::uint32_t t,
                                  std::uint32_t N) {
  require(r >= 1, ErrorKind::InputError, "Veronese index r must be positive");
  VeroneseData<F> v;
  v.r = r;
  v.t = t;
  v.N = N;
  for (std::uint32_t i = 0; i <= N; ++i) {
    v.dims.push_back(a.dim(r * i + t));
    v.blocks.push_back(a.block_dims(r * i + t));
    if (i < N) {
      // left: Lambda_r (x) Lambda_{ri+t} -> Lambda_{r(i+1)+t}
      v.left_action.push_back(a.mult_pairs(r, r * i + t));
      v.right_action.push_back(a.mult_pairs(r * i + t, r));
    }
  }
  return v;
}

template <class F>
VeroneseData<F> veronese_ring(const AlgebraView<F>& a, std::uint32_t r, std::uint32_t N) {
  return veronese_bimodule(a, r, 0u, N);
}

// The component (phi_n^{r,t})_i of the multiplication-induced map
// (Lambda^{(n,r)} (x)_{Lambda^{(n)}} Lambda^{(n,t)})_i -> Lambda_{n i + r + t}.
// For i = 0 the domain is Lambda_r (x) Lambda_t on the valid pair basis; for
// i > 0 the domain is the quotient of Lambda_{n i + r} (x) Lambda_t by the
// middle-action rows, and the returned map is on its canonical basis.
template <class F>
LinearMap<F> phi_map(const AlgebraView<F>& a, std::uint32_t n, std::uint32_t r, std::uint32_t t,
                     std::uint32_t i) {
  require(n >= 1 && r >= 1 && t >= 1, ErrorKind::InputError, "phi indices must be positive");
  const F& field = a.field();
  if (i == 0) {
    auto [pb, rows] = a.mult_pairs(r, t);
    return LinearMap<F>{pb.size(), std::uint64_t(a.dim(r + t)), std::move(rows)};
  }
  // generators X_i (x) Y_0 with X_i = Lambda_{n i + r}, Y_0 = Lambda_t
  const BlockInfo& xb = a.degree(n * i + r).blocks;
  const BlockInfo& yb = a.degree(t).blocks;
  PairBasis gens = make_pair_basis(xb, yb);
  BlockInfo gb;
  for (auto [xi, y0] : gens.pairs) {
    gb.src.push_back(xb.src[xi]);
    gb.tgt.push_back(yb.tgt[y0]);
  }
  std::vector<SparseVec<F>> rels;
  for (std::uint32_t k = 1; k <= i; ++k) {
    // N_k = ker(Lambda_{n k} (x) Lambda_t -> Lambda_{n k + t})
    auto [np, nrows] = a.mult_pairs(n * k, t);
    LinearMap<F> nmap{np.size(), std::uint64_t(a.dim(n * k + t)), std::move(nrows)};
    Subspace<F> nk = map_kernel(field, nmap, a.budget());
    if (nk.dim() == 0) continue;
    auto [xp, xrows] = a.mult_pairs(n * (i - k) + r, n * k);
    const BlockInfo& xprev = a.degree(n * (i - k) + r).blocks;
    for (std::uint32_t x = 0; x < xprev.dim(); ++x) {
      for (const auto& nrow : nk.rows) {
        std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
        for (std::size_t u = 0; u < nrow.nnz(); ++u) {
          auto [a_idx, y0] = np.pairs[std::size_t(nrow.idx[u])];
          if (xprev.tgt[x] != a.degree(n * k).blocks.src[a_idx]) continue;
          const SparseVec<F>& prod = xrows[std::size_t(xp.index_of(x, a_idx))];
          for (std::size_t w = 0; w < prod.nnz(); ++w)
            entries.emplace_back(gens.index_of(std::uint32_t(prod.idx[w]), y0),
                                 field.mul(nrow.val[u], prod.val[w]));
        }
        auto row = make_sparse(field, std::move(entries));
        if (!row.empty()) rels.push_back(std::move(row));
      }
    }
  }
  QuotPres<F> q = quotient_of(field, gb, rels, a.budget());
  // the induced map on the canonical quotient basis
  auto [mp, mrows] = a.mult_pairs(n * i + r, t);
  LinearMap<F> out;
  out.domain_dim = q.dim();
  out.codomain_dim = std::uint64_t(a.dim(n * i + r + t));
  for (std::uint64_t b = 0; b < q.dim(); ++b) {
    auto [x, y0] = gens.pairs[std::size_t(q.basis_gen[std::size_t(b)])];
    out.rows.push_back(mrows[std::size_t(mp.index_of(x, y0))]);
  }
  return out;
}

struct HomogeneityCheck {
  std::string condition;
  std::uint32_t index = 0;
  bool pass = false;
};

struct HomogeneityReport {
  std::vector<HomogeneityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Verifies, up to `bound`: surjectivity of (phi_s^{r,1})_0 for r >= 1,
// bijectivity for r < s-1, and bijectivity of (phi_n^{1,1})_1 for n >= s-1.
template <class F>
HomogeneityReport s_homogeneity_witness(const AlgebraView<F>& a, std::uint32_t bound) {
  HomogeneityReport rep;
  const F& field = a.field();
  for (std::uint32_t r = 1; r <= bound; ++r) {
    auto [pb, rows] = a.mult_pairs(r, 1);
    LinearMap<F> lm{pb.size(), std::uint64_t(a.dim(r + 1)), std::move(rows)};
    std::size_t rank = map_rank(field, lm, a.budget());
    rep.checks.push_back({"surjective_phi_s_r1_deg0", r, rank == std::size_t(a.dim(r + 1))});
    if (r < a.s() - 1)
      rep.checks.push_back(
          {"bijective_phi_s_r1_deg0", r,
           rank == std::size_t(a.dim(r + 1)) && lm.domain_dim == std::uint64_t(a.dim(r + 1))});
  }
  for (std::uint32_t n = a.s() >= 1 ? a.s() - 1 : 1; n <= bound; ++n) {
    if (n < 1) continue;
    LinearMap<F> lm = phi_map(a, n, 1, 1, 1);
    std::size_t rank = map_rank(field, lm, a.budget());
    bool bij = rank == std::size_t(a.dim(n + 2)) && lm.domain_dim == std::uint64_t(a.dim(n + 2));
    rep.checks.push_back({"bijective_phi_n_11_deg1", n, bij});
  }
  return rep;
}

}  // namespace homkoszul
