#pragma once

#include <hodgecx/complex.hpp>
#include <hodgecx/constructions.hpp>
#include <hodgecx/rng.hpp>

#include <vector>

namespace hodgecx {

// Random bounded complex with d after d = 0, assembled from elementary
// summands (cohomology generators and contractible two-term pieces) hidden
// behind a random change of basis per degree.
template <class K>
Complex<K> random_complex(DetRng& rng, int lo, int len, int max_dim_per_degree) {
  // Plan dimensions from summands.
  std::vector<int> h(len, 0);   // surviving classes per degree
  std::vector<int> c(len, 0);   // contractible pieces starting at degree t
  for (int t = 0; t < len; ++t) h[t] = rng.uniform(0, 2);
  for (int t = 0; t + 1 < len; ++t) c[t] = rng.uniform(0, 2);
  std::vector<int> dims(len, 0);
  for (int t = 0; t < len; ++t) {
    dims[t] = h[t] + c[t] + (t > 0 ? c[t - 1] : 0);
    if (dims[t] > max_dim_per_degree) {
      int over = dims[t] - max_dim_per_degree;
      int cut = std::min(over, h[t]);
      h[t] -= cut;
      over -= cut;
      if (over > 0 && c[t] > 0) c[t] -= std::min(over, c[t]);
      dims[t] = h[t] + c[t] + (t > 0 ? c[t - 1] : 0);
    }
  }
  // In split coordinates (h-block, c-start block, c-end block), d maps the
  // c-start block of degree t to the c-end block of degree t+1.
  std::vector<Matrix<K>> diffs;
  for (int t = 0; t + 1 < len; ++t) {
    Matrix<K> d(dims[t + 1], dims[t]);
    for (int k = 0; k < c[t]; ++k) d.at(h[t + 1] + c[t + 1] + k, h[t] + k) = K(1);
    diffs.push_back(std::move(d));
  }
  // Random unimodular-ish change of basis per degree.
  std::vector<Matrix<K>> bases;
  for (int t = 0; t < len; ++t) {
    Matrix<K> g = Matrix<K>::identity(dims[t]);
    for (int step = 0; step < 2 * dims[t]; ++step) {
      int i = dims[t] > 0 ? rng.uniform(0, dims[t] - 1) : 0;
      int j = dims[t] > 0 ? rng.uniform(0, dims[t] - 1) : 0;
      if (dims[t] == 0 || i == j) continue;
      K s(rng.uniform(-2, 2));
      for (int col = 0; col < dims[t]; ++col) g.at(i, col) += s * g.at(j, col);
    }
    bases.push_back(std::move(g));
  }
  for (int t = 0; t + 1 < len; ++t) {
    auto inv = inverse(bases[t]);
    diffs[t] = bases[t + 1] * diffs[t] * *inv;
  }
  return Complex<K>(lo, dims, diffs);
}

// Random d-compatible decreasing filtration: pick random nested chains per
// degree, then force compatibility from the top degree down with
// F^p(n) := R^p(n) meet d^{-1} F^p(n+1).
template <class K>
Filtration<K> random_compatible_filtration(DetRng& rng, const Complex<K>& cx, int max_jumps,
                                           Orientation o = Orientation::decreasing) {
  int lo_idx = 0;
  int hi_idx = std::max(1, max_jumps);
  std::vector<FiltChain<K>> chains(static_cast<size_t>(std::max(0, cx.hi() - cx.lo() + 1)),
                                   FiltChain<K>(0));
  std::vector<std::vector<Subspace<K>>> values(chains.size());
  for (int n = cx.hi(); n >= cx.lo(); --n) {
    size_t idx = static_cast<size_t>(n - cx.lo());
    int dim = cx.dim(n);
    // Random nested chain sampled at indices lo_idx..hi_idx.
    std::vector<Subspace<K>> vals;
    Subspace<K> cur = Subspace<K>::full(dim);
    for (int p = lo_idx; p <= hi_idx; ++p) {
      if (p > lo_idx && cur.dim() > 0 && rng.coin(2, 3)) {
        int drop = rng.uniform(1, cur.dim());
        // Random subspace of cur of dimension cur.dim()-drop.
        Matrix<K> gens(cur.dim() - drop, dim);
        for (int i = 0; i < gens.rows(); ++i) {
          std::vector<K> v(static_cast<size_t>(dim), K(0));
          for (int t = 0; t < cur.dim(); ++t) {
            K s(rng.uniform(-2, 2));
            for (int j = 0; j < dim; ++j) v[static_cast<size_t>(j)] += s * cur.basis().at(t, j);
          }
          for (int j = 0; j < dim; ++j) gens.at(i, j) = v[static_cast<size_t>(j)];
        }
        cur = Subspace<K>::span(dim, gens);
      }
      Subspace<K> forced = cur;
      if (n < cx.hi()) {
        size_t up = static_cast<size_t>(n + 1 - cx.lo());
        forced = cur.intersect(values[up][static_cast<size_t>(p - lo_idx)].preimage_under(cx.d(n)));
      }
      vals.push_back(forced);
    }
    // Saturate: force full at the bottom and zero at the top.
    vals.front() = Subspace<K>::full(dim);
    vals.back() = Subspace<K>::zero(dim);
    // Re-check nestedness after forcing the ends (forcing can only shrink).
    for (size_t t = 1; t < vals.size(); ++t)
      if (!vals[t - 1].contains(vals[t])) vals[t] = vals[t - 1].intersect(vals[t]);
    values[idx] = vals;
    if (dim == 0) {
      chains[idx] = FiltChain<K>(0);
      continue;
    }
    chains[idx] = FiltChain<K>::build(
        dim, lo_idx, hi_idx,
        [&](int p) { return values[idx][static_cast<size_t>(p - lo_idx)]; });
  }
  return Filtration<K>(o, cx.lo(), std::move(chains));
}

}  // namespace hodgecx
