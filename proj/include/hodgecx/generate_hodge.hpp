#pragma once

#include <hodgecx/generate.hpp>
#include <hodgecx/hodge.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hodgecx {

// Degreewise change of basis transported to every filtration.
template <class K>
TriFilteredComplex<K> conjugate_tri(const TriFilteredComplex<K>& a,
                                    const std::vector<Matrix<K>>& g) {
  const Complex<K>& cx = a.cx;
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  for (int n = cx.lo(); n <= cx.hi(); ++n) dims.push_back(cx.dim(n));
  for (int n = cx.lo(); n < cx.hi(); ++n) {
    const Matrix<K>& gn = g[static_cast<size_t>(n - cx.lo())];
    const Matrix<K>& gn1 = g[static_cast<size_t>(n + 1 - cx.lo())];
    diffs.push_back(gn1 * cx.d(n) * *inverse(gn));
  }
  Complex<K> ncx(cx.lo(), dims, diffs);
  auto transport = [&](const Filtration<K>& filt) {
    return Filtration<K>::build(ncx, filt.orientation(), [&](int n) {
      const FiltChain<K>& ch = filt.chain(n);
      const Matrix<K>& gn = g[static_cast<size_t>(n - cx.lo())];
      if (ch.ambient() == 0) return FiltChain<K>(0);
      return FiltChain<K>::build(ch.ambient(), ch.full_until(), ch.zero_from(),
                                 [&](int p) { return ch.at(p).image_under(gn); });
    });
  };
  return {ncx, transport(a.f), transport(a.fbar), transport(a.w)};
}

template <class K>
Matrix<K> random_invertible(DetRng& rng, int n) {
  Matrix<K> g = Matrix<K>::identity(n);
  for (int step = 0; step < 2 * n; ++step) {
    if (n < 2) break;
    int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
    if (i == j) continue;
    K s(rng.uniform(-2, 2));
    for (int c = 0; c < n; ++c) g.at(i, c) += s * g.at(j, c);
  }
  return g;
}

// Degreewise direct sum (no shifts anywhere).
template <class K>
TriFilteredComplex<K> direct_sum_tri(const TriFilteredComplex<K>& a,
                                     const TriFilteredComplex<K>& b) {
  int lo = std::min(a.cx.lo(), b.cx.lo());
  int hi = std::max(a.cx.hi(), b.cx.hi());
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(a.cx.dim(n) + b.cx.dim(n));
  for (int n = lo; n < hi; ++n) {
    Matrix<K> d(a.cx.dim(n + 1) + b.cx.dim(n + 1), a.cx.dim(n) + b.cx.dim(n));
    Matrix<K> da = a.cx.d(n), db = b.cx.d(n);
    for (int i = 0; i < da.rows(); ++i)
      for (int j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
    for (int i = 0; i < db.rows(); ++i)
      for (int j = 0; j < db.cols(); ++j) d.at(a.cx.dim(n + 1) + i, a.cx.dim(n) + j) = db.at(i, j);
    diffs.push_back(std::move(d));
  }
  Complex<K> cx(lo, dims, diffs);
  auto join = [&](const Filtration<K>& fa, const Filtration<K>& fb) {
    return Filtration<K>::build(cx, fa.orientation(), [&](int n) {
      const FiltChain<K>& ca = fa.chain(n);
      const FiltChain<K>& cb = fb.chain(n);
      int da = a.cx.dim(n), db = b.cx.dim(n);
      if (da + db == 0) return FiltChain<K>(0);
      int from = 0, to = 0;
      bool first = true;
      if (da > 0) {
        from = ca.full_until();
        to = ca.zero_from();
        first = false;
      }
      if (db > 0) {
        from = first ? cb.full_until() : std::min(from, cb.full_until());
        to = first ? cb.zero_from() : std::max(to, cb.zero_from());
      }
      return FiltChain<K>::build(da + db, from, to, [&](int p) {
        return direct_sum_subspace(ca.at(p), da, cb.at(p), db);
      });
    });
  };
  return {cx, join(a.f, b.f), join(a.fbar, b.fbar), join(a.w, b.w)};
}

// A split complex of mixed Hodge structures: each basis line carries a
// (weight, type) label; differentials are block-diagonal per label and
// assembled from elementary contractible pieces.
template <class K>
struct SplitMhsComplex {
  int lo = 0;
  std::vector<FilteredSpace<K>> spaces;
  std::vector<Matrix<K>> diffs;
  // labels[t][j] = (weight, f-type) of basis line j in degree lo + t.
  std::vector<std::vector<std::pair<int, int>>> labels;
};

template <class K>
FilteredSpace<K> space_from_labels(const std::vector<std::pair<int, int>>& labels) {
  FilteredSpace<K> s;
  s.dim = static_cast<int>(labels.size());
  if (s.dim == 0) {
    s.f = FiltChain<K>(0);
    s.fbar = FiltChain<K>(0);
    s.w = FiltChain<K>(0);
    return s;
  }
  auto span_where = [&](auto pred) {
    std::vector<std::vector<K>> gens;
    for (int j = 0; j < s.dim; ++j) {
      if (!pred(labels[static_cast<size_t>(j)])) continue;
      std::vector<K> v(static_cast<size_t>(s.dim), K(0));
      v[static_cast<size_t>(j)] = K(1);
      gens.push_back(std::move(v));
    }
    return Subspace<K>::span_vectors(s.dim, gens);
  };
  int pmin = labels[0].second, pmax = labels[0].second;
  int qmin = labels[0].first - labels[0].second, qmax = qmin;
  int wmin = labels[0].first, wmax = labels[0].first;
  for (const auto& l : labels) {
    pmin = std::min(pmin, l.second);
    pmax = std::max(pmax, l.second);
    qmin = std::min(qmin, l.first - l.second);
    qmax = std::max(qmax, l.first - l.second);
    wmin = std::min(wmin, l.first);
    wmax = std::max(wmax, l.first);
  }
  s.f = FiltChain<K>::build(s.dim, pmin, pmax + 1, [&](int a) {
    return span_where([&](const std::pair<int, int>& l) { return l.second >= a; });
  });
  s.fbar = FiltChain<K>::build(s.dim, qmin, qmax + 1, [&](int b) {
    return span_where([&](const std::pair<int, int>& l) { return l.first - l.second >= b; });
  });
  // Decreasing W: W^j = span of lines with weight <= -j.
  s.w = FiltChain<K>::build(s.dim, -wmax, -wmin + 1, [&](int j) {
    return span_where([&](const std::pair<int, int>& l) { return l.first <= -j; });
  });
  return s;
}

template <class K>
SplitMhsComplex<K> random_split_mhs_complex(DetRng& rng, int lo, int len, int max_dim) {
  // Choose a few (weight, type) classes.
  int n_classes = rng.uniform(1, 3);
  std::vector<std::pair<int, int>> classes;
  for (int c = 0; c < n_classes; ++c) {
    int w = rng.uniform(-1, 2);
    int p = rng.uniform(std::min(0, w), std::max(0, w));
    classes.emplace_back(w, p);
  }
  SplitMhsComplex<K> out;
  out.lo = lo;
  out.labels.assign(static_cast<size_t>(len), {});
  std::vector<std::vector<std::pair<int, int>>>& labels = out.labels;
  std::vector<Matrix<K>> diffs;
  // Scatter surviving lines and contractible pairs per class.
  std::vector<std::vector<int>> pair_from(static_cast<size_t>(len));
  for (int c = 0; c < n_classes; ++c) {
    for (int t = 0; t < len; ++t) {
      if (static_cast<int>(labels[static_cast<size_t>(t)].size()) < max_dim && rng.coin(1, 2))
        labels[static_cast<size_t>(t)].push_back(classes[static_cast<size_t>(c)]);
      if (t + 1 < len && static_cast<int>(labels[static_cast<size_t>(t)].size()) < max_dim &&
          static_cast<int>(labels[static_cast<size_t>(t + 1)].size()) < max_dim &&
          rng.coin(1, 2)) {
        // Contractible pair: a line in degree t mapped isomorphically onto one
        // in degree t+1.
        labels[static_cast<size_t>(t)].push_back(classes[static_cast<size_t>(c)]);
        int src_idx = static_cast<int>(labels[static_cast<size_t>(t)].size()) - 1;
        labels[static_cast<size_t>(t + 1)].push_back(classes[static_cast<size_t>(c)]);
        int dst_idx = static_cast<int>(labels[static_cast<size_t>(t + 1)].size()) - 1;
        pair_from[static_cast<size_t>(t)].push_back(src_idx * 1000 + dst_idx);
      }
    }
  }
  for (int t = 0; t < len; ++t)
    out.spaces.push_back(space_from_labels<K>(labels[static_cast<size_t>(t)]));
  for (int t = 0; t + 1 < len; ++t) {
    Matrix<K> d(out.spaces[static_cast<size_t>(t + 1)].dim, out.spaces[static_cast<size_t>(t)].dim);
    for (int code : pair_from[static_cast<size_t>(t)])
      d.at(code % 1000, code / 1000) = K(1);
    diffs.push_back(std::move(d));
  }
  out.diffs = std::move(diffs);
  return out;
}

// Random chain map between two split complexes, supported on matching
// (weight, type) labels; found by solving the chain-map equations exactly.
template <class K>
std::vector<Matrix<K>> random_split_chain_map(DetRng& rng, const SplitMhsComplex<K>& x,
                                              const SplitMhsComplex<K>& y) {
  int len = static_cast<int>(x.spaces.size());
  if (static_cast<int>(y.spaces.size()) != len || x.lo != y.lo)
    throw std::invalid_argument("random_split_chain_map: shape mismatch");
  // Variables: allowed entries (same label) of each phi_t.
  struct Var {
    int t, row, col;
  };
  std::vector<Var> vars;
  for (int t = 0; t < len; ++t) {
    for (int r = 0; r < y.spaces[static_cast<size_t>(t)].dim; ++r)
      for (int c = 0; c < x.spaces[static_cast<size_t>(t)].dim; ++c)
        if (y.labels[static_cast<size_t>(t)][static_cast<size_t>(r)] ==
            x.labels[static_cast<size_t>(t)][static_cast<size_t>(c)])
          vars.push_back({t, r, c});
  }
  auto var_index = [&](int t, int r, int c) {
    for (size_t k = 0; k < vars.size(); ++k)
      if (vars[k].t == t && vars[k].row == r && vars[k].col == c) return static_cast<int>(k);
    return -1;
  };
  // Conditions: (d_Y phi_t - phi_{t+1} d_X)(r, c) = 0 for all t, r, c.
  std::vector<std::vector<K>> rows;
  for (int t = 0; t + 1 < len; ++t) {
    const Matrix<K>& dx = x.diffs[static_cast<size_t>(t)];
    const Matrix<K>& dy = y.diffs[static_cast<size_t>(t)];
    int rows_n = y.spaces[static_cast<size_t>(t + 1)].dim;
    int cols_n = x.spaces[static_cast<size_t>(t)].dim;
    for (int r = 0; r < rows_n; ++r)
      for (int c = 0; c < cols_n; ++c) {
        std::vector<K> row(vars.size(), K(0));
        // sum_k dy(r, k) phi_t(k, c) - sum_k phi_{t+1}(r, k) dx(k, c)
        for (int k = 0; k < dy.cols(); ++k) {
          int vi = var_index(t, k, c);
          if (vi >= 0) row[static_cast<size_t>(vi)] += dy.at(r, k);
        }
        for (int k = 0; k < dx.rows(); ++k) {
          int vi = var_index(t + 1, r, k);
          if (vi >= 0) row[static_cast<size_t>(vi)] -= dx.at(k, c);
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix<K> sol = rows.empty() ? Matrix<K>::identity(static_cast<int>(vars.size()))
                               : kernel_basis(Matrix<K>::from_rows(rows));
  std::vector<K> coeffs(static_cast<size_t>(sol.rows()));
  for (auto& c : coeffs) c = K(rng.uniform(-2, 2));
  std::vector<Matrix<K>> phi;
  for (int t = 0; t < len; ++t)
    phi.push_back(Matrix<K>::zero(y.spaces[static_cast<size_t>(t)].dim,
                                  x.spaces[static_cast<size_t>(t)].dim));
  for (size_t k = 0; k < vars.size(); ++k) {
    K val(0);
    for (int s = 0; s < sol.rows(); ++s) val += coeffs[static_cast<size_t>(s)] * sol.at(s, static_cast<int>(k));
    phi[static_cast<size_t>(vars[k].t)].at(vars[k].row, vars[k].col) = val;
  }
  return phi;
}

// Reindex a split complex and hide the splitting behind a change of basis.
template <class K>
TriFilteredComplex<K> hodge_complex_from_split(DetRng& rng, const SplitMhsComplex<K>& s,
                                               bool hide = true) {
  TriFilteredComplex<K> plain = reindex_from_mhs_complex<K>(s.lo, s.spaces, s.diffs);
  if (!hide || plain.cx.is_zero_complex()) return plain;
  std::vector<Matrix<K>> g;
  for (int n = plain.cx.lo(); n <= plain.cx.hi(); ++n)
    g.push_back(random_invertible<K>(rng, plain.cx.dim(n)));
  return conjugate_tri(plain, g);
}

// Random valid Hodge complex: a reindexed split complex of mixed structures,
// optionally run through the closure operations (cone, total, translate,
// twist) that preserve validity.
template <class K>
TriFilteredComplex<K> random_valid_hodge_complex(DetRng& rng, int ops = 2, int max_dim = 3,
                                                 int len = 3) {
  SplitMhsComplex<K> base = random_split_mhs_complex<K>(rng, rng.uniform(-1, 1), len, max_dim);
  TriFilteredComplex<K> cur = hodge_complex_from_split(rng, base);
  for (int step = 0; step < ops; ++step) {
    int op = rng.uniform(0, 3);
    if (op == 0) {
      cur = translate(cur, rng.coin() ? 1 : -1);
    } else if (op == 1) {
      cur = twist(cur, rng.uniform(-1, 1), rng.uniform(-1, 1));
    } else if (op == 2) {
      SplitMhsComplex<K> other =
          random_split_mhs_complex<K>(rng, cur.cx.lo(), 2, 2);
      TriFilteredComplex<K> b = hodge_complex_from_split(rng, other);
      if (rng.coin()) {
        TriMap<K> z(cur, b, ComplexMap<K>::zero(cur.cx, b.cx));
        cur = cone(z).cone;
      } else {
        TriMap<K> z(b, cur, ComplexMap<K>::zero(b.cx, cur.cx));
        cur = cone(z).cone;
      }
    } else {
      SplitMhsComplex<K> other =
          random_split_mhs_complex<K>(rng, cur.cx.lo(), 2, 2);
      TriFilteredComplex<K> b = hodge_complex_from_split(rng, other);
      TriMap<K> z(cur, b, ComplexMap<K>::zero(cur.cx, b.cx));
      cur = total<K>({cur, b}, {z}).tot;
    }
  }
  return cur;
}

// A valid morphism of Hodge complexes with a genuinely random chain map:
// both sides reindexed from split complexes over the same label set.
template <class K>
TriMap<K> random_valid_hodge_morphism(DetRng& rng, int len = 3, int max_dim = 3) {
  SplitMhsComplex<K> x = random_split_mhs_complex<K>(rng, 0, len, max_dim);
  SplitMhsComplex<K> y = random_split_mhs_complex<K>(rng, 0, len, max_dim);
  std::vector<Matrix<K>> phi = random_split_chain_map(rng, x, y);
  TriFilteredComplex<K> a = reindex_from_mhs_complex<K>(x.lo, x.spaces, x.diffs);
  TriFilteredComplex<K> b = reindex_from_mhs_complex<K>(y.lo, y.spaces, y.diffs);
  // Hide both sides, transporting the morphism.
  std::vector<Matrix<K>> ga, gb;
  for (int n = a.cx.lo(); n <= a.cx.hi(); ++n)
    ga.push_back(random_invertible<K>(rng, a.cx.dim(n)));
  for (int n = b.cx.lo(); n <= b.cx.hi(); ++n)
    gb.push_back(random_invertible<K>(rng, b.cx.dim(n)));
  TriFilteredComplex<K> ah = a.cx.is_zero_complex() ? a : conjugate_tri(a, ga);
  TriFilteredComplex<K> bh = b.cx.is_zero_complex() ? b : conjugate_tri(b, gb);
  auto map = ComplexMap<K>::build(ah.cx, bh.cx, [&](int n) {
    if (n < x.lo || n >= x.lo + static_cast<int>(phi.size()))
      return Matrix<K>::zero(bh.cx.dim(n), ah.cx.dim(n));
    Matrix<K> comp = phi[static_cast<size_t>(n - x.lo)];
    if (b.cx.dim(n) > 0 && n >= b.cx.lo() && n <= b.cx.hi())
      comp = gb[static_cast<size_t>(n - b.cx.lo())] * comp;
    if (a.cx.dim(n) > 0 && n >= a.cx.lo() && n <= a.cx.hi())
      comp = comp * *inverse(ga[static_cast<size_t>(n - a.cx.lo())]);
    if (comp.rows() != bh.cx.dim(n) || comp.cols() != ah.cx.dim(n))
      return Matrix<K>::zero(bh.cx.dim(n), ah.cx.dim(n));
    return comp;
  });
  return TriMap<K>(ah, bh, map);
}

// Targeted single-axiom violations with their expected report location.
template <class K>
struct InvalidInstance {
  TriFilteredComplex<K> data;
  std::string axiom;
};

// HC2 violation: acyclic k -> k with F jumping only in the target.
template <class K>
InvalidInstance<K> hc2_violation(DetRng& rng, bool pad) {
  Complex<K> cx(0, {1, 1}, {Matrix<K>::from_rows({{K(1)}})});
  TriFilteredComplex<K> a;
  a.cx = cx;
  a.f = Filtration<K>::build(cx, Orientation::decreasing, [&](int n) {
    return FiltChain<K>::trivial(1, n == 0 ? 0 : 1);
  });
  a.fbar = Filtration<K>::trivial(cx, 0);
  a.w = Filtration<K>::trivial(cx, 0, Orientation::increasing);
  if (pad) a = direct_sum_tri(a, random_valid_hodge_complex<K>(rng, 0, 2, 2));
  return {a, "HC2"};
}

// HC3 violation: one-term weight-0 line with F = Fbar = everything at level 1.
template <class K>
InvalidInstance<K> hc3_violation(DetRng& rng, bool pad) {
  Complex<K> cx = Complex<K>::single(0, 1);
  TriFilteredComplex<K> a;
  a.cx = cx;
  a.f = Filtration<K>::trivial(cx, 1);
  a.fbar = Filtration<K>::trivial(cx, 1);
  a.w = Filtration<K>::trivial(cx, 0, Orientation::increasing);
  if (pad) a = direct_sum_tri(a, random_valid_hodge_complex<K>(rng, 0, 2, 2));
  return {a, "HC3"};
}

// HC3 violation whose W spectral sequence has a nonzero d_2: the W jump in
// the target sits two steps above the source.
template <class K>
TriFilteredComplex<K> d2_nonzero_instance() {
  Complex<K> cx(0, {1, 1}, {Matrix<K>::from_rows({{K(1)}})});
  TriFilteredComplex<K> a;
  a.cx = cx;
  a.f = Filtration<K>::trivial(cx, 0);
  a.fbar = Filtration<K>::trivial(cx, 0);
  a.w = Filtration<K>::build(cx, Orientation::increasing, [&](int n) {
    return FiltChain<K>::trivial(1, n == 0 ? 0 : 2);
  });
  return a;
}

template <class K>
InvalidInstance<K> random_violation(DetRng& rng) {
  int kind = rng.uniform(0, 2);
  bool pad = rng.coin();
  if (kind == 0) return hc2_violation<K>(rng, pad);
  if (kind == 1) return hc3_violation<K>(rng, pad);
  return {d2_nonzero_instance<K>(), "HC3"};
}

}  // namespace hodgecx
