#pragma once

#include <hodgecx/constructions.hpp>
#include <hodgecx/sheaf.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace hodgecx {

// The bar resolution F -> TF -> T^2 F -> ... with cofaces
// delta_i = T^i eta T^{m-i} and differential the alternating sum.
template <class K>
struct BarComplex {
  PosetSheaf<K> base_sheaf;
  std::vector<PosetSheaf<K>> levels;               // levels[m] = T^{m+1} F
  SheafMap<K> augmentation;                        // F -> TF
  std::vector<std::vector<SheafMap<K>>> cofaces;   // cofaces[m][i] : T^{m+1}F -> T^{m+2}F
  std::vector<SheafMap<K>> d;                      // alternating sums

  bool cosimplicial_identities_hold() const {
    // delta_j delta_i = delta_i delta_{j-1} for i < j.
    for (size_t m = 0; m + 1 < cofaces.size(); ++m) {
      for (size_t i = 0; i < cofaces[m].size(); ++i)
        for (size_t j = i + 1; j < cofaces[m + 1].size(); ++j) {
          SheafMap<K> lhs = compose_sheaf_maps(cofaces[m + 1][j], cofaces[m][i]);
          SheafMap<K> rhs = compose_sheaf_maps(cofaces[m + 1][i], cofaces[m][j - 1]);
          if (!sheaf_maps_equal(lhs, rhs)) return false;
        }
    }
    return true;
  }

  bool d_squared_zero() const {
    for (size_t m = 0; m + 1 < d.size(); ++m) {
      SheafMap<K> dd = compose_sheaf_maps(d[m + 1], d[m]);
      for (const auto& c : dd.comp)
        if (!c.is_zero()) return false;
    }
    // d composed with the augmentation also vanishes.
    if (!d.empty()) {
      SheafMap<K> da = compose_sheaf_maps(d[0], augmentation);
      for (const auto& c : da.comp)
        if (!c.is_zero()) return false;
    }
    return true;
  }
};

template <class K>
BarComplex<K> bar_complex(const StratMonad<K>& monad, const PosetSheaf<K>& f, int n_max) {
  if (n_max < 1) throw std::invalid_argument("bar_complex: n_max must be >= 1");
  BarComplex<K> out;
  out.base_sheaf = f;
  // Powers T^0 F = F, ..., T^{n_max+1} F.
  std::vector<PosetSheaf<K>> powers{f};
  for (int m = 1; m <= n_max + 1; ++m) powers.push_back(monad.apply(powers.back()));
  for (int m = 1; m <= n_max; ++m) out.levels.push_back(powers[static_cast<size_t>(m)]);
  out.augmentation = monad.eta(f);
  // delta_i on T^{m}F (level index m-1): T^i(eta_{T^{m-i}F}), i = 0..m.
  for (int m = 1; m <= n_max; ++m) {
    std::vector<SheafMap<K>> deltas;
    for (int i = 0; i <= m; ++i) {
      SheafMap<K> cur = monad.eta(powers[static_cast<size_t>(m - i)]);
      PosetSheaf<K> src = powers[static_cast<size_t>(m - i)];
      PosetSheaf<K> dst = powers[static_cast<size_t>(m - i + 1)];
      for (int k = 0; k < i; ++k) {
        cur = monad.apply_map(src, dst, cur);
        src = monad.apply(src);
        dst = monad.apply(dst);
      }
      deltas.push_back(std::move(cur));
    }
    out.cofaces.push_back(std::move(deltas));
  }
  for (int m = 1; m < n_max; ++m) {
    const auto& deltas = out.cofaces[static_cast<size_t>(m - 1)];
    std::vector<Matrix<K>> comps;
    for (int x = 0; x < f.base()->size(); ++x) {
      Matrix<K> acc = deltas[0].comp[static_cast<size_t>(x)];
      for (size_t i = 1; i < deltas.size(); ++i) {
        const Matrix<K>& c = deltas[i].comp[static_cast<size_t>(x)];
        acc = (i % 2 == 0) ? acc + c : acc - c;
      }
      comps.push_back(std::move(acc));
    }
    out.d.emplace_back(std::move(comps));
  }
  return out;
}

// Verifies h eta = id and that h is a chain contraction of the augmented
// stalk complex: d h + h d = id through the requested range.
template <class K>
bool contracting_homotopy_check(const StratMonad<K>& monad, const PosetSheaf<K>& f, int n_max) {
  BarComplex<K> bar = bar_complex(monad, f, n_max);
  std::vector<PosetSheaf<K>> powers{f};
  for (int m = 1; m <= n_max; ++m) powers.push_back(monad.apply(powers.back()));
  // h_m : T^{m+1} F -> T^m F.
  std::vector<SheafMap<K>> h;
  for (int m = 0; m < n_max; ++m) h.push_back(monad.homotopy(powers[static_cast<size_t>(m)]));
  // h_0 after eta is the identity on F.
  SheafMap<K> he = compose_sheaf_maps(h[0], bar.augmentation);
  if (!sheaf_maps_equal(he, identity_sheaf_map(f))) return false;
  // eta h_0 + h_1 d_0 = id on TF; d_{m-1} h_m + h_{m+1} d_m = id beyond.
  for (int m = 0; m + 1 < n_max; ++m) {
    SheafMap<K> left =
        m == 0 ? compose_sheaf_maps(bar.augmentation, h[0])
               : compose_sheaf_maps(bar.d[static_cast<size_t>(m - 1)], h[static_cast<size_t>(m)]);
    SheafMap<K> right =
        compose_sheaf_maps(h[static_cast<size_t>(m + 1)], bar.d[static_cast<size_t>(m)]);
    for (int x = 0; x < f.base()->size(); ++x) {
      Matrix<K> sum = left.comp[static_cast<size_t>(x)] + right.comp[static_cast<size_t>(x)];
      if (!(sum == Matrix<K>::identity(bar.levels[static_cast<size_t>(m)].dim(x)))) return false;
    }
  }
  return true;
}

// Ordered-chain cochain complex: C^n = sum over strict chains x_0 < ... < x_n
// of F(x_n); the omitted-top face applies the generization map.
template <class K>
struct ChainCochains {
  Complex<K> cx;
  std::vector<std::vector<std::vector<int>>> chains;  // per degree
  std::vector<std::vector<int>> offsets;              // per degree, per chain
};

template <class K>
ChainCochains<K> chain_cochain_complex(const FinitePoset& x, const std::vector<int>& pts,
                                       const PosetSheaf<K>& f) {
  ChainCochains<K> out;
  auto all = x.strict_chains(pts, x.size());
  int maxlen = 0;
  for (const auto& c : all) maxlen = std::max(maxlen, static_cast<int>(c.size()));
  out.chains.assign(static_cast<size_t>(std::max(maxlen, 0)), {});
  for (auto& c : all)
    out.chains[c.size() - 1].push_back(c);
  std::vector<int> dims;
  out.offsets.resize(out.chains.size());
  for (size_t deg = 0; deg < out.chains.size(); ++deg) {
    int total = 0;
    for (const auto& c : out.chains[deg]) {
      out.offsets[deg].push_back(total);
      total += f.dim(c.back());
    }
    dims.push_back(total);
  }
  std::vector<Matrix<K>> diffs;
  for (size_t deg = 0; deg + 1 < out.chains.size(); ++deg) {
    Matrix<K> d(dims[deg + 1], dims[deg]);
    // Index source chains for lookup.
    std::map<std::vector<int>, int> index;
    for (size_t k = 0; k < out.chains[deg].size(); ++k)
      index[out.chains[deg][k]] = static_cast<int>(k);
    for (size_t k = 0; k < out.chains[deg + 1].size(); ++k) {
      const auto& ch = out.chains[deg + 1][k];
      int dst_off = out.offsets[deg + 1][k];
      int n = static_cast<int>(ch.size()) - 1;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> sub = ch;
        sub.erase(sub.begin() + i);
        auto it = index.find(sub);
        if (it == index.end()) continue;
        int src_off = out.offsets[deg][static_cast<size_t>(it->second)];
        K sign = (i % 2 == 0) ? K(1) : K(-1);
        if (i < n) {
          for (int j = 0; j < f.dim(ch.back()); ++j)
            d.at(dst_off + j, src_off + j) += sign;
        } else {
          Matrix<K> r = f.rho(ch[static_cast<size_t>(n - 1)], ch[static_cast<size_t>(n)]);
          for (int a = 0; a < r.rows(); ++a)
            for (int b = 0; b < r.cols(); ++b) d.at(dst_off + a, src_off + b) += sign * r.at(a, b);
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  out.cx = Complex<K>(0, dims, diffs);
  return out;
}

// H^*(X, F) of the whole space.
template <class K>
Cohomology<K> sheaf_cohomology(const PosetSheaf<K>& f) {
  std::vector<int> pts;
  for (int p = 0; p < f.base()->size(); ++p) pts.push_back(p);
  return Cohomology<K>(chain_cochain_complex(*f.base(), pts, f).cx);
}

// Bounded complex of sheaves.
template <class K>
struct SheafComplex {
  PosetPtr base;
  int lo = 0;
  std::vector<PosetSheaf<K>> sheaves;
  std::vector<SheafMap<K>> diffs;  // one per adjacent pair

  int hi() const { return lo + static_cast<int>(sheaves.size()) - 1; }

  Complex<K> stalk_complex(int x) const {
    std::vector<int> dims;
    std::vector<Matrix<K>> d;
    for (const auto& s : sheaves) dims.push_back(s.dim(x));
    for (const auto& m : diffs) d.push_back(m.comp[static_cast<size_t>(x)]);
    return Complex<K>(lo, dims, d);
  }
};

// Rg_* F realized degreewise: the degree-n stalk at b is
// C^n(g^{-1}(up-set of b), F), with generization by chain restriction.
template <class K>
struct DerivedPushforward {
  SheafComplex<K> complex;
  // chains[n][b] lists the chains (source indices) realizing the stalk.
  std::vector<std::vector<std::vector<std::vector<int>>>> chains;
  std::vector<std::vector<std::vector<int>>> offsets;  // [n][b][chain]
};

template <class K>
DerivedPushforward<K> derived_pushforward(const PosetMap& g, const PosetSheaf<K>& f, int n_max) {
  const FinitePoset& a = *g.src;
  const FinitePoset& b = *g.dst;
  DerivedPushforward<K> out;
  out.complex.base = g.dst;
  out.complex.lo = 0;
  out.chains.assign(static_cast<size_t>(n_max + 1), {});
  out.offsets.assign(static_cast<size_t>(n_max + 1), {});
  // Enumerate chains per target point.
  std::vector<std::vector<std::vector<std::vector<int>>>> by_point(
      static_cast<size_t>(n_max + 1),
      std::vector<std::vector<std::vector<int>>>(static_cast<size_t>(b.size())));
  for (int p = 0; p < b.size(); ++p) {
    std::vector<int> fiber = g.preimage(b.up_set(p));
    auto all = a.strict_chains(fiber, n_max);
    for (auto& c : all) {
      int deg = static_cast<int>(c.size()) - 1;
      if (deg <= n_max) by_point[static_cast<size_t>(deg)][static_cast<size_t>(p)].push_back(c);
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    out.chains[static_cast<size_t>(n)] = by_point[static_cast<size_t>(n)];
    out.offsets[static_cast<size_t>(n)].resize(static_cast<size_t>(b.size()));
    std::vector<int> dims(static_cast<size_t>(b.size()), 0);
    for (int p = 0; p < b.size(); ++p) {
      int total = 0;
      for (const auto& c : out.chains[static_cast<size_t>(n)][static_cast<size_t>(p)]) {
        out.offsets[static_cast<size_t>(n)][static_cast<size_t>(p)].push_back(total);
        total += f.dim(c.back());
      }
      dims[static_cast<size_t>(p)] = total;
    }
    out.complex.sheaves.push_back(PosetSheaf<K>::build(
        g.dst, dims,
        [&](int x, int y) {
          // Chains over y form a subset of the chains over x.
          const auto& cx = out.chains[static_cast<size_t>(n)][static_cast<size_t>(x)];
          const auto& cy = out.chains[static_cast<size_t>(n)][static_cast<size_t>(y)];
          const auto& ox = out.offsets[static_cast<size_t>(n)][static_cast<size_t>(x)];
          const auto& oy = out.offsets[static_cast<size_t>(n)][static_cast<size_t>(y)];
          Matrix<K> m(dims[static_cast<size_t>(y)], dims[static_cast<size_t>(x)]);
          std::map<std::vector<int>, int> index;
          for (size_t k = 0; k < cx.size(); ++k) index[cx[k]] = static_cast<int>(k);
          for (size_t k = 0; k < cy.size(); ++k) {
            auto it = index.find(cy[k]);
            if (it == index.end())
              throw std::logic_error("derived_pushforward: chain not found upstairs");
            for (int j = 0; j < f.dim(cy[k].back()); ++j)
              m.at(oy[k] + j, ox[static_cast<size_t>(it->second)] + j) = K(1);
          }
          return m;
        },
        false));
  }
  for (int n = 0; n < n_max; ++n) {
    std::vector<Matrix<K>> comps;
    for (int p = 0; p < b.size(); ++p) {
      const auto& src_chains = out.chains[static_cast<size_t>(n)][static_cast<size_t>(p)];
      const auto& dst_chains = out.chains[static_cast<size_t>(n + 1)][static_cast<size_t>(p)];
      const auto& src_off = out.offsets[static_cast<size_t>(n)][static_cast<size_t>(p)];
      const auto& dst_off = out.offsets[static_cast<size_t>(n + 1)][static_cast<size_t>(p)];
      Matrix<K> d(out.complex.sheaves[static_cast<size_t>(n + 1)].dim(p),
                  out.complex.sheaves[static_cast<size_t>(n)].dim(p));
      std::map<std::vector<int>, int> index;
      for (size_t k = 0; k < src_chains.size(); ++k) index[src_chains[k]] = static_cast<int>(k);
      for (size_t k = 0; k < dst_chains.size(); ++k) {
        const auto& ch = dst_chains[k];
        int m = static_cast<int>(ch.size()) - 1;
        for (int i = 0; i <= m; ++i) {
          std::vector<int> sub = ch;
          sub.erase(sub.begin() + i);
          auto it = index.find(sub);
          if (it == index.end()) continue;
          int so = src_off[static_cast<size_t>(it->second)];
          K sign = (i % 2 == 0) ? K(1) : K(-1);
          if (i < m) {
            for (int j = 0; j < f.dim(ch.back()); ++j) d.at(dst_off[k] + j, so + j) += sign;
          } else {
            Matrix<K> r = f.rho(ch[static_cast<size_t>(m - 1)], ch[static_cast<size_t>(m)]);
            for (int aa = 0; aa < r.rows(); ++aa)
              for (int bb = 0; bb < r.cols(); ++bb)
                d.at(dst_off[k] + aa, so + bb) += sign * r.at(aa, bb);
          }
        }
      }
      comps.push_back(std::move(d));
    }
    out.complex.diffs.emplace_back(std::move(comps));
  }
  return out;
}

// Unit F -> Rg_*(g^* F) in degree zero: single-point chains receive the
// generization of the germ.
template <class K>
SheafMap<K> unit_into_derived(const PosetMap& g, const PosetSheaf<K>& f,
                              const DerivedPushforward<K>& dp) {
  std::vector<Matrix<K>> comps;
  for (int p = 0; p < g.dst->size(); ++p) {
    const auto& chains = dp.chains[0][static_cast<size_t>(p)];
    const auto& offs = dp.offsets[0][static_cast<size_t>(p)];
    Matrix<K> m(dp.complex.sheaves[0].dim(p), f.dim(p));
    for (size_t k = 0; k < chains.size(); ++k) {
      Matrix<K> r = f.rho(p, g(chains[k][0]));
      for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) m.at(offs[k] + i, j) = r.at(i, j);
    }
    comps.push_back(std::move(m));
  }
  return SheafMap<K>(std::move(comps));
}

// Comparison Rg_*(pullback of f along g) -> Rg'_*(pullback along g' = g o u):
// normalized cochain pullback along u, killing degenerate chains.
template <class K>
SheafMap<K> derived_comparison(const PosetMap& u, const PosetMap& g, const PosetSheaf<K>& f,
                               const DerivedPushforward<K>& src, const DerivedPushforward<K>& dst,
                               int degree) {
  std::vector<Matrix<K>> comps;
  for (int p = 0; p < g.dst->size(); ++p) {
    const auto& sc = src.chains[static_cast<size_t>(degree)][static_cast<size_t>(p)];
    const auto& so = src.offsets[static_cast<size_t>(degree)][static_cast<size_t>(p)];
    const auto& dc = dst.chains[static_cast<size_t>(degree)][static_cast<size_t>(p)];
    const auto& dof = dst.offsets[static_cast<size_t>(degree)][static_cast<size_t>(p)];
    Matrix<K> m(dst.complex.sheaves[static_cast<size_t>(degree)].dim(p),
                src.complex.sheaves[static_cast<size_t>(degree)].dim(p));
    std::map<std::vector<int>, int> index;
    for (size_t k = 0; k < sc.size(); ++k) index[sc[k]] = static_cast<int>(k);
    for (size_t k = 0; k < dc.size(); ++k) {
      std::vector<int> image;
      bool strict = true;
      for (int pt : dc[k]) {
        int y = u(pt);
        if (!image.empty()) {
          if (image.back() == y || !u.dst->lt(image.back(), y)) {
            strict = false;
            break;
          }
        }
        image.push_back(y);
      }
      if (!strict) continue;
      auto it = index.find(image);
      if (it == index.end()) throw std::logic_error("derived_comparison: image chain missing");
      // Values match: the pullback stalk at the chain top is f at the image top.
      int d = f.dim(image.back());
      for (int j = 0; j < d; ++j)
        m.at(dof[k] + j, so[static_cast<size_t>(it->second)] + j) = K(1);
    }
    comps.push_back(std::move(m));
  }
  return SheafMap<K>(std::move(comps));
}

template <class K>
TriFilteredComplex<K> with_trivial_filtrations(const Complex<K>& cx) {
  TriFilteredComplex<K> t;
  t.cx = cx;
  t.f = Filtration<K>::trivial(cx, 0);
  t.fbar = Filtration<K>::trivial(cx, 0);
  t.w = Filtration<K>::trivial(cx, 0, Orientation::increasing);
  return t;
}

// Map of chain-cochain complexes induced by a sheaf map: apply the component
// at the top of each chain.
template <class K>
Matrix<K> cochain_block_map(const ChainCochains<K>& src, const ChainCochains<K>& dst,
                            const SheafMap<K>& phi, int deg) {
  Matrix<K> m(dst.cx.dim(deg), src.cx.dim(deg));
  if (deg < 0 || deg >= static_cast<int>(src.chains.size())) return m;
  const auto& chains = src.chains[static_cast<size_t>(deg)];
  const auto& soff = src.offsets[static_cast<size_t>(deg)];
  const auto& doff = dst.offsets[static_cast<size_t>(deg)];
  for (size_t k = 0; k < chains.size(); ++k) {
    const Matrix<K>& c = phi.comp[static_cast<size_t>(chains[k].back())];
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) m.at(doff[k] + i, soff[k] + j) = c.at(i, j);
  }
  return m;
}

// Global sections of the chain-cochain resolution of a complex of sheaves:
// the total complex computing hypercohomology, with the layout retained so
// that sheaf-complex maps induce maps of these complexes.
template <class K>
struct HyperComplex {
  Complex<K> cx;                       // degree = sheaf degree + chain degree
  std::vector<ChainCochains<K>> cols;  // per sheaf level
  std::vector<std::vector<int>> offsets;  // block offsets, [col][n - cx.lo()]
  int lo = 0;                          // sheaf-complex lo
};

template <class K>
HyperComplex<K> hypercohomology(const SheafComplex<K>& sc) {
  HyperComplex<K> out;
  out.lo = sc.lo;
  std::vector<int> all_pts;
  for (int p = 0; p < sc.base->size(); ++p) all_pts.push_back(p);
  for (const auto& sheaf : sc.sheaves)
    out.cols.push_back(chain_cochain_complex(*sc.base, all_pts, sheaf));
  std::vector<TriFilteredComplex<K>> cols;
  std::vector<TriMap<K>> deltas;
  for (size_t q = 0; q < out.cols.size(); ++q)
    cols.push_back(with_trivial_filtrations(out.cols[q].cx));
  for (size_t q = 0; q + 1 < out.cols.size(); ++q) {
    auto cmap = ComplexMap<K>::build(out.cols[q].cx, out.cols[q + 1].cx, [&](int deg) {
      return cochain_block_map(out.cols[q], out.cols[q + 1], sc.diffs[q], deg);
    });
    deltas.emplace_back(cols[q], cols[q + 1], cmap);
  }
  TotalResult<K> tot = total<K>(cols, deltas);
  out.cx = translate(with_trivial_filtrations(tot.tot.cx), -sc.lo).cx;
  // Re-express block offsets against the shifted complex.
  out.offsets.assign(out.cols.size(), {});
  for (int m = out.cx.lo(); m <= out.cx.hi(); ++m) {
    int n = m - sc.lo;  // degree inside the unshifted total
    for (size_t q = 0; q < out.cols.size(); ++q) {
      int off = -1;
      if (n >= tot.tot.cx.lo() && n <= tot.tot.cx.hi())
        off = tot.block_offset(static_cast<int>(q), n);
      out.offsets[q].push_back(off);
    }
  }
  return out;
}

// Induced map on hypercohomology complexes from per-degree sheaf maps
// (aligned by actual sheaf degree).
template <class K>
ComplexMap<K> hyper_map(const HyperComplex<K>& src, const HyperComplex<K>& dst,
                        const std::vector<SheafMap<K>>& comps, int comps_lo) {
  return ComplexMap<K>::build(src.cx, dst.cx, [&](int m) {
    Matrix<K> out(dst.cx.dim(m), src.cx.dim(m));
    for (size_t qs = 0; qs < src.cols.size(); ++qs) {
      int sheaf_deg = src.lo + static_cast<int>(qs);
      int qd = sheaf_deg - dst.lo;
      if (qd < 0 || qd >= static_cast<int>(dst.cols.size())) continue;
      int ci = comps_lo >= 0 ? sheaf_deg - comps_lo : -1;
      if (ci < 0 || ci >= static_cast<int>(comps.size())) continue;
      int chain_deg = m - sheaf_deg;
      if (chain_deg < 0) continue;
      Matrix<K> block = cochain_block_map(src.cols[qs], dst.cols[static_cast<size_t>(qd)],
                                          comps[static_cast<size_t>(ci)], chain_deg);
      if (block.rows() == 0 || block.cols() == 0) continue;
      int soff = src.offsets[qs][static_cast<size_t>(m - src.cx.lo())];
      int doff = dst.offsets[static_cast<size_t>(qd)][static_cast<size_t>(m - dst.cx.lo())];
      if (soff < 0 || doff < 0) continue;
      for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) out.at(doff + i, soff + j) = block.at(i, j);
    }
    return out;
  });
}

template <class K>
struct ComplexSum {
  Complex<K> cx;
  std::vector<int> offsets_a;  // per degree (cx.lo() based)
  std::vector<int> offsets_b;
};

template <class K>
ComplexSum<K> direct_sum_complex(const Complex<K>& a, const Complex<K>& b) {
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n) + b.dim(n));
  for (int n = lo; n < hi; ++n) {
    Matrix<K> d(a.dim(n + 1) + b.dim(n + 1), a.dim(n) + b.dim(n));
    Matrix<K> da = a.d(n), db = b.d(n);
    for (int i = 0; i < da.rows(); ++i)
      for (int j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
    for (int i = 0; i < db.rows(); ++i)
      for (int j = 0; j < db.cols(); ++j) d.at(a.dim(n + 1) + i, a.dim(n) + j) = db.at(i, j);
    diffs.push_back(std::move(d));
  }
  ComplexSum<K> out;
  out.cx = Complex<K>(lo, dims, diffs);
  for (int n = out.cx.lo(); n <= out.cx.hi(); ++n) {
    out.offsets_a.push_back(0);
    out.offsets_b.push_back(a.dim(n));
  }
  return out;
}

// Is Cone(a : P -> Q) -> R, (alpha, q) -> b(q), a quasi-isomorphism in the
// window? Requires b after a = 0.
template <class K>
bool triangle_check(const ComplexMap<K>& a, const ComplexMap<K>& b, int lo, int hi) {
  for (int n = std::min(a.src().lo(), a.dst().lo()); n <= std::max(a.src().hi(), a.dst().hi());
       ++n)
    if (!(b.at(n) * a.at(n)).is_zero()) return false;
  auto pt = with_trivial_filtrations(a.src());
  auto qt = with_trivial_filtrations(a.dst());
  TriMap<K> ta(pt, qt, a);
  auto cn = cone(ta);
  Complex<K> ccx = cn.cone.cx;
  auto comparison = ComplexMap<K>::build(ccx, b.dst(), [&](int n) {
    Matrix<K> m(b.dst().dim(n), ccx.dim(n));
    Matrix<K> bn = b.at(n);
    int da = a.src().dim(n + 1);
    for (int i = 0; i < bn.rows(); ++i)
      for (int j = 0; j < bn.cols(); ++j) m.at(i, da + j) = bn.at(i, j);
    return m;
  });
  if (!comparison.commutes_with_d()) return false;
  return is_quasi_iso(comparison, lo, hi);
}

}  // namespace hodgecx
