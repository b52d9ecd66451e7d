#pragma once

#include <hodgecx/cohomology.hpp>
#include <hodgecx/complex.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hodgecx {

template <class K>
Subspace<K> direct_sum_subspace(const Subspace<K>& a, int amb_a, const Subspace<K>& b,
                                int amb_b) {
  std::vector<std::vector<K>> gens;
  for (int i = 0; i < a.dim(); ++i) {
    std::vector<K> v(static_cast<size_t>(amb_a + amb_b), K(0));
    for (int j = 0; j < amb_a; ++j) v[static_cast<size_t>(j)] = a.basis().at(i, j);
    gens.push_back(std::move(v));
  }
  for (int i = 0; i < b.dim(); ++i) {
    std::vector<K> v(static_cast<size_t>(amb_a + amb_b), K(0));
    for (int j = 0; j < amb_b; ++j) v[static_cast<size_t>(amb_a + j)] = b.basis().at(i, j);
    gens.push_back(std::move(v));
  }
  return Subspace<K>::span_vectors(amb_a + amb_b, gens);
}

// Complex of filtered spaces with filtration-preserving differentials,
// rewritten as a trifiltered complex by shearing W: the new W^i in degree n
// is the old W^{i-n}.
template <class K>
TriFilteredComplex<K> reindex_from_mhs_complex(int lo,
                                               const std::vector<FilteredSpace<K>>& spaces,
                                               const std::vector<Matrix<K>>& diffs) {
  std::vector<int> dims;
  for (const auto& s : spaces) dims.push_back(s.dim);
  Complex<K> cx(lo, dims, diffs);
  for (size_t t = 0; t + 1 < spaces.size(); ++t) {
    const FilteredSpace<K>& a = spaces[t];
    const FilteredSpace<K>& b = spaces[t + 1];
    const Matrix<K>& d = diffs[t];
    auto preserves = [&](const FiltChain<K>& fa, const FiltChain<K>& fb) {
      for (const auto& j : fa.jumps())
        if (!fb.at(j.first).contains(j.second.image_under(d))) return false;
      return true;
    };
    if (!preserves(a.f, b.f) || !preserves(a.fbar, b.fbar) || !preserves(a.w, b.w))
      throw std::invalid_argument("reindex: differential is not filtration-preserving");
  }
  auto lift = [&](auto pick) {
    return Filtration<K>::build(cx, Orientation::decreasing, [&](int n) {
      return pick(spaces[static_cast<size_t>(n - lo)], n);
    });
  };
  TriFilteredComplex<K> out;
  out.cx = cx;
  out.f = lift([](const FilteredSpace<K>& s, int) { return s.f; });
  out.fbar = lift([](const FilteredSpace<K>& s, int) { return s.fbar; });
  out.w = lift([](const FilteredSpace<K>& s, int n) { return s.w.shifted(-n); });
  return out;
}

// A[i]^n = A^{n+i} with differential (-1)^i d; F, Fbar unchanged, W^[i] = W^{.+i}.
template <class K>
TriFilteredComplex<K> translate(const TriFilteredComplex<K>& a, int i) {
  const Complex<K>& cx = a.cx;
  if (cx.is_zero_complex()) return a;
  int lo = cx.lo() - i;
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  for (int n = lo; n <= cx.hi() - i; ++n) {
    dims.push_back(cx.dim(n + i));
    if (n < cx.hi() - i) diffs.push_back(i % 2 == 0 ? cx.d(n + i) : -cx.d(n + i));
  }
  Complex<K> tcx(lo, dims, diffs);
  TriFilteredComplex<K> out;
  out.cx = tcx;
  out.f = Filtration<K>::build(tcx, a.f.orientation(), [&](int n) { return a.f.chain(n + i); });
  out.fbar =
      Filtration<K>::build(tcx, a.fbar.orientation(), [&](int n) { return a.fbar.chain(n + i); });
  out.w = Filtration<K>::build(tcx, a.w.orientation(),
                               [&](int n) { return a.w.chain(n + i).shifted(i); });
  return out;
}

// Tate-style twist: filtrations become F[p], Fbar[q], W[-p-q]; the complex
// itself is unchanged.
template <class K>
TriFilteredComplex<K> twist(const TriFilteredComplex<K>& a, int p, int q) {
  TriFilteredComplex<K> out = a;
  out.f = a.f.shifted(p);
  out.fbar = a.fbar.shifted(q);
  out.w = a.w.shifted(-p - q);
  return out;
}

template <class K>
struct ConeResult {
  TriFilteredComplex<K> cone;
  ComplexMap<K> from_target;  // B -> Cone
  ComplexMap<K> to_shift;     // Cone -> A[1]
};

// Mapping cone: C^n = A^{n+1} + B^n, d(a, b) = (-da, db - f(a)),
// F^p C^n = F^p A^{n+1} + F^p B^n, W_k C^n = W_{k-1} A^{n+1} + W_k B^n.
template <class K>
ConeResult<K> cone(const TriMap<K>& f) {
  const TriFilteredComplex<K>& a = f.src();
  const TriFilteredComplex<K>& b = f.dst();
  int lo = std::min(a.cx.lo() - 1, b.cx.lo());
  int hi = std::max(a.cx.hi() - 1, b.cx.hi());
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  auto dim_a = [&](int n) { return a.cx.dim(n + 1); };
  auto dim_b = [&](int n) { return b.cx.dim(n); };
  for (int n = lo; n <= hi; ++n) dims.push_back(dim_a(n) + dim_b(n));
  for (int n = lo; n < hi; ++n) {
    Matrix<K> d(dim_a(n + 1) + dim_b(n + 1), dim_a(n) + dim_b(n));
    Matrix<K> da = a.cx.d(n + 1);
    Matrix<K> db = b.cx.d(n);
    Matrix<K> fn = f.at(n + 1);
    for (int i = 0; i < da.rows(); ++i)
      for (int j = 0; j < da.cols(); ++j) d.at(i, j) = -da.at(i, j);
    for (int i = 0; i < fn.rows(); ++i)
      for (int j = 0; j < fn.cols(); ++j) d.at(dim_a(n + 1) + i, j) = -fn.at(i, j);
    for (int i = 0; i < db.rows(); ++i)
      for (int j = 0; j < db.cols(); ++j) d.at(dim_a(n + 1) + i, dim_a(n) + j) = db.at(i, j);
    diffs.push_back(std::move(d));
  }
  Complex<K> ccx(lo, dims, diffs);

  TriFilteredComplex<K> c;
  c.cx = ccx;
  auto sum_chain = [&](int n, const FiltChain<K>& ca, const FiltChain<K>& cb, int w_shift) {
    int da = dim_a(n), db_n = dim_b(n);
    if (da + db_n == 0) return FiltChain<K>(0);
    bool first = true;
    int from = 0, to = 0;
    if (da > 0) {
      from = ca.full_until() - w_shift;
      to = ca.zero_from() - w_shift;
      first = false;
    }
    if (db_n > 0) {
      from = first ? cb.full_until() : std::min(from, cb.full_until());
      to = first ? cb.zero_from() : std::max(to, cb.zero_from());
    }
    return FiltChain<K>::build(da + db_n, from, to, [&](int p) {
      return direct_sum_subspace(ca.at(p + w_shift), da, cb.at(p), db_n);
    });
  };
  c.f = Filtration<K>::build(ccx, a.f.orientation(), [&](int n) {
    return sum_chain(n, a.f.chain(n + 1), b.f.chain(n), 0);
  });
  c.fbar = Filtration<K>::build(ccx, a.fbar.orientation(), [&](int n) {
    return sum_chain(n, a.fbar.chain(n + 1), b.fbar.chain(n), 0);
  });
  // W_k C^n = W_{k-1}A^{n+1} + W_k B^n, i.e. W^k C^n = W^{k+1}A^{n+1} + W^k B^n.
  c.w = Filtration<K>::build(ccx, a.w.orientation(), [&](int n) {
    return sum_chain(n, a.w.chain(n + 1), b.w.chain(n), 1);
  });

  ComplexMap<K> from_b = ComplexMap<K>::build(b.cx, ccx, [&](int n) {
    Matrix<K> m(dim_a(n) + dim_b(n), b.cx.dim(n));
    for (int i = 0; i < dim_b(n); ++i) m.at(dim_a(n) + i, i) = K(1);
    return m;
  });
  Complex<K> a1 = translate(a, 1).cx;
  ComplexMap<K> to_a1 = ComplexMap<K>::build(ccx, a1, [&](int n) {
    Matrix<K> m(a1.dim(n), dim_a(n) + dim_b(n));
    for (int i = 0; i < dim_a(n); ++i) m.at(i, i) = K(1);
    return m;
  });
  return {std::move(c), std::move(from_b), std::move(to_a1)};
}

template <class K>
struct TotalResult {
  TriFilteredComplex<K> tot;
  // block_offset(i, n) = first coordinate of the A^{i, n-i} block inside T^n.
  std::vector<std::vector<int>> offsets;  // offsets[i][n - tot.cx.lo()]

  int block_offset(int i, int n) const {
    return offsets[static_cast<size_t>(i)][static_cast<size_t>(n - tot.cx.lo())];
  }
};

// Total complex of a finite sequence of trifiltered complexes connected by
// filtration-preserving differentials with delta after delta = 0. The total
// differential on the (i, j) block is d + (-1)^j delta, and
// W_k T^n = sum over i+j=n of W_{k+i} A^{ij}.
template <class K>
TotalResult<K> total(const std::vector<TriFilteredComplex<K>>& cols,
                     const std::vector<TriMap<K>>& deltas) {
  int m = static_cast<int>(cols.size());
  if (m == 0) throw std::invalid_argument("total: no columns");
  if (static_cast<int>(deltas.size()) + 1 != m)
    throw std::invalid_argument("total: need one delta per adjacent pair");
  for (int i = 0; i + 1 < m; ++i) {
    if (!(deltas[static_cast<size_t>(i)].src() == cols[static_cast<size_t>(i)]) ||
        !(deltas[static_cast<size_t>(i)].dst() == cols[static_cast<size_t>(i + 1)]))
      throw std::invalid_argument("total: delta endpoints mismatch");
  }
  for (int i = 0; i + 2 < m; ++i) {
    const auto& d0 = deltas[static_cast<size_t>(i)];
    const auto& d1 = deltas[static_cast<size_t>(i + 1)];
    for (int n = d0.src().cx.lo(); n <= d0.src().cx.hi(); ++n)
      if (!(d1.at(n) * d0.at(n)).is_zero())
        throw std::invalid_argument("total: delta after delta is nonzero");
  }

  int lo = cols[0].cx.lo(), hi = cols[0].cx.hi();
  for (int i = 0; i < m; ++i) {
    lo = std::min(lo, cols[static_cast<size_t>(i)].cx.lo() + i);
    hi = std::max(hi, cols[static_cast<size_t>(i)].cx.hi() + i);
  }

  auto block_dim = [&](int i, int n) { return cols[static_cast<size_t>(i)].cx.dim(n - i); };
  std::vector<std::vector<int>> offsets(static_cast<size_t>(m));
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) {
    int off = 0;
    for (int i = 0; i < m; ++i) {
      offsets[static_cast<size_t>(i)].push_back(off);
      off += block_dim(i, n);
    }
    dims.push_back(off);
  }
  auto offset = [&](int i, int n) { return offsets[static_cast<size_t>(i)][static_cast<size_t>(n - lo)]; };

  std::vector<Matrix<K>> diffs;
  for (int n = lo; n < hi; ++n) {
    Matrix<K> d(dims[static_cast<size_t>(n + 1 - lo)], dims[static_cast<size_t>(n - lo)]);
    for (int i = 0; i < m; ++i) {
      int j = n - i;
      const Complex<K>& ci = cols[static_cast<size_t>(i)].cx;
      Matrix<K> di = ci.d(j);
      for (int r = 0; r < di.rows(); ++r)
        for (int cidx = 0; cidx < di.cols(); ++cidx)
          d.at(offset(i, n + 1) + r, offset(i, n) + cidx) = di.at(r, cidx);
      if (i + 1 < m) {
        Matrix<K> dl = deltas[static_cast<size_t>(i)].at(j);
        K sign = (j % 2 == 0) ? K(1) : K(-1);
        for (int r = 0; r < dl.rows(); ++r)
          for (int cidx = 0; cidx < dl.cols(); ++cidx)
            d.at(offset(i + 1, n + 1) + r, offset(i, n) + cidx) = sign * dl.at(r, cidx);
      }
    }
    diffs.push_back(std::move(d));
  }
  Complex<K> tcx(lo, dims, diffs);

  auto assemble_chain = [&](int n, auto chain_of, int w_mode) {
    int from = 0, to = 0;
    bool first = true;
    for (int i = 0; i < m; ++i) {
      if (block_dim(i, n) == 0) continue;
      const FiltChain<K>& ch = chain_of(i, n - i);
      int shift = w_mode ? i : 0;
      int a = ch.full_until() + shift, b = ch.zero_from() + shift;
      if (first) {
        from = a;
        to = b;
        first = false;
      } else {
        from = std::min(from, a);
        to = std::max(to, b);
      }
    }
    if (first) return FiltChain<K>(0);
    return FiltChain<K>::build(tcx.dim(n), from, to, [&](int p) {
      std::vector<std::vector<K>> gens;
      for (int i = 0; i < m; ++i) {
        if (block_dim(i, n) == 0) continue;
        const FiltChain<K>& ch = chain_of(i, n - i);
        // W^k on the block with column index i is W^{k-i}.
        Subspace<K> s = ch.at(w_mode ? p - i : p);
        for (int t = 0; t < s.dim(); ++t) {
          std::vector<K> v(static_cast<size_t>(tcx.dim(n)), K(0));
          for (int cidx = 0; cidx < block_dim(i, n); ++cidx)
            v[static_cast<size_t>(offset(i, n) + cidx)] = s.basis().at(t, cidx);
          gens.push_back(std::move(v));
        }
      }
      return Subspace<K>::span_vectors(tcx.dim(n), gens);
    });
  };

  TriFilteredComplex<K> t;
  t.cx = tcx;
  t.f = Filtration<K>::build(tcx, cols[0].f.orientation(), [&](int n) {
    return assemble_chain(n, [&](int i, int j) -> const FiltChain<K>& {
      return cols[static_cast<size_t>(i)].f.chain(j);
    }, 0);
  });
  t.fbar = Filtration<K>::build(tcx, cols[0].fbar.orientation(), [&](int n) {
    return assemble_chain(n, [&](int i, int j) -> const FiltChain<K>& {
      return cols[static_cast<size_t>(i)].fbar.chain(j);
    }, 0);
  });
  t.w = Filtration<K>::build(tcx, cols[0].w.orientation(), [&](int n) {
    return assemble_chain(n, [&](int i, int j) -> const FiltChain<K>& {
      return cols[static_cast<size_t>(i)].w.chain(j);
    }, 1);
  });
  // Re-derive block offsets against the normalized support.
  std::vector<std::vector<int>> final_offsets(static_cast<size_t>(m));
  for (int n = tcx.lo(); n <= tcx.hi(); ++n) {
    int off = 0;
    for (int i = 0; i < m; ++i) {
      final_offsets[static_cast<size_t>(i)].push_back(off);
      off += block_dim(i, n);
    }
  }
  return {std::move(t), std::move(final_offsets)};
}

enum class Which { F, Fbar, W };

template <class K>
struct GradedPiece {
  TriFilteredComplex<K> gr;
  std::vector<SubQuotient<K>> realize;  // per degree of the parent complex
};

// The complex F^p A / F^{p+1} A (or for Fbar, W) with the two remaining
// filtrations induced by image.
template <class K>
GradedPiece<K> graded_piece(const TriFilteredComplex<K>& a, Which which, int p) {
  const Filtration<K>& own =
      which == Which::F ? a.f : (which == Which::Fbar ? a.fbar : a.w);
  std::vector<SubQuotient<K>> realize;
  std::vector<int> dims;
  for (int n = a.cx.lo(); n <= a.cx.hi(); ++n) {
    realize.emplace_back(own.at(n, p), own.at(n, p + 1));
    dims.push_back(realize.back().dim());
  }
  auto sq = [&](int n) -> const SubQuotient<K>& {
    static const SubQuotient<K> empty;
    if (n < a.cx.lo() || n > a.cx.hi()) return empty;
    return realize[static_cast<size_t>(n - a.cx.lo())];
  };
  std::vector<Matrix<K>> diffs;
  for (int n = a.cx.lo(); n < a.cx.hi(); ++n)
    diffs.push_back(sq(n).induced_map(a.cx.d(n), sq(n + 1)));
  Complex<K> gcx(a.cx.lo(), dims, diffs);

  auto induce = [&](const Filtration<K>& src) {
    return Filtration<K>::build(gcx, src.orientation(), [&](int n) {
      const FiltChain<K>& ch = src.chain(n);
      if (sq(n).dim() == 0) return FiltChain<K>(0);
      return FiltChain<K>::build(sq(n).dim(), ch.full_until(), ch.zero_from(),
                                 [&](int q) { return sq(n).project_subspace(ch.at(q)); });
    });
  };
  TriFilteredComplex<K> gr;
  gr.cx = gcx;
  gr.f = induce(a.f);
  gr.fbar = induce(a.fbar);
  gr.w = induce(a.w);
  return {std::move(gr), std::move(realize)};
}

template <class K>
struct StrictnessWitness {
  int degree = 0;  // the map out of this degree
  int index = 0;   // filtration index p
  std::vector<K> vec;  // element of (im d meet F^p) not in d(F^p)
};

template <class K>
struct StrictnessReport {
  bool strict = true;
  std::optional<StrictnessWitness<K>> witness;
};

// d is strict when d(F^p) = im(d) meet F^p for every p and degree.
template <class K>
StrictnessReport<K> strictness_check(const Complex<K>& cx, const Filtration<K>& filt) {
  for (int n = cx.lo(); n < cx.hi(); ++n) {
    Subspace<K> image = Subspace<K>::full(cx.dim(n)).image_under(cx.d(n));
    std::vector<int> indices;
    for (const auto& j : filt.chain(n).jumps()) indices.push_back(j.first);
    for (const auto& j : filt.chain(n + 1).jumps()) indices.push_back(j.first);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int p : indices) {
      Subspace<K> lhs = filt.at(n, p).image_under(cx.d(n));
      Subspace<K> rhs = image.intersect(filt.at(n + 1, p));
      if (lhs != rhs) {
        for (int t = 0; t < rhs.dim(); ++t) {
          std::vector<K> v = rhs.basis().row(t);
          if (!lhs.contains(v)) return {false, StrictnessWitness<K>{n, p, v}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

// Strictness of a single filtered map between filtered spaces.
template <class K>
StrictnessReport<K> strict_map_check(const Matrix<K>& f, const FiltChain<K>& src,
                                     const FiltChain<K>& dst) {
  Subspace<K> image = Subspace<K>::full(src.ambient()).image_under(f);
  std::vector<int> indices;
  for (const auto& j : src.jumps()) indices.push_back(j.first);
  for (const auto& j : dst.jumps()) indices.push_back(j.first);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int p : indices) {
    Subspace<K> lhs = src.at(p).image_under(f);
    Subspace<K> rhs = image.intersect(dst.at(p));
    if (lhs != rhs) {
      for (int t = 0; t < rhs.dim(); ++t) {
        std::vector<K> v = rhs.basis().row(t);
        if (!lhs.contains(v)) return {false, StrictnessWitness<K>{0, p, v}};
      }
    }
  }
  return {true, std::nullopt};
}

template <class K>
struct FilteredCohomology {
  int lo = 0;
  std::vector<SubQuotient<K>> realize;   // H^n inside A^n
  std::vector<FilteredSpace<K>> spaces;  // explicit coordinates

  const SubQuotient<K>& realization(int n) const {
    static const SubQuotient<K> empty;
    if (n < lo || n >= lo + static_cast<int>(realize.size())) return empty;
    return realize[static_cast<size_t>(n - lo)];
  }
  const FilteredSpace<K>& space(int n) const {
    static const FilteredSpace<K> empty;
    if (n < lo || n >= lo + static_cast<int>(spaces.size())) return empty;
    return spaces[static_cast<size_t>(n - lo)];
  }
  int dim(int n) const { return space(n).dim; }
};

// H^i with F^p H^i = image of H^i(F^p A) and W^k H^i = image of H^i(W^{k+i} A):
// the final filtrations, with the W shift by the degree.
template <class K>
FilteredCohomology<K> cohomology_with_final_filtrations(const TriFilteredComplex<K>& a) {
  FilteredCohomology<K> out;
  out.lo = a.cx.lo();
  Cohomology<K> h(a.cx);
  for (int n = a.cx.lo(); n <= a.cx.hi(); ++n) {
    const SubQuotient<K>& hn = h.at(n);
    out.realize.push_back(hn);
    FilteredSpace<K> sp;
    sp.dim = hn.dim();
    auto induce = [&](const FiltChain<K>& ch, int shift) {
      if (hn.dim() == 0) return FiltChain<K>(0);
      return FiltChain<K>::build(hn.dim(), ch.full_until() - shift, ch.zero_from() - shift,
                                 [&](int p) { return hn.project_subspace(ch.at(p + shift)); });
    };
    sp.f = induce(a.f.chain(n), 0);
    sp.fbar = induce(a.fbar.chain(n), 0);
    sp.w = induce(a.w.chain(n), n);
    out.spaces.push_back(std::move(sp));
  }
  return out;
}

}  // namespace hodgecx
