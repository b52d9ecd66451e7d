#pragma once

#include <hodgecx/hodge.hpp>
#include <hodgecx/simplicial.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hodgecx {

// Formal Hodge complex of a sheaf: the cohomology placed in its degrees with
// zero differential. H^i is pure of weight i with the fixed Hodge type
// (ceil(i/2), floor(i/2)), so every induced map preserves the filtrations,
// and after the weight shear W sits at a single jump.
template <class K>
struct FormalHodge {
  TriFilteredComplex<K> cx;
  ChainCochains<K> cochains;
  Cohomology<K> h;
};

template <class K>
FormalHodge<K> formal_hodge_complex(const PosetSheaf<K>& f) {
  FormalHodge<K> out;
  std::vector<int> pts;
  for (int p = 0; p < f.base()->size(); ++p) pts.push_back(p);
  out.cochains = chain_cochain_complex(*f.base(), pts, f);
  out.h = Cohomology<K>(out.cochains.cx);
  int top = out.cochains.cx.hi();
  std::vector<FilteredSpace<K>> spaces;
  for (int i = 0; i <= top; ++i) {
    FilteredSpace<K> s;
    s.dim = out.h.dim(i);
    int p_type = (i + 1) / 2;
    s.f = FiltChain<K>::trivial(s.dim, p_type);
    s.fbar = FiltChain<K>::trivial(s.dim, i - p_type);
    s.w = FiltChain<K>::trivial(s.dim, -i);
    spaces.push_back(std::move(s));
  }
  std::vector<Matrix<K>> zero_diffs;
  for (int i = 0; i + 1 <= top && !spaces.empty(); ++i)
    zero_diffs.push_back(Matrix<K>::zero(spaces[static_cast<size_t>(i + 1)].dim,
                                         spaces[static_cast<size_t>(i)].dim));
  out.cx = spaces.empty() ? TriFilteredComplex<K>{}
                          : reindex_from_mhs_complex<K>(0, spaces, zero_diffs);
  return out;
}

// Normalized cochain pullback along phi : A' -> A for matching coefficient
// sheaves (the pullback sheaf of the source), inducing the morphism of
// formal complexes on cohomology.
template <class K>
Matrix<K> global_cochain_pullback_block(const ChainCochains<K>& src,
                                        const ChainCochains<K>& dst, const PosetMap& phi,
                                        const PosetSheaf<K>& f_src, int deg) {
  Matrix<K> m(dst.cx.dim(deg), src.cx.dim(deg));
  if (deg < 0 || deg >= static_cast<int>(dst.chains.size()) ||
      deg >= static_cast<int>(src.chains.size()))
    return m;
  std::map<std::vector<int>, int> index;
  for (size_t k = 0; k < src.chains[static_cast<size_t>(deg)].size(); ++k)
    index[src.chains[static_cast<size_t>(deg)][k]] = static_cast<int>(k);
  const auto& dchains = dst.chains[static_cast<size_t>(deg)];
  for (size_t k = 0; k < dchains.size(); ++k) {
    std::vector<int> image;
    bool strict = true;
    for (int pt : dchains[k]) {
      int y = phi(pt);
      if (!image.empty() && !phi.dst->lt(image.back(), y)) {
        strict = false;
        break;
      }
      image.push_back(y);
    }
    if (!strict) continue;
    auto it = index.find(image);
    if (it == index.end()) throw std::logic_error("cochain pullback: image chain missing");
    int d = f_src.dim(image.back());
    int soff = src.offsets[static_cast<size_t>(deg)][static_cast<size_t>(it->second)];
    int doff = dst.offsets[static_cast<size_t>(deg)][k];
    for (int j = 0; j < d; ++j) m.at(doff + j, soff + j) = K(1);
  }
  return m;
}

// TriMap of formal complexes induced by pulling cochains back along phi.
template <class K>
TriMap<K> formal_pullback_morphism(const FormalHodge<K>& src, const FormalHodge<K>& dst,
                                   const PosetMap& phi, const PosetSheaf<K>& f_src) {
  auto comps = ComplexMap<K>::build(src.cx.cx, dst.cx.cx, [&](int i) {
    if (src.cx.cx.dim(i) == 0 && dst.cx.cx.dim(i) == 0) return Matrix<K>(0, 0);
    Matrix<K> block = global_cochain_pullback_block(src.cochains, dst.cochains, phi, f_src, i);
    return src.h.at(i).induced_map(block, dst.h.at(i));
  });
  return TriMap<K>(src.cx, dst.cx, comps);
}

// TriMap of formal complexes induced by a sheaf map over one base.
template <class K>
TriMap<K> formal_sheaf_morphism(const FormalHodge<K>& src, const FormalHodge<K>& dst,
                                const SheafMap<K>& psi) {
  auto comps = ComplexMap<K>::build(src.cx.cx, dst.cx.cx, [&](int i) {
    if (src.cx.cx.dim(i) == 0 && dst.cx.cx.dim(i) == 0) return Matrix<K>(0, 0);
    Matrix<K> block = cochain_block_map(src.cochains, dst.cochains, psi, i);
    return src.h.at(i).induced_map(block, dst.h.at(i));
  });
  return TriMap<K>(src.cx, dst.cx, comps);
}

// A truncated cosimplicial object of Hodge complexes with its cofaces.
template <class K>
struct CosimplicialHodgeRow {
  std::vector<TriFilteredComplex<K>> levels;
  std::vector<std::vector<TriMap<K>>> cofaces;  // cofaces[n-1][i] : A^{n-1} -> A^n

  int truncation() const { return static_cast<int>(levels.size()) - 1; }

  bool cosimplicial_identities_hold() const {
    for (size_t n = 1; n + 1 < levels.size(); ++n)
      for (size_t i = 0; i < cofaces[n - 1].size(); ++i)
        for (size_t j = i + 1; j < cofaces[n].size(); ++j) {
          const auto& up = cofaces[n];
          const auto& dn = cofaces[n - 1];
          for (int deg = levels[n - 1].cx.lo(); deg <= levels[n - 1].cx.hi(); ++deg) {
            Matrix<K> lhs = up[j].at(deg) * dn[i].at(deg);
            Matrix<K> rhs = up[i].at(deg) * dn[j - 1].at(deg);
            if (!(lhs == rhs)) return false;
          }
        }
    return true;
  }

  // Alternating coface sums, the differentials of the associated row.
  std::vector<TriMap<K>> alternating() const {
    std::vector<TriMap<K>> out;
    for (size_t n = 1; n < levels.size(); ++n) {
      const auto& deltas = cofaces[n - 1];
      auto cmap = ComplexMap<K>::build(levels[n - 1].cx, levels[n].cx, [&](int deg) {
        Matrix<K> acc = deltas[0].at(deg);
        for (size_t i = 1; i < deltas.size(); ++i)
          acc = (i % 2 == 0) ? acc + deltas[i].at(deg) : acc - deltas[i].at(deg);
        return acc;
      });
      out.emplace_back(levels[n - 1], levels[n], cmap);
    }
    return out;
  }
};

template <class K>
struct AssembledDescent {
  TriFilteredComplex<K> tot;
  HodgeValidationReport validation;
  Theorem1Result<K> structures;
};

// Total complex of the row, validated as a Hodge complex, with its
// cohomology structures.
template <class K>
AssembledDescent<K> assemble_descent_hodge(const CosimplicialHodgeRow<K>& row) {
  if (row.levels.empty()) throw std::invalid_argument("assemble_descent_hodge: empty row");
  for (const auto& level : row.levels) {
    CHodgeComplex<K> c(level);
    if (!c.valid())
      throw std::invalid_argument("assemble_descent_hodge: level fails validation: " +
                                  c.report().axiom);
  }
  if (!row.cosimplicial_identities_hold())
    throw std::invalid_argument("assemble_descent_hodge: cosimplicial identities fail");
  AssembledDescent<K> out;
  out.tot = total<K>(row.levels, row.alternating()).tot;
  CHodgeComplex<K> c(out.tot);
  out.validation = c.report();
  c.ensure_valid();
  out.structures = theorem1(c);
  return out;
}

// Levelwise morphism of rows, commuting with the cofaces.
template <class K>
struct RowMorphism {
  std::vector<TriMap<K>> comps;
};

template <class K>
TriMap<K> total_morphism(const CosimplicialHodgeRow<K>& src, const CosimplicialHodgeRow<K>& dst,
                         const RowMorphism<K>& m) {
  if (src.truncation() != dst.truncation() ||
      static_cast<int>(m.comps.size()) != src.truncation() + 1)
    throw std::invalid_argument("total_morphism: level mismatch");
  for (size_t n = 1; n < src.levels.size(); ++n)
    for (size_t i = 0; i < src.cofaces[n - 1].size(); ++i)
      for (int deg = src.levels[n - 1].cx.lo(); deg <= src.levels[n - 1].cx.hi(); ++deg) {
        Matrix<K> lhs = dst.cofaces[n - 1][i].at(deg) * m.comps[n - 1].at(deg);
        Matrix<K> rhs = m.comps[n].at(deg) * src.cofaces[n - 1][i].at(deg);
        if (!(lhs == rhs))
          throw std::invalid_argument("total_morphism: does not commute with cofaces");
      }
  TotalResult<K> ts = total<K>(src.levels, src.alternating());
  TotalResult<K> td = total<K>(dst.levels, dst.alternating());
  auto cmap = ComplexMap<K>::build(ts.tot.cx, td.tot.cx, [&](int n) {
    Matrix<K> out(td.tot.cx.dim(n), ts.tot.cx.dim(n));
    for (int i = 0; i <= src.truncation(); ++i) {
      int j = n - i;
      Matrix<K> block = m.comps[static_cast<size_t>(i)].at(j);
      if (block.rows() == 0 || block.cols() == 0) continue;
      int soff = ts.block_offset(i, n);
      int doff = td.block_offset(i, n);
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) out.at(doff + r, soff + c) = block.at(r, c);
    }
    return out;
  });
  return TriMap<K>(ts.tot, td.tot, cmap);
}

template <class K>
struct IndependenceReport {
  bool totals_quasi_isomorphic = false;
  bool outputs_isomorphic = false;
};

// Two rows joined by a levelwise morphism with quasi-isomorphic totals give
// isomorphic output structures; the check is instancewise and exact.
template <class K>
IndependenceReport<K> independence_check(const CosimplicialHodgeRow<K>& a,
                                         const CosimplicialHodgeRow<K>& b,
                                         const RowMorphism<K>& m, int degree_lo,
                                         int degree_hi) {
  IndependenceReport<K> rep;
  TriMap<K> tm = total_morphism(a, b, m);
  rep.totals_quasi_isomorphic = is_quasi_iso(tm.map(), degree_lo, degree_hi);
  if (!rep.totals_quasi_isomorphic) return rep;
  AssembledDescent<K> da = assemble_descent_hodge(a);
  AssembledDescent<K> db = assemble_descent_hodge(b);
  rep.outputs_isomorphic = true;
  Cohomology<K> ha(tm.src().cx), hb(tm.dst().cx);
  for (int n = degree_lo; n <= degree_hi; ++n) {
    Matrix<K> ind = ha.at(n).induced_map(tm.at(n), hb.at(n));
    FilteredSpace<K> sa = da.structures.space(n);
    FilteredSpace<K> sb = db.structures.space(n);
    if (rank(ind) != sa.dim || sa.dim != sb.dim) {
      rep.outputs_isomorphic = false;
      break;
    }
    // The bijection must match all three filtrations exactly.
    auto matches = [&](const FiltChain<K>& ca, const FiltChain<K>& cb) {
      int lo = std::min(ca.full_until(), cb.full_until());
      int hi = std::max(ca.zero_from(), cb.zero_from());
      for (int p = lo; p <= hi; ++p)
        if (!(ca.at(p).image_under(ind) == cb.at(p))) return false;
      return true;
    };
    if (!matches(sa.f, sb.f) || !matches(sa.fbar, sb.fbar) || !matches(sa.w, sb.w))
      rep.outputs_isomorphic = false;
  }
  return rep;
}

template <class K>
struct RowLes {
  bool inputs_exact = false;
  bool comparison_quasi_iso = false;
  bool exact = false;
  bool morphisms_ok = false;
  bool strict_ok = false;
  Theorem1Result<K> h1, h2, h3;
};

// Short exact sequence of rows to the long exact sequence of Hodge
// structures, through the cone of the total and the comparison map to the
// third total.
template <class K>
RowLes<K> ses_to_les(const CosimplicialHodgeRow<K>& r1, const CosimplicialHodgeRow<K>& r2,
                     const CosimplicialHodgeRow<K>& r3, const RowMorphism<K>& f,
                     const RowMorphism<K>& g) {
  RowLes<K> out;
  // Levelwise, degreewise exactness and g f = 0.
  out.inputs_exact = true;
  for (int n = 0; n <= r1.truncation(); ++n) {
    if (!is_degreewise_ses(f.comps[static_cast<size_t>(n)].map(),
                           g.comps[static_cast<size_t>(n)].map()))
      out.inputs_exact = false;
  }
  if (!out.inputs_exact) return out;
  TriMap<K> sf = total_morphism(r1, r2, f);
  TriMap<K> sg = total_morphism(r2, r3, g);
  auto cn = cone(sf);
  CHodgeComplex<K> cc(cn.cone);
  cc.ensure_valid();
  // Comparison Cone(S(f)) -> S(F_3): (alpha, beta) -> g(beta).
  auto comparison = ComplexMap<K>::build(cn.cone.cx, sg.dst().cx, [&](int n) {
    Matrix<K> m(sg.dst().cx.dim(n), cn.cone.cx.dim(n));
    Matrix<K> gn = sg.at(n);
    int da = sf.src().cx.dim(n + 1);
    for (int i = 0; i < gn.rows(); ++i)
      for (int j = 0; j < gn.cols(); ++j) m.at(i, da + j) = gn.at(i, j);
    return m;
  });
  if (!comparison.commutes_with_d())
    throw std::logic_error("ses_to_les: comparison is not a chain map");
  out.comparison_quasi_iso = is_quasi_iso(comparison);
  if (!out.comparison_quasi_iso) return out;

  ConeLes<K> les = cone_les(sf);
  out.h1 = les.a;
  out.h2 = les.b;
  out.h3 = theorem1(CHodgeComplex<K>(sg.dst()));
  out.exact = true;
  out.morphisms_ok = true;
  out.strict_ok = true;
  Cohomology<K> h1c(sf.src().cx), h2c(sf.dst().cx), hc(cn.cone.cx), h3c(sg.dst().cx);
  std::vector<Matrix<K>> run;
  int lo = les.lo;
  for (size_t t = 0; t < les.u.size(); ++t) {
    int n = lo + static_cast<int>(t);
    Matrix<K> comp_n = hc.at(n).induced_map(comparison.at(n), h3c.at(n));
    auto inv = inverse(comp_n);
    if (!inv) {
      out.exact = false;
      break;
    }
    Matrix<K> step1 = h1c.at(n).induced_map(sf.at(n), h2c.at(n));
    Matrix<K> to_h3 = comp_n * les.u[t];
    Matrix<K> delta = les.v[t] * *inv;
    run.push_back(step1);
    run.push_back(to_h3);
    run.push_back(delta);
    FilteredSpace<K> s1 = out.h1.space(n);
    FilteredSpace<K> s1n = out.h1.space(n + 1);
    FilteredSpace<K> s2 = out.h2.space(n);
    FilteredSpace<K> s3 = out.h3.space(n);
    if (!preserves_filtrations(step1, s1, s2) || !preserves_filtrations(to_h3, s2, s3) ||
        !preserves_filtrations(delta, s3, s1n))
      out.morphisms_ok = false;
    if (!is_strict_morphism(step1, s1, s2) || !is_strict_morphism(to_h3, s2, s3) ||
        !is_strict_morphism(delta, s3, s1n))
      out.strict_ok = false;
  }
  out.exact = out.exact && is_exact_sequence(run);
  return out;
}

// Row of formal Hodge complexes over a hypercover: level n is the formal
// complex of the pullback of the sheaf to X_n; cofaces pull cochains back
// along the faces.
template <class K>
struct HypercoverRow {
  CosimplicialHodgeRow<K> row;
  std::vector<FormalHodge<K>> formals;
};

template <class K>
HypercoverRow<K> row_from_hypercover(const AugmentedSimplicialSpace& xs,
                                     const PosetSheaf<K>& f) {
  HypercoverRow<K> out;
  std::vector<PosetSheaf<K>> pulled;
  for (int n = 0; n <= xs.truncation(); ++n) {
    pulled.push_back(pullback_sheaf(xs.augmentations[static_cast<size_t>(n)], f));
    out.formals.push_back(formal_hodge_complex(pulled.back()));
    out.row.levels.push_back(out.formals.back().cx);
  }
  for (int n = 1; n <= xs.truncation(); ++n) {
    std::vector<TriMap<K>> deltas;
    for (int i = 0; i <= n; ++i)
      deltas.push_back(formal_pullback_morphism(out.formals[static_cast<size_t>(n - 1)],
                                                out.formals[static_cast<size_t>(n)],
                                                xs.face(n, i),
                                                pulled[static_cast<size_t>(n - 1)]));
    out.row.cofaces.push_back(std::move(deltas));
  }
  return out;
}

// Row of formal Hodge complexes over the bar resolution of a stratification:
// level n is the formal complex of T^{n+1} F, whose stalks decompose over
// atom chains; cofaces are induced by the unit insertions.
template <class K>
struct BarRow {
  CosimplicialHodgeRow<K> row;
  std::vector<FormalHodge<K>> formals;
  BarComplex<K> bar;
};

template <class K>
BarRow<K> row_from_bar(const StratMonad<K>& monad, const PosetSheaf<K>& f, int n_max) {
  BarRow<K> out;
  out.bar = bar_complex(monad, f, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    out.formals.push_back(formal_hodge_complex(out.bar.levels[static_cast<size_t>(n)]));
    out.row.levels.push_back(out.formals.back().cx);
  }
  for (int n = 1; n <= n_max; ++n) {
    std::vector<TriMap<K>> deltas;
    for (int i = 0; i <= n; ++i)
      deltas.push_back(formal_sheaf_morphism(out.formals[static_cast<size_t>(n - 1)],
                                             out.formals[static_cast<size_t>(n)],
                                             out.bar.cofaces[static_cast<size_t>(n - 1)]
                                                            [static_cast<size_t>(i)]));
    out.row.cofaces.push_back(std::move(deltas));
  }
  return out;
}

// The constant row on a formal complex, with identity cofaces; its total is
// quasi-isomorphic to the level in low degrees.
template <class K>
CosimplicialHodgeRow<K> constant_row(const FormalHodge<K>& base, int n_max) {
  CosimplicialHodgeRow<K> out;
  for (int n = 0; n <= n_max; ++n) out.levels.push_back(base.cx);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<TriMap<K>> deltas;
    for (int i = 0; i <= n; ++i)
      deltas.emplace_back(base.cx, base.cx, ComplexMap<K>::identity(base.cx.cx));
    out.cofaces.push_back(std::move(deltas));
  }
  return out;
}

}  // namespace hodgecx
