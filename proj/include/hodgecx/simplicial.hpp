#pragma once

#include <hodgecx/generate_space.hpp>
#include <hodgecx/sheaf_cohomology.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgecx {

// Truncated strict simplicial object of finite posets with an augmentation:
// objects X_0..X_N, face maps delta_i : X_n -> X_{n-1}, augmentations
// eps_n : X_n -> X, subject to delta_i delta_j = delta_{j-1} delta_i (i < j)
// and eps_{n-1} delta_i = eps_n.
struct AugmentedSimplicialSpace {
  PosetPtr base;
  std::vector<PosetPtr> objects;               // levels 0..N
  std::vector<std::vector<PosetMap>> faces;    // faces[n-1][i] : X_n -> X_{n-1}
  std::vector<PosetMap> augmentations;         // eps_n : X_n -> X

  int truncation() const { return static_cast<int>(objects.size()) - 1; }

  const PosetMap& face(int n, int i) const {
    return faces[static_cast<size_t>(n - 1)][static_cast<size_t>(i)];
  }

  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    if (objects.empty()) {
      out.push_back("no objects");
      return out;
    }
    if (augmentations.size() != objects.size()) out.push_back("augmentation count mismatch");
    if (faces.size() + 1 != objects.size()) out.push_back("face level count mismatch");
    for (size_t n = 1; n < objects.size() && out.empty(); ++n) {
      if (faces[n - 1].size() != n + 1)
        out.push_back("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                      " faces");
    }
    if (!out.empty()) return out;
    // Simplicial identities.
    for (size_t n = 2; n < objects.size(); ++n)
      for (size_t i = 0; i + 1 <= n; ++i)
        for (size_t j = i + 1; j <= n; ++j) {
          const PosetMap& dj = face(static_cast<int>(n), static_cast<int>(j));
          const PosetMap& di = face(static_cast<int>(n), static_cast<int>(i));
          PosetMap lhs = compose(face(static_cast<int>(n) - 1, static_cast<int>(i)), dj);
          PosetMap rhs = compose(face(static_cast<int>(n) - 1, static_cast<int>(j) - 1), di);
          if (lhs.img != rhs.img)
            out.push_back("simplicial identity fails at level " + std::to_string(n));
        }
    // Augmentations commute with faces.
    for (size_t n = 1; n < objects.size(); ++n)
      for (size_t i = 0; i <= n; ++i) {
        PosetMap through = compose(augmentations[n - 1], face(static_cast<int>(n), static_cast<int>(i)));
        if (through.img != augmentations[n].img)
          out.push_back("augmentation does not commute at level " + std::to_string(n));
      }
    return out;
  }

  void ensure_valid() const {
    auto p = problems();
    if (!p.empty()) throw std::invalid_argument("AugmentedSimplicialSpace: " + p.front());
  }
};

// The cycle object Z_{n-1}: tuples (x_0..x_n) in X_{n-1}^{n+1} with
// delta_j x_i = delta_i x_{j+1} for i <= j, all with the same augmentation.
// Carries the componentwise order and the n+1 projections.
struct CycleObject {
  PosetPtr poset;
  std::vector<std::vector<int>> tuples;
  std::vector<PosetMap> projections;  // to X_{n-1}
  PosetMap to_base;
};

inline CycleObject cycles(const AugmentedSimplicialSpace& xs, int n) {
  if (n < 1 || n > xs.truncation() + 1)
    throw std::invalid_argument("cycles: level out of range");
  const PosetPtr& level = xs.objects[static_cast<size_t>(n - 1)];
  int copies = n + 1;
  // Constraint table: for coordinates i < j', the pair (delta_{j'-1} x_i,
  // delta_i x_{j'}) must agree, whenever n-1 >= 1 (no faces below level 1).
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(static_cast<size_t>(copies));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == copies) {
      tuples.push_back(cur);
      return;
    }
    for (int cand = 0; cand < level->size(); ++cand) {
      cur[static_cast<size_t>(pos)] = cand;
      bool ok = true;
      // Same augmentation as coordinate 0.
      if (pos > 0 &&
          xs.augmentations[static_cast<size_t>(n - 1)](cand) !=
              xs.augmentations[static_cast<size_t>(n - 1)](cur[0]))
        ok = false;
      // Face constraints against earlier coordinates: for i <= j with
      // j + 1 == pos: delta_j x_i = delta_i x_pos.
      if (ok && n >= 2) {
        for (int i = 0; ok && i < pos; ++i) {
          int j = pos - 1;
          if (i > j) continue;
          if (xs.face(n - 1, j)(cur[static_cast<size_t>(i)]) !=
              xs.face(n - 1, i)(cand))
            ok = false;
        }
      }
      if (ok) rec(pos + 1);
    }
  };
  if (level->size() > 0) rec(0);
  // Componentwise order.
  int m = static_cast<int>(tuples.size());
  std::vector<std::vector<bool>> leq(static_cast<size_t>(m),
                                     std::vector<bool>(static_cast<size_t>(m), false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool le = true;
      for (int c = 0; c < copies; ++c)
        if (!level->leq(tuples[static_cast<size_t>(a)][static_cast<size_t>(c)],
                        tuples[static_cast<size_t>(b)][static_cast<size_t>(c)]))
          le = false;
      leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = le;
    }
  CycleObject out;
  out.tuples = tuples;
  out.poset = make_poset(FinitePoset(m, std::move(leq), true));
  for (int c = 0; c < copies; ++c) {
    std::vector<int> img(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) img[static_cast<size_t>(a)] = tuples[static_cast<size_t>(a)][static_cast<size_t>(c)];
    out.projections.emplace_back(out.poset, level, std::move(img));
  }
  std::vector<int> base_img(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a)
    base_img[static_cast<size_t>(a)] =
        xs.augmentations[static_cast<size_t>(n - 1)](tuples[static_cast<size_t>(a)][0]);
  out.to_base = PosetMap(out.poset, xs.base, std::move(base_img));
  return out;
}

// The canonical map X_n -> Z_{n-1}, x -> (delta_0 x, ..., delta_n x).
inline PosetMap canonical_to_cycles(const AugmentedSimplicialSpace& xs, int n,
                                    const CycleObject& z) {
  const PosetPtr& xn = xs.objects[static_cast<size_t>(n)];
  std::vector<int> img(static_cast<size_t>(xn->size()), -1);
  for (int p = 0; p < xn->size(); ++p) {
    std::vector<int> tuple;
    for (int i = 0; i <= n; ++i) tuple.push_back(xs.face(n, i)(p));
    for (size_t t = 0; t < z.tuples.size(); ++t)
      if (z.tuples[t] == tuple) img[static_cast<size_t>(p)] = static_cast<int>(t);
    if (img[static_cast<size_t>(p)] < 0)
      throw std::logic_error("canonical_to_cycles: face tuple is not a cycle");
  }
  return PosetMap(xn, z.poset, std::move(img));
}

struct HypercoverReport {
  bool ok = true;
  int failing_level = -1;
};

// X_0 -> X and every X_n -> Z_{n-1} surjective (properness is automatic for
// finite spaces).
inline HypercoverReport hypercover_check(const AugmentedSimplicialSpace& xs) {
  xs.ensure_valid();
  HypercoverReport rep;
  if (!xs.augmentations[0].surjective()) {
    rep.ok = false;
    rep.failing_level = 0;
    return rep;
  }
  for (int n = 1; n <= xs.truncation(); ++n) {
    CycleObject z = cycles(xs, n);
    PosetMap to_z = canonical_to_cycles(xs, n, z);
    if (!to_z.surjective()) {
      rep.ok = false;
      rep.failing_level = n;
      return rep;
    }
  }
  return rep;
}

// A resolver maps a finite poset onto itself from a disjoint union of
// down-sets of maximal points (or any other surjection from the designated
// subcategory).
using Resolver = std::function<PosetMap(const PosetPtr&)>;

inline PosetMap identity_resolver(const PosetPtr& p) { return identity_map(p); }

struct SimplicialResolution {
  AugmentedSimplicialSpace space;
  std::vector<PosetMap> to_over;  // levelwise maps to the covering tower
};

namespace detail {

struct FiberProductPoset {
  PosetPtr poset;
  std::vector<std::vector<int>> pairs;
};

inline FiberProductPoset fiber_product_poset(const PosetPtr& a, const PosetPtr& b,
                                             const std::vector<int>& fa,
                                             const std::vector<int>& fb) {
  std::vector<std::vector<int>> pairs;
  for (int s = 0; s < a->size(); ++s)
    for (int t = 0; t < b->size(); ++t)
      if (fa[static_cast<size_t>(s)] == fb[static_cast<size_t>(t)]) pairs.push_back({s, t});
  int m = static_cast<int>(pairs.size());
  std::vector<std::vector<bool>> leq(static_cast<size_t>(m),
                                     std::vector<bool>(static_cast<size_t>(m), false));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      leq[static_cast<size_t>(s)][static_cast<size_t>(t)] =
          a->leq(pairs[static_cast<size_t>(s)][0], pairs[static_cast<size_t>(t)][0]) &&
          b->leq(pairs[static_cast<size_t>(s)][1], pairs[static_cast<size_t>(t)][1]);
  return {make_poset(FinitePoset(m, std::move(leq), true)), std::move(pairs)};
}

}  // namespace detail

// Inductive simplicial resolution: X_0 resolves X, X_n resolves the cycle
// object of the levels below. The relative version runs over a hypercover of
// the base through the fiber products of the construction and carries the
// levelwise comparison maps.
inline SimplicialResolution simplicial_resolution(const PosetPtr& x, const Resolver& resolver,
                                                  int levels,
                                                  const AugmentedSimplicialSpace* over = nullptr) {
  if (over && over->truncation() < levels)
    throw std::invalid_argument("simplicial_resolution: covering tower too short");
  SimplicialResolution res;
  AugmentedSimplicialSpace& out = res.space;
  out.base = x;
  for (int n = 0; n <= levels; ++n) {
    if (n == 0) {
      if (over) {
        // Resolve X x_X Y_0 = Y_0 pulled back along the augmentation.
        std::vector<int> fx(static_cast<size_t>(x->size()));
        for (int p = 0; p < x->size(); ++p) fx[static_cast<size_t>(p)] = p;
        auto fp = detail::fiber_product_poset(x, over->objects[0], fx,
                                              over->augmentations[0].img);
        PosetMap r = resolver(fp.poset);
        if (!r.surjective())
          throw std::logic_error("simplicial_resolution: resolver not surjective");
        std::vector<int> to_x(static_cast<size_t>(r.src->size()));
        std::vector<int> to_y(static_cast<size_t>(r.src->size()));
        for (int p = 0; p < r.src->size(); ++p) {
          to_x[static_cast<size_t>(p)] = fp.pairs[static_cast<size_t>(r(p))][0];
          to_y[static_cast<size_t>(p)] = fp.pairs[static_cast<size_t>(r(p))][1];
        }
        out.objects.push_back(r.src);
        out.augmentations.emplace_back(r.src, x, std::move(to_x));
        res.to_over.emplace_back(r.src, over->objects[0], std::move(to_y));
      } else {
        PosetMap r = resolver(x);
        if (!r.surjective())
          throw std::logic_error("simplicial_resolution: resolver not surjective");
        out.objects.push_back(r.src);
        out.augmentations.push_back(r);
      }
      continue;
    }
    CycleObject z = cycles(out, n);
    if (!over) {
      PosetMap r = resolver(z.poset);
      if (!r.surjective())
        throw std::logic_error("simplicial_resolution: resolver not surjective");
      out.objects.push_back(r.src);
      std::vector<PosetMap> faces;
      for (int i = 0; i <= n; ++i)
        faces.push_back(compose(z.projections[static_cast<size_t>(i)], r));
      out.faces.push_back(std::move(faces));
      out.augmentations.push_back(compose(z.to_base, r));
      continue;
    }
    // Relative step: resolve Z_{n-1}(X) x_{Z_{n-1}(Y)} Y_n.
    CycleObject zy = cycles(*over, n);
    // Z(X) -> Z(Y) componentwise through the comparison maps below.
    std::vector<int> zmap(static_cast<size_t>(z.poset->size()), -1);
    for (size_t t = 0; t < z.tuples.size(); ++t) {
      std::vector<int> image;
      for (int c = 0; c <= n; ++c)
        image.push_back(res.to_over[static_cast<size_t>(n - 1)](z.tuples[t][static_cast<size_t>(c)]));
      for (size_t s = 0; s < zy.tuples.size(); ++s)
        if (zy.tuples[s] == image) zmap[t] = static_cast<int>(s);
      if (zmap[t] < 0) throw std::logic_error("simplicial_resolution: cycle image missing");
    }
    PosetMap y_to_zy = canonical_to_cycles(*over, n, zy);
    auto fp = detail::fiber_product_poset(z.poset, over->objects[static_cast<size_t>(n)], zmap,
                                          y_to_zy.img);
    PosetMap r = resolver(fp.poset);
    if (!r.surjective())
      throw std::logic_error("simplicial_resolution: resolver not surjective");
    out.objects.push_back(r.src);
    std::vector<PosetMap> faces;
    std::vector<int> to_y(static_cast<size_t>(r.src->size()));
    std::vector<int> to_z(static_cast<size_t>(r.src->size()));
    for (int p = 0; p < r.src->size(); ++p) {
      to_z[static_cast<size_t>(p)] = fp.pairs[static_cast<size_t>(r(p))][0];
      to_y[static_cast<size_t>(p)] = fp.pairs[static_cast<size_t>(r(p))][1];
    }
    PosetMap proj_z(r.src, z.poset, to_z);
    for (int i = 0; i <= n; ++i)
      faces.push_back(compose(z.projections[static_cast<size_t>(i)], proj_z));
    out.faces.push_back(std::move(faces));
    out.augmentations.push_back(compose(z.to_base, proj_z));
    res.to_over.emplace_back(r.src, over->objects[static_cast<size_t>(n)], std::move(to_y));
  }
  out.ensure_valid();
  return res;
}

// The coskeletal tower of a single surjection: X_n is the cycle object of
// the levels below, so X_1 is the fiber product X_0 x_X X_0 and so on.
inline AugmentedSimplicialSpace cech_object(const PosetMap& pi, int levels) {
  AugmentedSimplicialSpace out;
  out.base = pi.dst;
  out.objects.push_back(pi.src);
  out.augmentations.push_back(pi);
  for (int n = 1; n <= levels; ++n) {
    CycleObject z = cycles(out, n);
    out.objects.push_back(z.poset);
    out.faces.push_back(z.projections);
    out.augmentations.push_back(z.to_base);
  }
  out.ensure_valid();
  return out;
}

struct SimplicialFiberProduct {
  AugmentedSimplicialSpace space;
  std::vector<PosetMap> to_a, to_b;  // levelwise projections
};

// Levelwise fiber product of two augmented simplicial spaces over the base.
inline SimplicialFiberProduct fiber_product_simplicial(const AugmentedSimplicialSpace& a,
                                                       const AugmentedSimplicialSpace& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("fiber_product_simplicial: truncation mismatch");
  SimplicialFiberProduct res;
  AugmentedSimplicialSpace& out = res.space;
  out.base = a.base;
  std::vector<std::vector<std::vector<int>>> pairs_per_level;
  for (int n = 0; n <= a.truncation(); ++n) {
    const PosetPtr& pa = a.objects[static_cast<size_t>(n)];
    const PosetPtr& pb = b.objects[static_cast<size_t>(n)];
    std::vector<std::vector<int>> pairs;
    for (int s = 0; s < pa->size(); ++s)
      for (int t = 0; t < pb->size(); ++t)
        if (a.augmentations[static_cast<size_t>(n)](s) ==
            b.augmentations[static_cast<size_t>(n)](t))
          pairs.push_back({s, t});
    int m = static_cast<int>(pairs.size());
    std::vector<std::vector<bool>> leq(static_cast<size_t>(m),
                                       std::vector<bool>(static_cast<size_t>(m), false));
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        leq[static_cast<size_t>(s)][static_cast<size_t>(t)] =
            pa->leq(pairs[static_cast<size_t>(s)][0], pairs[static_cast<size_t>(t)][0]) &&
            pb->leq(pairs[static_cast<size_t>(s)][1], pairs[static_cast<size_t>(t)][1]);
    out.objects.push_back(make_poset(FinitePoset(m, std::move(leq), true)));
    std::vector<int> to_base(static_cast<size_t>(m));
    std::vector<int> pa_img(static_cast<size_t>(m));
    std::vector<int> pb_img(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) {
      to_base[static_cast<size_t>(s)] =
          a.augmentations[static_cast<size_t>(n)](pairs[static_cast<size_t>(s)][0]);
      pa_img[static_cast<size_t>(s)] = pairs[static_cast<size_t>(s)][0];
      pb_img[static_cast<size_t>(s)] = pairs[static_cast<size_t>(s)][1];
    }
    out.augmentations.emplace_back(out.objects.back(), a.base, std::move(to_base));
    res.to_a.emplace_back(out.objects.back(), pa, std::move(pa_img));
    res.to_b.emplace_back(out.objects.back(), pb, std::move(pb_img));
    pairs_per_level.push_back(std::move(pairs));
  }
  for (int n = 1; n <= a.truncation(); ++n) {
    std::vector<PosetMap> faces;
    for (int i = 0; i <= n; ++i) {
      std::vector<int> img(static_cast<size_t>(out.objects[static_cast<size_t>(n)]->size()));
      for (size_t s = 0; s < pairs_per_level[static_cast<size_t>(n)].size(); ++s) {
        int fa = a.face(n, i)(pairs_per_level[static_cast<size_t>(n)][s][0]);
        int fb = b.face(n, i)(pairs_per_level[static_cast<size_t>(n)][s][1]);
        int found = -1;
        for (size_t t = 0; t < pairs_per_level[static_cast<size_t>(n - 1)].size(); ++t)
          if (pairs_per_level[static_cast<size_t>(n - 1)][t][0] == fa &&
              pairs_per_level[static_cast<size_t>(n - 1)][t][1] == fb)
            found = static_cast<int>(t);
        if (found < 0) throw std::logic_error("fiber_product_simplicial: face escapes");
        img[s] = found;
      }
      faces.emplace_back(out.objects[static_cast<size_t>(n)], out.objects[static_cast<size_t>(n - 1)],
                         std::move(img));
    }
    out.faces.push_back(std::move(faces));
  }
  out.ensure_valid();
  return res;
}

struct DescentReport {
  bool ok = false;
  std::string detail;
};

// Cohomological descent: F -> total of eps_{n*}(chain cochains of eps_n^* F)
// is a quasi-isomorphism in degrees <= degree_bound; verified stalkwise.
template <class K>
DescentReport descent_check(const AugmentedSimplicialSpace& xs, const PosetSheaf<K>& f,
                            int degree_bound) {
  xs.ensure_valid();
  DescentReport rep;
  int needed = degree_bound + xs.base->longest_chain_length() + 1;
  if (xs.truncation() < needed) {
    rep.detail = "truncation " + std::to_string(xs.truncation()) + " too shallow, need " +
                 std::to_string(needed);
    return rep;
  }
  int levels = xs.truncation();
  int chain_depth = degree_bound + 1;
  // Rows: K_n = eps_{n*} of the chain cochains of the pulled-back sheaf.
  std::vector<DerivedPushforward<K>> rows;
  std::vector<PosetSheaf<K>> pulled;
  for (int n = 0; n <= levels; ++n) {
    pulled.push_back(pullback_sheaf(xs.augmentations[static_cast<size_t>(n)], f));
    rows.push_back(derived_pushforward(xs.augmentations[static_cast<size_t>(n)],
                                       pulled.back(), chain_depth));
  }
  // Cofaces between rows by normalized cochain pullback along the faces.
  // delta^i at level n: rows[n-1] -> rows[n].
  std::vector<std::vector<std::vector<SheafMap<K>>>> cofaces(static_cast<size_t>(levels) + 1);
  for (int n = 1; n <= levels; ++n) {
    for (int i = 0; i <= n; ++i) {
      std::vector<SheafMap<K>> per_degree;
      for (int deg = 0; deg <= chain_depth; ++deg)
        per_degree.push_back(derived_comparison(xs.face(n, i),
                                                xs.augmentations[static_cast<size_t>(n - 1)],
                                                pulled[static_cast<size_t>(n - 1)],
                                                rows[static_cast<size_t>(n - 1)],
                                                rows[static_cast<size_t>(n)], deg));
      cofaces[static_cast<size_t>(n)].push_back(std::move(per_degree));
    }
  }
  // Stalkwise total complex against the stalk of F.
  for (int x = 0; x < xs.base->size(); ++x) {
    std::vector<TriFilteredComplex<K>> cols;
    std::vector<TriMap<K>> deltas;
    for (int n = 0; n <= levels; ++n)
      cols.push_back(with_trivial_filtrations(rows[static_cast<size_t>(n)].complex.stalk_complex(x)));
    for (int n = 1; n <= levels; ++n) {
      auto cmap = ComplexMap<K>::build(cols[static_cast<size_t>(n - 1)].cx,
                                       cols[static_cast<size_t>(n)].cx, [&](int deg) {
        Matrix<K> m(cols[static_cast<size_t>(n)].cx.dim(deg),
                    cols[static_cast<size_t>(n - 1)].cx.dim(deg));
        if (deg < 0 || deg > chain_depth) return m;
        for (int i = 0; i <= n; ++i) {
          const Matrix<K>& c = cofaces[static_cast<size_t>(n)][static_cast<size_t>(i)]
                                   [static_cast<size_t>(deg)]
                                       .comp[static_cast<size_t>(x)];
          m = (i % 2 == 0) ? m + c : m - c;
        }
        return m;
      });
      deltas.emplace_back(cols[static_cast<size_t>(n - 1)], cols[static_cast<size_t>(n)], cmap);
    }
    Complex<K> tot = total<K>(cols, deltas).tot.cx;
    // Unit F_x -> column 0, degree 0.
    Complex<K> point(0, {f.dim(x)}, {});
    SheafMap<K> unit = unit_into_derived(xs.augmentations[0], f, rows[0]);
    auto unit_map = ComplexMap<K>::build(point, tot, [&](int deg) {
      Matrix<K> m(tot.dim(deg), point.dim(deg));
      if (deg == 0) {
        const Matrix<K>& u = unit.comp[static_cast<size_t>(x)];
        for (int i = 0; i < u.rows(); ++i)
          for (int j = 0; j < u.cols(); ++j) m.at(i, j) = u.at(i, j);
      }
      return m;
    });
    if (!unit_map.commutes_with_d()) {
      rep.detail = "augmentation is not a chain map at stalk " + std::to_string(x);
      return rep;
    }
    if (!is_quasi_iso(unit_map, 0, degree_bound)) {
      rep.detail = "descent fails at stalk " + std::to_string(x);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

// The 2-truncated Mayer-Vietoris object E => Xt + S -> X.
inline AugmentedSimplicialSpace mayer_vietoris_object(const PosetMap& pi,
                                                      const std::vector<int>& s_points) {
  const PosetPtr& x = pi.dst;
  const PosetPtr& xt = pi.src;
  std::vector<int> e_points = pi.preimage(s_points);
  Subposet sub_s = subposet(x, s_points);
  Subposet sub_e = subposet(xt, e_points);
  DisjointUnion x0 = disjoint_union({xt, sub_s.poset});
  AugmentedSimplicialSpace out;
  out.base = x;
  out.objects = {x0.poset, sub_e.poset};
  std::vector<int> aug0(static_cast<size_t>(x0.poset->size()));
  for (int p = 0; p < xt->size(); ++p) aug0[static_cast<size_t>(x0.offsets[0] + p)] = pi(p);
  for (int p = 0; p < sub_s.poset->size(); ++p)
    aug0[static_cast<size_t>(x0.offsets[1] + p)] = sub_s.points[static_cast<size_t>(p)];
  out.augmentations.emplace_back(x0.poset, x, std::move(aug0));
  // Faces: delta_0 includes E into Xt, delta_1 maps E onto S.
  std::vector<int> d0(static_cast<size_t>(sub_e.poset->size()));
  std::vector<int> d1(static_cast<size_t>(sub_e.poset->size()));
  for (int p = 0; p < sub_e.poset->size(); ++p) {
    int up = sub_e.points[static_cast<size_t>(p)];
    d0[static_cast<size_t>(p)] = x0.offsets[0] + up;
    int s_img = pi(up);
    int s_idx = -1;
    for (size_t t = 0; t < sub_s.points.size(); ++t)
      if (sub_s.points[t] == s_img) s_idx = static_cast<int>(t);
    d1[static_cast<size_t>(p)] = x0.offsets[1] + s_idx;
  }
  out.faces.push_back({PosetMap(sub_e.poset, x0.poset, std::move(d0)),
                       PosetMap(sub_e.poset, x0.poset, std::move(d1))});
  std::vector<int> aug1(static_cast<size_t>(sub_e.poset->size()));
  for (int p = 0; p < sub_e.poset->size(); ++p)
    aug1[static_cast<size_t>(p)] = pi(sub_e.points[static_cast<size_t>(p)]);
  out.augmentations.emplace_back(sub_e.poset, x, std::move(aug1));
  out.ensure_valid();
  return out;
}

}  // namespace hodgecx
