#pragma once

#include <hodgecx/cohomology.hpp>
#include <hodgecx/poset.hpp>
#include <hodgecx/subspace.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgecx {

// Sheaf on a finite poset: a stalk per point and a generization map along
// every relation, functorial.
template <class K>
class PosetSheaf {
 public:
  PosetSheaf() = default;

  template <class Fn>
  static PosetSheaf build(PosetPtr base, std::vector<int> dims, Fn&& rho_fn,
                          bool validate = true) {
    PosetSheaf f;
    f.base_ = std::move(base);
    f.dims_ = std::move(dims);
    if (static_cast<int>(f.dims_.size()) != f.base_->size())
      throw std::invalid_argument("PosetSheaf: stalk count mismatch");
    for (int x = 0; x < f.base_->size(); ++x)
      for (int y = 0; y < f.base_->size(); ++y) {
        if (x == y || !f.base_->leq(x, y)) continue;
        Matrix<K> m = rho_fn(x, y);
        if (m.rows() != f.dims_[static_cast<size_t>(y)] ||
            m.cols() != f.dims_[static_cast<size_t>(x)])
          throw std::invalid_argument("PosetSheaf: generization shape mismatch");
        f.rho_.emplace(std::make_pair(x, y), std::move(m));
      }
    if (validate && !f.functorial()) throw std::invalid_argument("PosetSheaf: not functorial");
    return f;
  }

  static PosetSheaf constant(PosetPtr base, int d) {
    std::vector<int> dims(static_cast<size_t>(base->size()), d);
    return build(
        base, std::move(dims), [&](int, int) { return Matrix<K>::identity(d); }, false);
  }

  static PosetSheaf zero(PosetPtr base) { return constant(std::move(base), 0); }

  const PosetPtr& base() const { return base_; }
  int dim(int x) const { return dims_[static_cast<size_t>(x)]; }
  const std::vector<int>& dims() const { return dims_; }

  Matrix<K> rho(int x, int y) const {
    if (x == y) return Matrix<K>::identity(dim(x));
    auto it = rho_.find({x, y});
    if (it == rho_.end()) throw std::invalid_argument("PosetSheaf: rho on incomparable pair");
    return it->second;
  }

  bool functorial() const {
    for (int x = 0; x < base_->size(); ++x)
      for (int y = 0; y < base_->size(); ++y) {
        if (!base_->leq(x, y)) continue;
        for (int z = 0; z < base_->size(); ++z) {
          if (!base_->leq(y, z)) continue;
          if (!(rho(y, z) * rho(x, y) == rho(x, z))) return false;
        }
      }
    return true;
  }

  int total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
  }

  friend bool operator==(const PosetSheaf& a, const PosetSheaf& b) {
    return a.dims_ == b.dims_ && a.rho_ == b.rho_ && *a.base_ == *b.base_;
  }

 private:
  PosetPtr base_;
  std::vector<int> dims_;
  std::map<std::pair<int, int>, Matrix<K>> rho_;
};

// Map of sheaves over the same base.
template <class K>
struct SheafMap {
  const PosetSheaf<K>* src_ref = nullptr;  // not owning; components carry the data
  std::vector<Matrix<K>> comp;

  SheafMap() = default;
  SheafMap(std::vector<Matrix<K>> c) : comp(std::move(c)) {}

  const Matrix<K>& at(int x) const { return comp[static_cast<size_t>(x)]; }
};

template <class K>
SheafMap<K> sheaf_map(const PosetSheaf<K>& src, const PosetSheaf<K>& dst,
                      std::vector<Matrix<K>> comps, bool validate = true) {
  if (static_cast<int>(comps.size()) != src.base()->size())
    throw std::invalid_argument("sheaf_map: component count mismatch");
  for (int x = 0; x < src.base()->size(); ++x)
    if (comps[static_cast<size_t>(x)].cols() != src.dim(x) ||
        comps[static_cast<size_t>(x)].rows() != dst.dim(x))
      throw std::invalid_argument("sheaf_map: component shape mismatch");
  if (validate) {
    for (int x = 0; x < src.base()->size(); ++x)
      for (int y = 0; y < src.base()->size(); ++y) {
        if (!src.base()->leq(x, y) || x == y) continue;
        if (!(dst.rho(x, y) * comps[static_cast<size_t>(x)] ==
              comps[static_cast<size_t>(y)] * src.rho(x, y)))
          throw std::invalid_argument("sheaf_map: not natural");
      }
  }
  SheafMap<K> m(std::move(comps));
  return m;
}

template <class K>
SheafMap<K> compose_sheaf_maps(const SheafMap<K>& g, const SheafMap<K>& f) {
  std::vector<Matrix<K>> comps;
  for (size_t x = 0; x < f.comp.size(); ++x) comps.push_back(g.comp[x] * f.comp[x]);
  return SheafMap<K>(std::move(comps));
}

template <class K>
SheafMap<K> identity_sheaf_map(const PosetSheaf<K>& f) {
  std::vector<Matrix<K>> comps;
  for (int x = 0; x < f.base()->size(); ++x) comps.push_back(Matrix<K>::identity(f.dim(x)));
  return SheafMap<K>(std::move(comps));
}

template <class K>
bool sheaf_maps_equal(const SheafMap<K>& a, const SheafMap<K>& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t x = 0; x < a.comp.size(); ++x)
    if (!(a.comp[x] == b.comp[x])) return false;
  return true;
}

// Pullback along a monotone map: stalks and generizations from downstairs.
template <class K>
PosetSheaf<K> pullback_sheaf(const PosetMap& phi, const PosetSheaf<K>& f) {
  std::vector<int> dims;
  for (int x = 0; x < phi.src->size(); ++x) dims.push_back(f.dim(phi(x)));
  return PosetSheaf<K>::build(
      phi.src, std::move(dims), [&](int x, int y) { return f.rho(phi(x), phi(y)); }, false);
}

// Restriction to a locally closed subposet.
template <class K>
PosetSheaf<K> restrict_sheaf(const PosetSheaf<K>& f, const Subposet& u) {
  return pullback_sheaf(u.inclusion, f);
}

// Pushforward j_{U*} with the stalkwise limit realization kept explicit:
// (j_* G)_x = lim of G over {u in U : u >= x}, the empty limit being zero.
template <class K>
struct Pushforward {
  PosetSheaf<K> sheaf;  // on the ambient poset
  std::vector<std::vector<int>> pts;      // per ambient point: U-indices, sorted
  std::vector<std::vector<int>> offsets;  // per ambient point: block offsets
  std::vector<Subspace<K>> families;      // compatible families; basis = stalk coords
};

template <class K>
Pushforward<K> pushforward(const PosetSheaf<K>& g, const Subposet& u, const PosetPtr& base) {
  int n = base->size();
  Pushforward<K> out;
  out.pts.resize(static_cast<size_t>(n));
  out.offsets.resize(static_cast<size_t>(n));
  out.families.resize(static_cast<size_t>(n));
  std::vector<int> dims(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    std::vector<int>& pts = out.pts[static_cast<size_t>(x)];
    for (int ui = 0; ui < u.poset->size(); ++ui)
      if (base->leq(x, u.points[static_cast<size_t>(ui)])) pts.push_back(ui);
    std::vector<int>& off = out.offsets[static_cast<size_t>(x)];
    int total = 0;
    for (int ui : pts) {
      off.push_back(total);
      total += g.dim(ui);
    }
    // Compatibility constraints: rho(s_u) = s_{u'} for u <= u'.
    std::vector<std::vector<K>> rows;
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t b = 0; b < pts.size(); ++b) {
        if (a == b || !u.poset->leq(pts[a], pts[b])) continue;
        Matrix<K> r = g.rho(pts[a], pts[b]);
        for (int i = 0; i < r.rows(); ++i) {
          std::vector<K> row(static_cast<size_t>(total), K(0));
          for (int j = 0; j < r.cols(); ++j)
            row[static_cast<size_t>(off[a] + j)] = r.at(i, j);
          row[static_cast<size_t>(off[b] + i)] -= K(1);
          rows.push_back(std::move(row));
        }
      }
    out.families[static_cast<size_t>(x)] =
        rows.empty() ? Subspace<K>::full(total)
                     : Subspace<K>::span(total, kernel_basis(Matrix<K>::from_rows(rows)));
    dims[static_cast<size_t>(x)] = out.families[static_cast<size_t>(x)].dim();
  }
  out.sheaf = PosetSheaf<K>::build(
      base, dims,
      [&](int x, int y) {
        // Project the family to the smaller neighborhood and re-coordinate.
        const auto& px = out.pts[static_cast<size_t>(x)];
        const auto& py = out.pts[static_cast<size_t>(y)];
        const auto& ox = out.offsets[static_cast<size_t>(x)];
        const auto& oy = out.offsets[static_cast<size_t>(y)];
        const Subspace<K>& fx = out.families[static_cast<size_t>(x)];
        const Subspace<K>& fy = out.families[static_cast<size_t>(y)];
        Matrix<K> m(fy.dim(), fx.dim());
        for (int t = 0; t < fx.dim(); ++t) {
          std::vector<K> projected(static_cast<size_t>(fy.ambient()), K(0));
          for (size_t b = 0; b < py.size(); ++b) {
            auto it = std::find(px.begin(), px.end(), py[b]);
            int ax = ox[static_cast<size_t>(it - px.begin())];
            for (int j = 0; j < g.dim(py[b]); ++j)
              projected[static_cast<size_t>(oy[b] + j)] = fx.basis().at(t, ax + j);
          }
          auto c = fy.coords_of(projected);
          if (!c) throw std::logic_error("pushforward: family projection escapes the limit");
          for (int i = 0; i < fy.dim(); ++i) m.at(i, t) = (*c)[static_cast<size_t>(i)];
        }
        return m;
      },
      false);
  return out;
}

// Unit F -> j_* j^* F of the adjunction.
template <class K>
SheafMap<K> adjunction_unit(const PosetSheaf<K>& f, const Subposet& u,
                            const Pushforward<K>& pf) {
  const PosetPtr& base = f.base();
  std::vector<Matrix<K>> comps;
  for (int x = 0; x < base->size(); ++x) {
    const auto& pts = pf.pts[static_cast<size_t>(x)];
    const auto& off = pf.offsets[static_cast<size_t>(x)];
    const Subspace<K>& fam = pf.families[static_cast<size_t>(x)];
    Matrix<K> m(fam.dim(), f.dim(x));
    for (int c = 0; c < f.dim(x); ++c) {
      std::vector<K> v(static_cast<size_t>(f.dim(x)), K(0));
      v[static_cast<size_t>(c)] = K(1);
      std::vector<K> family(static_cast<size_t>(fam.ambient()), K(0));
      for (size_t b = 0; b < pts.size(); ++b) {
        std::vector<K> w = f.rho(x, u.points[static_cast<size_t>(pts[b])]).apply(v);
        for (size_t j = 0; j < w.size(); ++j) family[static_cast<size_t>(off[b]) + j] = w[j];
      }
      auto coords = fam.coords_of(family);
      if (!coords) throw std::logic_error("adjunction_unit: unit family not compatible");
      for (int i = 0; i < fam.dim(); ++i) m.at(i, c) = (*coords)[static_cast<size_t>(i)];
    }
    comps.push_back(std::move(m));
  }
  return SheafMap<K>(std::move(comps));
}

// Counit j^* j_* G -> G, on the subposet: evaluate the family at the point.
template <class K>
Matrix<K> counit_component(const PosetSheaf<K>& g, const Subposet& u, const Pushforward<K>& pf,
                           int ui) {
  int x = u.points[static_cast<size_t>(ui)];
  const auto& pts = pf.pts[static_cast<size_t>(x)];
  const auto& off = pf.offsets[static_cast<size_t>(x)];
  const Subspace<K>& fam = pf.families[static_cast<size_t>(x)];
  auto it = std::find(pts.begin(), pts.end(), ui);
  if (it == pts.end()) throw std::logic_error("counit_component: point missing from its star");
  int o = off[static_cast<size_t>(it - pts.begin())];
  Matrix<K> m(g.dim(ui), fam.dim());
  for (int t = 0; t < fam.dim(); ++t)
    for (int i = 0; i < g.dim(ui); ++i) m.at(i, t) = fam.basis().at(t, o + i);
  return m;
}

// Direct sum of sheaves over one base, with the block layout.
template <class K>
struct SheafSum {
  PosetSheaf<K> sheaf;
  std::vector<std::vector<int>> offsets;  // offsets[part][point]
};

template <class K>
SheafSum<K> direct_sum_sheaves(const std::vector<const PosetSheaf<K>*>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum_sheaves: empty");
  const PosetPtr& base = parts[0]->base();
  int n = base->size();
  std::vector<int> dims(static_cast<size_t>(n), 0);
  SheafSum<K> out;
  out.offsets.assign(parts.size(), std::vector<int>(static_cast<size_t>(n), 0));
  for (int x = 0; x < n; ++x) {
    int off = 0;
    for (size_t t = 0; t < parts.size(); ++t) {
      out.offsets[t][static_cast<size_t>(x)] = off;
      off += parts[t]->dim(x);
    }
    dims[static_cast<size_t>(x)] = off;
  }
  out.sheaf = PosetSheaf<K>::build(
      base, dims,
      [&](int x, int y) {
        Matrix<K> m(dims[static_cast<size_t>(y)], dims[static_cast<size_t>(x)]);
        for (size_t t = 0; t < parts.size(); ++t) {
          Matrix<K> r = parts[t]->rho(x, y);
          for (int i = 0; i < r.rows(); ++i)
            for (int j = 0; j < r.cols(); ++j)
              m.at(out.offsets[t][static_cast<size_t>(y)] + i,
                   out.offsets[t][static_cast<size_t>(x)] + j) = r.at(i, j);
        }
        return m;
      },
      false);
  return out;
}

// The monad T = J_* J^* of a stratification: TF is the direct sum over atoms
// of j_{U*} j_U^* F, with unit from the adjunction units and multiplication
// from the counits.
template <class K>
class StratMonad {
 public:
  explicit StratMonad(Stratification strat) : strat_(std::move(strat)) {
    for (int a = 0; a < strat_.atom_count(); ++a)
      subs_.push_back(subposet(strat_.space(), strat_.atom(a)));
  }

  const Stratification& strat() const { return strat_; }

  PosetSheaf<K> apply(const PosetSheaf<K>& f) const {
    std::vector<Pushforward<K>> parts = atom_parts(f);
    std::vector<const PosetSheaf<K>*> ptrs;
    for (const auto& p : parts) ptrs.push_back(&p.sheaf);
    return direct_sum_sheaves(ptrs).sheaf;
  }

  SheafMap<K> apply_map(const PosetSheaf<K>& src, const PosetSheaf<K>& dst,
                        const SheafMap<K>& phi) const {
    std::vector<Pushforward<K>> ps = atom_parts(src);
    std::vector<Pushforward<K>> pd = atom_parts(dst);
    int n = strat_.space()->size();
    std::vector<Matrix<K>> comps;
    for (int x = 0; x < n; ++x) {
      int sdim = 0, ddim = 0;
      for (int a = 0; a < strat_.atom_count(); ++a) {
        sdim += ps[static_cast<size_t>(a)].families[static_cast<size_t>(x)].dim();
        ddim += pd[static_cast<size_t>(a)].families[static_cast<size_t>(x)].dim();
      }
      Matrix<K> m(ddim, sdim);
      int soff = 0, doff = 0;
      for (int a = 0; a < strat_.atom_count(); ++a) {
        const auto& fs = ps[static_cast<size_t>(a)].families[static_cast<size_t>(x)];
        const auto& fd = pd[static_cast<size_t>(a)].families[static_cast<size_t>(x)];
        const auto& pts = ps[static_cast<size_t>(a)].pts[static_cast<size_t>(x)];
        const auto& soffs = ps[static_cast<size_t>(a)].offsets[static_cast<size_t>(x)];
        const auto& doffs = pd[static_cast<size_t>(a)].offsets[static_cast<size_t>(x)];
        for (int t = 0; t < fs.dim(); ++t) {
          std::vector<K> image(static_cast<size_t>(fd.ambient()), K(0));
          for (size_t b = 0; b < pts.size(); ++b) {
            int parent = subs_[static_cast<size_t>(a)].points[static_cast<size_t>(pts[b])];
            std::vector<K> v(static_cast<size_t>(src.dim(parent)));
            for (size_t j = 0; j < v.size(); ++j)
              v[j] = fs.basis().at(t, soffs[b] + static_cast<int>(j));
            std::vector<K> w = phi.comp[static_cast<size_t>(parent)].apply(v);
            for (size_t j = 0; j < w.size(); ++j)
              image[static_cast<size_t>(doffs[b]) + j] = w[j];
          }
          auto c = fd.coords_of(image);
          if (!c) throw std::logic_error("StratMonad: mapped family not compatible");
          for (int i = 0; i < fd.dim(); ++i) m.at(doff + i, soff + t) = (*c)[static_cast<size_t>(i)];
        }
        soff += fs.dim();
        doff += fd.dim();
      }
      comps.push_back(std::move(m));
    }
    return SheafMap<K>(std::move(comps));
  }

  SheafMap<K> eta(const PosetSheaf<K>& f) const {
    std::vector<Pushforward<K>> parts = atom_parts(f);
    int n = strat_.space()->size();
    std::vector<Matrix<K>> comps;
    std::vector<SheafMap<K>> units;
    for (int a = 0; a < strat_.atom_count(); ++a)
      units.push_back(adjunction_unit(f, subs_[static_cast<size_t>(a)],
                                      parts[static_cast<size_t>(a)]));
    for (int x = 0; x < n; ++x) {
      int total = 0;
      for (int a = 0; a < strat_.atom_count(); ++a)
        total += parts[static_cast<size_t>(a)].families[static_cast<size_t>(x)].dim();
      Matrix<K> m(total, f.dim(x));
      int off = 0;
      for (int a = 0; a < strat_.atom_count(); ++a) {
        const Matrix<K>& u = units[static_cast<size_t>(a)].comp[static_cast<size_t>(x)];
        for (int i = 0; i < u.rows(); ++i)
          for (int j = 0; j < u.cols(); ++j) m.at(off + i, j) = u.at(i, j);
        off += u.rows();
      }
      comps.push_back(std::move(m));
    }
    return SheafMap<K>(std::move(comps));
  }

  // mu : T(TF) -> TF. On the U-block of T(TF): restrict the inner sum to its
  // U-component and evaluate the family at the point of U.
  SheafMap<K> mu(const PosetSheaf<K>& f) const {
    PosetSheaf<K> tf = apply(f);
    std::vector<Pushforward<K>> inner = atom_parts(f);    // blocks of TF
    std::vector<Pushforward<K>> outer = atom_parts(tf);   // blocks of T(TF)
    int n = strat_.space()->size();
    // Block offsets of TF at each point.
    std::vector<std::vector<int>> tf_off(static_cast<size_t>(strat_.atom_count()),
                                         std::vector<int>(static_cast<size_t>(n), 0));
    for (int x = 0; x < n; ++x) {
      int off = 0;
      for (int a = 0; a < strat_.atom_count(); ++a) {
        tf_off[static_cast<size_t>(a)][static_cast<size_t>(x)] = off;
        off += inner[static_cast<size_t>(a)].families[static_cast<size_t>(x)].dim();
      }
    }
    std::vector<Matrix<K>> comps;
    for (int x = 0; x < n; ++x) {
      int src_total = 0;
      for (int a = 0; a < strat_.atom_count(); ++a)
        src_total += outer[static_cast<size_t>(a)].families[static_cast<size_t>(x)].dim();
      Matrix<K> m(tf.dim(x), src_total);
      int soff = 0;
      for (int a = 0; a < strat_.atom_count(); ++a) {
        const auto& fam = outer[static_cast<size_t>(a)].families[static_cast<size_t>(x)];
        const auto& pts = outer[static_cast<size_t>(a)].pts[static_cast<size_t>(x)];
        const auto& offs = outer[static_cast<size_t>(a)].offsets[static_cast<size_t>(x)];
        // Target: the U=a block of TF at x.
        const auto& tgt_fam = inner[static_cast<size_t>(a)].families[static_cast<size_t>(x)];
        const auto& tgt_pts = inner[static_cast<size_t>(a)].pts[static_cast<size_t>(x)];
        const auto& tgt_offs = inner[static_cast<size_t>(a)].offsets[static_cast<size_t>(x)];
        for (int t = 0; t < fam.dim(); ++t) {
          // The family assigns to each u in U meet up(x) a vector in TF_u;
          // select its U-block and evaluate at u itself.
          std::vector<K> target_family(static_cast<size_t>(tgt_fam.ambient()), K(0));
          for (size_t b = 0; b < pts.size(); ++b) {
            int ui = pts[b];
            int parent = subs_[static_cast<size_t>(a)].points[static_cast<size_t>(ui)];
            // TF_parent vector from the family coordinates.
            std::vector<K> tf_vec(static_cast<size_t>(tf.dim(parent)));
            for (size_t j = 0; j < tf_vec.size(); ++j)
              tf_vec[j] = fam.basis().at(t, offs[b] + static_cast<int>(j));
            // Its U=a block, as a family over U meet up(parent); evaluate at
            // parent itself.
            const auto& in_fam = inner[static_cast<size_t>(a)].families[static_cast<size_t>(parent)];
            const auto& in_pts = inner[static_cast<size_t>(a)].pts[static_cast<size_t>(parent)];
            const auto& in_offs = inner[static_cast<size_t>(a)].offsets[static_cast<size_t>(parent)];
            std::vector<K> block(static_cast<size_t>(in_fam.dim()));
            for (int j = 0; j < in_fam.dim(); ++j)
              block[static_cast<size_t>(j)] =
                  tf_vec[static_cast<size_t>(tf_off[static_cast<size_t>(a)][static_cast<size_t>(parent)] + j)];
            // Evaluate compatible family at the point ui of U.
            auto it = std::find(in_pts.begin(), in_pts.end(), ui);
            if (it == in_pts.end()) throw std::logic_error("StratMonad: point missing in star");
            int o = in_offs[static_cast<size_t>(it - in_pts.begin())];
            std::vector<K> value(static_cast<size_t>(f.dim(parent)), K(0));
            for (int j = 0; j < f.dim(parent); ++j) {
              K acc(0);
              for (int s = 0; s < in_fam.dim(); ++s)
                acc += block[static_cast<size_t>(s)] * in_fam.basis().at(s, o + j);
              value[static_cast<size_t>(j)] = acc;
            }
            for (int j = 0; j < f.dim(parent); ++j)
              target_family[static_cast<size_t>(tgt_offs[b] + j)] = value[static_cast<size_t>(j)];
          }
          auto c = tgt_fam.coords_of(target_family);
          if (!c) throw std::logic_error("StratMonad: mu family not compatible");
          for (int i = 0; i < tgt_fam.dim(); ++i)
            m.at(tf_off[static_cast<size_t>(a)][static_cast<size_t>(x)] + i, soff + t) =
                (*c)[static_cast<size_t>(i)];
        }
        soff += fam.dim();
      }
      comps.push_back(std::move(m));
    }
    return SheafMap<K>(std::move(comps));
  }

  // Contracting homotopy component h : (T G)_x -> G_x, the identity on the
  // block of the atom containing x, evaluated at x, and zero elsewhere.
  SheafMap<K> homotopy(const PosetSheaf<K>& g) const {
    std::vector<Pushforward<K>> parts = atom_parts(g);
    int n = strat_.space()->size();
    std::vector<Matrix<K>> comps;
    for (int x = 0; x < n; ++x) {
      int a = strat_.atom_of(x);
      int src_total = 0;
      for (int b = 0; b < strat_.atom_count(); ++b)
        src_total += parts[static_cast<size_t>(b)].families[static_cast<size_t>(x)].dim();
      Matrix<K> m(g.dim(x), src_total);
      int soff = 0;
      for (int b = 0; b < strat_.atom_count(); ++b) {
        const auto& fam = parts[static_cast<size_t>(b)].families[static_cast<size_t>(x)];
        if (b == a) {
          // Locate x inside its own atom star and read off that block.
          const auto& pts = parts[static_cast<size_t>(b)].pts[static_cast<size_t>(x)];
          const auto& offs = parts[static_cast<size_t>(b)].offsets[static_cast<size_t>(x)];
          int ui = -1;
          for (size_t t = 0; t < subs_[static_cast<size_t>(b)].points.size(); ++t)
            if (subs_[static_cast<size_t>(b)].points[t] == x) ui = static_cast<int>(t);
          auto it = std::find(pts.begin(), pts.end(), ui);
          if (it == pts.end()) throw std::logic_error("StratMonad: homotopy point missing");
          int o = offs[static_cast<size_t>(it - pts.begin())];
          for (int t = 0; t < fam.dim(); ++t)
            for (int i = 0; i < g.dim(x); ++i) m.at(i, soff + t) = fam.basis().at(t, o + i);
        }
        soff += fam.dim();
      }
      comps.push_back(std::move(m));
    }
    return SheafMap<K>(std::move(comps));
  }

  const Subposet& atom_subposet(int a) const { return subs_[static_cast<size_t>(a)]; }

  std::vector<Pushforward<K>> atom_parts(const PosetSheaf<K>& f) const {
    std::vector<Pushforward<K>> out;
    for (int a = 0; a < strat_.atom_count(); ++a) {
      PosetSheaf<K> restricted = restrict_sheaf(f, subs_[static_cast<size_t>(a)]);
      out.push_back(pushforward(restricted, subs_[static_cast<size_t>(a)], strat_.space()));
    }
    return out;
  }

 private:
  Stratification strat_;
  std::vector<Subposet> subs_;
};

// j_V^* j_{U*} vanishes unless V <= U, checked with constant probes.
template <class K>
bool vanishing_check(const Stratification& strat) {
  StratMonad<K> monad{strat};
  for (int u = 0; u < strat.atom_count(); ++u) {
    const Subposet& su = monad.atom_subposet(u);
    PosetSheaf<K> probe = PosetSheaf<K>::constant(su.poset, 1);
    Pushforward<K> pf = pushforward(probe, su, strat.space());
    for (int v = 0; v < strat.atom_count(); ++v) {
      if (strat.atom_leq(v, u)) continue;
      for (int p : strat.atom(v))
        if (pf.sheaf.dim(p) != 0) return false;
    }
  }
  return true;
}

// Constant-constructible: every generization inside an atom is invertible
// and each restriction trivializes over a spanning tree consistently.
template <class K>
bool is_constant_constructible(const PosetSheaf<K>& f, const Stratification& strat) {
  for (int a = 0; a < strat.atom_count(); ++a) {
    Subposet sub = subposet(f.base(), strat.atom(a));
    PosetSheaf<K> r = restrict_sheaf(f, sub);
    int m = sub.poset->size();
    // A constant sheaf has one stalk dimension across the whole atom.
    for (int x = 1; x < m; ++x)
      if (r.dim(x) != r.dim(0)) return false;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        if (!sub.poset->leq(x, y) || x == y) continue;
        if (!inverse(r.rho(x, y)).has_value()) return false;
      }
    // Trivialize each component along a spanning tree, then verify globally.
    std::vector<std::optional<Matrix<K>>> psi(static_cast<size_t>(m));
    for (const auto& comp : sub.poset->components()) {
      int root = comp.front();
      psi[static_cast<size_t>(root)] = Matrix<K>::identity(r.dim(root));
      std::vector<int> queue{root};
      size_t head = 0;
      while (head < queue.size()) {
        int x = queue[static_cast<size_t>(head++)];
        for (int y : comp) {
          if (psi[static_cast<size_t>(y)].has_value()) continue;
          if (sub.poset->leq(x, y)) {
            psi[static_cast<size_t>(y)] = *psi[static_cast<size_t>(x)] * *inverse(r.rho(x, y));
            queue.push_back(y);
          } else if (sub.poset->leq(y, x)) {
            psi[static_cast<size_t>(y)] = *psi[static_cast<size_t>(x)] * r.rho(y, x);
            queue.push_back(y);
          }
        }
      }
    }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        if (!sub.poset->leq(x, y) || x == y) continue;
        if (!(*psi[static_cast<size_t>(y)] * r.rho(x, y) == *psi[static_cast<size_t>(x)]))
          return false;
      }
  }
  return true;
}

}  // namespace hodgecx
