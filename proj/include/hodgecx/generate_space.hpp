#pragma once

#include <hodgecx/mayer_vietoris.hpp>
#include <hodgecx/poset.hpp>
#include <hodgecx/rng.hpp>
#include <hodgecx/sheaf.hpp>

#include <map>
#include <utility>
#include <vector>

namespace hodgecx {

// Random poset with bounded height: points are placed on levels and edges
// only go upward, so antisymmetry is automatic.
inline FinitePoset random_poset(DetRng& rng, int n_points, int height_cap, int density_pct = 40) {
  std::vector<int> level(static_cast<size_t>(n_points));
  for (auto& l : level) l = rng.uniform(0, height_cap);
  std::vector<std::pair<int, int>> rels;
  for (int a = 0; a < n_points; ++a)
    for (int b = 0; b < n_points; ++b) {
      if (level[static_cast<size_t>(a)] >= level[static_cast<size_t>(b)]) continue;
      if (rng.uniform(1, 100) <= density_pct) rels.emplace_back(a, b);
    }
  return FinitePoset::from_relations(n_points, rels);
}

// The four-point circle: two closed points under two open points.
inline FinitePoset circle_model() {
  return FinitePoset::from_relations(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Random stratification: random labels refined by closures until the
// Boolean-algebra condition stabilizes; falls back to the single atom.
inline Stratification random_stratification(DetRng& rng, const PosetPtr& space, int max_atoms,
                                            int attempts = 24) {
  int n = space->size();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    int k = rng.uniform(1, std::max(1, max_atoms));
    std::vector<int> block(static_cast<size_t>(n));
    for (auto& b : block) b = rng.uniform(0, k - 1);
    // Refine by closures of blocks until stable.
    for (int round = 0; round < n + 2; ++round) {
      bool changed = false;
      int nb = 0;
      for (int b : block) nb = std::max(nb, b + 1);
      for (int z = 0; z < nb; ++z) {
        std::vector<int> zpts;
        for (int p = 0; p < n; ++p)
          if (block[static_cast<size_t>(p)] == z) zpts.push_back(p);
        if (zpts.empty()) continue;
        std::vector<int> cl = space->down_set_of(zpts);
        std::vector<bool> in_cl(static_cast<size_t>(n), false);
        for (int p : cl) in_cl[static_cast<size_t>(p)] = true;
        // Split every block along the closure.
        std::map<std::pair<int, bool>, int> renumber;
        std::vector<int> nblock(static_cast<size_t>(n));
        for (int p = 0; p < n; ++p) {
          auto key = std::make_pair(block[static_cast<size_t>(p)],
                                    static_cast<bool>(in_cl[static_cast<size_t>(p)]));
          auto it = renumber.find(key);
          if (it == renumber.end())
            it = renumber.emplace(key, static_cast<int>(renumber.size())).first;
          nblock[static_cast<size_t>(p)] = it->second;
        }
        if (nblock != block) {
          block = nblock;
          changed = true;
        }
      }
      if (!changed) break;
    }
    int nb = 0;
    for (int b : block) nb = std::max(nb, b + 1);
    if (nb > max_atoms) continue;
    auto s = Stratification::validated(space, block);
    if (s) return *s;
  }
  return Stratification::require(space, std::vector<int>(static_cast<size_t>(n), 0));
}

// Random constant-constructible sheaf: a direct sum of extensions by zero of
// constants over open unions of atoms and pushforwards of constants from
// closed unions of atoms.
template <class K>
PosetSheaf<K> random_constructible_sheaf(DetRng& rng, const Stratification& strat,
                                         int max_rank = 2) {
  const PosetPtr& x = strat.space();
  int n = x->size();
  struct Piece {
    std::vector<bool> support;
    int rank;
  };
  std::vector<Piece> pieces;
  int n_pieces = rng.uniform(1, 3);
  for (int t = 0; t < n_pieces; ++t) {
    // Random union of atoms.
    std::vector<bool> atoms(static_cast<size_t>(strat.atom_count()), false);
    for (size_t a = 0; a < atoms.size(); ++a) atoms[a] = rng.coin();
    std::vector<int> pts;
    for (int p = 0; p < n; ++p)
      if (atoms[static_cast<size_t>(strat.atom_of(p))]) pts.push_back(p);
    if (pts.empty()) continue;
    bool open = x->is_up_set(pts);
    bool closed = x->is_down_set(pts);
    if (!open && !closed) {
      // Take the closure, which is again a union of atoms.
      pts = x->down_set_of(pts);
    }
    Piece piece;
    piece.support.assign(static_cast<size_t>(n), false);
    for (int p : pts) piece.support[static_cast<size_t>(p)] = true;
    piece.rank = rng.uniform(1, max_rank);
    pieces.push_back(std::move(piece));
  }
  if (pieces.empty()) {
    Piece whole;
    whole.support.assign(static_cast<size_t>(n), true);
    whole.rank = 1;
    pieces.push_back(std::move(whole));
  }
  std::vector<int> dims(static_cast<size_t>(n), 0);
  for (const auto& piece : pieces)
    for (int p = 0; p < n; ++p)
      if (piece.support[static_cast<size_t>(p)]) dims[static_cast<size_t>(p)] += piece.rank;
  return PosetSheaf<K>::build(
      x, dims,
      [&](int a, int b) {
        Matrix<K> m(dims[static_cast<size_t>(b)], dims[static_cast<size_t>(a)]);
        int ra = 0, rb = 0;
        for (const auto& piece : pieces) {
          bool in_a = piece.support[static_cast<size_t>(a)];
          bool in_b = piece.support[static_cast<size_t>(b)];
          if (in_a && in_b)
            for (int i = 0; i < piece.rank; ++i) m.at(rb + i, ra + i) = K(1);
          ra += in_a ? piece.rank : 0;
          rb += in_b ? piece.rank : 0;
        }
        return m;
      },
      true);
}

// Disjoint union of the down-sets of the given points, mapping back by
// inclusion; the substance of the combinatorial resolvers.
inline PosetMap downset_cover(const PosetPtr& x, const std::vector<int>& tops) {
  std::vector<PosetPtr> parts;
  std::vector<std::vector<int>> part_points;
  for (int m : tops) {
    Subposet sub = subposet(x, x->down_set(m));
    parts.push_back(sub.poset);
    part_points.push_back(sub.points);
  }
  DisjointUnion du = disjoint_union(parts);
  std::vector<int> img(static_cast<size_t>(du.poset->size()));
  for (size_t t = 0; t < parts.size(); ++t)
    for (int a = 0; a < parts[t]->size(); ++a)
      img[static_cast<size_t>(du.offsets[t] + a)] = part_points[t][static_cast<size_t>(a)];
  return PosetMap(du.poset, x, std::move(img));
}

// The default combinatorial resolver: one component per maximal point.
inline PosetMap default_resolver(const PosetPtr& x) {
  return downset_cover(x, x->maximal_points());
}

// A distinct small resolver: the default one with its first component doubled.
inline PosetMap doubled_resolver(const PosetPtr& x) {
  std::vector<int> tops = x->maximal_points();
  if (!tops.empty()) tops.insert(tops.begin(), tops.front());
  return downset_cover(x, tops);
}

// A coarser resolver: one component per point of the base.
inline PosetMap pointwise_resolver(const PosetPtr& x) {
  std::vector<int> tops;
  for (int m = 0; m < x->size(); ++m) tops.push_back(m);
  return downset_cover(x, tops);
}

// Blow-down square: the default resolver over a random base, with S any
// closed set containing the branch locus.
struct BlowDownSquare {
  PosetMap pi;
  std::vector<int> s_points;
};

inline BlowDownSquare blow_down_square(DetRng& rng, int n_points, int height_cap) {
  PosetPtr x = make_poset(random_poset(rng, n_points, height_cap));
  PosetMap pi = default_resolver(x);
  // Branch locus: points with at least two maximal points above.
  std::vector<int> maxima = x->maximal_points();
  std::vector<int> branch;
  for (int p = 0; p < x->size(); ++p) {
    int above = 0;
    for (int m : maxima)
      if (x->leq(p, m)) ++above;
    if (above >= 2) branch.push_back(p);
  }
  // Optionally enlarge by a random closed set.
  std::vector<int> seed = branch;
  for (int p = 0; p < x->size(); ++p)
    if (rng.coin(1, 4)) seed.push_back(p);
  std::vector<int> s = x->down_set_of(seed);
  return {std::move(pi), std::move(s)};
}

}  // namespace hodgecx
