#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgecx {

// Finite topological space encoded by its specialization order: open sets
// are up-sets, the closure of {x} is the down-set of x.
class FinitePoset {
 public:
  FinitePoset() = default;

  // From the full relation matrix; verifies the partial-order axioms unless
  // the construction is trusted (products, subposets and the like).
  FinitePoset(int n, std::vector<std::vector<bool>> leq, bool trusted = false)
      : n_(n), leq_(std::move(leq)) {
    if (static_cast<int>(leq_.size()) != n)
      throw std::invalid_argument("FinitePoset: relation shape mismatch");
    for (const auto& row : leq_)
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("FinitePoset: relation shape mismatch");
    if (!trusted) {
      for (int x = 0; x < n_; ++x)
        if (!leq_[x][x]) throw std::invalid_argument("FinitePoset: not reflexive");
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          if (x != y && leq_[x][y] && leq_[y][x])
            throw std::invalid_argument("FinitePoset: not antisymmetric");
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          if (!leq_[x][y]) continue;
          for (int z = 0; z < n_; ++z)
            if (leq_[y][z] && !leq_[x][z])
              throw std::invalid_argument("FinitePoset: not transitive");
        }
    }
  }

  // From generating strict relations a < b; takes the reflexive-transitive
  // closure and rejects cycles.
  static FinitePoset from_relations(int n, const std::vector<std::pair<int, int>>& rels) {
    std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (int x = 0; x < n; ++x) leq[x][x] = true;
    for (auto [a, b] : rels) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("FinitePoset: relation out of range");
      leq[a][b] = true;
    }
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        if (leq[x][k])
          for (int y = 0; y < n; ++y)
            if (leq[k][y]) leq[x][y] = true;
    return FinitePoset(n, std::move(leq), false);
  }

  int size() const { return n_; }
  bool leq(int x, int y) const { return leq_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  const std::vector<std::vector<bool>>& relation() const { return leq_; }

  std::vector<int> up_set(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
      if (leq(x, y)) out.push_back(y);
    return out;
  }
  std::vector<int> down_set(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
      if (leq(y, x)) out.push_back(y);
    return out;
  }
  std::vector<int> down_set_of(const std::vector<int>& pts) const {
    std::vector<bool> in(static_cast<size_t>(n_), false);
    for (int p : pts)
      for (int y = 0; y < n_; ++y)
        if (leq(y, p)) in[static_cast<size_t>(y)] = true;
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
      if (in[static_cast<size_t>(y)]) out.push_back(y);
    return out;
  }

  bool is_up_set(const std::vector<int>& pts) const {
    std::vector<bool> in = mask(pts);
    for (int x : pts)
      for (int y = 0; y < n_; ++y)
        if (leq(x, y) && !in[static_cast<size_t>(y)]) return false;
    return true;
  }
  bool is_down_set(const std::vector<int>& pts) const {
    std::vector<bool> in = mask(pts);
    for (int x : pts)
      for (int y = 0; y < n_; ++y)
        if (leq(y, x) && !in[static_cast<size_t>(y)]) return false;
    return true;
  }
  // Locally closed = open inside the closure = order-convex.
  bool is_locally_closed(const std::vector<int>& pts) const {
    std::vector<bool> in = mask(pts);
    for (int a : pts)
      for (int c : pts)
        if (leq(a, c))
          for (int b = 0; b < n_; ++b)
            if (leq(a, b) && leq(b, c) && !in[static_cast<size_t>(b)]) return false;
    return true;
  }

  std::vector<int> maximal_points() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
      bool maximal = true;
      for (int y = 0; y < n_; ++y)
        if (lt(x, y)) maximal = false;
      if (maximal) out.push_back(x);
    }
    return out;
  }

  // Number of strict steps in the longest chain.
  int longest_chain_length() const {
    std::vector<int> depth(static_cast<size_t>(n_), -1);
    int best = 0;
    for (int x = 0; x < n_; ++x) best = std::max(best, depth_of(x, depth));
    return best;
  }

  // Connected components of the comparability graph, as point lists.
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    int c = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[static_cast<size_t>(s)] >= 0) continue;
      std::vector<int> stack{s};
      comp[static_cast<size_t>(s)] = c;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n_; ++y) {
          if (comp[static_cast<size_t>(y)] >= 0) continue;
          if (leq(x, y) || leq(y, x)) {
            comp[static_cast<size_t>(y)] = c;
            stack.push_back(y);
          }
        }
      }
      ++c;
    }
    std::vector<std::vector<int>> out(static_cast<size_t>(c));
    for (int x = 0; x < n_; ++x) out[static_cast<size_t>(comp[static_cast<size_t>(x)])].push_back(x);
    return out;
  }

  // All strict chains x_0 < ... < x_m within the given points (all points if
  // empty is passed as everything); ordered lexicographically.
  std::vector<std::vector<int>> strict_chains(const std::vector<int>& pts, int max_len) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<int> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    enumerate_chains(sorted, cur, max_len, out);
    return out;
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<bool> mask(const std::vector<int>& pts) const {
    std::vector<bool> in(static_cast<size_t>(n_), false);
    for (int p : pts) in[static_cast<size_t>(p)] = true;
    return in;
  }

  int depth_of(int x, std::vector<int>& depth) const {
    int& d = depth[static_cast<size_t>(x)];
    if (d >= 0) return d;
    d = 0;
    for (int y = 0; y < n_; ++y)
      if (lt(x, y)) d = std::max(d, 1 + depth_of(y, depth));
    return d;
  }

  void enumerate_chains(const std::vector<int>& pts, std::vector<int>& cur, int max_len,
                        std::vector<std::vector<int>>& out) const {
    for (int p : pts) {
      if (!cur.empty() && !lt(cur.back(), p)) continue;
      cur.push_back(p);
      out.push_back(cur);
      if (static_cast<int>(cur.size()) < max_len + 1) enumerate_chains(pts, cur, max_len, out);
      cur.pop_back();
    }
  }

  int n_ = 0;
  std::vector<std::vector<bool>> leq_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

inline PosetPtr make_poset(FinitePoset p) { return std::make_shared<const FinitePoset>(std::move(p)); }

// Monotone map of posets = continuous map of the modeled spaces.
struct PosetMap {
  PosetPtr src;
  PosetPtr dst;
  std::vector<int> img;

  PosetMap() = default;
  PosetMap(PosetPtr s, PosetPtr d, std::vector<int> i)
      : src(std::move(s)), dst(std::move(d)), img(std::move(i)) {
    if (static_cast<int>(img.size()) != src->size())
      throw std::invalid_argument("PosetMap: size mismatch");
    for (int v : img)
      if (v < 0 || v >= dst->size()) throw std::invalid_argument("PosetMap: image out of range");
    for (int x = 0; x < src->size(); ++x)
      for (int y = 0; y < src->size(); ++y)
        if (src->leq(x, y) && !dst->leq(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]))
          throw std::invalid_argument("PosetMap: not monotone");
  }

  int operator()(int x) const { return img[static_cast<size_t>(x)]; }

  bool surjective() const {
    std::vector<bool> hit(static_cast<size_t>(dst->size()), false);
    for (int v : img) hit[static_cast<size_t>(v)] = true;
    for (bool h : hit)
      if (!h) return false;
    return true;
  }

  std::vector<int> preimage(const std::vector<int>& pts) const {
    std::vector<bool> in(static_cast<size_t>(dst->size()), false);
    for (int p : pts) in[static_cast<size_t>(p)] = true;
    std::vector<int> out;
    for (int x = 0; x < src->size(); ++x)
      if (in[static_cast<size_t>(img[static_cast<size_t>(x)])]) out.push_back(x);
    return out;
  }

  friend PosetMap compose(const PosetMap& g, const PosetMap& f) {
    std::vector<int> img(static_cast<size_t>(f.src->size()));
    for (int x = 0; x < f.src->size(); ++x) img[static_cast<size_t>(x)] = g(f(x));
    return PosetMap(f.src, g.dst, std::move(img));
  }
};

inline PosetMap identity_map(const PosetPtr& p) {
  std::vector<int> img(static_cast<size_t>(p->size()));
  for (int x = 0; x < p->size(); ++x) img[static_cast<size_t>(x)] = x;
  return PosetMap(p, p, std::move(img));
}

// Induced subposet on a point set; inclusion carries the index translation.
struct Subposet {
  PosetPtr poset;
  std::vector<int> points;  // subposet index -> parent index
  PosetMap inclusion;
};

inline Subposet subposet(const PosetPtr& parent, std::vector<int> pts) {
  std::sort(pts.begin(), pts.end());
  int m = static_cast<int>(pts.size());
  std::vector<std::vector<bool>> leq(static_cast<size_t>(m),
                                     std::vector<bool>(static_cast<size_t>(m), false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      leq[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          parent->leq(pts[static_cast<size_t>(a)], pts[static_cast<size_t>(b)]);
  PosetPtr sub = make_poset(FinitePoset(m, std::move(leq), true));
  PosetMap inc(sub, parent, pts);
  return {sub, pts, std::move(inc)};
}

// Disjoint union with the part inclusions.
struct DisjointUnion {
  PosetPtr poset;
  std::vector<PosetMap> inclusions;
  std::vector<int> offsets;
};

inline DisjointUnion disjoint_union(const std::vector<PosetPtr>& parts) {
  int total = 0;
  std::vector<int> offsets;
  for (const auto& p : parts) {
    offsets.push_back(total);
    total += p->size();
  }
  std::vector<std::vector<bool>> leq(static_cast<size_t>(total),
                                     std::vector<bool>(static_cast<size_t>(total), false));
  for (size_t t = 0; t < parts.size(); ++t) {
    int off = offsets[t];
    for (int a = 0; a < parts[t]->size(); ++a)
      for (int b = 0; b < parts[t]->size(); ++b)
        leq[static_cast<size_t>(off + a)][static_cast<size_t>(off + b)] = parts[t]->leq(a, b);
  }
  PosetPtr u = make_poset(FinitePoset(total, std::move(leq), true));
  DisjointUnion out{u, {}, offsets};
  for (size_t t = 0; t < parts.size(); ++t) {
    std::vector<int> img(static_cast<size_t>(parts[t]->size()));
    for (int a = 0; a < parts[t]->size(); ++a) img[static_cast<size_t>(a)] = offsets[t] + a;
    out.inclusions.emplace_back(parts[t], u, std::move(img));
  }
  return out;
}

// Stratification: a partition into locally closed atoms whose generated
// Boolean algebra is closed under closure; the atom order is
// Z1 <= Z2 iff closure(Z1) is contained in closure(Z2).
class Stratification {
 public:
  static std::optional<Stratification> validated(PosetPtr space, std::vector<int> atom_of,
                                                 std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
      if (why) *why = msg;
      return std::nullopt;
    };
    Stratification s;
    s.space_ = std::move(space);
    s.atom_of_ = std::move(atom_of);
    const FinitePoset& x = *s.space_;
    if (static_cast<int>(s.atom_of_.size()) != x.size())
      return fail("atom assignment size mismatch");
    int k = 0;
    for (int a : s.atom_of_) {
      if (a < 0) return fail("negative atom id");
      k = std::max(k, a + 1);
    }
    s.atoms_.assign(static_cast<size_t>(k), {});
    for (int p = 0; p < x.size(); ++p) s.atoms_[static_cast<size_t>(s.atom_of_[static_cast<size_t>(p)])].push_back(p);
    for (const auto& atom : s.atoms_)
      if (atom.empty()) return fail("empty atom");
    // Locally closed atoms.
    for (size_t a = 0; a < s.atoms_.size(); ++a)
      if (!x.is_locally_closed(s.atoms_[a]))
        return fail("atom " + std::to_string(a) + " not locally closed");
    // Closure of each atom is a union of atoms.
    for (size_t a = 0; a < s.atoms_.size(); ++a) {
      std::vector<int> cl = x.down_set_of(s.atoms_[a]);
      std::vector<bool> atoms_met(s.atoms_.size(), false);
      for (int p : cl) atoms_met[static_cast<size_t>(s.atom_of_[static_cast<size_t>(p)])] = true;
      std::vector<bool> in(static_cast<size_t>(x.size()), false);
      for (int p : cl) in[static_cast<size_t>(p)] = true;
      for (size_t b = 0; b < s.atoms_.size(); ++b) {
        if (!atoms_met[b]) continue;
        for (int p : s.atoms_[b])
          if (!in[static_cast<size_t>(p)])
            return fail("closure of atom " + std::to_string(a) + " is not a union of atoms");
      }
    }
    // Atom order and the closure identities.
    int m = static_cast<int>(s.atoms_.size());
    s.atom_leq_.assign(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
    std::vector<std::vector<bool>> closure_mask(static_cast<size_t>(m),
                                                std::vector<bool>(static_cast<size_t>(x.size()), false));
    for (int a = 0; a < m; ++a)
      for (int p : x.down_set_of(s.atoms_[static_cast<size_t>(a)]))
        closure_mask[static_cast<size_t>(a)][static_cast<size_t>(p)] = true;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        bool sub = true;
        for (int p = 0; p < x.size(); ++p)
          if (closure_mask[static_cast<size_t>(a)][static_cast<size_t>(p)] &&
              !closure_mask[static_cast<size_t>(b)][static_cast<size_t>(p)])
            sub = false;
        s.atom_leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] = sub;
      }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b && s.atom_leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
            s.atom_leq_[static_cast<size_t>(b)][static_cast<size_t>(a)])
          return fail("atom order is not antisymmetric");
    if (!s.closure_lemma_holds()) return fail("closure identities fail");
    return s;
  }

  static Stratification require(PosetPtr space, std::vector<int> atom_of) {
    std::string why;
    auto s = validated(std::move(space), std::move(atom_of), &why);
    if (!s) throw std::invalid_argument("Stratification: " + why);
    return *s;
  }

  const PosetPtr& space() const { return space_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<int>& atom(int a) const { return atoms_[static_cast<size_t>(a)]; }
  int atom_of(int p) const { return atom_of_[static_cast<size_t>(p)]; }
  bool atom_leq(int a, int b) const {
    return atom_leq_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  std::vector<int> closure_of_atom(int a) const {
    return space_->down_set_of(atoms_[static_cast<size_t>(a)]);
  }

  // Z-bar = union of atoms below Z, and Z = Z-bar minus the closures of the
  // strictly smaller atoms.
  bool closure_lemma_holds() const {
    const FinitePoset& x = *space_;
    for (int a = 0; a < atom_count(); ++a) {
      std::vector<bool> cl(static_cast<size_t>(x.size()), false);
      for (int p : closure_of_atom(a)) cl[static_cast<size_t>(p)] = true;
      std::vector<bool> uni(static_cast<size_t>(x.size()), false);
      for (int b = 0; b < atom_count(); ++b)
        if (atom_leq(b, a))
          for (int p : atoms_[static_cast<size_t>(b)]) uni[static_cast<size_t>(p)] = true;
      if (cl != uni) return false;
      // Z = Z-bar minus union of closures of strictly smaller atoms.
      std::vector<bool> minus = cl;
      for (int b = 0; b < atom_count(); ++b) {
        if (b == a || !atom_leq(b, a)) continue;
        for (int p : closure_of_atom(b)) minus[static_cast<size_t>(p)] = false;
      }
      std::vector<bool> zmask(static_cast<size_t>(x.size()), false);
      for (int p : atoms_[static_cast<size_t>(a)]) zmask[static_cast<size_t>(p)] = true;
      if (minus != zmask) return false;
    }
    return true;
  }

 private:
  PosetPtr space_;
  std::vector<int> atom_of_;
  std::vector<std::vector<int>> atoms_;
  std::vector<std::vector<bool>> atom_leq_;
};

}  // namespace hodgecx
