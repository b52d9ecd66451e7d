#pragma once

#include <hodgecx/complex.hpp>

#include <stdexcept>
#include <vector>

namespace hodgecx {

// Cohomology of a bounded complex, realized degreewise as ker(d)/im(d).
template <class K>
class Cohomology {
 public:
  Cohomology() = default;

  explicit Cohomology(const Complex<K>& cx) : lo_(cx.lo()) {
    for (int n = cx.lo(); n <= cx.hi(); ++n) {
      Subspace<K> cycles = Subspace<K>::span(cx.dim(n), kernel_basis(cx.d(n)));
      Subspace<K> boundaries =
          Subspace<K>::full(cx.dim(n - 1)).image_under(cx.d(n - 1));
      h_.emplace_back(cycles, boundaries);
    }
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(h_.size()) - 1; }

  const SubQuotient<K>& at(int n) const {
    static const SubQuotient<K> empty;
    if (n < lo_ || n >= lo_ + static_cast<int>(h_.size())) return empty;
    return h_[static_cast<size_t>(n - lo_)];
  }

  int dim(int n) const { return at(n).dim(); }

  int total_dim() const {
    int s = 0;
    for (const auto& x : h_) s += x.dim();
    return s;
  }

 private:
  int lo_ = 0;
  std::vector<SubQuotient<K>> h_;
};

// Degreewise matrices H^n(src) -> H^n(dst) induced by a chain map.
template <class K>
std::vector<Matrix<K>> induced_on_cohomology(const ComplexMap<K>& f, const Cohomology<K>& hs,
                                             const Cohomology<K>& hd, int lo, int hi) {
  std::vector<Matrix<K>> out;
  for (int n = lo; n <= hi; ++n) out.push_back(hs.at(n).induced_map(f.at(n), hd.at(n)));
  return out;
}

template <class K>
bool is_quasi_iso(const ComplexMap<K>& f, int degree_lo, int degree_hi) {
  Cohomology<K> hs(f.src());
  Cohomology<K> hd(f.dst());
  for (int n = degree_lo; n <= degree_hi; ++n) {
    if (hs.dim(n) != hd.dim(n)) return false;
    Matrix<K> m = hs.at(n).induced_map(f.at(n), hd.at(n));
    if (rank(m) != hs.dim(n)) return false;
  }
  return true;
}

template <class K>
bool is_quasi_iso(const ComplexMap<K>& f) {
  int lo = std::min(f.src().lo(), f.dst().lo());
  int hi = std::max(f.src().hi(), f.dst().hi());
  return is_quasi_iso(f, lo, hi);
}

// Checks degreewise exactness of 0 -> A -> B -> C -> 0.
template <class K>
bool is_degreewise_ses(const ComplexMap<K>& inc, const ComplexMap<K>& proj) {
  const Complex<K>& a = inc.src();
  const Complex<K>& b = inc.dst();
  const Complex<K>& c = proj.dst();
  if (!(proj.src() == b)) return false;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> i = inc.at(n), p = proj.at(n);
    if (rank(i) != a.dim(n)) return false;                       // injective
    if (rank(p) != c.dim(n)) return false;                       // surjective
    if (!(p * i).is_zero()) return false;
    if (rank(i) + rank(p) != b.dim(n)) return false;             // im = ker
  }
  return true;
}

// Connecting maps H^n(C) -> H^{n+1}(A) of a degreewise short exact sequence,
// by lift, differentiate, pull back.
template <class K>
std::vector<Matrix<K>> connecting_maps(const ComplexMap<K>& inc, const ComplexMap<K>& proj,
                                       const Cohomology<K>& ha, const Cohomology<K>& hc, int lo,
                                       int hi) {
  if (!is_degreewise_ses(inc, proj))
    throw std::invalid_argument("connecting_maps: not a degreewise short exact sequence");
  std::vector<Matrix<K>> out;
  for (int n = lo; n <= hi; ++n) {
    const SubQuotient<K>& src = hc.at(n);
    const SubQuotient<K>& dst = ha.at(n + 1);
    Matrix<K> delta(dst.dim(), src.dim());
    for (int t = 0; t < src.dim(); ++t) {
      std::vector<K> c = src.representatives().row(t);
      auto b = solve(proj.at(n), c);
      if (!b) throw std::logic_error("connecting_maps: lift failed");
      std::vector<K> db = inc.dst().d(n).apply(*b);
      auto a = solve(inc.at(n + 1), db);
      if (!a) throw std::logic_error("connecting_maps: boundary not in the subcomplex");
      std::vector<K> cls = dst.project(*a);
      for (int i = 0; i < dst.dim(); ++i) delta.at(i, t) = cls[i];
    }
    out.push_back(std::move(delta));
  }
  return out;
}

// Exactness of a finite run ... -> V_i -> V_{i+1} -> ... at every inner node.
template <class K>
bool is_exact_sequence(const std::vector<Matrix<K>>& maps) {
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    if (maps[i + 1].cols() != maps[i].rows()) return false;
    if (!(maps[i + 1] * maps[i]).is_zero()) return false;
    if (rank(maps[i]) + rank(maps[i + 1]) != maps[i].rows()) return false;
  }
  return true;
}

}  // namespace hodgecx
