#pragma once

#include <hodgecx/subspace.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgecx {

// Biregular decreasing filtration on K^n, stored at its finitely many jump
// indices. F^p is the value at the smallest stored index >= p (zero beyond
// the last jump, the full space at or below the first). Increasing
// filtrations are handled by the rule W_k = W^{-k} at the accessor level.
template <class K>
class FiltChain {
 public:
  FiltChain() = default;
  explicit FiltChain(int ambient) : ambient_(ambient) {
    if (ambient != 0)
      throw std::invalid_argument("FiltChain: positive ambient needs explicit jumps");
  }

  static FiltChain trivial(int ambient, int jump_at = 0) {
    FiltChain f;
    f.ambient_ = ambient;
    if (ambient > 0) f.jumps_.push_back({jump_at, Subspace<K>::full(ambient)});
    return f;
  }

  static FiltChain from_jumps(int ambient, std::vector<std::pair<int, Subspace<K>>> jumps) {
    FiltChain f;
    f.ambient_ = ambient;
    f.jumps_ = std::move(jumps);
    f.check_canonical();
    return f;
  }

  // Samples fn on [lo, hi]; fn(lo) must be full and fn(hi) zero. The jumps
  // collected this way are already in canonical form.
  template <class F>
  static FiltChain build(int ambient, int lo, int hi, F&& fn) {
    FiltChain f;
    f.ambient_ = ambient;
    if (ambient == 0) return f;
    if (lo > hi) throw std::invalid_argument("FiltChain: empty sample range");
    Subspace<K> prev = fn(lo);
    if (!prev.is_full()) throw std::invalid_argument("FiltChain: not exhaustive at low end");
    for (int p = lo; p < hi; ++p) {
      Subspace<K> next = fn(p + 1);
      if (!prev.contains(next)) throw std::invalid_argument("FiltChain: not nested");
      if (next != prev) f.jumps_.push_back({p, prev});
      prev = std::move(next);
    }
    if (!prev.is_zero()) throw std::invalid_argument("FiltChain: not zero at high end");
    f.check_canonical();
    return f;
  }

  int ambient() const { return ambient_; }
  const std::vector<std::pair<int, Subspace<K>>>& jumps() const { return jumps_; }

  Subspace<K> at(int p) const {
    auto it = std::lower_bound(
        jumps_.begin(), jumps_.end(), p,
        [](const std::pair<int, Subspace<K>>& j, int q) { return j.first < q; });
    if (it == jumps_.end()) return Subspace<K>::zero(ambient_);
    return it->second;
  }
  // Increasing access: W_k = W^{-k}.
  Subspace<K> at_increasing(int k) const { return at(-k); }

  // Lowest index with value full / lowest index with value zero.
  int full_until() const { return jumps_.empty() ? 0 : jumps_.front().first; }
  int zero_from() const { return jumps_.empty() ? 0 : jumps_.back().first + 1; }

  // (F[i])^p = F^{p+i}.
  FiltChain shifted(int i) const {
    FiltChain f;
    f.ambient_ = ambient_;
    f.jumps_ = jumps_;
    for (auto& j : f.jumps_) j.first -= i;
    return f;
  }

  friend bool operator==(const FiltChain& a, const FiltChain& b) {
    return a.ambient_ == b.ambient_ && a.jumps_ == b.jumps_;
  }
  friend bool operator!=(const FiltChain& a, const FiltChain& b) { return !(a == b); }

 private:
  void check_canonical() const {
    if (ambient_ == 0) {
      if (!jumps_.empty()) throw std::invalid_argument("FiltChain: jumps on zero space");
      return;
    }
    if (jumps_.empty()) throw std::invalid_argument("FiltChain: missing jumps");
    if (!jumps_.front().second.is_full())
      throw std::invalid_argument("FiltChain: first value must be the full space");
    for (size_t i = 0; i < jumps_.size(); ++i) {
      if (jumps_[i].second.ambient() != ambient_)
        throw std::invalid_argument("FiltChain: ambient mismatch");
      if (jumps_[i].second.is_zero())
        throw std::invalid_argument("FiltChain: zero is not a jump value");
      if (i + 1 < jumps_.size()) {
        if (jumps_[i].first >= jumps_[i + 1].first)
          throw std::invalid_argument("FiltChain: jump indices not increasing");
        if (!(jumps_[i].second.contains(jumps_[i + 1].second)) ||
            jumps_[i].second.dim() <= jumps_[i + 1].second.dim())
          throw std::invalid_argument("FiltChain: values not strictly decreasing");
      }
    }
  }

  int ambient_ = 0;
  std::vector<std::pair<int, Subspace<K>>> jumps_;
};

// Bounded cochain complex of finite-dimensional spaces. d(n) maps degree n
// to degree n+1; everything vanishes outside [lo, hi].
template <class K>
class Complex {
 public:
  Complex() = default;
  Complex(int lo, std::vector<int> dims, std::vector<Matrix<K>> differentials)
      : lo_(lo), dims_(std::move(dims)), d_(std::move(differentials)) {
    if (dims_.empty()) {
      lo_ = 0;
      if (!d_.empty()) throw std::invalid_argument("Complex: differentials on empty support");
      return;
    }
    if (d_.size() + 1 != dims_.size())
      throw std::invalid_argument("Complex: need one differential per adjacent pair");
    for (size_t t = 0; t < d_.size(); ++t) {
      if (d_[t].cols() != dims_[t] || d_[t].rows() != dims_[t + 1])
        throw std::invalid_argument("Complex: differential shape mismatch");
    }
    for (size_t t = 0; t + 1 < d_.size(); ++t) {
      if (!(d_[t + 1] * d_[t]).is_zero())
        throw std::invalid_argument("Complex: d after d is nonzero");
    }
    // Normalize the support: strip zero spaces at both ends.
    while (!dims_.empty() && dims_.front() == 0) {
      dims_.erase(dims_.begin());
      if (!d_.empty()) d_.erase(d_.begin());
      ++lo_;
    }
    while (!dims_.empty() && dims_.back() == 0) {
      dims_.pop_back();
      if (!d_.empty()) d_.pop_back();
    }
    if (dims_.empty()) lo_ = 0;
  }

  static Complex zero() { return Complex(); }
  static Complex single(int degree, int dim) {
    return Complex(degree, {dim}, {});
  }

  int lo() const { return lo_; }
  int hi() const { return dims_.empty() ? -1 : lo_ + static_cast<int>(dims_.size()) - 1; }
  bool is_zero_complex() const { return dims_.empty(); }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (int n = lo(); n <= hi(); ++n) out.push_back(n);
    return out;
  }

  int dim(int n) const {
    if (dims_.empty() || n < lo_ || n > hi()) return 0;
    return dims_[static_cast<size_t>(n - lo_)];
  }

  Matrix<K> d(int n) const {
    if (!dims_.empty() && n >= lo_ && n < hi()) return d_[static_cast<size_t>(n - lo_)];
    return Matrix<K>::zero(dim(n + 1), dim(n));
  }

  int total_dim() const {
    int s = 0;
    for (int x : dims_) s += x;
    return s;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.d_ == b.d_;
  }

 private:
  int lo_ = 0;
  std::vector<int> dims_;
  std::vector<Matrix<K>> d_;
};

enum class Orientation { decreasing, increasing };

// One filtration on a complex: a chain per degree, internally decreasing.
template <class K>
class Filtration {
 public:
  Filtration() = default;
  Filtration(Orientation o, int lo, std::vector<FiltChain<K>> chains)
      : orientation_(o), lo_(lo), chains_(std::move(chains)) {}

  static Filtration trivial(const Complex<K>& cx, int jump_at = 0,
                            Orientation o = Orientation::decreasing) {
    std::vector<FiltChain<K>> chains;
    for (int n = cx.lo(); n <= cx.hi(); ++n)
      chains.push_back(FiltChain<K>::trivial(cx.dim(n), jump_at));
    return Filtration(o, cx.lo(), std::move(chains));
  }

  template <class F>
  static Filtration build(const Complex<K>& cx, Orientation o, F&& fn) {
    // fn(n) must yield the chain in degree n.
    std::vector<FiltChain<K>> chains;
    for (int n = cx.lo(); n <= cx.hi(); ++n) chains.push_back(fn(n));
    return Filtration(o, cx.lo(), std::move(chains));
  }

  Orientation orientation() const { return orientation_; }
  int lo() const { return lo_; }
  int size() const { return static_cast<int>(chains_.size()); }

  const FiltChain<K>& chain(int n) const {
    static const FiltChain<K> empty;
    if (n < lo_ || n >= lo_ + size()) return empty;
    return chains_[static_cast<size_t>(n - lo_)];
  }

  Subspace<K> at(int n, int p) const { return chain(n).at(p); }
  Subspace<K> at_increasing(int n, int k) const { return chain(n).at(-k); }

  // (F[i])^p = F^{p+i} degreewise.
  Filtration shifted(int i) const {
    std::vector<FiltChain<K>> chains;
    for (const auto& c : chains_) chains.push_back(c.shifted(i));
    return Filtration(orientation_, lo_, std::move(chains));
  }

  // All indices p where some degree jumps.
  std::vector<int> global_indices() const {
    std::vector<int> out;
    for (const auto& c : chains_)
      for (const auto& j : c.jumps()) out.push_back(j.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  int min_index() const {
    auto g = global_indices();
    return g.empty() ? 0 : g.front();
  }
  int max_index() const {
    auto g = global_indices();
    return g.empty() ? 0 : g.back();
  }

  std::vector<std::string> problems_against(const Complex<K>& cx) const {
    std::vector<std::string> out;
    if (lo_ != cx.lo() || size() != (cx.is_zero_complex() ? 0 : cx.hi() - cx.lo() + 1)) {
      out.push_back("filtration support does not match complex support");
      return out;
    }
    for (int n = cx.lo(); n <= cx.hi(); ++n) {
      if (chain(n).ambient() != cx.dim(n)) {
        out.push_back("filtration ambient mismatch in degree " + std::to_string(n));
        continue;
      }
      for (const auto& j : chain(n).jumps()) {
        if (n >= cx.hi()) break;
        Subspace<K> img = j.second.image_under(cx.d(n));
        if (!chain(n + 1).at(j.first).contains(img))
          out.push_back("differential does not preserve index " + std::to_string(j.first) +
                        " in degree " + std::to_string(n));
      }
    }
    return out;
  }

  friend bool operator==(const Filtration& a, const Filtration& b) {
    return a.orientation_ == b.orientation_ && a.lo_ == b.lo_ && a.chains_ == b.chains_;
  }

 private:
  Orientation orientation_ = Orientation::decreasing;
  int lo_ = 0;
  std::vector<FiltChain<K>> chains_;
};

// The central object: a bounded complex with filtrations F, Fbar
// (decreasing) and W (increasing by convention, stored decreasing).
template <class K>
struct TriFilteredComplex {
  Complex<K> cx;
  Filtration<K> f;
  Filtration<K> fbar;
  Filtration<K> w;

  std::vector<std::string> structural_problems() const {
    std::vector<std::string> out;
    auto add = [&](const char* tag, const std::vector<std::string>& ps) {
      for (const auto& p : ps) out.push_back(std::string(tag) + ": " + p);
    };
    add("F", f.problems_against(cx));
    add("Fbar", fbar.problems_against(cx));
    add("W", w.problems_against(cx));
    return out;
  }

  void ensure_valid() const {
    auto ps = structural_problems();
    if (!ps.empty()) throw std::invalid_argument("TriFilteredComplex: " + ps.front());
  }

  friend bool operator==(const TriFilteredComplex& a, const TriFilteredComplex& b) {
    return a.cx == b.cx && a.f == b.f && a.fbar == b.fbar && a.w == b.w;
  }
};

// A finite-dimensional space with three filtrations; the raw data of a
// C-Hodge structure before the opposedness axioms are checked.
template <class K>
struct FilteredSpace {
  int dim = 0;
  FiltChain<K> f;
  FiltChain<K> fbar;
  FiltChain<K> w;  // stored decreasing; W_k = W^{-k}

  Subspace<K> w_lower(int k) const { return w.at(-k); }

  std::vector<std::string> structural_problems() const {
    std::vector<std::string> out;
    if (f.ambient() != dim) out.push_back("F ambient mismatch");
    if (fbar.ambient() != dim) out.push_back("Fbar ambient mismatch");
    if (w.ambient() != dim) out.push_back("W ambient mismatch");
    return out;
  }

  friend bool operator==(const FilteredSpace& a, const FilteredSpace& b) {
    return a.dim == b.dim && a.f == b.f && a.fbar == b.fbar && a.w == b.w;
  }
};

// Degreewise map of complexes.
template <class K>
class ComplexMap {
 public:
  ComplexMap() = default;
  ComplexMap(Complex<K> src, Complex<K> dst, std::vector<Matrix<K>> comps, int comp_lo)
      : src_(std::move(src)), dst_(std::move(dst)), comps_(std::move(comps)), lo_(comp_lo) {}

  template <class F>
  static ComplexMap build(const Complex<K>& src, const Complex<K>& dst, F&& fn) {
    int lo = std::min(src.lo(), dst.lo());
    int hi = std::max(src.hi(), dst.hi());
    std::vector<Matrix<K>> comps;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> m = fn(n);
      if (m.cols() != src.dim(n) || m.rows() != dst.dim(n))
        throw std::invalid_argument("ComplexMap: component shape mismatch");
      comps.push_back(std::move(m));
    }
    return ComplexMap(src, dst, std::move(comps), lo);
  }

  static ComplexMap zero(const Complex<K>& src, const Complex<K>& dst) {
    return build(src, dst,
                 [&](int n) { return Matrix<K>::zero(dst.dim(n), src.dim(n)); });
  }
  static ComplexMap identity(const Complex<K>& cx) {
    return build(cx, cx, [&](int n) { return Matrix<K>::identity(cx.dim(n)); });
  }

  const Complex<K>& src() const { return src_; }
  const Complex<K>& dst() const { return dst_; }

  Matrix<K> at(int n) const {
    if (comps_.empty() || n < lo_ || n >= lo_ + static_cast<int>(comps_.size()))
      return Matrix<K>::zero(dst_.dim(n), src_.dim(n));
    return comps_[static_cast<size_t>(n - lo_)];
  }

  bool commutes_with_d() const {
    int lo = std::min(src_.lo(), dst_.lo()) - 1;
    int hi = std::max(src_.hi(), dst_.hi());
    for (int n = lo; n <= hi; ++n)
      if (!(dst_.d(n) * at(n) - at(n + 1) * src_.d(n)).is_zero()) return false;
    return true;
  }

  friend ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
    return ComplexMap::build(f.src(), g.dst(), [&](int n) { return g.at(n) * f.at(n); });
  }

 private:
  Complex<K> src_, dst_;
  std::vector<Matrix<K>> comps_;
  int lo_ = 0;
};

// Morphism of trifiltered complexes; validated eagerly at construction.
template <class K>
class TriMap {
 public:
  TriMap(TriFilteredComplex<K> src, TriFilteredComplex<K> dst, ComplexMap<K> map)
      : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
    if (!(map_.src() == src_.cx) || !(map_.dst() == dst_.cx))
      throw std::invalid_argument("TriMap: endpoints do not match the map");
    if (!map_.commutes_with_d())
      throw std::invalid_argument("TriMap: does not commute with the differential");
    const char* names[3] = {"F", "Fbar", "W"};
    const Filtration<K>* fs[3] = {&src_.f, &src_.fbar, &src_.w};
    const Filtration<K>* gs[3] = {&dst_.f, &dst_.fbar, &dst_.w};
    for (int t = 0; t < 3; ++t) {
      for (int n = src_.cx.lo(); n <= src_.cx.hi(); ++n) {
        for (const auto& j : fs[t]->chain(n).jumps()) {
          if (!gs[t]->at(n, j.first).contains(j.second.image_under(map_.at(n))))
            throw std::invalid_argument(std::string("TriMap: does not preserve ") + names[t]);
        }
      }
    }
  }

  const TriFilteredComplex<K>& src() const { return src_; }
  const TriFilteredComplex<K>& dst() const { return dst_; }
  const ComplexMap<K>& map() const { return map_; }
  Matrix<K> at(int n) const { return map_.at(n); }

 private:
  TriFilteredComplex<K> src_, dst_;
  ComplexMap<K> map_;
};

}  // namespace hodgecx
