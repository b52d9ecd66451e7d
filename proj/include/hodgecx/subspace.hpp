#pragma once

#include <hodgecx/matrix.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace hodgecx {

// Linear subspace of K^n stored as a reduced-echelon row basis, so equality
// of subspaces is equality of representations.
template <class K>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient) { return Subspace(ambient, Matrix<K>(0, ambient)); }
  static Subspace full(int ambient) { return Subspace(ambient, Matrix<K>::identity(ambient)); }
  static Subspace span(int ambient, const Matrix<K>& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
      throw std::invalid_argument("Subspace: generator width != ambient");
    Matrix<K> b = row_space_basis(rows.rows() == 0 ? Matrix<K>(0, ambient) : rows);
    return Subspace(ambient, std::move(b));
  }
  static Subspace span_vectors(int ambient, const std::vector<std::vector<K>>& vs) {
    if (vs.empty()) return zero(ambient);
    return span(ambient, Matrix<K>::from_rows(vs));
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  // Coefficients of v against the echelon basis, if v lies in the subspace.
  std::optional<std::vector<K>> coords_of(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("Subspace: vector length != ambient");
    std::vector<int> piv = pivot_columns();
    std::vector<K> c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[piv[i]];
    std::vector<K> rec(ambient_, K(0));
    for (int i = 0; i < dim(); ++i) {
      if (c[i] == zero_of<K>()) continue;
      for (int j = 0; j < ambient_; ++j)
        if (!(basis_.at(i, j) == zero_of<K>())) rec[j] += c[i] * basis_.at(i, j);
    }
    if (rec != v) return std::nullopt;
    return c;
  }

  bool contains(const std::vector<K>& v) const { return coords_of(v).has_value(); }
  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    return span(ambient_, vstack(basis_, other.basis_));
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    if (is_zero() || other.is_zero()) return zero(ambient_);
    // Solve a^T x = b^T y: kernel of [a^T | -b^T] gives the coefficients.
    Matrix<K> m = hstack(basis_.transpose(), (-other.basis_).transpose());
    Matrix<K> ker = kernel_basis(m);
    std::vector<std::vector<K>> gens;
    for (int i = 0; i < ker.rows(); ++i) {
      std::vector<K> v(ambient_, K(0));
      for (int t = 0; t < dim(); ++t)
        for (int j = 0; j < ambient_; ++j)
          if (!(basis_.at(t, j) == zero_of<K>())) v[j] += ker.at(i, t) * basis_.at(t, j);
      gens.push_back(std::move(v));
    }
    return span_vectors(ambient_, gens);
  }

  // Image under f : K^ambient -> K^{f.rows()}.
  Subspace image_under(const Matrix<K>& f) const {
    if (f.cols() != ambient_) throw std::invalid_argument("image_under: shape mismatch");
    std::vector<std::vector<K>> gens;
    for (int i = 0; i < dim(); ++i) gens.push_back(f.apply(basis_.row(i)));
    return span_vectors(f.rows(), gens);
  }

  // {v : f v in this}, for f : K^m -> K^ambient.
  Subspace preimage_under(const Matrix<K>& f) const {
    if (f.rows() != ambient_) throw std::invalid_argument("preimage_under: shape mismatch");
    Matrix<K> eq = equations();
    if (eq.rows() == 0) return full(f.cols());
    return Subspace(f.cols(), kernel_basis(eq * f));
  }

  // Rows e with this = {x : e . x = 0 for all e}.
  Matrix<K> equations() const {
    if (dim() == 0) return Matrix<K>::identity(ambient_);
    return kernel_basis(basis_);
  }

  // Projection q : K^ambient -> K^{ambient-dim} with kernel exactly this.
  Matrix<K> quotient_map() const {
    std::vector<int> piv = pivot_columns();
    std::vector<bool> is_piv(ambient_, false);
    for (int c : piv) is_piv[c] = true;
    Matrix<K> q(ambient_ - dim(), ambient_);
    int t = 0;
    for (int j = 0; j < ambient_; ++j) {
      if (is_piv[j]) continue;
      q.at(t, j) = K(1);
      for (int i = 0; i < dim(); ++i) q.at(t, piv[i]) = -basis_.at(i, j);
      ++t;
    }
    return q;
  }

  std::vector<int> pivot_columns() const {
    std::vector<int> piv;
    for (int i = 0; i < basis_.rows(); ++i) {
      for (int j = 0; j < ambient_; ++j) {
        if (!(basis_.at(i, j) == zero_of<K>())) {
          piv.push_back(j);
          break;
        }
      }
    }
    return piv;
  }

 private:
  Subspace(int ambient, Matrix<K> basis) : ambient_(ambient), basis_(std::move(basis)) {}

  void check_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_)
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  int ambient_ = 0;
  Matrix<K> basis_;  // reduced echelon rows
};

// Subquotient Z/B of K^n with an explicit coordinate realization. All induced
// filtrations and maps in the engine go through this type. Membership and
// projection are precomputed as matrices, so the hot paths stay proportional
// to the number of nonzero entries.
template <class K>
class SubQuotient {
 public:
  SubQuotient() = default;
  SubQuotient(Subspace<K> z, Subspace<K> b) : z_(std::move(z)), b_(std::move(b)) {
    if (z_.ambient() != b_.ambient())
      throw std::invalid_argument("SubQuotient: ambient mismatch");
    if (!z_.contains(b_)) throw std::invalid_argument("SubQuotient: B not contained in Z");
    // Express B in Z-coordinates, then split off the quotient.
    std::vector<std::vector<K>> b_in_z;
    for (int i = 0; i < b_.dim(); ++i) {
      auto c = z_.coords_of(b_.basis().row(i));
      b_in_z.push_back(*c);
    }
    Subspace<K> bz = Subspace<K>::span_vectors(z_.dim(), b_in_z);
    qmap_ = bz.quotient_map();  // dim x z.dim
    std::vector<int> piv = bz.pivot_columns();
    std::vector<bool> is_piv(z_.dim(), false);
    for (int c : piv) is_piv[c] = true;
    reps_ = Matrix<K>(dim(), z_.ambient());
    int t = 0;
    for (int j = 0; j < z_.dim(); ++j) {
      if (is_piv[j]) continue;
      for (int c = 0; c < z_.ambient(); ++c) reps_.at(t, c) = z_.basis().at(j, c);
      ++t;
    }
    eq_z_ = z_.equations();
    eq_b_ = b_.equations();
    // Coordinate selector (pivot extraction) composed with the quotient map:
    // agrees with the projection on Z, extended off Z by the selector.
    std::vector<int> zpiv = z_.pivot_columns();
    Matrix<K> selector(z_.dim(), z_.ambient());
    for (int i = 0; i < z_.dim(); ++i) selector.at(i, zpiv[static_cast<size_t>(i)]) = K(1);
    proj_ = qmap_ * selector;
  }

  bool in_numerator(const std::vector<K>& v) const {
    for (const K& x : eq_z_.apply(v))
      if (!(x == zero_of<K>())) return false;
    return true;
  }
  bool in_denominator(const std::vector<K>& v) const {
    for (const K& x : eq_b_.apply(v))
      if (!(x == zero_of<K>())) return false;
    return true;
  }

  int ambient() const { return z_.ambient(); }
  int dim() const { return z_.dim() - b_.dim(); }
  const Subspace<K>& numerator() const { return z_; }
  const Subspace<K>& denominator() const { return b_; }
  // Lifts of the quotient basis, rows in the ambient space.
  const Matrix<K>& representatives() const { return reps_; }

  friend bool operator==(const SubQuotient& a, const SubQuotient& b) {
    return a.z_ == b.z_ && a.b_ == b.b_;
  }
  friend bool operator!=(const SubQuotient& a, const SubQuotient& b) { return !(a == b); }

  // Class of v (which must lie in Z) in quotient coordinates.
  std::vector<K> project(const std::vector<K>& v) const {
    if (!in_numerator(v)) throw std::invalid_argument("SubQuotient: vector not in Z");
    return proj_.apply(v);
  }

  // Image of (s intersect Z + B)/B as a subspace of the quotient coordinates.
  Subspace<K> project_subspace(const Subspace<K>& s) const {
    Subspace<K> t = s.intersect(z_);
    std::vector<std::vector<K>> gens;
    for (int i = 0; i < t.dim(); ++i) gens.push_back(project(t.basis().row(i)));
    return Subspace<K>::span_vectors(dim(), gens);
  }

  // Preimage in the ambient space of a subspace of the quotient: lifts + B.
  Subspace<K> lift(const Subspace<K>& sbar) const {
    if (sbar.ambient() != dim()) throw std::invalid_argument("SubQuotient: lift shape mismatch");
    std::vector<std::vector<K>> gens;
    for (int i = 0; i < sbar.dim(); ++i) {
      std::vector<K> v(ambient(), K(0));
      for (int t = 0; t < dim(); ++t)
        for (int j = 0; j < ambient(); ++j)
          if (!(reps_.at(t, j) == zero_of<K>())) v[j] += sbar.basis().at(i, t) * reps_.at(t, j);
      gens.push_back(std::move(v));
    }
    return Subspace<K>::span_vectors(ambient(), gens).sum(b_);
  }

  // Matrix of the map induced by f on quotient coordinates. Requires
  // f(Z) in Z' and f(B) in B'.
  Matrix<K> induced_map(const Matrix<K>& f, const SubQuotient& target) const {
    if (f.cols() != ambient() || f.rows() != target.ambient())
      throw std::invalid_argument("SubQuotient: induced_map shape mismatch");
    for (int i = 0; i < z_.dim(); ++i)
      if (!target.in_numerator(f.apply(z_.basis().row(i))))
        throw std::invalid_argument("SubQuotient: map does not preserve numerators");
    for (int i = 0; i < b_.dim(); ++i)
      if (!target.in_denominator(f.apply(b_.basis().row(i))))
        throw std::invalid_argument("SubQuotient: map does not preserve denominators");
    Matrix<K> m(target.dim(), dim());
    for (int t = 0; t < dim(); ++t) {
      std::vector<K> w = target.proj_.apply(f.apply(reps_.row(t)));
      for (int i = 0; i < target.dim(); ++i) m.at(i, t) = w[i];
    }
    return m;
  }

 private:
  Subspace<K> z_;
  Subspace<K> b_;
  Matrix<K> qmap_;
  Matrix<K> reps_;
  Matrix<K> eq_z_;
  Matrix<K> eq_b_;
  Matrix<K> proj_;
};

}  // namespace hodgecx
