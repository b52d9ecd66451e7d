#include "doctest.h"

#include <hodgecx/subspace.hpp>

#include "support/rng.hpp"

using namespace hodgecx;
using Q = Rational;
using Mat = Matrix<Q>;
using Sub = Subspace<Q>;

namespace {

Mat mat(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Q>> r;
  for (auto& row : rows) {
    std::vector<Q> v;
    for (int x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return Mat::from_rows(r);
}

std::vector<Q> vec(std::initializer_list<int> xs) {
  std::vector<Q> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("kernel of basic maps") {
  CHECK(Subspace<Q>::span(3, kernel_basis(Mat::identity(3))) == Sub::zero(3));
  CHECK(Sub::span(2, kernel_basis(Mat::zero(2, 2))) == Sub::full(2));
  // (x, y) -> x
  Mat proj = mat({{1, 0}});
  Sub k = Sub::span(2, kernel_basis(proj));
  CHECK(k == Sub::span_vectors(2, {vec({0, 1})}));
}

TEST_CASE("sum and intersection of coordinate lines") {
  Sub e1 = Sub::span_vectors(2, {vec({1, 0})});
  Sub e2 = Sub::span_vectors(2, {vec({0, 1})});
  CHECK(e1.sum(e2) == Sub::full(2));
  CHECK(e1.intersect(e2) == Sub::zero(2));
  CHECK_THROWS(e1.sum(Sub::zero(3)));
}

TEST_CASE("preimage of a line under a degenerate map") {
  // (x, y) -> (x + y, 0); preimage of span{e1} is everything.
  Mat f = mat({{1, 1}, {0, 0}});
  Sub target = Sub::span_vectors(2, {vec({1, 0})});
  CHECK(target.preimage_under(f) == Sub::full(2));
}

TEST_CASE("echelon canonicalization is generator-order independent") {
  support::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4;
    Mat gens(3, n);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < n; ++j) gens.at(i, j) = Q(rng.uniform(-3, 3));
    Sub a = Sub::span(n, gens);
    // Shuffle generators and mix rows; same span.
    Mat mixed(4, n);
    for (int j = 0; j < n; ++j) {
      mixed.at(0, j) = gens.at(2, j);
      mixed.at(1, j) = gens.at(0, j) + gens.at(1, j);
      mixed.at(2, j) = gens.at(1, j);
      mixed.at(3, j) = gens.at(0, j) * Q(3) - gens.at(2, j);
    }
    CHECK(Sub::span(n, mixed) == a);
    CHECK(Sub::span(n, a.basis()) == a);
  }
}

TEST_CASE("dimension formula dim A + dim B = dim(A+B) + dim(A meet B)") {
  support::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform(1, 5);
    auto rand_sub = [&]() {
      int g = rng.uniform(0, n);
      Mat m(g, n);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Q(rng.uniform(-2, 2));
      return Sub::span(n, m);
    };
    Sub a = rand_sub(), b = rand_sub();
    CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersect(b).dim());
  }
}

TEST_CASE("quotient projection has kernel exactly the subspace") {
  support::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform(1, 5);
    Mat m(rng.uniform(0, n), n);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Q(rng.uniform(-2, 2));
    Sub a = Sub::span(n, m);
    Mat q = a.quotient_map();
    CHECK(q.rows() == n - a.dim());
    CHECK(Sub::span(n, kernel_basis(q)) == a);
  }
}

TEST_CASE("subquotient projection, lift and induced maps are consistent") {
  // Z = span{e1, e2, e3}, B = span{e1} inside Q^4.
  Sub z = Sub::span_vectors(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
  Sub b = Sub::span_vectors(4, {vec({1, 0, 0, 0})});
  SubQuotient<Q> sq(z, b);
  CHECK(sq.dim() == 2);
  CHECK(sq.project(vec({5, 2, -1, 0})) == vec({2, -1}));
  Sub line = Sub::span_vectors(2, {vec({1, 0})});
  Sub lifted = sq.lift(line);
  CHECK(lifted.dim() == 2);
  CHECK(lifted.contains(vec({0, 1, 0, 0})));
  CHECK(lifted.contains(vec({1, 0, 0, 0})));
  CHECK(sq.project_subspace(lifted) == line);

  // The identity induces the identity.
  Mat id4 = Mat::identity(4);
  CHECK(sq.induced_map(id4, sq) == Mat::identity(2));
  // A map sending Z outside Z' is rejected.
  SubQuotient<Q> small(Sub::span_vectors(4, {vec({0, 1, 0, 0})}), Sub::zero(4));
  CHECK_THROWS(sq.induced_map(id4, small));
}
