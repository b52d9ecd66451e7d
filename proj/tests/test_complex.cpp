#include "doctest.h"

#include <hodgecx/complex.hpp>

#include "support/builders.hpp"

using namespace hodgecx;
using namespace support;
using Q = Rational;

TEST_CASE("filtration chain lookup and jump storage") {
  // Q^2 with F^p = full (p<=0), span{e1} (p=1,2), 0 (p>=3).
  auto chain = FiltChain<Q>::build(2, -1, 3, [&](int p) {
    if (p <= 0) return Subspace<Q>::full(2);
    if (p <= 2) return spanq(2, {{1, 0}});
    return Subspace<Q>::zero(2);
  });
  CHECK(chain.jumps().size() == 2);
  CHECK(chain.at(-5) == Subspace<Q>::full(2));
  CHECK(chain.at(0) == Subspace<Q>::full(2));
  CHECK(chain.at(1) == spanq(2, {{1, 0}}));
  CHECK(chain.at(2) == spanq(2, {{1, 0}}));
  CHECK(chain.at(3) == Subspace<Q>::zero(2));
  CHECK(chain.full_until() == 0);
  CHECK(chain.zero_from() == 3);
}

TEST_CASE("increasing and decreasing access agree through the reindexing rule") {
  auto chain = FiltChain<Q>::build(1, 0, 2, [&](int p) {
    return p <= 1 ? Subspace<Q>::full(1) : Subspace<Q>::zero(1);
  });
  // W^p = W_{-p}: the two accessors are exact mirror images.
  for (int p = -3; p <= 3; ++p) CHECK(chain.at(p) == chain.at_increasing(-p));
}

TEST_CASE("shifted chains satisfy (F[i])^p = F^{p+i}") {
  auto chain = FiltChain<Q>::build(2, -2, 4, [&](int p) {
    if (p <= -1) return Subspace<Q>::full(2);
    if (p <= 2) return spanq(2, {{0, 1}});
    return Subspace<Q>::zero(2);
  });
  for (int i : {-2, 0, 1, 3})
    for (int p = -6; p <= 6; ++p) CHECK(chain.shifted(i).at(p) == chain.at(p + i));
}

TEST_CASE("complex construction checks d after d") {
  // 0 -> Q -> Q^2 -> Q -> 0 with d0 = (1,0)^T, d1 = (0,1).
  CHECK_NOTHROW(Complex<Q>(0, {1, 2, 1}, {mat({{1}, {0}}), mat({{0, 1}})}));
  CHECK_THROWS(Complex<Q>(0, {1, 2, 1}, {mat({{1}, {0}}), mat({{1, 0}})}));
  CHECK_THROWS(Complex<Q>(0, {1, 2}, {mat({{1}})}));
}

TEST_CASE("filtration validation catches incompatible differentials") {
  Complex<Q> cx(0, {1, 1}, {mat({{1}})});
  // F^1 = source, 0 in target: d(F^1) is not inside F^1.
  auto bad = Filtration<Q>::build(cx, Orientation::decreasing, [&](int n) {
    return FiltChain<Q>::trivial(1, n == 0 ? 1 : 0);
  });
  CHECK(!bad.problems_against(cx).empty());
  auto good = Filtration<Q>::trivial(cx, 0);
  CHECK(good.problems_against(cx).empty());
}

TEST_CASE("trifiltered complex structural validation") {
  Complex<Q> cx(0, {1, 1}, {mat({{1}})});
  TriFilteredComplex<Q> a{cx, Filtration<Q>::trivial(cx), Filtration<Q>::trivial(cx),
                          Filtration<Q>::trivial(cx, 0, Orientation::increasing)};
  CHECK(a.structural_problems().empty());
}

TEST_CASE("trimap rejects maps that break a filtration") {
  Complex<Q> one(0, {1}, {});
  TriFilteredComplex<Q> src{one, Filtration<Q>::trivial(one, 0), Filtration<Q>::trivial(one, 0),
                            Filtration<Q>::trivial(one, 0, Orientation::increasing)};
  TriFilteredComplex<Q> dst = src;
  CHECK_NOTHROW(TriMap<Q>(src, dst, ComplexMap<Q>::identity(one)));
  // Push the F jump of the source up: identity no longer preserves F.
  TriFilteredComplex<Q> src2 = src;
  src2.f = Filtration<Q>::trivial(one, 1);
  TriFilteredComplex<Q> dst2 = dst;
  dst2.f = Filtration<Q>::trivial(one, -1);
  CHECK_THROWS(TriMap<Q>(src2, dst2, ComplexMap<Q>::identity(one)));
}
