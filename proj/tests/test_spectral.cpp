#include "doctest.h"

#include <hodgecx/generate.hpp>
#include <hodgecx/spectral.hpp>

#include "support/builders.hpp"

using namespace hodgecx;
using namespace support;
using Q = Rational;

namespace {

// The two-by-two model: 0 -> k^2 -> k^2 -> 0, d(x, y) = (y, 0),
// W^1 = span{e1} in both degrees. Its d_1 at (0, 0) is the identity block.
struct TwoByTwo {
  Complex<Q> cx{0, {2, 2}, {mat({{0, 1}, {0, 0}})}};
  Filtration<Q> w;
  TwoByTwo() {
    w = Filtration<Q>::build(cx, Orientation::decreasing, [&](int) {
      return FiltChain<Q>::build(2, 0, 2, [&](int p) {
        if (p <= 0) return Subspace<Q>::full(2);
        if (p == 1) return spanq(2, {{1, 0}});
        return Subspace<Q>::zero(2);
      });
    });
  }
};

TriFilteredComplex<Q> random_bifiltered(DetRng& rng, int len = 3, int dim = 3) {
  Complex<Q> cx = random_complex<Q>(rng, rng.uniform(-1, 0), len, dim);
  TriFilteredComplex<Q> a;
  a.cx = cx;
  a.f = random_compatible_filtration<Q>(rng, cx, 2);
  a.fbar = random_compatible_filtration<Q>(rng, cx, 2);
  a.w = random_compatible_filtration<Q>(rng, cx, 2, Orientation::increasing);
  return a;
}

}  // namespace

TEST_CASE("trivial filtration: E_1 concentrates in one column and d_1 = 0") {
  DetRng rng(71);
  Complex<Q> cx = random_complex<Q>(rng, 0, 3, 3);
  Filtration<Q> w = Filtration<Q>::trivial(cx, 0);
  SpectralSequence<Q> ss(cx, w);
  Cohomology<Q> h(cx);
  for (int n = cx.lo(); n <= cx.hi(); ++n) {
    CHECK(ss.dim_entry(1, 0, n) == h.dim(n));
    for (int p = ss.p_lo(); p <= ss.p_hi(); ++p) {
      if (p != 0) CHECK(ss.dim_entry(1, p, n - p) == 0);
      CHECK(ss.differential(1, p, n - p).is_zero());
    }
  }
  CHECK(ss.degeneration_page() == 1);
}

TEST_CASE("acyclic complex: E_2 vanishes for any two-step filtration") {
  Complex<Q> cx(0, {1, 1}, {mat({{1}})});
  auto w = Filtration<Q>::trivial(cx, 0);
  auto w2 = Filtration<Q>::build(cx, Orientation::decreasing, [&](int n) {
    return FiltChain<Q>::trivial(1, n == 0 ? 0 : 1);
  });
  REQUIRE(w2.problems_against(cx).empty());
  for (const auto& filt : {w, w2}) {
    SpectralSequence<Q> ss(cx, filt);
    for (int p = ss.p_lo(); p <= ss.p_hi(); ++p)
      for (int n = 0; n <= 1; ++n) CHECK(ss.dim_entry(2, p, n - p) == 0);
  }
}

TEST_CASE("two-by-two model: d_1 is the identity block, both routes agree") {
  TwoByTwo m;
  SpectralSequence<Q> ss(m.cx, m.w);
  CHECK(ss.dim_entry(1, 0, 0) == 1);
  CHECK(ss.dim_entry(1, 1, 0) == 1);
  CHECK(ss.differential(1, 0, 0) == mat({{1}}));
  // e1_page re-derives d_1 through the connecting map and asserts agreement.
  auto e1 = e1_page(m.cx, m.w);
  CHECK(e1.dims.at({0, 0}) == 1);
  CHECK(e1.d1.at({0, 0}) == mat({{1}}));
  CHECK(ss.degeneration_page() == 2);
}

TEST_CASE("e1_page cross-validates on random instances") {
  DetRng rng(109);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_bifiltered(rng);
    CHECK_NOTHROW(e1_page(a.cx, a.w));
    CHECK_NOTHROW(e1_page(a.cx, a.f));
  }
}

TEST_CASE("pages agree with the explicit cycle/boundary oracle") {
  DetRng rng(73);
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_bifiltered(rng);
    SpectralSequence<Q> ss(a.cx, a.w);
    // Oracle: recompute Z_r and D_r directly from the formulas.
    auto oracle_z = [&](int r, int p, int n) {
      return a.w.at(n, p).intersect(a.w.at(n + 1, p + r).preimage_under(a.cx.d(n)));
    };
    for (int r = 1; r <= ss.r_stop(); ++r)
      for (int p = ss.p_lo(); p <= ss.p_hi(); ++p)
        for (int n = a.cx.lo(); n <= a.cx.hi(); ++n) {
          Subspace<Q> z = oracle_z(r, p, n);
          Subspace<Q> b = oracle_z(r - 1, p + 1, n)
                              .sum(oracle_z(r - 1, p - r + 1, n - 1).image_under(a.cx.d(n - 1)));
          CHECK(ss.dim_entry(r, p, n - p) == z.dim() - b.dim());
        }
  }
}

TEST_CASE("E_infinity grades the cohomology") {
  DetRng rng(79);
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_bifiltered(rng);
    SpectralSequence<Q> ss(a.cx, a.w);
    Cohomology<Q> h(a.cx);
    for (int n = a.cx.lo(); n <= a.cx.hi(); ++n) {
      int sum = 0;
      for (int p = ss.p_lo(); p <= ss.p_hi(); ++p) sum += ss.entry_inf(p, n - p).dim();
      CHECK(sum == h.dim(n));
    }
  }
}

TEST_CASE("direct filtration: trivial f, f = w, nesting and d_r-stability") {
  DetRng rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_bifiltered(rng);
    SpectralSequence<Q> ss(a.cx, a.w);
    // Trivial f: full at the jump, zero above.
    Filtration<Q> ftriv = Filtration<Q>::trivial(a.cx, 0);
    auto dir = direct_filtration(ss, ftriv, 1);
    for (const auto& [k, ch] : dir.chains) {
      CHECK(ch.at(0).is_full());
      CHECK(ch.at(1).is_zero());
    }
    // f = w: F_dir^p is everything on E_1^{pq}, F_dir^{p+1} nothing.
    auto dirw = direct_filtration(ss, a.w, 1);
    for (const auto& [k, ch] : dirw.chains) {
      CHECK(ch.at(k.first).is_full());
      CHECK(ch.at(k.first + 1).is_zero());
    }
    // Preservation under d_r (nesting is by construction of FiltChain).
    for (int r = 1; r <= ss.r_stop(); ++r) {
      auto drf = direct_filtration(ss, a.f, r);
      for (const auto& [k, ch] : drf.chains) {
        Matrix<Q> d = ss.differential(r, k.first, k.second);
        const FiltChain<Q>& tgt = drf.chain(k.first + r, k.second - r + 1);
        for (const auto& j : ch.jumps()) {
          if (tgt.ambient() == 0) {
            CHECK(j.second.image_under(d).is_zero());
          } else {
            CHECK(tgt.at(j.first).contains(j.second.image_under(d)));
          }
        }
      }
    }
  }
}

TEST_CASE("recursive filtration equals direct on page one") {
  DetRng rng(89);
  auto a = random_bifiltered(rng);
  SpectralSequence<Q> ss(a.cx, a.w);
  auto dir = direct_filtration(ss, a.f, 1);
  auto rec = recursive_filtration(ss, a.f, 1);
  CHECK(dir.chains == rec.chains);
}

TEST_CASE("zero differential: dir, rec and final all coincide at every page") {
  Complex<Q> cx(0, {2, 2}, {Matrix<Q>::zero(2, 2)});
  DetRng rng(97);
  auto w = random_compatible_filtration<Q>(rng, cx, 2);
  auto f = random_compatible_filtration<Q>(rng, cx, 2);
  SpectralSequence<Q> ss(cx, w);
  for (int r = 1; r <= ss.r_stop(); ++r) CHECK(ss.page_differentials_vanish(r));
  for (int r = 1; r <= ss.r_stop(); ++r) {
    auto dir = direct_filtration(ss, f, r);
    auto rec = recursive_filtration(ss, f, r);
    CHECK(dir.chains == rec.chains);
  }
  auto rep = deligne_criterion(cx, w, f, std::nullopt);
  CHECK(rep.hypotheses_hold);
  CHECK(rep.conclusion_holds);
  CHECK(rep.final_agrees);
  CHECK(ss.degeneration_page() == 1);
}

TEST_CASE("deligne hypotheses fail at i = 0 for the non-strict model") {
  Complex<Q> cx(0, {1, 1}, {mat({{1}})});
  Filtration<Q> w = Filtration<Q>::trivial(cx, 0);
  auto f = Filtration<Q>::build(cx, Orientation::decreasing, [&](int n) {
    return FiltChain<Q>::trivial(1, n == 0 ? 0 : 1);
  });
  auto rep = deligne_criterion(cx, w, f, std::optional<int>(1));
  CHECK(!rep.hypotheses_hold);
  CHECK(rep.failed_i == 0);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->index == 1);
}

TEST_CASE("dimension count: equality exactly at and after degeneration") {
  TwoByTwo m;
  SpectralSequence<Q> ss(m.cx, m.w);
  auto at1 = dimension_count(ss, 1);
  CHECK(at1.page_sum[0] == 2);
  CHECK(at1.h_dim[0] == 1);
  CHECK(!at1.equal);
  auto at2 = dimension_count(ss, 2);
  CHECK(at2.equal);
  CHECK(ss.degeneration_page() == 2);
  DetRng rng(101);
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_bifiltered(rng);
    SpectralSequence<Q> ss2(a.cx, a.w);
    int r0 = ss2.degeneration_page();
    for (int r = 1; r <= ss2.r_stop(); ++r)
      CHECK(dimension_count(ss2, r).equal == (r >= r0));
  }
}

TEST_CASE("zassenhaus: trivial cases and strict bifiltered complexes") {
  DetRng rng(103);
  auto a = random_bifiltered(rng);
  TriFilteredComplex<Q> triv_f = a;
  triv_f.f = Filtration<Q>::trivial(a.cx, 0);
  CHECK(zassenhaus_check(triv_f));
  // The comparison needs F strict on Gr_W (it holds for every valid Hodge
  // complex); on random bifiltered complexes assert it exactly when the
  // strictness hypothesis holds.
  int strict_seen = 0;
  for (int trial = 0; trial < 12; ++trial) {
    auto b = random_bifiltered(rng, 3, 2);
    auto rep = deligne_criterion(b.cx, b.w, b.f, std::optional<int>(0));
    if (rep.hypotheses_hold) {
      ++strict_seen;
      CHECK(zassenhaus_check(b));
    }
  }
  CHECK(strict_seen > 0);
  // Zero-differential complexes are strict for every filtration.
  Complex<Q> zcx(0, {2, 2}, {Matrix<Q>::zero(2, 2)});
  TriFilteredComplex<Q> z;
  z.cx = zcx;
  z.f = random_compatible_filtration<Q>(rng, zcx, 2);
  z.fbar = random_compatible_filtration<Q>(rng, zcx, 2);
  z.w = random_compatible_filtration<Q>(rng, zcx, 2, Orientation::increasing);
  CHECK(zassenhaus_check(z));
}

TEST_CASE("zassenhaus fails without strictness, witnessing the hypothesis") {
  // Acyclic 0 -> k -> k -> 0 with the non-strict F and trivial W: the graded
  // complex Gr_F^1 has cohomology while E_1(A, W) vanishes.
  Complex<Q> cx(0, {1, 1}, {mat({{1}})});
  TriFilteredComplex<Q> a;
  a.cx = cx;
  a.f = Filtration<Q>::build(cx, Orientation::decreasing, [&](int n) {
    return FiltChain<Q>::trivial(1, n == 0 ? 0 : 1);
  });
  a.fbar = Filtration<Q>::trivial(cx, 0);
  a.w = Filtration<Q>::trivial(cx, 0, Orientation::increasing);
  CHECK(!zassenhaus_check(a));
}

TEST_CASE("final filtration on the stable page matches gr of the cohomology") {
  DetRng rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_bifiltered(rng);
    SpectralSequence<Q> ss(a.cx, a.w);
    // Construction throws if E_inf fails to match Gr of H.
    auto fin = final_filtration_on_stable_page(ss, a.f);
    for (const auto& [k, ch] : fin.chains)
      CHECK(ch.ambient() == ss.entry_inf(k.first, k.second).dim());
  }
}
