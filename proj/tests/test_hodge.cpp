#include "doctest.h"

#include <hodgecx/generate_hodge.hpp>
#include <hodgecx/hodge.hpp>

#include "support/builders.hpp"

using namespace hodgecx;
using namespace support;
using Q = Rational;
using G = GaussRational;

namespace {

FilteredSpace<Q> from_labels(const std::vector<std::pair<int, int>>& labels) {
  return space_from_labels<Q>(labels);
}

// Elliptic curve pattern: dim 2, weight 1, F^1 = span{e1}, Fbar^1 = span{e2}.
FilteredSpace<Q> elliptic() {
  FilteredSpace<Q> h;
  h.dim = 2;
  h.f = FiltChain<Q>::build(2, 0, 2, [&](int p) {
    if (p <= 0) return Subspace<Q>::full(2);
    if (p == 1) return spanq(2, {{1, 0}});
    return Subspace<Q>::zero(2);
  });
  h.fbar = FiltChain<Q>::build(2, 0, 2, [&](int p) {
    if (p <= 0) return Subspace<Q>::full(2);
    if (p == 1) return spanq(2, {{0, 1}});
    return Subspace<Q>::zero(2);
  });
  h.w = FiltChain<Q>::trivial(2, -1);
  return h;
}

}  // namespace

TEST_CASE("opposedness: zero space, elliptic pattern, and the failing line") {
  FilteredSpace<Q> zero;
  CHECK(is_opposed(zero));
  CHECK(is_opposed(elliptic()));
  // dim 1, weight 0, F^1 = Fbar^1 = H: bigraded piece at (1, 1) with n = 0.
  FilteredSpace<Q> bad;
  bad.dim = 1;
  bad.f = FiltChain<Q>::trivial(1, 1);
  bad.fbar = FiltChain<Q>::trivial(1, 1);
  bad.w = FiltChain<Q>::trivial(1, 0);
  auto fail = opposedness_failure(bad);
  REQUIRE(fail.has_value());
  CHECK(fail->n == 0);
  CHECK(fail->p + fail->q != 0);
}

TEST_CASE("purity detection") {
  FilteredSpace<Q> zero;
  for (int n = -2; n <= 2; ++n) CHECK(is_pure(zero, n));
  CHECK(is_pure(elliptic(), 1));
  CHECK(!is_pure(elliptic(), 0));
  // Direct sum of weights 0 and 2 is not pure.
  auto mixed = from_labels({{0, 0}, {2, 1}});
  CHECK(!is_pure(mixed, 0));
  CHECK(!is_pure(mixed, 2));
  CHECK(is_opposed(mixed));
}

TEST_CASE("hs_morphism: identity, weight gap, and top-weight projection") {
  auto h = CHodgeStructure<Q>::require(elliptic());
  auto id = hs_morphism(Matrix<Q>::identity(2), h, h);
  CHECK(id.kernel.dim() == 0);
  CHECK(id.image.data() == h.data());
  CHECK(id.cokernel.dim() == 0);
  CHECK(id.strict);

  // No nonzero morphisms between pure structures of different weights.
  DetRng rng(301);
  for (int trial = 0; trial < 10; ++trial) {
    int w1 = rng.uniform(-1, 2);
    int w2 = rng.uniform(-1, 2);
    if (w1 == w2) continue;
    auto a = from_labels({{w1, rng.uniform(0, w1 > 0 ? w1 : 0)}, {w1, 0}});
    auto b = from_labels({{w2, 0}});
    CHECK(hom_space_dim(a, b) == 0);
  }

  // Projection of a two-step mixed structure onto its top weight quotient.
  auto m = from_labels({{0, 0}, {1, 1}});  // e1 weight 0, e2 weight 1 type (1,0)
  auto top = from_labels({{1, 1}});
  auto proj = hs_morphism(mat({{0, 1}}), CHodgeStructure<Q>::require(m),
                          CHodgeStructure<Q>::require(top));
  CHECK(proj.cokernel.dim() == 0);
  CHECK(proj.kernel.dim() == 1);
  CHECK(proj.kernel.pure_of(0));
  CHECK(proj.strict);
}

TEST_CASE("gr functors are exact on validated morphisms") {
  DetRng rng(307);
  for (int trial = 0; trial < 10; ++trial) {
    // Split morphisms between one-degree split complexes, then hidden.
    auto x = random_split_mhs_complex<Q>(rng, 0, 1, 3);
    auto y = random_split_mhs_complex<Q>(rng, 0, 1, 3);
    if (x.spaces[0].dim == 0 || y.spaces[0].dim == 0) continue;
    auto phi = random_split_chain_map(rng, x, y);
    Matrix<Q> gs = random_invertible<Q>(rng, x.spaces[0].dim);
    Matrix<Q> gd = random_invertible<Q>(rng, y.spaces[0].dim);
    auto transport = [&](const FilteredSpace<Q>& s, const Matrix<Q>& g) {
      FilteredSpace<Q> out;
      out.dim = s.dim;
      auto tr = [&](const FiltChain<Q>& ch) {
        return FiltChain<Q>::build(s.dim, ch.full_until(), ch.zero_from(),
                                   [&](int p) { return ch.at(p).image_under(g); });
      };
      out.f = tr(s.f);
      out.fbar = tr(s.fbar);
      out.w = tr(s.w);
      return out;
    };
    auto src = CHodgeStructure<Q>::require(transport(x.spaces[0], gs));
    auto dst = CHodgeStructure<Q>::require(transport(y.spaces[0], gd));
    Matrix<Q> m = gd * phi[0] * *inverse(gs);
    auto mor = hs_morphism(m, src, dst);
    CHECK(mor.strict);
    // dim Gr(ker) + dim Gr(im) = dim Gr(src) for each graded index.
    auto gr_dims = [&](const FilteredSpace<Q>& s, const FiltChain<Q>& ch, int p) {
      return ch.at(p).dim() - ch.at(p + 1).dim();
    };
    for (int p = -4; p <= 4; ++p) {
      CHECK(gr_dims(mor.kernel.data(), mor.kernel.data().w, p) +
                gr_dims(mor.image.data(), mor.image.data().w, p) ==
            gr_dims(src.data(), src.data().w, p));
      CHECK(gr_dims(mor.kernel.data(), mor.kernel.data().f, p) +
                gr_dims(mor.image.data(), mor.image.data().f, p) ==
            gr_dims(src.data(), src.data().f, p));
    }
  }
}

TEST_CASE("validator accepts reindexed complexes of mixed structures") {
  DetRng rng(311);
  for (int trial = 0; trial < 10; ++trial) {
    auto split = random_split_mhs_complex<Q>(rng, rng.uniform(-1, 1), 3, 3);
    auto a = hodge_complex_from_split(rng, split);
    CHodgeComplex<Q> c(a);
    CHECK(c.valid());
  }
}

TEST_CASE("validator reports HC2 and HC3 violations with locations") {
  DetRng rng(313);
  auto bad2 = hc2_violation<Q>(rng, false);
  CHodgeComplex<Q> c2(bad2.data);
  REQUIRE(!c2.valid());
  CHECK(c2.report().axiom == "HC2");
  CHECK(!c2.report().witness.empty());

  auto bad3 = hc3_violation<Q>(rng, false);
  CHodgeComplex<Q> c3(bad3.data);
  REQUIRE(!c3.valid());
  CHECK(c3.report().axiom == "HC3");
  CHECK(c3.report().i == 0);
  CHECK(c3.report().p == 0);

  // Padding with a valid summand keeps the report axiom.
  for (int trial = 0; trial < 10; ++trial) {
    auto v = random_violation<Q>(rng);
    CHodgeComplex<Q> c(v.data);
    REQUIRE(!c.valid());
    CHECK(c.report().axiom == v.axiom);
  }
}

TEST_CASE("theorem1 returns a one-term structure unchanged") {
  DetRng rng(317);
  auto split = random_split_mhs_complex<Q>(rng, 0, 1, 3);
  if (split.spaces[0].dim == 0) split.spaces[0] = from_labels({{1, 0}});
  auto a = reindex_from_mhs_complex<Q>(0, split.spaces, {});
  CHodgeComplex<Q> c(a);
  REQUIRE(c.valid());
  auto th = theorem1(c);
  REQUIRE(th.lo == 0);
  CHECK(th.at(0).data() == split.spaces[0]);
  CHECK(th.w_page <= 2);
  CHECK(th.f_page == 1);
  CHECK(th.fbar_page == 1);
  CHECK(th.e2_entries_pure);
  CHECK(th.d2_vanishes);
}

TEST_CASE("theorem1 on a reindexed two-term complex gives kernel and cokernel") {
  DetRng rng(331);
  for (int trial = 0; trial < 8; ++trial) {
    auto x = random_split_mhs_complex<Q>(rng, 0, 2, 3);
    if (x.spaces[0].dim == 0 || x.spaces[1].dim == 0) continue;
    auto a = reindex_from_mhs_complex<Q>(0, x.spaces, x.diffs);
    CHodgeComplex<Q> c(a);
    REQUIRE(c.valid());
    auto th = theorem1(c);
    auto mor = hs_morphism(x.diffs[0], CHodgeStructure<Q>::require(x.spaces[0]),
                           CHodgeStructure<Q>::require(x.spaces[1]));
    // H^0 = kernel with its structure; H^1 = cokernel with its structure.
    CHECK(th.space(0) == mor.kernel.data());
    CHECK(th.space(1) == mor.cokernel.data());
  }
}

TEST_CASE("theorem1 weight recovery for pure weights 0 and 1 in degrees 0 and 1") {
  // Two-term complex with zero differential: pure weight 0 in degree 0 and
  // pure weight 1 in degree 1 are both recovered by the W shift.
  std::vector<FilteredSpace<Q>> spaces = {from_labels({{0, 0}}), from_labels({{1, 1}})};
  auto a = reindex_from_mhs_complex<Q>(0, spaces, {Matrix<Q>::zero(1, 1)});
  CHodgeComplex<Q> c(a);
  REQUIRE(c.valid());
  auto th = theorem1(c);
  CHECK(th.at(0).pure_of(0));
  CHECK(th.at(1).pure_of(1));
}

TEST_CASE("theorem1 commutes with twist: weights shift by minus p minus q") {
  DetRng rng(337);
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_valid_hodge_complex<Q>(rng, 1, 3, 2);
    CHodgeComplex<Q> ca(a);
    REQUIRE(ca.valid());
    auto th = theorem1(ca);
    int p = rng.uniform(-1, 1), q = rng.uniform(-1, 1);
    CHodgeComplex<Q> cb(twist(a, p, q));
    REQUIRE(cb.valid());
    auto th2 = theorem1(cb);
    for (int n = th.lo; n <= th.hi(); ++n) {
      auto w1 = th.at(n).weights();
      auto w2 = th2.at(n).weights();
      REQUIRE(w1.size() == w2.size());
      for (size_t t = 0; t < w1.size(); ++t) CHECK(w2[t] == w1[t] - p - q);
    }
  }
}

TEST_CASE("closure: cone, total, translate, twist and reindex re-validate") {
  DetRng rng(347);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_valid_hodge_complex<Q>(rng, 3, 3, 3);
    CHodgeComplex<Q> c(a);
    CHECK(c.valid());
  }
}

TEST_CASE("cone of a random valid morphism validates and has an exact hodge LES") {
  DetRng rng(349);
  int interesting = 0;
  for (int trial = 0; trial < 8; ++trial) {
    auto f = random_valid_hodge_morphism<Q>(rng, 3, 2);
    if (f.src().cx.is_zero_complex() && f.dst().cx.is_zero_complex()) continue;
    auto les = cone_les(f);
    CHECK(les.exact);
    CHECK(les.morphisms_ok);
    CHECK(les.strict_ok);
    ++interesting;
  }
  CHECK(interesting > 0);
}

TEST_CASE("prop: W spectral sequence on Gr_F degenerates at page two") {
  DetRng rng(353);
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_valid_hodge_complex<Q>(rng, 2, 3, 3);
    CHodgeComplex<Q> c(a);
    REQUIRE(c.valid());
    for (int i = a.f.min_index() - 1; i <= a.f.max_index() + 1; ++i) {
      auto cert = prop_grf_degeneration(c, i);
      CHECK(cert.holds);
    }
  }
}

TEST_CASE("acyclic resolution check: identity, scrambled piece, composition") {
  DetRng rng(359);
  auto a = random_valid_hodge_complex<Q>(rng, 1, 3, 2);
  TriMap<Q> id(a, a, ComplexMap<Q>::identity(a.cx));
  CHECK(acyclic_resolution_check(id));

  // Quasi-isomorphism that scrambles one Gr_F piece: A = B + contractible
  // pair straddling an F level; projection to B.
  Complex<Q> acx(0, {2, 1}, {mat({{0, 1}})});
  TriFilteredComplex<Q> big;
  big.cx = acx;
  big.f = Filtration<Q>::build(acx, Orientation::decreasing, [&](int n) {
    if (n == 0) return FiltChain<Q>::trivial(2, 0);
    return FiltChain<Q>::trivial(1, 1);  // F^1 A^1 = everything
  });
  big.fbar = Filtration<Q>::build(acx, Orientation::decreasing, [&](int n) {
    return FiltChain<Q>::trivial(acx.dim(n), 0);
  });
  big.w = Filtration<Q>::build(acx, Orientation::increasing, [&](int n) {
    return FiltChain<Q>::trivial(acx.dim(n), 0);
  });
  Complex<Q> bcx = Complex<Q>::single(0, 1);
  TriFilteredComplex<Q> small{bcx, Filtration<Q>::trivial(bcx, 0), Filtration<Q>::trivial(bcx, 0),
                              Filtration<Q>::trivial(bcx, 0, Orientation::increasing)};
  auto proj = ComplexMap<Q>::build(acx, bcx, [&](int n) {
    if (n == 0) return mat({{1, 0}});
    return Matrix<Q>::zero(0, 1);
  });
  TriMap<Q> scramble(big, small, proj);
  CHECK(is_quasi_iso(proj));
  CHECK(!acyclic_resolution_check(scramble));

  // Composition of two acyclic resolutions stays one.
  TriMap<Q> idc(a, a, ComplexMap<Q>::identity(a.cx));
  TriMap<Q> composed(a, a, compose(idc.map(), id.map()));
  CHECK(acyclic_resolution_check(composed));
}

TEST_CASE("rational structure: lattice on a weight-zero line") {
  FilteredSpace<G> h;
  h.dim = 1;
  h.f = FiltChain<G>::trivial(1, 0);
  h.fbar = FiltChain<G>::trivial(1, 0);
  h.w = FiltChain<G>::trivial(1, 0);
  RationalStructureData rs;
  rs.basis = Matrix<G>::identity(1);
  rs.lattice = {{G(1)}};
  auto rep = check_rational_structure(h, rs);
  CHECK(rep.ok);
}

TEST_CASE("rational structure: conjugated elliptic pattern accepts, unstable W rejects") {
  // H = K^2, F^1 = span(e1 + i e2), Fbar^1 = its conjugate, weight 1.
  auto line = [&](G a, G b) {
    return Subspace<G>::span_vectors(2, {{a, b}});
  };
  G i = G::i();
  FilteredSpace<G> h;
  h.dim = 2;
  h.f = FiltChain<G>::build(2, 0, 2, [&](int p) {
    if (p <= 0) return Subspace<G>::full(2);
    if (p == 1) return line(G(1), i);
    return Subspace<G>::zero(2);
  });
  h.fbar = FiltChain<G>::build(2, 0, 2, [&](int p) {
    if (p <= 0) return Subspace<G>::full(2);
    if (p == 1) return line(G(1), G(0) - i);
    return Subspace<G>::zero(2);
  });
  h.w = FiltChain<G>::trivial(2, -1);
  REQUIRE(is_opposed(h));
  RationalStructureData rs;
  rs.basis = Matrix<G>::identity(2);
  CHECK(check_rational_structure(h, rs).ok);

  // Replace W by a conjugation-unstable line inside a mixed structure.
  FilteredSpace<G> m;
  m.dim = 2;
  m.f = FiltChain<G>::build(2, 0, 2, [&](int p) {
    if (p <= 0) return Subspace<G>::full(2);
    if (p == 1) return line(G(0), G(1));  // span e2: type (1, 0) upstairs
    return Subspace<G>::zero(2);
  });
  m.fbar = FiltChain<G>::build(2, 0, 2, [&](int p) {
    if (p <= 0) return Subspace<G>::full(2);
    if (p == 1) return line(G(0), G(1));
    return Subspace<G>::zero(2);
  });
  // W_0 = span(e1 + i e2), W_1 = everything.
  m.w = FiltChain<G>::build(2, -1, 1, [&](int p) {
    if (p <= -1) return Subspace<G>::full(2);
    if (p == 0) return line(G(1), i);
    return Subspace<G>::zero(2);
  });
  RationalStructureData rs2;
  rs2.basis = Matrix<G>::identity(2);
  auto rep = check_rational_structure(m, rs2);
  CHECK(!rep.ok);
  CHECK(rep.problem == "W is not defined over the rational form");
}

TEST_CASE("mixed_hodge_structure bundles theorem1 output with verified lattices") {
  // One-term complex over the gaussian rationals, weight 0, standard lattice.
  Complex<G> cx = Complex<G>::single(0, 1);
  TriFilteredComplex<G> a{cx, Filtration<G>::trivial(cx, 0), Filtration<G>::trivial(cx, 0),
                          Filtration<G>::trivial(cx, 0, Orientation::increasing)};
  CHodgeComplex<G> c(a);
  REQUIRE(c.valid());
  RationalStructureData rs;
  rs.basis = Matrix<G>::identity(1);
  rs.lattice = {{G(2)}};
  auto out = mixed_hodge_structure(c, {rs});
  CHECK(out.ok);
}
