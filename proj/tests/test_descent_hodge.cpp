#include "doctest.h"

#include <hodgecx/descent_hodge.hpp>
#include <hodgecx/generate_hodge.hpp>
#include <hodgecx/generate_space.hpp>

#include "support/builders.hpp"

using namespace hodgecx;
using namespace support;
using Q = Rational;

namespace {

PosetPtr two_point() { return make_poset(FinitePoset::from_relations(2, {{0, 1}})); }

FilteredSpace<Q> pure_space(int dim, int w, int fp = 0) {
  FilteredSpace<Q> s;
  s.dim = dim;
  s.f = FiltChain<Q>::trivial(dim, fp);
  s.fbar = FiltChain<Q>::trivial(dim, w - fp);
  s.w = FiltChain<Q>::trivial(dim, -w);
  return s;
}

}  // namespace

TEST_CASE("formal hodge complex of the circle validates with pure weights") {
  PosetPtr circle = make_poset(circle_model());
  auto formal = formal_hodge_complex(PosetSheaf<Q>::constant(circle, 1));
  CHECK(formal.cx.cx.dim(0) == 1);
  CHECK(formal.cx.cx.dim(1) == 1);
  CHodgeComplex<Q> c(formal.cx);
  CHECK(c.valid());
  auto th = theorem1(c);
  CHECK(th.at(0).pure_of(0));
  CHECK(th.at(1).pure_of(1));
}

TEST_CASE("assembling a one-level row returns theorem1 of the level") {
  PosetPtr circle = make_poset(circle_model());
  auto formal = formal_hodge_complex(PosetSheaf<Q>::constant(circle, 1));
  CosimplicialHodgeRow<Q> row;
  row.levels.push_back(formal.cx);
  auto out = assemble_descent_hodge(row);
  CHECK(out.tot == formal.cx);
  auto th = theorem1(CHodgeComplex<Q>(formal.cx));
  REQUIRE(out.structures.structures.size() == th.structures.size());
  for (size_t t = 0; t < th.structures.size(); ++t)
    CHECK(out.structures.structures[t].data() == th.structures[t].data());
}

TEST_CASE("two-level row joined by an isomorphism assembles to zero") {
  DetRng rng(701);
  auto a = random_valid_hodge_complex<Q>(rng, 1, 2, 2);
  CosimplicialHodgeRow<Q> row;
  row.levels = {a, a};
  TriMap<Q> id(a, a, ComplexMap<Q>::identity(a.cx));
  TriMap<Q> zero(a, a, ComplexMap<Q>::zero(a.cx, a.cx));
  row.cofaces.push_back({id, zero});
  auto out = assemble_descent_hodge(row);
  for (const auto& s : out.structures.structures) CHECK(s.dim() == 0);
}

TEST_CASE("hypercover row over a resolver tower recovers base cohomology") {
  PosetPtr circle = make_poset(circle_model());
  int levels = 3;
  auto xs = cech_object(default_resolver(circle), levels);
  PosetSheaf<Q> f = PosetSheaf<Q>::constant(circle, 1);
  auto hrow = row_from_hypercover(xs, f);
  CHECK(hrow.row.cosimplicial_identities_hold());
  auto out = assemble_descent_hodge(hrow.row);
  // H^0 = k and H^1 = k in degrees < levels.
  CHECK(out.structures.space(0).dim == 1);
  CHECK(out.structures.space(1).dim == 1);
  CHECK(out.structures.space(2).dim == 0);
  CHECK(out.structures.w_page <= 2);
}

TEST_CASE("independence across two resolutions and a dominating third") {
  DetRng rng(709);
  int done = 0;
  for (int trial = 0; trial < 2; ++trial) {
    PosetPtr p = make_poset(random_poset(rng, rng.uniform(3, 4), 1, 55));
    int levels = 2;
    auto ra = simplicial_resolution(p, default_resolver, levels);
    auto rb = simplicial_resolution(p, doubled_resolver, levels);
    auto fp = fiber_product_simplicial(ra.space, rb.space);
    auto rc = simplicial_resolution(p, default_resolver, levels, &fp.space);
    PosetSheaf<Q> f = PosetSheaf<Q>::constant(p, rng.uniform(1, 2));
    auto row_a = row_from_hypercover(ra.space, f);
    auto row_b = row_from_hypercover(rb.space, f);
    auto row_c = row_from_hypercover(rc.space, f);
    // Morphisms A -> C and B -> C induced by the comparison maps.
    auto make_morph = [&](const HypercoverRow<Q>& src, const HypercoverRow<Q>& dst,
                          const AugmentedSimplicialSpace& src_xs,
                          const std::vector<PosetMap>& down) {
      RowMorphism<Q> m;
      for (int n = 0; n <= levels; ++n) {
        PosetMap phi = down[static_cast<size_t>(n)];
        m.comps.push_back(formal_pullback_morphism(
            src.formals[static_cast<size_t>(n)], dst.formals[static_cast<size_t>(n)], phi,
            pullback_sheaf(src_xs.augmentations[static_cast<size_t>(n)], f)));
      }
      return m;
    };
    std::vector<PosetMap> down_a, down_b;
    for (int n = 0; n <= levels; ++n) {
      down_a.push_back(compose(fp.to_a[static_cast<size_t>(n)], rc.to_over[static_cast<size_t>(n)]));
      down_b.push_back(compose(fp.to_b[static_cast<size_t>(n)], rc.to_over[static_cast<size_t>(n)]));
    }
    auto m_a = make_morph(row_a, row_c, ra.space, down_a);
    auto m_b = make_morph(row_b, row_c, rb.space, down_b);
    auto rep_a = independence_check(row_a.row, row_c.row, m_a, 0, levels - 1);
    auto rep_b = independence_check(row_b.row, row_c.row, m_b, 0, levels - 1);
    CHECK(rep_a.totals_quasi_isomorphic);
    CHECK(rep_a.outputs_isomorphic);
    CHECK(rep_b.totals_quasi_isomorphic);
    CHECK(rep_b.outputs_isomorphic);
    ++done;
  }
  CHECK(done > 0);
}

TEST_CASE("bar row over a two-atom stratification: weight range and independence") {
  PosetPtr x = two_point();
  Stratification strat = Stratification::require(x, {0, 1});
  StratMonad<Q> monad(strat);
  PosetSheaf<Q> f = PosetSheaf<Q>::constant(x, 1);
  int n_max = 3;
  auto brow = row_from_bar(monad, f, n_max);
  CHECK(brow.row.cosimplicial_identities_hold());
  auto out = assemble_descent_hodge(brow.row);
  // Weights of H^m live in [0, m].
  for (int m = 0; m <= n_max; ++m) {
    for (int w : out.structures.at(m).weights()) {
      CHECK(w >= 0);
      CHECK(w <= m);
    }
  }
  // Independence against the constant row through the unit insertions.
  auto base_formal = formal_hodge_complex(f);
  auto crow = constant_row(base_formal, n_max);
  RowMorphism<Q> units;
  SheafMap<Q> ucomp = brow.bar.augmentation;
  units.comps.push_back(formal_sheaf_morphism(base_formal, brow.formals[0], ucomp));
  std::vector<PosetSheaf<Q>> powers{f};
  for (int n = 1; n <= n_max; ++n) {
    powers.push_back(monad.apply(powers.back()));
    ucomp = compose_sheaf_maps(monad.eta(powers[static_cast<size_t>(n)]), ucomp);
    units.comps.push_back(
        formal_sheaf_morphism(base_formal, brow.formals[static_cast<size_t>(n)], ucomp));
  }
  auto rep = independence_check(crow, brow.row, units, 0, n_max - 1);
  CHECK(rep.totals_quasi_isomorphic);
  CHECK(rep.outputs_isomorphic);
}

TEST_CASE("ses_to_les: split sequences have vanishing connecting maps") {
  DetRng rng(719);
  auto a = random_valid_hodge_complex<Q>(rng, 0, 2, 2);
  auto b = random_valid_hodge_complex<Q>(rng, 0, 2, 2);
  auto sum = direct_sum_tri(a, b);
  auto inc = ComplexMap<Q>::build(a.cx, sum.cx, [&](int n) {
    Matrix<Q> m(sum.cx.dim(n), a.cx.dim(n));
    for (int i = 0; i < a.cx.dim(n); ++i) m.at(i, i) = Q(1);
    return m;
  });
  auto proj = ComplexMap<Q>::build(sum.cx, b.cx, [&](int n) {
    Matrix<Q> m(b.cx.dim(n), sum.cx.dim(n));
    for (int i = 0; i < b.cx.dim(n); ++i) m.at(i, a.cx.dim(n) + i) = Q(1);
    return m;
  });
  CosimplicialHodgeRow<Q> r1, r2, r3;
  r1.levels = {a};
  r2.levels = {sum};
  r3.levels = {b};
  RowMorphism<Q> f{{TriMap<Q>(a, sum, inc)}};
  RowMorphism<Q> g{{TriMap<Q>(sum, b, proj)}};
  auto les = ses_to_les(r1, r2, r3, f, g);
  CHECK(les.inputs_exact);
  CHECK(les.comparison_quasi_iso);
  CHECK(les.exact);
  CHECK(les.morphisms_ok);
  CHECK(les.strict_ok);
}

TEST_CASE("ses_to_les: a genuinely non-split extension has a nonzero connecting map") {
  // 0 -> k[-1] -> [k -> k] -> k -> 0.
  auto s1 = reindex_from_mhs_complex<Q>(1, {pure_space(1, 0)}, {});
  auto s2 = reindex_from_mhs_complex<Q>(0, {pure_space(1, 0), pure_space(1, 0)}, {mat({{1}})});
  auto s3 = reindex_from_mhs_complex<Q>(0, {pure_space(1, 0)}, {});
  auto inc = ComplexMap<Q>::build(s1.cx, s2.cx, [&](int n) {
    return n == 1 ? mat({{1}}) : Matrix<Q>::zero(s2.cx.dim(n), s1.cx.dim(n));
  });
  auto proj = ComplexMap<Q>::build(s2.cx, s3.cx, [&](int n) {
    return n == 0 ? mat({{1}}) : Matrix<Q>::zero(s3.cx.dim(n), s2.cx.dim(n));
  });
  CosimplicialHodgeRow<Q> r1, r2, r3;
  r1.levels = {s1};
  r2.levels = {s2};
  r3.levels = {s3};
  RowMorphism<Q> f{{TriMap<Q>(s1, s2, inc)}};
  RowMorphism<Q> g{{TriMap<Q>(s2, s3, proj)}};
  auto les = ses_to_les(r1, r2, r3, f, g);
  CHECK(les.inputs_exact);
  CHECK(les.comparison_quasi_iso);
  CHECK(les.exact);
  CHECK(les.morphisms_ok);
  CHECK(les.strict_ok);
  // H^0(S3) = k maps onto H^1(S1) = k: the connecting map is nonzero.
  CHECK(les.h3.space(0).dim == 1);
  CHECK(les.h1.space(1).dim == 1);
  CHECK(les.h2.space(0).dim == 0);
  CHECK(les.h2.space(1).dim == 0);
}
