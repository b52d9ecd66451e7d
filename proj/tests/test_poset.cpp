#include "doctest.h"

#include <hodgecx/generate_space.hpp>
#include <hodgecx/poset.hpp>

using namespace hodgecx;

TEST_CASE("poset axioms are verified at construction") {
  CHECK_NOTHROW(FinitePoset::from_relations(3, {{0, 1}, {1, 2}}));
  // A cycle violates antisymmetry after closure.
  CHECK_THROWS(FinitePoset::from_relations(2, {{0, 1}, {1, 0}}));
  // Handing a non-transitive matrix directly is rejected.
  std::vector<std::vector<bool>> leq = {{true, true, false}, {false, true, true},
                                        {false, false, true}};
  CHECK_THROWS(FinitePoset(3, leq));
}

TEST_CASE("up-sets, down-sets and convexity") {
  FinitePoset chain = FinitePoset::from_relations(3, {{0, 1}, {1, 2}});
  CHECK(chain.up_set(1) == std::vector<int>{1, 2});
  CHECK(chain.down_set(1) == std::vector<int>{0, 1});
  CHECK(chain.is_up_set({2}));
  CHECK(!chain.is_up_set({0}));
  CHECK(chain.is_down_set({0}));
  CHECK(chain.is_locally_closed({1}));
  CHECK(!chain.is_locally_closed({0, 2}));
  CHECK(chain.longest_chain_length() == 2);
  CHECK(chain.maximal_points() == std::vector<int>{2});
}

TEST_CASE("strict chain enumeration is ordered and complete") {
  FinitePoset v = FinitePoset::from_relations(3, {{0, 2}, {1, 2}});
  auto chains = v.strict_chains({0, 1, 2}, 3);
  // Chains: {0}, {0,2}, {1}, {1,2}, {2}.
  CHECK(chains.size() == 5);
  CHECK(chains[0] == std::vector<int>{0});
  CHECK(chains[1] == std::vector<int>{0, 2});
}

TEST_CASE("monotone maps validate and compose") {
  PosetPtr chain = make_poset(FinitePoset::from_relations(2, {{0, 1}}));
  PosetPtr pt = make_poset(FinitePoset(1, {{true}}));
  CHECK_NOTHROW(PosetMap(chain, pt, {0, 0}));
  // Flipping the chain is not monotone into itself.
  CHECK_THROWS(PosetMap(chain, chain, {1, 0}));
  PosetMap to_pt(chain, pt, {0, 0});
  CHECK(to_pt.surjective());
  CHECK(compose(identity_map(pt), to_pt).img == to_pt.img);
}

TEST_CASE("stratification validation accepts the circle partition") {
  PosetPtr circle = make_poset(circle_model());
  // Atoms: closed {a, b}, open {x, y}.
  auto s = Stratification::validated(circle, {0, 0, 1, 1});
  REQUIRE(s.has_value());
  CHECK(s->atom_count() == 2);
  CHECK(s->atom_leq(0, 1));
  CHECK(!s->atom_leq(1, 0));
  CHECK(s->closure_lemma_holds());
}

TEST_CASE("stratification rejects partitions violating the frontier condition") {
  // a < x, b isolated; {x} and {a, b}: closure of {x} is {a, x}, not a union.
  PosetPtr p = make_poset(FinitePoset::from_relations(3, {{0, 2}}));
  auto s = Stratification::validated(p, {0, 0, 1});
  CHECK(!s.has_value());
  // Non-convex piece: chain a < b < c with {a, c} in one atom.
  PosetPtr chain = make_poset(FinitePoset::from_relations(3, {{0, 1}, {1, 2}}));
  CHECK(!Stratification::validated(chain, {0, 1, 0}).has_value());
}

TEST_CASE("random stratifications validate and stay within the atom budget") {
  DetRng rng(401);
  for (int trial = 0; trial < 20; ++trial) {
    PosetPtr p = make_poset(random_poset(rng, rng.uniform(3, 8), 2));
    Stratification s = random_stratification(rng, p, 4);
    CHECK(s.atom_count() <= 4);
    CHECK(s.closure_lemma_holds());
  }
}

TEST_CASE("default resolver is surjective with contractible components") {
  DetRng rng(409);
  for (int trial = 0; trial < 10; ++trial) {
    PosetPtr p = make_poset(random_poset(rng, rng.uniform(2, 7), 2));
    PosetMap r = default_resolver(p);
    CHECK(r.surjective());
    for (const auto& comp : r.src->components()) {
      // Each component has a greatest element.
      bool has_top = false;
      for (int c : comp) {
        bool top = true;
        for (int d : comp)
          if (!r.src->leq(d, c)) top = false;
        if (top) has_top = true;
      }
      CHECK(has_top);
    }
  }
}
