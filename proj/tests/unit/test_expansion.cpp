#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "brtk/algebra/inverse.hpp"
#include "brtk/error.hpp"
#include "brtk/expansion/expansion.hpp"
#include "support/oracles.hpp"

using namespace brtk;

namespace {

  std::shared_ptr<FiniteGroup const> cyclic(std::size_t n) {
    return std::make_shared<FiniteGroup const>(FiniteGroup::cyclic(n));
  }

  GroupSubset set_of(std::initializer_list<Elem> xs) {
    GroupSubset s = 0;
    for (auto x : xs) {
      s |= singleton(x);
    }
    return s;
  }

}  // namespace

TEST_CASE("pair product and inverse", "[expansion]") {
  auto const z2 = FiniteGroup::cyclic(2);
  ExpansionPair const unit{set_of({0}), 0};
  ExpansionPair const a{set_of({0, 1}), 1};
  CHECK(pair_product(z2, unit, a) == a);
  CHECK(pair_product(z2, a, a) == ExpansionPair{set_of({0, 1}), 0});
  CHECK(pair_inverse(z2, unit) == unit);
  CHECK(pair_inverse(z2, a) == a);

  auto const z3 = FiniteGroup::cyclic(3);
  ExpansionPair const g{set_of({0, 1}), 1};
  CHECK(pair_product(z3, g, g) == ExpansionPair{set_of({0, 1, 2}), 2});
  CHECK(pair_inverse(z3, g) == ExpansionPair{set_of({0, 2}), 2});
  CHECK(to_string(g) == "({0,1}, 1)");
  CHECK(label(g) == "({0,1},1)");

  CHECK_THROWS_AS(check_pair(z3, ExpansionPair{0, 1}), ValidationError);
  CHECK_THROWS_AS(check_pair(z3, ExpansionPair{set_of({3}), 1}), ValidationError);
  CHECK_THROWS_AS(check_pair(z3, ExpansionPair{1, 5}), ValidationError);
}

TEST_CASE("pair order", "[expansion]") {
  ExpansionPair const p{set_of({0, 1, 2}), 1};
  ExpansionPair const q{set_of({0, 1}), 1};
  CHECK(pair_leq(p, p));
  CHECK(pair_leq(p, q));
  CHECK_FALSE(pair_leq(q, p));
  CHECK_FALSE(pair_leq(ExpansionPair{set_of({0, 1}), 0}, ExpansionPair{set_of({0, 1}), 1}));
  CHECK_FALSE(pair_leq(ExpansionPair{set_of({0, 1}), 1}, ExpansionPair{set_of({0, 1}), 0}));
}

TEST_CASE("expansion sizes", "[expansion]") {
  CHECK(birget_rhodes(cyclic(1)).size() == 1);
  CHECK(semidirect_product(cyclic(1)).size() == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const closed_form = (std::size_t{1} << (n - 1)) + (n >= 2 ? (n - 1) << (n - 2) : 0);
    CHECK(birget_rhodes(cyclic(n)).size() == oracle::pairs_over(n, true));
    CHECK(birget_rhodes(cyclic(n)).size() == closed_form);
    CHECK(semidirect_product(cyclic(n)).size() == oracle::pairs_over(n, false));
  }
  CHECK(birget_rhodes(cyclic(2)).size() == 3);
  CHECK(birget_rhodes(cyclic(3)).size() == 8);
  CHECK(birget_rhodes(cyclic(4)).size() == 20);
  CHECK(semidirect_product(cyclic(2)).size() == 6);
  CHECK(semidirect_product(cyclic(3)).size() == 21);
  CHECK_THROWS_AS(birget_rhodes(cyclic(13)), SizeLimitError);
  CHECK_THROWS_AS(semidirect_product(cyclic(9)), SizeLimitError);
}

TEST_CASE("G~R is generated by the iota elements", "[expansion]") {
  for (auto G : {cyclic(3), cyclic(4), std::make_shared<FiniteGroup const>(FiniteGroup::symmetric(3))}) {
    std::vector<ExpansionPair> gens;
    for (Elem g = 0; g < G->order(); ++g) {
      gens.push_back(iota(*G, g));
    }
    auto elems = closure(
        gens, [&](ExpansionPair const& p, ExpansionPair const& q) { return pair_product(*G, p, q); },
        [&](ExpansionPair const& p) { return pair_inverse(*G, p); }, 4096);
    std::sort(elems.begin(), elems.end());
    CHECK(elems == birget_rhodes(G).elements());
  }
}

TEST_CASE("expansions are inverse semigroups with the expected order", "[expansion]") {
  std::vector<std::shared_ptr<FiniteGroup const>> groups{
      cyclic(1), cyclic(2), cyclic(3), cyclic(4),
      std::make_shared<FiniteGroup const>(FiniteGroup::from_descriptor("Z2xZ2"))};
  for (auto const& G : groups) {
    for (auto const& T : {birget_rhodes(G), semidirect_product(G)}) {
      INFO(T.name());
      auto const& S = T.semigroup();
      REQUIRE(check_inverse_semigroup_axioms(S.table()).inverse_semigroup());
      CHECK(T.is_inverse());
      for (Elem s = 0; s < S.size(); ++s) {
        auto const& p = T.at(s);
        REQUIRE(T.at(S.inverse(s)) == pair_inverse(*G, p));
        REQUIRE(S.is_idempotent(s) == (p.element == G->identity()));
        for (Elem t = 0; t < S.size(); ++t) {
          REQUIRE(natural_leq(S, s, t) == pair_leq(p, T.at(t)));
        }
      }
    }
  }
  CHECK(birget_rhodes(cyclic(3)).is_intermediate());
  CHECK_FALSE(semidirect_product(cyclic(3)).is_intermediate());
}

TEST_CASE("idempotents of G~R", "[expansion]") {
  auto const  T = birget_rhodes(cyclic(3));
  auto const& S = T.semigroup();
  for (auto e : idempotents(S)) {
    CHECK(T.at(e).element == 0);
    CHECK(contains(T.at(e).subset, 0));
  }
  CHECK(idempotents(S).size() == 4);
}

TEST_CASE("meets in E(G~R)", "[expansion]") {
  auto const  T = birget_rhodes(cyclic(3));
  auto const& S = T.semigroup();
  Elem const  fam[] = {T.index_or_throw({set_of({0, 1}), 0}), T.index_or_throw({set_of({0, 2}), 0})};
  auto const  m     = meet(S, fam);
  REQUIRE(m);
  CHECK(T.at(*m) == ExpansionPair{set_of({0, 1, 2}), 0});
}

TEST_CASE("support", "[expansion]") {
  auto const s = support(birget_rhodes(cyclic(2)));
  CHECK(s == std::vector<GroupSubset>{set_of({0}), set_of({0, 1})});
  CHECK(subset_string(s[1]) == "{0,1}");
}

TEST_CASE("from_elements validates closure", "[expansion]") {
  auto const G = cyclic(2);
  CHECK_THROWS_AS(IntermediateExtension::from_elements(G, {{set_of({0, 1}), 1}}, "bad"), ValidationError);
  auto const one = IntermediateExtension::from_elements(G, {{set_of({0}), 0}}, "unit");
  CHECK(one.size() == 1);
  CHECK(one.is_inverse());
  CHECK_FALSE(one.is_intermediate());
}

TEST_CASE("intermediate extension enumeration", "[expansion]") {
  auto const trivial = enumerate_intermediate_extensions(cyclic(1));
  REQUIRE(trivial.extensions.size() == 1);
  CHECK(trivial.extensions[0].size() == 1);

  EnumerationOptions loose;
  loose.require_monoid = false;
  auto const z2 = enumerate_intermediate_extensions(cyclic(2), loose);
  CHECK(z2.exhaustive);
  std::vector<std::size_t> sizes;
  for (auto const& T : z2.extensions) {
    sizes.push_back(T.size());
  }
  CHECK(std::find(sizes.begin(), sizes.end(), 3u) != sizes.end());
  CHECK(std::find(sizes.begin(), sizes.end(), 6u) != sizes.end());

  for (std::size_t n = 2; n <= 4; ++n) {
    for (bool monoid : {true, false}) {
      EnumerationOptions opts;
      opts.require_monoid = monoid;
      opts.samples        = 24;
      auto const cat      = enumerate_intermediate_extensions(cyclic(n), opts);
      CHECK(cat.exhaustive == (n <= 3));
      auto const br = birget_rhodes(cyclic(n));
      auto const P  = semidirect_product(cyclic(n));
      for (auto const& T : cat.extensions) {
        INFO(T.name());
        CHECK(T.is_inverse());
        for (auto const& p : br.elements()) {
          REQUIRE(T.contains(p));
        }
        for (auto const& p : T.elements()) {
          REQUIRE(P.contains(p));
        }
        auto const supp = support(T);
        for (auto A : supp) {
          for (auto B : supp) {
            REQUIRE(std::binary_search(supp.begin(), supp.end(), A | B));
          }
        }
        if (monoid) {
          CHECK(T.is_intermediate());
          for (auto A : supp) {
            CHECK(contains(A, 0));
          }
        }
      }
      if (monoid) {
        // finite groups: the only inverse monoid between the endpoints is G~R
        REQUIRE(cat.extensions.size() == 1);
        CHECK(cat.extensions[0] == br);
      }
    }
  }
}

TEST_CASE("non-inverse intermediate semigroups", "[expansion]") {
  EnumerationOptions opts;
  opts.inverse_only   = false;
  opts.require_monoid = true;
  auto const cat      = enumerate_intermediate_extensions(cyclic(3), opts);
  CHECK(cat.extensions.size() > 1);
  for (auto const& T : cat.extensions) {
    CHECK(T.is_intermediate());
    CHECK(T.is_inverse() == (T.size() == 8));
  }
}
