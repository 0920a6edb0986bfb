#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brtk/algebra/inverse.hpp"
#include "brtk/correspondence/generators.hpp"
#include "brtk/error.hpp"
#include "brtk/topology/gamma.hpp"
#include "brtk/topology/propositions.hpp"
#include "support/oracles.hpp"

using namespace brtk;

namespace {

  std::uint32_t mask(Bitset const& b) {
    std::uint32_t m = 0;
    b.for_each([&](std::size_t x) { m |= 1u << x; });
    return m;
  }

  Bitset bits(std::size_t n, std::uint32_t m) {
    Bitset b(n);
    for (std::size_t x = 0; x < n; ++x) {
      if ((m >> x) & 1u) {
        b.set(x);
      }
    }
    return b;
  }

  oracle::Family family(FiniteTopology const& t) {
    oracle::Family f;
    for (auto const& V : t.opens()) {
      f.insert(mask(V));
    }
    return f;
  }

  oracle::Graph graph(PartialBijection const& f) {
    oracle::Graph g;
    for (auto p : f.pairs()) {
      g.insert(p);
    }
    return g;
  }

  std::shared_ptr<FiniteTopology const> shared(FiniteTopology t) {
    return std::make_shared<FiniteTopology const>(std::move(t));
  }

  std::shared_ptr<FiniteGroup const> group(FiniteGroup G) {
    return std::make_shared<FiniteGroup const>(std::move(G));
  }

  std::vector<Bitset> opens_of(FiniteTopology const& t) {
    return t.opens();
  }

}  // namespace

TEST_CASE("generate_topology", "[topology]") {
  SECTION("small examples") {
    CHECK(generate_topology(3, {}) == FiniteTopology::indiscrete(3));
    CHECK(generate_topology(2, {Bitset(2, {1})}) == FiniteTopology::sierpinski());
    CHECK(generate_topology(3, {Bitset(3, {0}), Bitset(3, {1}), Bitset(3, {2})}) == FiniteTopology::discrete(3));
    CHECK(family(FiniteTopology::sierpinski()) == oracle::Family{0b00, 0b10, 0b11});
  }

  SECTION("agrees with union/intersection closure on random subbases") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t const          n = 1 + rng() % 6;
      std::vector<std::uint32_t> sub;
      std::vector<Bitset>        sub_bits;
      for (std::size_t k = rng() % 5; k > 0; --k) {
        auto m = static_cast<std::uint32_t>(rng() % (1u << n));
        sub.push_back(m);
        sub_bits.push_back(bits(n, m));
      }
      auto const t = generate_topology(n, sub_bits);
      REQUIRE(family(t) == oracle::close_topology(n, sub));
      for (std::uint32_t A = 0; A < (1u << n); ++A) {
        CHECK(t.is_open(bits(n, A)) == oracle::close_topology(n, sub).contains(A));
      }
    }
  }

  SECTION("invalid neighbourhoods are rejected") {
    CHECK_THROWS_AS(FiniteTopology::from_neighbourhoods({Bitset(2, {1}), Bitset(2, {1})}), ValidationError);
    CHECK_THROWS_AS(FiniteTopology::from_neighbourhoods({Bitset(2, {0, 1}), Bitset(2, {0, 1, })}).opens(0),
                    SizeLimitError);
  }

  SECTION("interior and closure") {
    auto const S = FiniteTopology::sierpinski();
    CHECK(S.interior(Bitset(2, {0})) == Bitset(2));
    CHECK(S.closure(Bitset(2, {1})) == Bitset::full(2));
    CHECK(S.closure(Bitset(2, {0})) == Bitset(2, {0}));
  }
}

TEST_CASE("counting finite topologies", "[topology]") {
  std::vector<std::size_t> const labelled{1, 4, 29, 355};
  std::vector<std::size_t> const types{1, 3, 9, 33};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(all_topologies(n).size() == labelled[n - 1]);
    CHECK(topology_types(n).size() == types[n - 1]);
  }
}

TEST_CASE("separation axioms", "[topology]") {
  auto const d = separation_axioms(FiniteTopology::discrete(3));
  CHECK((d.t0 && d.t1 && d.t2));
  auto const s = separation_axioms(FiniteTopology::sierpinski());
  CHECK(s.t0);
  CHECK_FALSE(s.t1);
  CHECK_FALSE(s.t2);
  auto const i = separation_axioms(FiniteTopology::indiscrete(2));
  CHECK_FALSE((i.t0 || i.t1 || i.t2));
  REQUIRE(i.t0_witness);
  CHECK(*i.t0_witness == std::pair<std::size_t, std::size_t>{0, 1});

  // T1 and T2 both mean discrete for finite spaces
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& t : all_topologies(n)) {
      auto const r = separation_axioms(t);
      CHECK(r.t1 == t.is_discrete());
      CHECK(r.t2 == t.is_discrete());
    }
  }
}

TEST_CASE("continuity", "[topology]") {
  auto const S = FiniteTopology::sierpinski();
  std::vector<Elem> id{0, 1};
  std::vector<Elem> swap{1, 0};
  std::vector<Elem> constant{1, 1};
  CHECK(is_continuous(id, S, S).continuous);
  CHECK(is_continuous(constant, S, S).continuous);
  auto const c = is_continuous(swap, S, S);
  CHECK_FALSE(c.continuous);
  REQUIRE(c.witness_open);
  CHECK(*c.witness_open == Bitset(2, {1}));
  CHECK_FALSE(S.is_open(Bitset(2, {0})));  // the preimage of the witness

  SECTION("matches the preimage criterion over all opens") {
    std::mt19937 rng(11);
    auto const   spaces = all_topologies(3);
    for (int trial = 0; trial < 400; ++trial) {
      auto const&              X = spaces[rng() % spaces.size()];
      auto const&              Y = spaces[rng() % spaces.size()];
      std::vector<Elem>        f(3);
      std::vector<std::size_t> g(3);
      for (std::size_t x = 0; x < 3; ++x) {
        g[x] = f[x] = static_cast<Elem>(rng() % 3);
      }
      CHECK(is_continuous(f, X, Y).continuous == oracle::continuous(g, family(X), family(Y)));
    }
  }
}

TEST_CASE("product and subspace", "[topology]") {
  auto const spaces = all_topologies(2);
  for (auto const& a : spaces) {
    for (auto const& b : spaces) {
      auto const                 p = product(a, b);
      std::vector<std::uint32_t> rectangles;
      for (auto U : family(a)) {
        for (auto V : family(b)) {
          std::uint32_t r = 0;
          for (std::size_t x = 0; x < 2; ++x) {
            for (std::size_t y = 0; y < 2; ++y) {
              if (((U >> x) & 1u) && ((V >> y) & 1u)) {
                r |= 1u << (x * 2 + y);
              }
            }
          }
          rectangles.push_back(r);
        }
      }
      CHECK(family(p) == oracle::close_topology(4, rectangles));
    }
  }
  auto const t   = FiniteTopology::from_neighbourhoods({Bitset(3, {0, 1, 2}), Bitset(3, {1}), Bitset(3, {1, 2})});
  auto const sub = subspace(t, Bitset(3, {0, 2}));
  CHECK(family(sub) == oracle::Family{0b00, 0b10, 0b11});
}

TEST_CASE("Gamma(X)", "[topology][gamma]") {
  CHECK(gamma(shared(FiniteTopology::sierpinski())).size() == 3);
  CHECK(gamma(shared(FiniteTopology::discrete(2))).size() == 7);
  CHECK(gamma(shared(FiniteTopology::indiscrete(3))).size() == 7);  // ∅ and S3 on X
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const G = gamma(shared(FiniteTopology::discrete(n)));
    CHECK(G.size() == oracle::symmetric_inverse_monoid_size(n));
    CHECK(G.elements->elements == symmetric_inverse_monoid(n).elements);
  }
  CHECK_THROWS_AS(gamma(shared(FiniteTopology::discrete(5))), SizeLimitError);

  SECTION("agrees with the open-set definition on every 3-point topology") {
    auto const all = oracle::all_partial_injections(3);
    for (auto const& t : all_topologies(3)) {
      auto const G     = gamma(shared(t));
      auto const opens = family(t);
      std::size_t expected = 0;
      for (auto const& f : all) {
        expected += oracle::partial_homeomorphism(f, opens);
      }
      CHECK(G.size() == expected);
      for (Elem i = 0; i < G.size(); ++i) {
        CHECK(oracle::partial_homeomorphism(graph(G.at(i)), opens));
      }
      CHECK(check_inverse_semigroup_axioms(G.semigroup().table()).inverse_semigroup());
      // E(Γ) = {id_V : V open}
      std::set<Bitset> ids;
      for (auto e : G.semigroup().idempotents()) {
        CHECK(G.at(e) == PartialBijection::identity_on(G.at(e).domain()));
        ids.insert(G.at(e).domain());
      }
      auto const V = opens_of(t);
      CHECK(ids == std::set<Bitset>(V.begin(), V.end()));
    }
  }
}

TEST_CASE("compact-open topology", "[topology][gamma]") {
  auto const G2 = gamma(shared(FiniteTopology::discrete(2)));
  CHECK(compact_open_set(G2, Bitset(2), Bitset(2, {1})) == Bitset::full(G2.size()));
  auto const K0V1 = compact_open_set(G2, Bitset(2, {0}), Bitset(2, {1}));
  for (Elem i = 0; i < G2.size(); ++i) {
    CHECK(K0V1.test(i) == (G2.at(i)(0) == std::optional<std::size_t>{1}));
  }

  SECTION("on discrete X the minimal neighbourhood of f is {g : f ⊆ g}") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const G  = gamma(shared(FiniteTopology::discrete(n)));
      auto const co = tau_co(G);
      for (Elem f = 0; f < G.size(); ++f) {
        for (Elem g = 0; g < G.size(); ++g) {
          CHECK(co.topology.neighbourhood(f).test(g) == G.at(f).is_restriction_of(G.at(g)));
        }
      }
    }
  }

  SECTION("Sierpinski: T0, not T1, with a strictly comparable witness") {
    auto const G   = gamma(shared(FiniteTopology::sierpinski()));
    auto const sep = separation_axioms(tau_co(G).topology);
    CHECK(sep.t0);
    CHECK_FALSE(sep.t1);
    REQUIRE(sep.t1_witness);
    auto const [a, b] = *sep.t1_witness;
    CHECK(G.at(static_cast<Elem>(a)).is_restriction_of(G.at(static_cast<Elem>(b))));
  }

  SECTION("without Hausdorff X, T0 can fail") {
    auto const G   = gamma(shared(FiniteTopology::indiscrete(2)));
    auto const sep = separation_axioms(tau_co(G).topology);
    CHECK_FALSE(sep.t0);
  }

  SECTION("T0 on discrete X, and not T1 whenever some f ⊊ g") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& t : all_topologies(n)) {
        auto const G   = gamma(shared(t));
        auto const sep = separation_axioms(tau_co(G).topology);
        bool comparable = false;
        for (Elem f = 0; f < G.size(); ++f) {
          for (Elem g = 0; g < G.size(); ++g) {
            comparable = comparable || (f != g && G.at(f).is_restriction_of(G.at(g)));
          }
        }
        if (t.is_discrete()) {
          CHECK(sep.t0);
        }
        if (comparable) {
          CHECK_FALSE(sep.t1);
        }
      }
    }
  }
}

TEST_CASE("tau_ico and tau_hco", "[topology][gamma]") {
  SECTION("nested and topological on every space with at most 3 points") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& t : all_topologies(n)) {
        auto const G   = gamma(shared(t));
        auto const co  = tau_co(G);
        auto const ico = tau_ico(G);
        auto const hco = tau_hco(G);
        CHECK(ico.topology.finer_than(co.topology));
        CHECK(hco.topology.finer_than(ico.topology));
        CHECK(check_topological_inverse_semigroup(ico).ok());
        auto const o = order_closed_iff_T2(ico);
        CHECK(o.agree());
      }
    }
  }

  SECTION("discrete X") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const G   = gamma(shared(FiniteTopology::discrete(n)));
      auto const hco = tau_hco(G);
      CHECK(check_topological_inverse_semigroup(hco).ok());
      CHECK(separation_axioms(hco.topology).t2);
      CHECK(hco.topology == tau_point_sets(G).topology);
      auto const o = order_closed_iff_T2(hco);
      CHECK(o.t2);
      CHECK(o.order_closed);
    }
    auto const G4 = gamma(shared(FiniteTopology::discrete(4)));
    CHECK(check_topological_inverse_semigroup(tau_ico(G4)).ok());
  }

  SECTION("tau_co on Sierpinski is a semigroup topology that is neither T2 nor order closed") {
    auto const G  = gamma(shared(FiniteTopology::sierpinski()));
    auto const co = tau_co(G);
    CHECK(check_topological_inverse_semigroup(co).product_continuous);
    auto const o = order_closed_iff_T2(co);
    CHECK_FALSE(o.t2);
    CHECK_FALSE(o.order_closed);
    CHECK(o.order_witness);
  }

  SECTION("indiscrete carrier") {
    auto const           I = symmetric_inverse_monoid(2);
    TopologizedSemigroup ts{"I2 indiscrete", I.semigroup, FiniteTopology::indiscrete(I.size())};
    CHECK(check_topological_inverse_semigroup(ts).ok());
    CHECK(order_closed_iff_T2(ts).agree());
  }

  SECTION("a discontinuous product is reported") {
    auto const Z2 = std::make_shared<FiniteSemigroup const>(
        FiniteSemigroup::from_table(FiniteGroup::cyclic(2).table(), {"1", "a"}, "Z2"));
    TopologizedSemigroup ts{"", Z2, FiniteTopology::from_neighbourhoods({Bitset(2, {0}), Bitset(2, {0, 1})})};
    auto const           r = check_topological_inverse_semigroup(ts);
    CHECK_FALSE(r.product_continuous);
    CHECK(r.product_point == std::pair<Elem, Elem>{1, 1});
    CHECK(r.product_escape == std::pair<Elem, Elem>{0, 1});
    CHECK(r.inversion_continuous);
  }
}

TEST_CASE("hyperspaces", "[topology]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const H = hyperspace(shared(FiniteTopology::discrete(n)), HyperKind::fell, HyperPoints::closed);
    CHECK(H.sets.size() == (1u << n));
    CHECK(H.topology.is_discrete());
  }
  auto const X = shared(FiniteTopology::sierpinski());
  auto const K = hyperspace(X, HyperKind::vietoris, HyperPoints::compact);
  CHECK(K.sets.size() == 3);
  CHECK(vietoris_basic(K, {Bitset::full(2)}) == Bitset::full(3));
  auto const CL = hyperspace(X, HyperKind::fell, HyperPoints::closed);
  CHECK(CL.sets == std::vector<Bitset>{Bitset(2), Bitset(2, {0}), Bitset(2, {0, 1})});
  for (auto const& U : opens_of(*X)) {
    for (auto const& V : opens_of(*X)) {
      CHECK(K.topology.is_open(vietoris_basic(K, {U, V})));
    }
  }
}

TEST_CASE("idempotents of Gamma and CL(X)", "[topology][propositions]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const r = idempotent_iso(shared(FiniteTopology::discrete(n)));
    CHECK(r.ok());
    CHECK(r.closed.sets.size() == (1u << n));
    auto const& S = r.gamma.semigroup();
    CHECK(r.phi[*r.closed.index_of(Bitset(n))] == *S.identity());
    CHECK(r.gamma.at(r.phi[*r.closed.index_of(Bitset::full(n))]) == PartialBijection(n));
  }
  // algebraic half holds beyond the Hausdorff case
  for (auto const& t : all_topologies(3)) {
    auto const r = idempotent_iso(shared(t));
    CHECK(r.bijective);
    CHECK(r.homomorphic);
  }
}

TEST_CASE("domain meets", "[topology][propositions]") {
  auto const  G = gamma(shared(FiniteTopology::discrete(3)));
  auto const& S = G.semigroup();
  auto        id = [&](std::initializer_list<std::size_t> V) {
    return G.elements->index_or_throw(PartialBijection::identity_on(Bitset(3, V)));
  };
  std::vector<Elem> eta{id({0, 1}), id({1, 2}), id({0, 1, 2})};
  CHECK(domain_meet(G, eta, Bitset(3, {0})) == eta[0]);
  CHECK(domain_meet(G, eta, Bitset(3, {0, 1})) == id({1}));
  std::vector<Elem> constant(3, id({2}));
  CHECK(domain_meet(G, constant, Bitset(3, {0, 1, 2})) == id({2}));
  CHECK_THROWS_AS(domain_meet(G, eta, Bitset(3)), ValidationError);

  std::mt19937 rng(5);
  auto const   E = S.idempotents();
  for (auto const& Z : all_topologies(3)) {
    std::vector<Elem> random_eta(3);
    for (auto& e : random_eta) {
      e = E[rng() % E.size()];
    }
    auto const r = check_domain_meet(G, shared(Z), random_eta);
    CHECK(r.families == 7);
    CHECK(r.mismatches == 0);
    CHECK(r.ok());
  }
}

TEST_CASE("induced partial actions", "[topology][propositions]") {
  auto const Z2 = group(FiniteGroup::cyclic(2));
  auto const Z4 = group(FiniteGroup::cyclic(4));

  GroupAction swap{Z2, 2, {0, 1, 1, 0}};
  auto const  whole = induced_partial_action(swap, shared(FiniteTopology::discrete(2)), Bitset::full(2));
  CHECK(whole.gamma.at(whole.theta(1)) == PartialBijection::from_pairs(2, {{0, 1}, {1, 0}}));
  auto const half = induced_partial_action(swap, shared(FiniteTopology::discrete(2)), Bitset(2, {0}));
  CHECK(half.gamma.at(half.theta(1)) == PartialBijection(1));
  CHECK(check_unital_premorphism(half.theta).ok());

  GroupAction rot{Z4, 4, {}};
  for (Elem g = 0; g < 4; ++g) {
    for (Elem x = 0; x < 4; ++x) {
      rot.act.push_back((g + x) % 4);
    }
  }
  auto const r = induced_partial_action(rot, shared(FiniteTopology::discrete(4)), Bitset(4, {0, 1}));
  CHECK(check_unital_premorphism(r.theta).ok());
  CHECK(r.gamma.at(r.theta(1)) == PartialBijection::from_pairs(2, {{0, 1}}));
  CHECK(r.gamma.at(r.theta(3)) == PartialBijection::from_pairs(2, {{1, 0}}));
  CHECK(r.gamma.at(r.theta(2)) == PartialBijection(2));

  // a rotation of a non-discrete circle is not a homeomorphism
  auto const chain = shared(FiniteTopology::from_neighbourhoods(
      {Bitset(4, {0}), Bitset(4, {0, 1}), Bitset(4, {0, 1, 2}), Bitset::full(4)}));
  CHECK_THROWS_AS(induced_partial_action(rot, chain, Bitset::full(4)), ValidationError);
  CHECK_THROWS_AS(induced_partial_action(swap, shared(FiniteTopology::indiscrete(2)), Bitset(2, {0})),
                  ValidationError);
  GroupAction broken{Z2, 2, {0, 1, 0, 0}};
  CHECK_THROWS_AS(induced_partial_action(broken, shared(FiniteTopology::discrete(2)), Bitset(2, {0})),
                  ValidationError);

  SECTION("every action of a small group on a 3-point space") {
    for (auto const& G : {Z2, group(FiniteGroup::cyclic(3)), group(FiniteGroup::symmetric(3))}) {
      for (auto const& a : all_actions(G, 3)) {
        for (auto const& t : all_topologies(3)) {
          auto const T = shared(t);
          bool       homeo = true;
          for (Elem g = 0; g < G->order(); ++g) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t x = 0; x < 3; ++x) {
              pairs.emplace_back(x, a(g, static_cast<Elem>(x)));
            }
            homeo = homeo && is_partial_homeomorphism(t, PartialBijection::from_pairs(3, pairs));
          }
          if (!homeo) {
            continue;
          }
          for (auto const& Y : t.opens()) {
            CHECK(check_unital_premorphism(induced_partial_action(a, T, Y).theta).ok());
          }
        }
      }
    }
  }
}

TEST_CASE("small semilattices", "[topology][propositions]") {
  SECTION("discrete semilattice") {
    auto const           E = symmetric_inverse_monoid(2);
    auto const           ts = idempotent_part({"I2", E.semigroup, FiniteTopology::discrete(E.size())});
    auto const           r  = small_semilattices_and_pi(ts);
    CHECK(r.hausdorff);
    CHECK(r.small);
    CHECK(r.pi_checked);
    CHECK(r.pi_continuous);
  }
  SECTION("E(Gamma(discrete 2)) with tau_hco") {
    auto const G = gamma(shared(FiniteTopology::discrete(2)));
    auto const r = small_semilattices_and_pi(idempotent_part(tau_hco(G)));
    CHECK(r.small);
    CHECK(r.pi_continuous);
  }
  SECTION("E of the expansion of Z3") {
    auto const br = birget_rhodes(group(FiniteGroup::cyclic(3)));
    auto const ts = idempotent_part({"BR", br.semigroup_ptr(), FiniteTopology::discrete(br.size())});
    auto const r  = small_semilattices_and_pi(ts);
    CHECK(r.small);
    CHECK(r.pi_continuous);
  }
  SECTION("a neighbourhood that is not a subsemilattice") {
    // {a, b, 0} with ab = 0 and U_a = U_b = {a, b}
    CayleyTable t(3, {0, 2, 2, 2, 1, 2, 2, 2, 2});
    auto const  S = std::make_shared<FiniteSemigroup const>(FiniteSemigroup::from_table(t, {"a", "b", "0"}, "V"));
    TopologizedSemigroup ts{"V", S,
                            FiniteTopology::from_neighbourhoods({Bitset(3, {0, 1}), Bitset(3, {0, 1}), Bitset(3, {2})})};
    auto const r = small_semilattices_and_pi(ts);
    CHECK_FALSE(r.small);
    CHECK(r.witness_point == Elem{0});
    CHECK_FALSE(r.hausdorff);
    CHECK_FALSE(r.pi_continuous);
  }
  SECTION("non-semilattices are rejected") {
    auto const Z2 = symmetric_inverse_monoid(1);
    auto const G  = std::make_shared<FiniteSemigroup const>(
        FiniteSemigroup::from_table(FiniteGroup::cyclic(2).table(), {"1", "a"}, "Z2"));
    CHECK_THROWS_AS(small_semilattices_and_pi({"Z2", G, FiniteTopology::discrete(2)}), ValidationError);
  }
}

TEST_CASE("translation premorphism", "[topology][propositions]") {
  for (auto const& G : {group(FiniteGroup::cyclic(3)), group(FiniteGroup::cyclic(4)),
                        group(FiniteGroup::from_descriptor("Z2xZ2")), group(FiniteGroup::cyclic(5))}) {
    auto const r = lambda_premorphism(G);
    INFO(G->name() << ": " << r.witness);
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(lambda_premorphism(group(FiniteGroup::cyclic(2))), SizeLimitError);
}

TEST_CASE("evaluation hypotheses and the coarsest topology", "[topology][propositions]") {
  auto const G = gamma(shared(FiniteTopology::discrete(2)));
  CHECK(evaluation_hypotheses(G, tau_co(G).topology).ok());
  CHECK(evaluation_hypotheses(G, FiniteTopology::discrete(G.size())).ok());
  auto const bad = evaluation_hypotheses(G, FiniteTopology::indiscrete(G.size()));
  CHECK_FALSE(bad.open);
  CHECK(bad.witness);

  // exactly 14 semigroup topologies on Γ(discrete 2), 4 of them meeting the hypotheses
  auto const cat = coarsest_topology_catalog(G);
  CHECK(cat.topologies.size() == 14);
  CHECK(cat.meeting_hypotheses() == 4);
  auto const co = tau_co(G).topology;
  for (std::size_t i = 0; i < cat.topologies.size(); ++i) {
    CHECK(check_topological_inverse_semigroup({"", G.elements->semigroup, cat.topologies[i]}).product_continuous);
    if (cat.hypotheses[i]) {
      CHECK(cat.topologies[i].finer_than(co));
    }
  }
  auto const G3  = gamma(shared(FiniteTopology::discrete(3)));
  auto const cat3 = coarsest_topology_catalog(G3);
  CHECK(cat3.topologies.size() == 39);
  CHECK(cat3.meeting_hypotheses() == 8);
}

TEST_CASE("semigroup topologies agree with a scan of all topologies", "[topology][propositions]") {
  std::vector<std::shared_ptr<FiniteSemigroup const>> carriers{
      symmetric_inverse_monoid(1).semigroup,
      birget_rhodes(group(FiniteGroup::cyclic(2))).semigroup_ptr(),
      std::make_shared<FiniteSemigroup const>(FiniteSemigroup::from_table(FiniteGroup::cyclic(3).table(), {}, "Z3")),
      std::make_shared<FiniteSemigroup const>(
          FiniteSemigroup::from_table(FiniteGroup::from_descriptor("Z2xZ2").table(), {}, "V4")),
  };
  for (auto const& S : carriers) {
    std::vector<FiniteTopology> scan;
    for (auto const& t : all_topologies(S->size())) {
      if (check_topological_inverse_semigroup({"", S, t}).product_continuous) {
        scan.push_back(t);
      }
    }
    auto       found = semigroup_topologies(*S);
    auto const key   = [](FiniteTopology const& t) { return t.neighbourhoods(); };
    std::vector<std::vector<Bitset>> a, b;
    std::transform(scan.begin(), scan.end(), std::back_inserter(a), key);
    std::transform(found.begin(), found.end(), std::back_inserter(b), key);
    std::sort(a.begin(), a.end());
    CHECK(a == b);
  }
  CHECK_THROWS_AS(semigroup_topologies(*symmetric_inverse_monoid(2).semigroup, 5), SizeLimitError);
}
