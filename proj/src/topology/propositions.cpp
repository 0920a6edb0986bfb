#include "brtk/topology/propositions.hpp"

#include <algorithm>
#include <set>

#include "brtk/algebra/inverse.hpp"
#include "brtk/correspondence/generators.hpp"
#include "brtk/error.hpp"

namespace brtk {

  namespace {

    Elem identity_index(Gamma const& G, Bitset const& V) {
      return G.elements->index_or_throw(PartialBijection::identity_on(V));
    }

    // E(Γ) with the τ_hco subspace topology; pos maps Γ indices into it.
    TopologizedSemigroup hco_idempotents(Gamma const& G, std::vector<Elem>& pos) {
      std::vector<Elem> emb;
      auto              E = idempotent_part(tau_hco(G), &emb);
      pos.assign(G.size(), static_cast<Elem>(-1));
      for (Elem i = 0; i < emb.size(); ++i) {
        pos[emb[i]] = i;
      }
      return E;
    }

  }  // namespace

  IdempotentIso idempotent_iso(std::shared_ptr<FiniteTopology const> t) {
    IdempotentIso r;
    r.closed = hyperspace(t, HyperKind::fell, HyperPoints::closed);
    r.gamma  = gamma(t);
    auto const&   S    = r.gamma.semigroup();
    auto const    m    = r.closed.sets.size();
    for (auto const& K : r.closed.sets) {
      r.phi.push_back(identity_index(r.gamma, K.complement()));
    }

    std::vector<Elem> sorted(r.phi);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Elem> E(S.idempotents().begin(), S.idempotents().end());
    std::sort(E.begin(), E.end());
    r.bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted == E;
    if (!r.bijective) {
      r.witness = "phi is not a bijection onto E(Gamma)";
      return r;
    }

    r.homomorphic = true;
    for (Elem k = 0; k < m && r.homomorphic; ++k) {
      for (Elem l = 0; l < m && r.homomorphic; ++l) {
        auto const u = r.closed.index_of(r.closed.sets[k] | r.closed.sets[l]);
        if (!u || r.phi[*u] != S.product(r.phi[k], r.phi[l])) {
          r.homomorphic = false;
          r.witness     = "phi(K u L) != phi(K)phi(L) at K = " + r.closed.sets[k].to_string()
                      + ", L = " + r.closed.sets[l].to_string();
        }
      }
    }

    std::vector<Elem> pos;
    auto const        hco = hco_idempotents(r.gamma, pos);
    std::vector<Elem> forward(m);
    std::vector<Elem> backward(m);
    for (Elem k = 0; k < m; ++k) {
      forward[k]              = pos[r.phi[k]];
      backward[pos[r.phi[k]]] = k;
    }
    auto const fc = is_continuous(forward, r.closed.topology, hco.topology);
    auto const bc = is_continuous(backward, hco.topology, r.closed.topology);
    r.continuous  = fc.continuous;
    r.open        = bc.continuous;
    if (!fc.continuous && r.witness.empty()) {
      r.witness = "phi not continuous at K = " + r.closed.sets[*fc.point].to_string();
    } else if (!bc.continuous && r.witness.empty()) {
      r.witness = "phi^-1 not continuous at " + S.label(r.phi[backward[*bc.point]]);
    }
    return r;
  }

  Elem domain_meet(Gamma const& G, std::span<Elem const> eta, Bitset const& A) {
    if (A.none()) {
      throw ValidationError("domain_meet needs a nonempty family");
    }
    auto psi = Bitset::full(G.space->size());
    A.for_each([&](std::size_t z) {
      auto const e = eta[z];
      if (!G.semigroup().is_idempotent(e)) {
        throw ValidationError("eta(" + std::to_string(z) + ") is not idempotent");
      }
      psi &= G.at(e).domain();
    });
    return identity_index(G, psi);
  }

  DomainMeetCheck check_domain_meet(Gamma const&                          G,
                                    std::shared_ptr<FiniteTopology const> Z,
                                    std::span<Elem const>                 eta) {
    auto const m = Z->size();
    if (eta.size() != m) {
      throw ValidationError("eta is not total on Z");
    }
    if (m > 12) {
      throw SizeLimitError("domain meet check over " + std::to_string(m) + " points", m);
    }
    DomainMeetCheck r;
    auto const&     S = G.semigroup();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      Bitset            A(m);
      std::vector<Elem> family;
      for (std::size_t z = 0; z < m; ++z) {
        if ((mask >> z) & 1u) {
          A.set(z);
          family.push_back(eta[z]);
        }
      }
      ++r.families;
      if (meet(S, family) != domain_meet(G, eta, A)) {
        ++r.mismatches;
        if (!r.witness) {
          r.witness = A;
        }
      }
    }

    std::vector<Elem> pos;
    auto const        E = hco_idempotents(G, pos);
    std::vector<Elem> eta_E;
    for (auto e : eta) {
      eta_E.push_back(pos[e]);
    }
    r.eta_continuous = is_continuous(eta_E, *Z, E.topology).continuous;

    auto const        K = hyperspace(Z, HyperKind::vietoris, HyperPoints::compact);
    std::vector<Elem> I;
    for (auto const& A : K.sets) {
      I.push_back(pos[domain_meet(G, eta, A)]);
    }
    auto const c = is_continuous(I, K.topology, E.topology);
    r.continuous = c.continuous;
    if (!c.continuous) {
      r.continuity_witness = K.sets[*c.point];
    }
    return r;
  }

  InducedAction induced_partial_action(GroupAction const&                    a,
                                       std::shared_ptr<FiniteTopology const> t,
                                       Bitset const&                         Y) {
    check_action(a);
    if (a.points != t->size() || Y.size() != t->size()) {
      throw ValidationError("action, space and Y have different point counts");
    }
    auto const& G = *a.group;
    for (Elem g = 0; g < G.order(); ++g) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t x = 0; x < a.points; ++x) {
        pairs.emplace_back(x, a(g, static_cast<Elem>(x)));
      }
      if (!is_partial_homeomorphism(*t, PartialBijection::from_pairs(a.points, pairs))) {
        throw ValidationError("group element " + G.label(g) + " does not act by a homeomorphism");
      }
    }
    if (!t->is_open(Y)) {
      throw ValidationError("Y = " + Y.to_string() + " is not open");
    }
    auto sub = std::make_shared<FiniteTopology const>(
        subspace(*t, Y).rename((t->name().empty() ? std::string("X") : t->name()) + "|" + Y.to_string()));
    auto Gm    = gamma(sub);
    auto theta = premorphism_from_maps(a.group, *Gm.elements, restrict_action(a, Y));
    return {std::move(Gm), std::move(theta), true};
  }

  SmallSemilattices small_semilattices_and_pi(TopologizedSemigroup const& E, std::size_t pi_bound) {
    auto const& S = *E.carrier;
    auto const  n = S.size();
    for (Elem x = 0; x < n; ++x) {
      if (S.product(x, x) != x) {
        throw ValidationError("'" + S.name() + "' is not a semilattice: " + S.label(x) + " is not idempotent");
      }
      for (Elem y = 0; y < n; ++y) {
        if (S.product(x, y) != S.product(y, x)) {
          throw ValidationError("'" + S.name() + "' is not a semilattice: " + S.label(x) + " and " + S.label(y)
                                + " do not commute");
        }
      }
    }
    SmallSemilattices r;
    r.hausdorff = separation_axioms(E.topology).t2;
    r.small     = true;
    for (Elem x = 0; x < n && r.small; ++x) {
      auto const& U = E.topology.neighbourhood(x);
      U.for_each([&](std::size_t a) {
        U.for_each([&](std::size_t b) {
          if (r.small && !U.test(S.product(static_cast<Elem>(a), static_cast<Elem>(b)))) {
            r.small         = false;
            r.witness_point = x;
          }
        });
      });
    }
    if (n > pi_bound) {
      r.skip_reason = "K(E) has 2^" + std::to_string(n) + " - 1 points";
      return r;
    }
    auto const        K = hyperspace(std::make_shared<FiniteTopology const>(E.topology), HyperKind::vietoris,
                              HyperPoints::compact);
    std::vector<Elem> pi;
    for (auto const& A : K.sets) {
      auto       members = A.members();
      Elem       p       = static_cast<Elem>(members.front());
      for (auto x : members) {
        p = S.product(p, static_cast<Elem>(x));
      }
      pi.push_back(p);
    }
    auto const c    = is_continuous(pi, K.topology, E.topology);
    r.pi_checked    = true;
    r.pi_continuous = c.continuous;
    if (!c.continuous) {
      r.pi_witness = K.sets[*c.point];
    }
    return r;
  }

  LambdaCheck lambda_premorphism(std::shared_ptr<FiniteGroup const> G) {
    auto const n = G->order();
    if (n < 3 || n > gamma_max_points + 1) {
      throw SizeLimitError("lambda premorphism needs 3 <= |G| <= " + std::to_string(gamma_max_points + 1), n);
    }
    auto const        one = G->identity();
    std::vector<Elem> point(n, static_cast<Elem>(-1));
    for (Elem g = 0, k = 0; g < n; ++g) {
      if (g != one) {
        point[g] = k++;
      }
    }
    auto X = std::make_shared<FiniteTopology const>(FiniteTopology::discrete(n - 1).rename(G->name() + "\\{1}"));

    LambdaCheck r;
    r.group = G;
    r.gamma = gamma(X);
    auto const& S   = r.gamma.semigroup();
    auto        fail = [&](std::string what) {
      if (r.witness.empty()) {
        r.witness = std::move(what);
      }
    };

    // λ_g on {x ≠ 1 : keep(x)}
    auto translate = [&](Elem g, auto keep) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (Elem x = 0; x < n; ++x) {
        if (x != one && keep(x)) {
          pairs.emplace_back(point[x], point[G->product(g, x)]);
        }
      }
      return r.gamma.elements->index_or_throw(PartialBijection::from_pairs(n - 1, pairs));
    };
    auto complement_id = [&](GroupSubset A) {
      Bitset V(n - 1);
      for (Elem x = 0; x < n; ++x) {
        if (x != one && !contains(A, x)) {
          V.set(point[x]);
        }
      }
      return identity_index(r.gamma, V);
    };

    std::vector<Elem> table;
    for (Elem g = 0; g < n; ++g) {
      table.push_back(translate(g, [&](Elem x) { return x != G->inverse(g); }));
    }
    r.l           = make_premorphism(G, r.gamma.elements->semigroup, std::move(table));
    r.premorphism = check_unital_premorphism(r.l).ok();
    if (!r.premorphism) {
      fail("l is not a unital premorphism");
    }
    r.l_one_identity = S.identity() == r.l(one);
    if (!r.l_one_identity) {
      fail("l(1) is not the identity");
    }
    r.range_idempotent = true;
    for (Elem g = 0; g < n; ++g) {
      if (S.product(r.l(g), S.inverse(r.l(g))) != complement_id(singleton(one) | singleton(g))) {
        r.range_idempotent = false;
        fail("l(g)l(g)^-1 != id on {1,g}^c at g = " + G->label(g));
      }
    }

    auto const br = birget_rhodes(G);
    std::vector<Elem> image;
    for (auto const& p : br.elements()) {
      image.push_back(translate(p.element, [&](Elem x) { return !contains(p.subset, G->product(p.element, x)); }));
    }
    r.Lambda       = SemigroupHomomorphism{br.semigroup_ptr(), r.gamma.elements->semigroup, std::move(image)};
    r.homomorphism = !homomorphism_failure(r.Lambda);
    if (!r.homomorphism) {
      fail("Lambda is not a homomorphism");
    }
    r.extends = true;
    for (Elem g = 0; g < n; ++g) {
      if (r.Lambda(br.index_or_throw(iota(*G, g))) != r.l(g)) {
        r.extends = false;
        fail("Lambda does not extend l at g = " + G->label(g));
      }
    }
    r.meets_complement = true;
    for (auto A : support(br)) {
      if (meet_of(r.l, A) != complement_id(A)) {
        r.meets_complement = false;
        fail("I_A != id on A^c at A = " + subset_string(A));
      }
    }
    r.agrees_with_star = theta_star(r.l, br).image == r.Lambda.image;
    if (!r.agrees_with_star) {
      fail("Lambda differs from theta*");
    }
    return r;
  }

  EvaluationHypotheses evaluation_hypotheses(Gamma const& G, FiniteTopology const& tau) {
    auto const& X = *G.space;
    if (tau.size() != G.size()) {
      throw ValidationError("topology and Gamma have different sizes");
    }
    EvaluationHypotheses r;
    r.open       = true;
    r.continuous = true;
    for (Elem f = 0; f < G.size(); ++f) {
      auto const& fm = G.at(f);
      for (std::size_t x = 0; x < X.size(); ++x) {
        auto const fx = fm(x);
        if (!fx) {
          continue;
        }
        auto const& target = X.neighbourhood(*fx);
        tau.neighbourhood(f).for_each([&](std::size_t g) {
          X.neighbourhood(x).for_each([&](std::size_t y) {
            auto const gy = G.at(static_cast<Elem>(g))(y);
            if (!gy) {
              if (r.open) {
                r.open    = false;
                r.witness = std::pair{f, x};
              }
            } else if (!target.test(*gy) && r.continuous) {
              r.continuous = false;
              if (!r.witness) {
                r.witness = std::pair{f, x};
              }
            }
          });
        });
      }
    }
    return r;
  }

  std::vector<FiniteTopology> semigroup_topologies(FiniteSemigroup const& S, std::size_t bound) {
    auto const n    = S.size();
    using Preorder  = std::vector<Bitset>;  // up-sets
    // Smallest compatible preorder containing up and every pair of extra.
    auto join = [&](Preorder up, Preorder const& extra) {
      std::vector<std::pair<Elem, Elem>> work;
      auto relate = [&](Elem a, Elem b) {
        if (!up[a].test(b)) {
          up[a].set(b);
          work.emplace_back(a, b);
        }
      };
      for (Elem a = 0; a < n; ++a) {
        (extra[a] - up[a]).for_each([&](std::size_t b) { relate(a, static_cast<Elem>(b)); });
      }
      while (!work.empty()) {
        auto const [a, b] = work.back();
        work.pop_back();
        for (Elem u = 0; u < n; ++u) {
          relate(S.product(u, a), S.product(u, b));
          relate(S.product(a, u), S.product(b, u));
        }
        for (Elem c = 0; c < n; ++c) {
          if (up[c].test(a) && !up[b].is_subset_of(up[c])) {
            (up[b] - up[c]).for_each([&](std::size_t d) { relate(c, static_cast<Elem>(d)); });
          }
        }
      }
      return up;
    };
    auto contains = [&](Preorder const& big, Preorder const& small) {
      for (Elem x = 0; x < n; ++x) {
        if (!small[x].is_subset_of(big[x])) {
          return false;
        }
      }
      return true;
    };

    Preorder equality(n, Bitset(n));
    for (Elem x = 0; x < n; ++x) {
      equality[x].set(x);
    }
    // Every compatible preorder is the join of the ones generated by its
    // single pairs, so joining those atoms reaches all of them.
    std::set<Preorder> atom_set;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (a != b) {
          Preorder pair = equality;
          pair[a].set(b);
          atom_set.insert(join(equality, pair));
        }
      }
    }
    std::vector<Preorder> const atoms(atom_set.begin(), atom_set.end());

    std::set<Preorder>    found{equality};
    std::vector<Preorder> frontier{equality};
    while (!frontier.empty()) {
      std::vector<Preorder> next;
      for (auto const& up : frontier) {
        for (auto const& atom : atoms) {
          if (contains(up, atom)) {
            continue;
          }
          auto bigger = join(up, atom);
          if (found.insert(bigger).second) {
            if (found.size() > bound) {
              throw SizeLimitError("more than " + std::to_string(bound) + " semigroup topologies on '" + S.name()
                                       + "'",
                                   found.size());
            }
            next.push_back(std::move(bigger));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<FiniteTopology> out;
    for (auto const& up : found) {
      out.push_back(FiniteTopology::from_neighbourhoods(up, "tau" + std::to_string(out.size())));
    }
    return out;
  }

  std::size_t CoarsestCatalog::meeting_hypotheses() const {
    return static_cast<std::size_t>(std::count(hypotheses.begin(), hypotheses.end(), true));
  }

  CoarsestCatalog coarsest_topology_catalog(Gamma const& G, std::size_t bound) {
    CoarsestCatalog cat;
    cat.topologies = semigroup_topologies(G.semigroup(), bound);
    for (auto const& tau : cat.topologies) {
      cat.hypotheses.push_back(evaluation_hypotheses(G, tau).ok());
    }
    return cat;
  }

}  // namespace brtk
