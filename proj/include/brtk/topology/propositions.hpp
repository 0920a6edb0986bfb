#pragma once

// Checks of the finite-scale content of the topological results: the
// idempotent isomorphism with CL(X), the domain meet map, induced partial
// actions, small semilattices, the translation premorphism, and the
// coarsest-topology property of τ_co.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brtk/correspondence/exel.hpp"
#include "brtk/correspondence/premorphism.hpp"
#include "brtk/topology/gamma.hpp"

namespace brtk {

  struct IdempotentIso {
    Hyperspace        closed;  // Fell CL(X)
    Gamma             gamma;
    std::vector<Elem> phi;  // CL index -> Γ index of id_{X∖K}

    bool bijective   = false;
    bool homomorphic = false;  // φ(K ∪ L) = φ(K)φ(L)
    bool continuous  = false;  // Fell -> τ_hco on E(Γ)
    bool open        = false;  // continuous inverse
    std::string witness;

    bool ok() const noexcept {
      return bijective && homomorphic && continuous && open;
    }
  };

  IdempotentIso idempotent_iso(std::shared_ptr<FiniteTopology const> t);

  // id on ∩_{z ∈ A} dom η(z). eta maps Z into idempotents of G; A nonempty.
  Elem domain_meet(Gamma const& G, std::span<Elem const> eta, Bitset const& A);

  struct DomainMeetCheck {
    std::size_t families   = 0;
    std::size_t mismatches = 0;
    std::optional<Bitset> witness;
    // 𝓘 on Vietoris K(Z) into (E(Γ), τ_hco); only meaningful when η is
    // continuous.
    bool eta_continuous = false;
    bool continuous     = false;
    std::optional<Bitset> continuity_witness;

    bool ok() const noexcept {
      return mismatches == 0 && (!eta_continuous || continuous);
    }
  };

  // Compares domain_meet with the greatest lower bound in Γ on every nonempty
  // A ⊆ Z, and checks 𝓘 for continuity.
  DomainMeetCheck check_domain_meet(Gamma const&                          G,
                                    std::shared_ptr<FiniteTopology const> Z,
                                    std::span<Elem const>                 eta);

  struct InducedAction {
    Gamma       gamma;  // Γ of the subspace Y
    Premorphism theta;
    bool        continuous = true;  // G discrete, so always
  };

  // a must act by homeomorphisms of t and Y must be open; throws
  // ValidationError otherwise.
  InducedAction induced_partial_action(GroupAction const&                    a,
                                       std::shared_ptr<FiniteTopology const> t,
                                       Bitset const&                         Y);

  struct SmallSemilattices {
    bool                       hausdorff       = false;
    bool                       small           = false;
    std::optional<Elem>        witness_point;  // U_x not closed under the product
    bool                       pi_checked      = false;
    bool                       pi_continuous   = false;
    std::optional<Bitset>      pi_witness;     // a finite subset where π fails
    std::string                skip_reason;
  };

  // Throws ValidationError unless the carrier is commutative and idempotent.
  SmallSemilattices small_semilattices_and_pi(TopologizedSemigroup const& E, std::size_t pi_bound = 10);

  struct LambdaCheck {
    std::shared_ptr<FiniteGroup const> group;
    Gamma                              gamma;  // Γ(G∖{1}), points relabelled ascending
    Premorphism                        l;
    SemigroupHomomorphism              Lambda;  // on birget_rhodes(G)
    bool premorphism      = false;
    bool l_one_identity   = false;
    bool range_idempotent = false;  // 𝔩(g)𝔩(g)⁻¹ = id_{{1,g}^c}
    bool homomorphism     = false;
    bool extends          = false;
    bool meets_complement = false;  // I_A = id_{A^c}
    bool agrees_with_star = false;
    std::string witness;

    bool ok() const noexcept {
      return premorphism && l_one_identity && range_idempotent && homomorphism && extends && meets_complement
          && agrees_with_star;
    }
  };

  // 3 <= |G| <= 5.
  LambdaCheck lambda_premorphism(std::shared_ptr<FiniteGroup const> G);

  struct EvaluationHypotheses {
    bool open       = false;  // Γ∗X open in Γ x X
    bool continuous = false;  // ev: Γ∗X -> X
    std::optional<std::pair<Elem, std::size_t>> witness;  // (f, x)

    bool ok() const noexcept {
      return open && continuous;
    }
  };

  EvaluationHypotheses evaluation_hypotheses(Gamma const& G, FiniteTopology const& tau);

  // Every topology on the carrier making the product continuous, i.e. every
  // preorder with a ≤ b, c ≤ d ⇒ ac ≤ bd, taken as specialisation order.
  // Found by closing single pairs on top of the ones already found, so the
  // search is complete; ascending by neighbourhoods. Throws SizeLimitError
  // past bound.
  std::vector<FiniteTopology> semigroup_topologies(FiniteSemigroup const& S, std::size_t bound = 4096);

  struct CoarsestCatalog {
    std::vector<FiniteTopology> topologies;  // all semigroup topologies on Γ
    std::vector<bool>           hypotheses;  // evaluation_hypotheses(...).ok()

    std::size_t meeting_hypotheses() const;
  };

  CoarsestCatalog coarsest_topology_catalog(Gamma const& G, std::size_t bound = 4096);

}  // namespace brtk
