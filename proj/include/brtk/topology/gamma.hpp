#pragma once

// Γ(X), the inverse monoid of partial homeomorphisms between open subsets of
// a finite space, with the compact-open topology and its two enlargements,
// and the Fell/Vietoris hyperspaces.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brtk/algebra/inverse.hpp"
#include "brtk/topology/space.hpp"

namespace brtk {

  // dom f and im f open and f(U_x) = U_f(x) for x in dom f.
  bool is_partial_homeomorphism(FiniteTopology const& t, PartialBijection const& f);

  struct Gamma {
    std::shared_ptr<FiniteTopology const>            space;
    std::shared_ptr<PartialBijectionSemigroup const> elements;

    std::size_t size() const noexcept {
      return elements->size();
    }

    FiniteSemigroup const& semigroup() const {
      return *elements->semigroup;
    }

    PartialBijection const& at(Elem i) const {
      return elements->at(i);
    }
  };

  inline constexpr std::size_t gamma_max_points = 4;

  Gamma gamma(std::shared_ptr<FiniteTopology const> t, std::size_t max_points = gamma_max_points);

  struct TopologizedSemigroup {
    std::string                            name;
    std::shared_ptr<FiniteSemigroup const> carrier;
    FiniteTopology                         topology;
  };

  // ⟨K;V⟩ = {f : K ⊆ dom f, f(K) ⊆ V} over all K ⊆ X and V open.
  Bitset               compact_open_set(Gamma const& G, Bitset const& K, Bitset const& V);
  TopologizedSemigroup tau_co(Gamma const& G);
  // adds (⟨K;V⟩)⁻¹ = {f : f⁻¹ ∈ ⟨K;V⟩}
  TopologizedSemigroup tau_ico(Gamma const& G);
  // adds D⁻¹(U) and I⁻¹(U) for Fell subbasic U, D(f) = X∖dom f, I(f) = X∖im f
  TopologizedSemigroup tau_hco(Gamma const& G);
  // v(x,y) = {f : f(x) = y}, w1(x) = {f : x ∉ dom f}, w2(x) = {f : x ∉ im f}
  TopologizedSemigroup tau_point_sets(Gamma const& G);

  enum class HyperKind { fell, vietoris };
  enum class HyperPoints { closed, compact };  // CL(X) with ∅, or K(X) without

  struct Hyperspace {
    std::shared_ptr<FiniteTopology const> base;
    HyperKind                             kind   = HyperKind::fell;
    HyperPoints                           points = HyperPoints::closed;
    std::vector<Bitset>                   sets;  // ascending
    FiniteTopology                        topology;

    std::optional<Elem> index_of(Bitset const& A) const;
  };

  // Fell: V⁻ (V open) and W⁺ (W open; every complement is compact here).
  // Vietoris: V⁺ and V⁻ for V open.
  Hyperspace hyperspace(std::shared_ptr<FiniteTopology const> t, HyperKind kind, HyperPoints points);

  // N(U_1..U_n) = {A : A ⊆ ∪U_i, A ∩ U_i ≠ ∅ for all i}
  Bitset vietoris_basic(Hyperspace const& H, std::vector<Bitset> const& Us);

  struct TopologicalCheck {
    bool product_continuous   = true;
    bool inversion_continuous = true;
    // (s, t) with s' t' ∉ U_st for some s' ∈ U_s, t' ∈ U_t; and that (s', t')
    std::optional<std::pair<Elem, Elem>> product_point;
    std::optional<std::pair<Elem, Elem>> product_escape;
    std::optional<Elem>                  inversion_point;

    bool ok() const noexcept {
      return product_continuous && inversion_continuous;
    }
  };

  // Continuity of the product on carrier x carrier (product topology) and of
  // inversion when the carrier is inverse.
  TopologicalCheck check_topological_inverse_semigroup(TopologizedSemigroup const& ts);

  struct OrderClosure {
    bool                                 t2           = false;
    bool                                 order_closed = false;
    std::optional<std::pair<Elem, Elem>> t2_witness;
    // (s, t) with s ≰ t every neighbourhood of which meets the order
    std::optional<std::pair<Elem, Elem>> order_witness;

    bool agree() const noexcept {
      return t2 == order_closed;
    }
  };

  OrderClosure order_closed_iff_T2(TopologizedSemigroup const& ts);

  // Subsemigroup on E(S) with the subspace topology; index i of the result
  // is E[i] of the carrier.
  TopologizedSemigroup idempotent_part(TopologizedSemigroup const& ts, std::vector<Elem>* embedding = nullptr);

}  // namespace brtk
