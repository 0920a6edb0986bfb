#pragma once

// Exel's correspondence between unital premorphisms G -> S and semigroup
// homomorphisms G~R -> S, and its extension to intermediate extensions
// through the meet map I_A.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brtk/algebra/homomorphism.hpp"
#include "brtk/correspondence/premorphism.hpp"
#include "brtk/expansion/expansion.hpp"

namespace brtk {

  // θ~(A, g) = ∏_{a ∈ A∖{1,g}} θ(a)θ(a)⁻¹ · θ(g), checked to be a
  // homomorphism. br must be birget_rhodes of θ's source.
  SemigroupHomomorphism tilde_theta(Premorphism const& theta, IntermediateExtension const& br);

  // ρ^(g) = ρ({1,g}, g), checked to be a unital premorphism.
  Premorphism hat_rho(SemigroupHomomorphism const& rho, IntermediateExtension const& br);

  // Meets I_A of {θ(a)θ(a)⁻¹ : a ∈ A} in E(S), one per member of the family.
  struct MeetCertificate {
    std::vector<GroupSubset>         family;  // ascending
    std::vector<std::optional<Elem>> meets;

    bool                       complete() const noexcept;
    std::optional<GroupSubset> first_missing() const noexcept;
    // Throws ValidationError if A is not in the family.
    std::optional<Elem> at(GroupSubset A) const;
  };

  // I_A by greatest-lower-bound search in the natural order.
  std::optional<Elem> meet_of(Premorphism const& theta, GroupSubset A);

  MeetCertificate meet_map(Premorphism const& theta, std::vector<GroupSubset> family);

  // (A, g) ↦ I_A θ(g) without checking the result. Throws ValidationError
  // naming A when a meet is missing.
  std::vector<Elem> theta_star_values(Premorphism const&           theta,
                                      IntermediateExtension const& T,
                                      MeetCertificate const&       certificate);

  // θ* on T, checked to be a homomorphism extending θ.
  SemigroupHomomorphism theta_star(Premorphism const& theta, IntermediateExtension const& T);
  SemigroupHomomorphism theta_star(Premorphism const&           theta,
                                   IntermediateExtension const& T,
                                   MeetCertificate const&       certificate);

  struct ExtensionSearch {
    std::vector<SemigroupHomomorphism> extensions;
    bool                               complete = true;
    std::size_t                        nodes    = 0;
  };

  // Every homomorphism κ: T -> S with κ({1,g}, g) = θ(g).
  ExtensionSearch enumerate_extensions(Premorphism const&           theta,
                                       IntermediateExtension const& T,
                                       std::size_t                  node_budget = 2'000'000);

  // κ(t) ≤ λ(t) for every t; the first t where it fails.
  std::optional<Elem> first_not_below(SemigroupHomomorphism const& kappa, SemigroupHomomorphism const& lambda);

  struct MeetPreservation {
    bool              preserving = true;
    std::vector<Elem> witness;  // family whose meet is not preserved
    std::optional<Elem> source_meet;
    std::optional<Elem> image_meet;
    std::size_t         families_checked = 0;
  };

  struct MeetScanOptions {
    // all subsets of the source when it is this small, else all subsets of
    // E(source) up to idempotent_bound idempotents
    std::size_t   full_bound       = 12;
    std::size_t   idempotent_bound = 12;
    std::size_t   samples          = 2000;
    std::uint64_t seed             = 17;
  };

  MeetPreservation is_meet_preserving(SemigroupHomomorphism const& phi, MeetScanOptions const& opts = {});

  struct LemmaItem {
    std::string                name;
    std::size_t                checked = 0;
    std::vector<std::string>   failures;
  };

  struct LemmaReport {
    std::vector<LemmaItem> items;

    bool ok() const noexcept;
  };

  // The three items of the meet-map lemma over a union-closed family:
  // (i) I_{A∪B} = I_A I_B and I_A I_{g} = I_A for g ∈ A;
  // (ii) for subfamilies with union in the family, ⋀ I_{A_i} = I_{∪A_i};
  // (iii) θ(g) I_B = I_{gB} θ(g).
  LemmaReport lemma_4_7_checks(Premorphism const& theta, std::vector<GroupSubset> const& family);

}  // namespace brtk
