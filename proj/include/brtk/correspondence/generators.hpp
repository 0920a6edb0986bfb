#pragma once

// Sources of premorphisms for the sweeps: exhaustive filtering, restrictions
// of global actions, and a few hand-built instances.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "brtk/algebra/inverse.hpp"
#include "brtk/bitset.hpp"
#include "brtk/correspondence/premorphism.hpp"

namespace brtk {

  struct PremorphismSearch {
    std::vector<Premorphism> premorphisms;
    bool                     complete   = true;
    std::size_t              candidates = 0;
  };

  // All unital premorphisms G -> S, by backtracking over G in index order.
  PremorphismSearch enumerate_premorphisms(std::shared_ptr<FiniteGroup const>     G,
                                           std::shared_ptr<FiniteSemigroup const> S,
                                           std::size_t                            budget = 5'000'000);

  // The restriction of a global action to Y: g ↦ (y ↦ g·y) on
  // {y ∈ Y : g·y ∈ Y}, as partial bijections of Y relabelled 0..|Y|-1.
  std::vector<PartialBijection> restrict_action(GroupAction const& a, Bitset const& Y);

  // Looks the maps up in the concrete semigroup.
  Premorphism premorphism_from_maps(std::shared_ptr<FiniteGroup const>     G,
                                    PartialBijectionSemigroup const&       target,
                                    std::vector<PartialBijection> const&   maps);

  struct CatalogEntry {
    std::string name;
    Premorphism theta;
  };

  // Restrictions of every action of Z2, Z3, Z4, Z2xZ2 on up to four points to
  // every nonempty Y with |Y| <= max_points, deduplicated, plus hand-built
  // maps into I(n). Targets are symmetric inverse monoids.
  std::vector<CatalogEntry> premorphism_catalog(std::size_t max_group_order = 4, std::size_t max_points = 3);

  // Shared I(n), built once per n.
  std::shared_ptr<PartialBijectionSemigroup const> shared_symmetric_inverse_monoid(std::size_t n);

}  // namespace brtk
