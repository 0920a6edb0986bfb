#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brtk/algebra/semigroup.hpp"

namespace brtk {

  // First (s, t) with phi(st) != phi(s) phi(t), scanning rows in order.
  std::optional<std::pair<Elem, Elem>> homomorphism_failure(FiniteSemigroup const& src,
                                                            FiniteSemigroup const& dst,
                                                            std::span<Elem const>  phi);

  struct HomSearchOptions {
    std::size_t node_budget = 2'000'000;
    std::size_t max_results = std::numeric_limits<std::size_t>::max();
  };

  struct HomSearchResult {
    std::vector<std::vector<Elem>> maps;
    bool                           complete = true;
    std::size_t                    nodes    = 0;
  };

  // Necessary condition on phi(s) = v; used to prune.
  using CandidateFilter = std::function<bool(Elem s, Elem v)>;

  // All homomorphisms src -> dst agreeing with `fixed`. Values forced by
  // products are propagated; branching follows `priority` first, then index
  // order. Hitting the node budget stops early with complete = false.
  HomSearchResult find_homomorphisms(FiniteSemigroup const&                   src,
                                     FiniteSemigroup const&                   dst,
                                     std::span<std::pair<Elem, Elem> const>   fixed,
                                     CandidateFilter const&                   filter   = {},
                                     HomSearchOptions const&                  opts     = {},
                                     std::span<Elem const>                    priority = {});

}  // namespace brtk
