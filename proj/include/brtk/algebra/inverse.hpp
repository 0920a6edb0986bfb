#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brtk/algebra/concrete.hpp"
#include "brtk/algebra/partial_bijection.hpp"
#include "brtk/algebra/semigroup.hpp"

namespace brtk {

  using PartialBijectionSemigroup = ConcreteSemigroup<PartialBijection>;

  // All of I(X) for |X| = n <= max_n, ordered by rank, then domain, then
  // image sequence. Index 0 is the empty map.
  PartialBijectionSemigroup symmetric_inverse_monoid(std::size_t n, std::size_t max_n = 5);

  // Tabulates a set of partial bijections closed under composition.
  PartialBijectionSemigroup partial_bijection_semigroup(std::vector<PartialBijection> elements,
                                                        std::string                   name);

  // Closure of generators under composition and inversion inside I(X).
  PartialBijectionSemigroup partial_bijection_closure(std::vector<PartialBijection> const& generators,
                                                      std::string                          name,
                                                      std::size_t                          bound = 4096);

  std::vector<Elem> idempotents(FiniteSemigroup const& S);

  // s <= t straight from the definition: s = e t for some idempotent e.
  bool natural_leq(FiniteSemigroup const& S, Elem s, Elem t);

  // s <= t tested as s = s s^-1 t.
  bool natural_leq_via_inverse(FiniteSemigroup const& S, Elem s, Elem t);

  struct NaturalOrderRelation {
    std::shared_ptr<FiniteSemigroup const> carrier;
    std::vector<std::pair<Elem, Elem>>     pairs;  // (s, t) with s <= t, sorted

    bool contains(Elem s, Elem t) const;
  };

  NaturalOrderRelation natural_order(std::shared_ptr<FiniteSemigroup const> S);

  // Greatest lower bound of an arbitrary nonempty family under the natural
  // order, found by scanning all of S. Absent when no glb exists.
  std::optional<Elem> greatest_lower_bound(FiniteSemigroup const& S, std::span<Elem const> family);

  // Meet of a nonempty family of idempotents. Throws ValidationError on a
  // non-idempotent member.
  std::optional<Elem> meet(FiniteSemigroup const& S, std::span<Elem const> idempotent_family);

  // Vagner-Preston representation s -> (x -> s x on s^-1 s S), as partial
  // bijections of the index set of S. Verified injective and
  // product/inverse-preserving; throws otherwise.
  std::vector<PartialBijection> wagner_preston(FiniteSemigroup const& S);

}  // namespace brtk
