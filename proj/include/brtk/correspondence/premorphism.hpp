#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brtk/algebra/group.hpp"
#include "brtk/algebra/semigroup.hpp"

namespace brtk {

  // A map G -> S into an inverse monoid. Whether it is a unital premorphism
  // is checked separately.
  struct Premorphism {
    std::shared_ptr<FiniteGroup const>     source;
    std::shared_ptr<FiniteSemigroup const> target;
    std::vector<Elem>                      table;

    Elem operator()(Elem g) const {
      return table.at(g);
    }

    bool operator==(Premorphism const& other) const {
      return table == other.table && *source == *other.source && target->table() == other.target->table();
    }
  };

  // Validates sizes, and that the target is an inverse monoid.
  Premorphism make_premorphism(std::shared_ptr<FiniteGroup const>     source,
                               std::shared_ptr<FiniteSemigroup const> target,
                               std::vector<Elem>                      table);

  // "g0 -> l0, g1 -> l1, ..." using group and target labels.
  std::string describe(Premorphism const& theta);

  struct SemigroupHomomorphism {
    std::shared_ptr<FiniteSemigroup const> source;
    std::shared_ptr<FiniteSemigroup const> target;
    std::vector<Elem>                      image;

    Elem operator()(Elem s) const {
      return image.at(s);
    }

    bool operator==(SemigroupHomomorphism const& other) const {
      return image == other.image;
    }
  };

  std::optional<std::pair<Elem, Elem>> homomorphism_failure(SemigroupHomomorphism const& phi);

  struct PremorphismCheck {
    bool unital = false;
    // θ(g⁻¹)θ(g)θ(h) = θ(g⁻¹)θ(gh) for all g, h
    bool                                 axiom = false;
    std::optional<std::pair<Elem, Elem>> witness;
    // Consequences, checked independently: θ(g)θ(h)θ(h⁻¹) = θ(gh)θ(h⁻¹)
    // and θ(g⁻¹) = θ(g)⁻¹.
    bool                                 dual = false;
    std::optional<std::pair<Elem, Elem>> dual_witness;
    bool                                 inverse_compatible = false;
    std::optional<Elem>                  inverse_witness;

    bool ok() const noexcept {
      return unital && axiom;
    }
  };

  PremorphismCheck check_unital_premorphism(Premorphism const& theta);

  // Left action of a group on {0..n-1}: act[g * n + x] = g·x.
  struct GroupAction {
    std::shared_ptr<FiniteGroup const> group;
    std::size_t                        points = 0;
    std::vector<Elem>                  act;

    Elem operator()(Elem g, Elem x) const {
      return act[g * points + x];
    }
  };

  // Throws ValidationError if act is not a group action.
  void check_action(GroupAction const& a);

  // Every action of G on n points (homomorphisms G -> Sym(n)), n <= 5.
  std::vector<GroupAction> all_actions(std::shared_ptr<FiniteGroup const> G, std::size_t n);

}  // namespace brtk
