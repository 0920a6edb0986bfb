#pragma once

#include <span>
#include <string>

#include "brtk/algebra/semigroup.hpp"

namespace brtk {

  // Nodes are elements; an edge x -> a·x labelled a for every a other than
  // the identity.
  std::string cayley_dot(FiniteSemigroup const& S);

  // Covering pairs of the natural order restricted to nodes (all elements
  // when empty), drawn upwards. Throws NotInverseError for non-inverse S.
  std::string hasse_dot(FiniteSemigroup const& S, std::span<Elem const> nodes = {});

}  // namespace brtk
