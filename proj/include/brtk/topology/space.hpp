#pragma once

// Finite topological spaces, stored by the minimal open neighbourhood U_x of
// each point. The opens are exactly the unions of the U_x.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brtk/algebra/table.hpp"
#include "brtk/bitset.hpp"

namespace brtk {

  class FiniteTopology {
   public:
    FiniteTopology() = default;

    // Requires x ∈ U_x and y ∈ U_x ⇒ U_y ⊆ U_x.
    static FiniteTopology from_neighbourhoods(std::vector<Bitset> U, std::string name = {});

    static FiniteTopology discrete(std::size_t n);
    static FiniteTopology indiscrete(std::size_t n);
    // {∅, {1}, {0,1}}
    static FiniteTopology sierpinski();

    std::size_t size() const noexcept {
      return _U.size();
    }

    std::string const& name() const noexcept {
      return _name;
    }

    FiniteTopology& rename(std::string name) {
      _name = std::move(name);
      return *this;
    }

    Bitset const& neighbourhood(std::size_t x) const {
      return _U.at(x);
    }

    std::vector<Bitset> const& neighbourhoods() const noexcept {
      return _U;
    }

    bool   is_open(Bitset const& A) const;
    bool   is_closed(Bitset const& A) const;
    Bitset interior(Bitset const& A) const;
    Bitset closure(Bitset const& A) const;

    // Every open set, ascending; throws SizeLimitError past bound.
    std::vector<Bitset> opens(std::size_t bound = 1u << 16) const;

    // Every open of other is open here.
    bool finer_than(FiniteTopology const& other) const;

    bool is_discrete() const;

    bool operator==(FiniteTopology const& other) const noexcept {
      return _U == other._U;
    }

   private:
    std::string         _name;
    std::vector<Bitset> _U;
  };

  // Smallest topology on {0..n-1} containing the subbasis.
  FiniteTopology generate_topology(std::size_t n, std::vector<Bitset> const& subbasis, std::string name = {});

  struct Separation {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
    // first pair of points where each axiom fails
    std::optional<std::pair<std::size_t, std::size_t>> t0_witness;
    std::optional<std::pair<std::size_t, std::size_t>> t1_witness;
    std::optional<std::pair<std::size_t, std::size_t>> t2_witness;
  };

  Separation separation_axioms(FiniteTopology const& t);

  struct Continuity {
    bool                       continuous = true;
    std::optional<std::size_t> point;
    // an open of the target whose preimage is not open
    std::optional<Bitset> witness_open;
  };

  // f total from X to Y.
  Continuity is_continuous(std::span<Elem const> f, FiniteTopology const& X, FiniteTopology const& Y);

  // Points (x, y) ↦ x * |b| + y.
  FiniteTopology product(FiniteTopology const& a, FiniteTopology const& b);

  // Y relabelled 0..|Y|-1 in increasing order.
  FiniteTopology subspace(FiniteTopology const& t, Bitset const& Y);

  // Every topology on n <= 4 labelled points (1, 4, 29, 355).
  std::vector<FiniteTopology> all_topologies(std::size_t n);

  // One representative per homeomorphism class, n <= 4.
  std::vector<FiniteTopology> topology_types(std::size_t n);

}  // namespace brtk
