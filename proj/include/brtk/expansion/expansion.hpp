#pragma once

// Pairs (A, g) with A a nonempty subset of a finite group G, multiplied as
// (A, g)(B, h) = (A ∪ gB, gh). The Birget-Rhodes expansion and the full
// semidirect product P*(G) ⋊ G are the two ends of the range of
// intermediate extensions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brtk/algebra/group.hpp"
#include "brtk/algebra/semigroup.hpp"

namespace brtk {

  // Subset of a group of order <= 64, bit i = element i.
  using GroupSubset = std::uint64_t;

  inline constexpr std::size_t max_expansion_group_order = 64;

  GroupSubset singleton(Elem g) noexcept;
  bool        contains(GroupSubset A, Elem g) noexcept;
  // gA = {g a : a in A}
  GroupSubset translate(FiniteGroup const& G, Elem g, GroupSubset A);
  // "{0,2}"
  std::string subset_string(GroupSubset A);

  struct ExpansionPair {
    GroupSubset subset  = 0;
    Elem        element = 0;

    bool operator==(ExpansionPair const&) const = default;
    // by group element, then subset
    std::strong_ordering operator<=>(ExpansionPair const& other) const noexcept {
      if (auto c = element <=> other.element; c != 0) {
        return c;
      }
      return subset <=> other.subset;
    }
  };

  // "({0,1}, 1)" with sorted indices.
  std::string to_string(ExpansionPair const& p);
  // Same without the space, usable as a whitespace-free label.
  std::string label(ExpansionPair const& p);

  // Throws ValidationError if p does not live over G (empty subset, index
  // out of range).
  void check_pair(FiniteGroup const& G, ExpansionPair const& p);

  ExpansionPair pair_product(FiniteGroup const& G, ExpansionPair const& p, ExpansionPair const& q);
  // (g^-1 A, g^-1)
  ExpansionPair pair_inverse(FiniteGroup const& G, ExpansionPair const& p);
  // g = h and B ⊆ A
  bool pair_leq(ExpansionPair const& p, ExpansionPair const& q) noexcept;

  // ({1, g}, g)
  ExpansionPair iota(FiniteGroup const& G, Elem g);

  // A set T of pairs over G closed under the pair product. The table (and so
  // the abstract semigroup) is built when |T| <= table_bound.
  class IntermediateExtension {
   public:
    // Validates closure under the product; needs |T| <= table_bound.
    static IntermediateExtension from_elements(std::shared_ptr<FiniteGroup const> G,
                                               std::vector<ExpansionPair>         elements,
                                               std::string                        name,
                                               std::size_t table_bound = 4096);

    std::string const& name() const noexcept {
      return _name;
    }

    FiniteGroup const& group() const noexcept {
      return *_group;
    }

    std::shared_ptr<FiniteGroup const> const& group_ptr() const noexcept {
      return _group;
    }

    std::vector<ExpansionPair> const& elements() const noexcept {
      return _elements;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    ExpansionPair const& at(Elem i) const {
      return _elements.at(i);
    }

    std::optional<Elem> index_of(ExpansionPair const& p) const;
    Elem                index_or_throw(ExpansionPair const& p) const;

    bool contains(ExpansionPair const& p) const {
      return index_of(p).has_value();
    }

    // Closed under the pair inverse.
    bool is_inverse() const noexcept {
      return _inverse;
    }

    // Contains every ({1,g}, g) (hence all of G~R) and is a monoid with
    // identity ({1}, 1); equivalently every subset contains 1.
    bool is_intermediate() const noexcept {
      return _intermediate;
    }

    bool has_table() const noexcept {
      return _table != nullptr;
    }

    FiniteSemigroup const&                        semigroup() const;
    std::shared_ptr<FiniteSemigroup const> const& semigroup_ptr() const;

    bool operator==(IntermediateExtension const& other) const {
      return *_group == *other._group && _elements == other._elements;
    }

   private:
    friend IntermediateExtension birget_rhodes(std::shared_ptr<FiniteGroup const>, std::size_t);
    friend IntermediateExtension semidirect_product(std::shared_ptr<FiniteGroup const>, std::size_t);

    IntermediateExtension() = default;
    static IntermediateExtension build(std::shared_ptr<FiniteGroup const> G,
                                       std::vector<ExpansionPair>         elements,
                                       std::string                        name,
                                       std::size_t                        table_bound,
                                       bool                               check_closed);

    std::string                            _name;
    std::shared_ptr<FiniteGroup const>     _group;
    std::vector<ExpansionPair>             _elements;  // sorted
    std::shared_ptr<FiniteSemigroup const> _table;
    bool                                   _inverse      = false;
    bool                                   _intermediate = false;
  };

  inline constexpr std::size_t birget_rhodes_max_order = 12;
  inline constexpr std::size_t semidirect_max_order    = 8;

  // G~R = {(A, g) : {1, g} ⊆ A}; 2^(n-1) + (n-1) 2^(n-2) elements.
  IntermediateExtension birget_rhodes(std::shared_ptr<FiniteGroup const> G,
                                      std::size_t max_order = birget_rhodes_max_order);

  // P*(G) ⋊ G, all (A, g) with A nonempty; (2^n - 1) n elements.
  IntermediateExtension semidirect_product(std::shared_ptr<FiniteGroup const> G,
                                           std::size_t max_order = semidirect_max_order);

  // Supp(T): the distinct first coordinates, ascending.
  std::vector<GroupSubset> support(IntermediateExtension const& T);

  struct EnumerationOptions {
    bool inverse_only = true;
    // Keep only monoids with identity ({1}, 1). Switching this off also
    // admits plain subsemigroups between G~R and P*(G) ⋊ G.
    bool          require_monoid       = true;
    std::size_t   exhaustive_max_order = 3;
    std::size_t   samples              = 64;
    std::uint64_t seed                 = 1;
  };

  struct ExtensionCatalog {
    std::vector<IntermediateExtension> extensions;
    bool                               exhaustive = false;
    std::uint64_t                      seed       = 0;
    std::size_t                        candidates = 0;
  };

  // Every closed T with G~R ⊆ T ⊆ P*(G) ⋊ G (exhaustive up to
  // exhaustive_max_order, seeded random closures above it).
  ExtensionCatalog enumerate_intermediate_extensions(std::shared_ptr<FiniteGroup const> G,
                                                     EnumerationOptions const&          opts = {});

}  // namespace brtk

template <>
struct std::hash<brtk::ExpansionPair> {
  std::size_t operator()(brtk::ExpansionPair const& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.subset * 0x9E3779B97F4A7C15ull + p.element);
  }
};
