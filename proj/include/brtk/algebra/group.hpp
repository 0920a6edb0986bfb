#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "brtk/algebra/table.hpp"

namespace brtk {

  // A finite group on indices 0..order-1. Validated on construction: the table
  // is associative (exhaustively up to order 64), has a two-sided identity and
  // every element has a two-sided inverse.
  class FiniteGroup {
   public:
    static FiniteGroup cyclic(std::size_t n);
    // Symmetries of the n-gon; order 2n. Elements r^i are 0..n-1, s r^i are
    // n..2n-1.
    static FiniteGroup dihedral(std::size_t n);
    // Permutations of n <= 4 letters in lexicographic order of one-line
    // notation; index 0 is the identity.
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);
    static FiniteGroup from_table(std::string               name,
                                  CayleyTable               table,
                                  std::vector<std::string>  labels = {});

    // "Z4", "C4", "cyclic 4", "D3", "dihedral 3", "S3", "symmetric 3",
    // "Z2xZ2", "product Z2 Z2", "trivial".
    static FiniteGroup from_descriptor(std::string_view descriptor);

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t order() const noexcept {
      return _table.size();
    }

    Elem identity() const noexcept {
      return _identity;
    }

    Elem product(Elem a, Elem b) const noexcept {
      return _table(a, b);
    }

    Elem inverse(Elem a) const noexcept {
      return _inverse[a];
    }

    // Smallest k >= 1 with a^k = 1.
    std::size_t element_order(Elem a) const noexcept;

    CayleyTable const& table() const noexcept {
      return _table;
    }

    std::string const& label(Elem a) const {
      return _labels.at(a);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    bool operator==(FiniteGroup const& other) const noexcept {
      return _table == other._table;
    }

   private:
    FiniteGroup() = default;

    std::string              _name;
    CayleyTable              _table;
    Elem                     _identity = 0;
    std::vector<Elem>        _inverse;
    std::vector<std::string> _labels;
  };

}  // namespace brtk
