#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brtk/algebra/table.hpp"
#include "brtk/bitset.hpp"

namespace brtk {

  // A finite semigroup given by its multiplication table. Associativity is
  // checked on construction (see CheckOptions). Regularity and the inverse
  // property are computed and exposed as flags; operations that only make
  // sense in an inverse semigroup throw NotInverseError otherwise.
  class FiniteSemigroup {
   public:
    static FiniteSemigroup from_table(CayleyTable              table,
                                      std::vector<std::string> labels = {},
                                      std::string              name   = "S",
                                      CheckOptions const&      opts   = {});

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _table.size();
    }

    Elem product(Elem a, Elem b) const noexcept {
      return _table(a, b);
    }

    CayleyTable const& table() const noexcept {
      return _table;
    }

    std::string const& label(Elem s) const {
      return _labels.at(s);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::optional<Elem> find_label(std::string const& label) const;

    bool is_regular() const noexcept {
      return _regular;
    }

    // Regular with unique inverses (equivalently, commuting idempotents).
    bool is_inverse() const noexcept {
      return _inverse_flag;
    }

    std::optional<Elem> identity() const noexcept {
      return _identity;
    }

    Elem identity_or_throw() const;

    // The unique s^-1; throws NotInverseError unless is_inverse().
    Elem inverse(Elem s) const;

    bool is_idempotent(Elem s) const noexcept {
      return _table(s, s) == s;
    }

    std::span<Elem const> idempotents() const noexcept {
      return _idempotents;
    }

    // Natural partial order, precomputed from s <= t iff s = s s^-1 t.
    bool leq(Elem s, Elem t) const;

    // {s : s <= t}
    Bitset const& down_set(Elem t) const;

   private:
    FiniteSemigroup() = default;

    std::string              _name;
    CayleyTable              _table;
    std::vector<std::string> _labels;
    bool                     _regular      = false;
    bool                     _inverse_flag = false;
    std::optional<Elem>      _identity;
    std::vector<Elem>        _inverse;
    std::vector<Elem>        _idempotents;
    std::vector<Bitset>      _below;
  };

  // Element counts behind an exhaustive axiom check.
  struct AxiomReport {
    bool                               associative = false;
    std::optional<std::array<Elem, 3>> associativity_witness;
    bool                               regular = false;
    // Elements with exactly one inverse / total.
    std::size_t         unique_inverse_count = 0;
    std::optional<Elem> inverse_witness;
    bool                idempotents_commute = false;
    std::optional<std::pair<Elem, Elem>> commute_witness;
    std::size_t                          triples_checked = 0;
    std::size_t                          pairs_checked   = 0;

    bool inverse_semigroup() const noexcept {
      return associative && regular && inverse_witness == std::nullopt && idempotents_commute;
    }
  };

  // Associativity, unique inverses and commuting idempotents, over 100% of the
  // triples and pairs regardless of size.
  AxiomReport check_inverse_semigroup_axioms(CayleyTable const& table);

}  // namespace brtk
