#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brtk/bitset.hpp"

namespace brtk {

  // An injective partial map of {0, ..., ground-1} to itself. The empty map is
  // a valid value.
  class PartialBijection;
  PartialBijection compose(PartialBijection const& f, PartialBijection const& g);
  PartialBijection invert(PartialBijection const& f);

  class PartialBijection {
   public:
    PartialBijection() = default;
    explicit PartialBijection(std::size_t ground) : _map(ground, undefined) {}

    static PartialBijection identity(std::size_t ground);
    static PartialBijection identity_on(Bitset const& domain);
    // Throws ValidationError if the pairs are out of range or not injective.
    static PartialBijection from_pairs(std::size_t                                       ground,
                                       std::vector<std::pair<std::size_t, std::size_t>> const& pairs);

    std::size_t ground_size() const noexcept {
      return _map.size();
    }

    bool defined_at(std::size_t x) const noexcept {
      return _map[x] != undefined;
    }

    std::optional<std::size_t> operator()(std::size_t x) const noexcept {
      if (_map[x] == undefined) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(_map[x]);
    }

    Bitset      domain() const;
    Bitset      image() const;
    std::size_t rank() const noexcept;

    // f(A) for the part of A inside the domain.
    Bitset apply(Bitset const& subset) const;

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    // Graph inclusion, which is the natural order of I(X).
    bool is_restriction_of(PartialBijection const& other) const;

    // "{0->1,2->0}"; "{}" for the empty map.
    std::string to_string() const;

    bool                 operator==(PartialBijection const&) const = default;
    std::strong_ordering operator<=>(PartialBijection const&) const = default;

    std::size_t hash() const noexcept;

   private:
    friend PartialBijection compose(PartialBijection const&, PartialBijection const&);
    friend PartialBijection invert(PartialBijection const&);

    static constexpr std::int32_t undefined = -1;
    std::vector<std::int32_t>     _map;
  };

  // x -> f(g(x)), i.e. dom(fg) = g^-1(im g ∩ dom f).
  PartialBijection compose(PartialBijection const& f, PartialBijection const& g);
  PartialBijection invert(PartialBijection const& f);
  PartialBijection restrict_to(PartialBijection const& f, Bitset const& domain);

}  // namespace brtk

template <>
struct std::hash<brtk::PartialBijection> {
  std::size_t operator()(brtk::PartialBijection const& f) const noexcept {
    return f.hash();
  }
};
