#include "brtk/algebra/partial_bijection.hpp"

#include "brtk/error.hpp"

namespace brtk {

  PartialBijection PartialBijection::identity(std::size_t ground) {
    PartialBijection f(ground);
    for (std::size_t x = 0; x < ground; ++x) {
      f._map[x] = static_cast<std::int32_t>(x);
    }
    return f;
  }

  PartialBijection PartialBijection::identity_on(Bitset const& domain) {
    PartialBijection f(domain.size());
    domain.for_each([&f](std::size_t x) { f._map[x] = static_cast<std::int32_t>(x); });
    return f;
  }

  PartialBijection PartialBijection::from_pairs(std::size_t ground,
                                                std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    PartialBijection f(ground);
    Bitset           hit(ground);
    for (auto [x, y] : pairs) {
      if (x >= ground || y >= ground) {
        throw ValidationError("pair (" + std::to_string(x) + "," + std::to_string(y)
                              + ") outside ground set of size " + std::to_string(ground));
      }
      if (f._map[x] != undefined && f._map[x] != static_cast<std::int32_t>(y)) {
        throw ValidationError("point " + std::to_string(x) + " has two images");
      }
      if (hit.test(y) && f._map[x] != static_cast<std::int32_t>(y)) {
        throw ValidationError("not injective: " + std::to_string(y) + " is hit twice");
      }
      f._map[x] = static_cast<std::int32_t>(y);
      hit.set(y);
    }
    return f;
  }

  Bitset PartialBijection::domain() const {
    Bitset d(_map.size());
    for (std::size_t x = 0; x < _map.size(); ++x) {
      if (_map[x] != undefined) {
        d.set(x);
      }
    }
    return d;
  }

  Bitset PartialBijection::image() const {
    Bitset d(_map.size());
    for (auto y : _map) {
      if (y != undefined) {
        d.set(static_cast<std::size_t>(y));
      }
    }
    return d;
  }

  std::size_t PartialBijection::rank() const noexcept {
    std::size_t r = 0;
    for (auto y : _map) {
      r += y != undefined;
    }
    return r;
  }

  Bitset PartialBijection::apply(Bitset const& subset) const {
    Bitset out(_map.size());
    subset.for_each([&](std::size_t x) {
      if (_map[x] != undefined) {
        out.set(static_cast<std::size_t>(_map[x]));
      }
    });
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> PartialBijection::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < _map.size(); ++x) {
      if (_map[x] != undefined) {
        out.emplace_back(x, static_cast<std::size_t>(_map[x]));
      }
    }
    return out;
  }

  bool PartialBijection::is_restriction_of(PartialBijection const& other) const {
    if (other._map.size() != _map.size()) {
      throw ValidationError("partial bijections on different ground sets");
    }
    for (std::size_t x = 0; x < _map.size(); ++x) {
      if (_map[x] != undefined && _map[x] != other._map[x]) {
        return false;
      }
    }
    return true;
  }

  std::string PartialBijection::to_string() const {
    std::string out = "{";
    bool        sep = false;
    for (auto [x, y] : pairs()) {
      if (sep) {
        out += ',';
      }
      out += std::to_string(x) + "->" + std::to_string(y);
      sep = true;
    }
    return out + "}";
  }

  std::size_t PartialBijection::hash() const noexcept {
    std::size_t h = _map.size();
    for (auto y : _map) {
      h = h * 31 + static_cast<std::size_t>(y + 1);
    }
    return h;
  }

  PartialBijection compose(PartialBijection const& f, PartialBijection const& g) {
    if (f.ground_size() != g.ground_size()) {
      throw ValidationError("cannot compose partial bijections on ground sets of size "
                            + std::to_string(f.ground_size()) + " and "
                            + std::to_string(g.ground_size()));
    }
    PartialBijection h(g.ground_size());
    for (std::size_t x = 0; x < g._map.size(); ++x) {
      auto y = g._map[x];
      if (y != PartialBijection::undefined) {
        h._map[x] = f._map[static_cast<std::size_t>(y)];
      }
    }
    return h;
  }

  PartialBijection invert(PartialBijection const& f) {
    PartialBijection h(f.ground_size());
    for (std::size_t x = 0; x < f._map.size(); ++x) {
      auto y = f._map[x];
      if (y != PartialBijection::undefined) {
        h._map[static_cast<std::size_t>(y)] = static_cast<std::int32_t>(x);
      }
    }
    return h;
  }

  PartialBijection restrict_to(PartialBijection const& f, Bitset const& domain) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [x, y] : f.pairs()) {
      if (domain.test(x)) {
        out.emplace_back(x, y);
      }
    }
    return PartialBijection::from_pairs(f.ground_size(), out);
  }

}  // namespace brtk
