#include "brtk/algebra/inverse.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "brtk/error.hpp"

namespace brtk {

  PartialBijectionSemigroup symmetric_inverse_monoid(std::size_t n, std::size_t max_n) {
    if (n > max_n || n > 16) {
      throw SizeLimitError("I(X) with |X| = " + std::to_string(n) + " exceeds the bound "
                               + std::to_string(max_n),
                           n);
    }
    std::vector<PartialBijection> elements;
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) {
          continue;
        }
        std::vector<std::size_t> dom;
        for (std::size_t x = 0; x < n; ++x) {
          if ((mask >> x) & 1u) {
            dom.push_back(x);
          }
        }
        // every injective sequence of length k, lexicographically
        std::vector<std::size_t> img(k);
        std::vector<bool>        used(n, false);
        auto                     rec = [&](auto&& self, std::size_t pos) -> void {
          if (pos == k) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < k; ++i) {
              pairs.emplace_back(dom[i], img[i]);
            }
            elements.push_back(PartialBijection::from_pairs(n, pairs));
            return;
          }
          for (std::size_t y = 0; y < n; ++y) {
            if (!used[y]) {
              used[y]  = true;
              img[pos] = y;
              self(self, pos + 1);
              used[y] = false;
            }
          }
        };
        rec(rec, 0);
      }
    }
    return partial_bijection_semigroup(std::move(elements), "I" + std::to_string(n));
  }

  PartialBijectionSemigroup partial_bijection_semigroup(std::vector<PartialBijection> elements,
                                                        std::string                   name) {
    return tabulate(
        std::move(elements),
        [](PartialBijection const& f, PartialBijection const& g) { return compose(f, g); },
        [](PartialBijection const& f) { return f.to_string(); },
        std::move(name));
  }

  PartialBijectionSemigroup partial_bijection_closure(std::vector<PartialBijection> const& generators,
                                                      std::string                          name,
                                                      std::size_t                          bound) {
    auto elements = closure(
        generators,
        [](PartialBijection const& f, PartialBijection const& g) { return compose(f, g); },
        [](PartialBijection const& f) { return invert(f); },
        bound);
    std::sort(elements.begin(), elements.end(), [](auto const& f, auto const& g) {
      return std::pair(f.rank(), f) < std::pair(g.rank(), g);
    });
    return partial_bijection_semigroup(std::move(elements), std::move(name));
  }

  std::vector<Elem> idempotents(FiniteSemigroup const& S) {
    std::vector<Elem> out;
    for (Elem s = 0; s < S.size(); ++s) {
      if (S.product(s, s) == s) {
        out.push_back(s);
      }
    }
    return out;
  }

  bool natural_leq(FiniteSemigroup const& S, Elem s, Elem t) {
    if (!S.is_inverse()) {
      throw NotInverseError("natural order requested on non-inverse semigroup '" + S.name() + "'");
    }
    for (Elem e = 0; e < S.size(); ++e) {
      if (S.product(e, e) == e && S.product(e, t) == s) {
        return true;
      }
    }
    return false;
  }

  bool natural_leq_via_inverse(FiniteSemigroup const& S, Elem s, Elem t) {
    return S.product(S.product(s, S.inverse(s)), t) == s;
  }

  bool NaturalOrderRelation::contains(Elem s, Elem t) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::pair(s, t));
  }

  NaturalOrderRelation natural_order(std::shared_ptr<FiniteSemigroup const> S) {
    NaturalOrderRelation rel;
    for (Elem s = 0; s < S->size(); ++s) {
      for (Elem t = 0; t < S->size(); ++t) {
        if (S->leq(s, t)) {
          rel.pairs.emplace_back(s, t);
        }
      }
    }
    rel.carrier = std::move(S);
    return rel;
  }

  std::optional<Elem> greatest_lower_bound(FiniteSemigroup const& S, std::span<Elem const> family) {
    if (family.empty()) {
      throw ValidationError("meet of an empty family");
    }
    Bitset lower = S.down_set(family[0]);
    for (auto x : family.subspan(1)) {
      lower &= S.down_set(x);
    }
    // the glb is the lower bound above every other lower bound
    std::optional<Elem> result;
    lower.for_each([&](std::size_t c) {
      if (!result && lower.is_subset_of(S.down_set(static_cast<Elem>(c)))) {
        result = static_cast<Elem>(c);
      }
    });
    return result;
  }

  std::optional<Elem> meet(FiniteSemigroup const& S, std::span<Elem const> idempotent_family) {
    for (auto e : idempotent_family) {
      if (!S.is_idempotent(e)) {
        throw ValidationError("meet: " + S.label(e) + " is not idempotent");
      }
    }
    return greatest_lower_bound(S, idempotent_family);
  }

  std::vector<PartialBijection> wagner_preston(FiniteSemigroup const& S) {
    if (!S.is_inverse()) {
      throw NotInverseError("Vagner-Preston needs an inverse semigroup, '" + S.name() + "' is not");
    }
    auto const                    n = S.size();
    std::vector<PartialBijection> images;
    images.reserve(n);
    for (Elem s = 0; s < n; ++s) {
      Elem                                             e = S.product(S.inverse(s), s);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (Elem x = 0; x < n; ++x) {
        if (S.product(e, x) == x) {
          pairs.emplace_back(x, S.product(s, x));
        }
      }
      images.push_back(PartialBijection::from_pairs(n, pairs));
    }
    std::unordered_set<PartialBijection> distinct(images.begin(), images.end());
    if (distinct.size() != n) {
      throw ValidationError("Vagner-Preston map is not injective on '" + S.name() + "'");
    }
    for (Elem s = 0; s < n; ++s) {
      if (invert(images[s]) != images[S.inverse(s)]) {
        throw ValidationError("Vagner-Preston map does not preserve the inverse of "
                              + S.label(s));
      }
      for (Elem t = 0; t < n; ++t) {
        if (compose(images[s], images[t]) != images[S.product(s, t)]) {
          throw ValidationError("Vagner-Preston map does not preserve " + S.label(s) + " * "
                                + S.label(t));
        }
      }
    }
    return images;
  }

}  // namespace brtk
