#pragma once

// Semigroups of concrete values (partial bijections, expansion pairs) together
// with the abstract table they induce, and the closure of a generating set.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "brtk/algebra/semigroup.hpp"
#include "brtk/error.hpp"

namespace brtk {

  template <typename T>
  struct ConcreteSemigroup {
    std::vector<T>                         elements;
    std::shared_ptr<FiniteSemigroup const> semigroup;
    std::unordered_map<T, Elem>            index;

    std::size_t size() const noexcept {
      return elements.size();
    }

    std::optional<Elem> index_of(T const& x) const {
      auto it = index.find(x);
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Elem index_or_throw(T const& x) const {
      auto it = index.find(x);
      if (it == index.end()) {
        throw ValidationError("element is not in semigroup '" + semigroup->name() + "'");
      }
      return it->second;
    }

    T const& at(Elem s) const {
      return elements.at(s);
    }
  };

  // Builds the table of mul restricted to elements. Throws ValidationError if
  // the set is not closed under mul.
  template <typename T, typename Mul, typename Label>
  ConcreteSemigroup<T> tabulate(std::vector<T>      elements,
                                Mul&&               mul,
                                Label&&             label,
                                std::string         name,
                                CheckOptions const& opts = {}) {
    ConcreteSemigroup<T> out;
    auto const           n = elements.size();
    for (Elem i = 0; i < n; ++i) {
      if (!out.index.emplace(elements[i], i).second) {
        throw ValidationError("duplicate element " + label(elements[i]) + " in '" + name + "'");
      }
    }
    CayleyTable              table(n);
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) {
      labels[a] = label(elements[a]);
      for (Elem b = 0; b < n; ++b) {
        auto it = out.index.find(mul(elements[a], elements[b]));
        if (it == out.index.end()) {
          throw ValidationError("'" + name + "' is not closed: " + label(elements[a]) + " * "
                                + label(elements[b]) + " is missing");
        }
        table.at(a, b) = it->second;
      }
    }
    out.elements  = std::move(elements);
    out.semigroup = std::make_shared<FiniteSemigroup const>(
        FiniteSemigroup::from_table(std::move(table), std::move(labels), std::move(name), opts));
    return out;
  }

  // Smallest set containing the generators that is closed under mul and, if
  // inv is given, under inv. Elements appear in discovery order. Throws
  // SizeLimitError carrying the partial count once bound is exceeded.
  template <typename T, typename Mul, typename Inv>
  std::vector<T> closure(std::vector<T> const& generators, Mul&& mul, Inv&& inv, std::size_t bound) {
    std::vector<T>        elements;
    std::unordered_set<T> seen;
    auto                  add = [&](T x) {
      if (seen.insert(x).second) {
        elements.push_back(std::move(x));
        if (elements.size() > bound) {
          throw SizeLimitError("closure exceeds bound " + std::to_string(bound) + " (reached "
                                   + std::to_string(elements.size()) + " elements)",
                               elements.size());
        }
      }
    };
    for (auto const& g : generators) {
      add(g);
      add(inv(g));
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        add(mul(elements[i], elements[j]));
        add(mul(elements[j], elements[i]));
      }
      add(inv(elements[i]));
    }
    return elements;
  }

  template <typename T, typename Mul>
  std::vector<T> closure(std::vector<T> const& generators, Mul&& mul, std::size_t bound) {
    return closure(generators, std::forward<Mul>(mul), [](T const& x) { return x; }, bound);
  }

}  // namespace brtk
