#include "brtk/expansion/expansion.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "brtk/error.hpp"

namespace brtk {

  GroupSubset singleton(Elem g) noexcept {
    return GroupSubset{1} << g;
  }

  bool contains(GroupSubset A, Elem g) noexcept {
    return g < 64 && ((A >> g) & 1u) != 0;
  }

  GroupSubset translate(FiniteGroup const& G, Elem g, GroupSubset A) {
    GroupSubset out = 0;
    for (; A != 0; A &= A - 1) {
      out |= singleton(G.product(g, static_cast<Elem>(std::countr_zero(A))));
    }
    return out;
  }

  std::string subset_string(GroupSubset A) {
    std::string out = "{";
    bool        first = true;
    for (; A != 0; A &= A - 1) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(std::countr_zero(A));
    }
    return out + "}";
  }

  std::string to_string(ExpansionPair const& p) {
    return "(" + subset_string(p.subset) + ", " + std::to_string(p.element) + ")";
  }

  std::string label(ExpansionPair const& p) {
    return "(" + subset_string(p.subset) + "," + std::to_string(p.element) + ")";
  }

  void check_pair(FiniteGroup const& G, ExpansionPair const& p) {
    auto const n = G.order();
    if (n > max_expansion_group_order) {
      throw SizeLimitError("group order " + std::to_string(n) + " exceeds 64", n);
    }
    if (p.element >= n) {
      throw ValidationError("pair " + to_string(p) + ": element out of range for " + G.name());
    }
    if (p.subset == 0) {
      throw ValidationError("pair " + to_string(p) + ": subset is empty");
    }
    if (n < 64 && (p.subset >> n) != 0) {
      throw ValidationError("pair " + to_string(p) + ": subset has indices outside " + G.name());
    }
  }

  ExpansionPair pair_product(FiniteGroup const& G, ExpansionPair const& p, ExpansionPair const& q) {
    return {p.subset | translate(G, p.element, q.subset), G.product(p.element, q.element)};
  }

  ExpansionPair pair_inverse(FiniteGroup const& G, ExpansionPair const& p) {
    auto const gi = G.inverse(p.element);
    return {translate(G, gi, p.subset), gi};
  }

  bool pair_leq(ExpansionPair const& p, ExpansionPair const& q) noexcept {
    return p.element == q.element && (q.subset & ~p.subset) == 0;
  }

  ExpansionPair iota(FiniteGroup const& G, Elem g) {
    return {singleton(G.identity()) | singleton(g), g};
  }

  IntermediateExtension IntermediateExtension::from_elements(std::shared_ptr<FiniteGroup const> G,
                                                             std::vector<ExpansionPair>         elements,
                                                             std::string                        name,
                                                             std::size_t table_bound) {
    if (!G) {
      throw ValidationError("intermediate extension without a group");
    }
    if (elements.size() > table_bound) {
      throw SizeLimitError("extension '" + name + "' has " + std::to_string(elements.size())
                               + " elements, bound is " + std::to_string(table_bound),
                           elements.size());
    }
    return build(std::move(G), std::move(elements), std::move(name), table_bound, true);
  }

  IntermediateExtension IntermediateExtension::build(std::shared_ptr<FiniteGroup const> G,
                                                     std::vector<ExpansionPair>         elements,
                                                     std::string                        name,
                                                     std::size_t                        table_bound,
                                                     bool                               check_closed) {
    auto const& grp = *G;
    for (auto const& p : elements) {
      check_pair(grp, p);
    }
    std::sort(elements.begin(), elements.end());
    if (auto dup = std::adjacent_find(elements.begin(), elements.end()); dup != elements.end()) {
      throw ValidationError("duplicate pair " + to_string(*dup) + " in '" + name + "'");
    }

    IntermediateExtension T;
    T._name     = std::move(name);
    T._group    = std::move(G);
    T._elements = std::move(elements);

    if (check_closed || T._elements.size() <= table_bound) {
      auto const n = T._elements.size();
      if (n > table_bound) {
        throw SizeLimitError("extension too large to tabulate", n);
      }
      CayleyTable              table(n);
      std::vector<std::string> labels(n);
      for (Elem a = 0; a < n; ++a) {
        labels[a] = label(T._elements[a]);
        for (Elem b = 0; b < n; ++b) {
          auto const c = pair_product(grp, T._elements[a], T._elements[b]);
          auto const i = T.index_of(c);
          if (!i) {
            throw ValidationError("'" + T._name + "' is not closed: " + to_string(T._elements[a]) + " * "
                                  + to_string(T._elements[b]) + " = " + to_string(c) + " is missing");
          }
          table.at(a, b) = *i;
        }
      }
      // The pair product is associative by construction.
      CheckOptions opts;
      opts.eager_bound  = 0;
      opts.sampled_rows = 0;
      T._table          = std::make_shared<FiniteSemigroup const>(
          FiniteSemigroup::from_table(std::move(table), std::move(labels), T._name, opts));
    }

    T._inverse = std::all_of(T._elements.begin(), T._elements.end(),
                             [&](ExpansionPair const& p) { return T.contains(pair_inverse(grp, p)); });

    bool has_iota = true;
    for (Elem g = 0; g < grp.order() && has_iota; ++g) {
      has_iota = T.contains(iota(grp, g));
    }
    auto const one = grp.identity();
    T._intermediate =
        has_iota && std::all_of(T._elements.begin(), T._elements.end(),
                                [&](ExpansionPair const& p) { return brtk::contains(p.subset, one); });
    return T;
  }

  std::optional<Elem> IntermediateExtension::index_of(ExpansionPair const& p) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
    if (it == _elements.end() || *it != p) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - _elements.begin());
  }

  Elem IntermediateExtension::index_or_throw(ExpansionPair const& p) const {
    if (auto i = index_of(p)) {
      return *i;
    }
    throw ValidationError("pair " + to_string(p) + " is not in '" + _name + "'");
  }

  std::shared_ptr<FiniteSemigroup const> const& IntermediateExtension::semigroup_ptr() const {
    if (!_table) {
      throw SizeLimitError("extension '" + _name + "' with " + std::to_string(size())
                               + " elements was not tabulated",
                           size());
    }
    return _table;
  }

  FiniteSemigroup const& IntermediateExtension::semigroup() const {
    return *semigroup_ptr();
  }

  namespace {

    void check_order(FiniteGroup const& G, std::size_t max_order, char const* what) {
      if (G.order() > max_order) {
        throw SizeLimitError(std::string(what) + " of " + G.name() + " (order "
                                 + std::to_string(G.order()) + ") exceeds order bound "
                                 + std::to_string(max_order),
                             G.order());
      }
    }

  }  // namespace

  IntermediateExtension birget_rhodes(std::shared_ptr<FiniteGroup const> G, std::size_t max_order) {
    check_order(*G, std::min(max_order, max_expansion_group_order), "Birget-Rhodes expansion");
    auto const                 n   = G->order();
    auto const                 one = G->identity();
    std::vector<ExpansionPair> elements;
    for (Elem g = 0; g < n; ++g) {
      auto const base = singleton(one) | singleton(g);
      // every superset of {1, g}
      GroupSubset const rest = ((n == 64) ? ~GroupSubset{0} : ((GroupSubset{1} << n) - 1)) & ~base;
      for (GroupSubset s = rest;; s = (s - 1) & rest) {
        elements.push_back({base | s, g});
        if (s == 0) {
          break;
        }
      }
    }
    return IntermediateExtension::build(G, std::move(elements), "BR(" + G->name() + ")", 4096, false);
  }

  IntermediateExtension semidirect_product(std::shared_ptr<FiniteGroup const> G, std::size_t max_order) {
    check_order(*G, std::min(max_order, max_expansion_group_order), "P*(G) x G");
    auto const                 n    = G->order();
    GroupSubset const          full = (n == 64) ? ~GroupSubset{0} : ((GroupSubset{1} << n) - 1);
    std::vector<ExpansionPair> elements;
    for (Elem g = 0; g < n; ++g) {
      for (GroupSubset A = 1; A <= full && A != 0; ++A) {
        elements.push_back({A, g});
      }
    }
    return IntermediateExtension::build(G, std::move(elements), "P*(" + G->name() + ")xG", 4096, false);
  }

  std::vector<GroupSubset> support(IntermediateExtension const& T) {
    std::vector<GroupSubset> out;
    out.reserve(T.size());
    for (auto const& p : T.elements()) {
      out.push_back(p.subset);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  namespace {

    // Pairs of P*(G) x G, indexed, with a product table.
    struct Ambient {
      std::vector<ExpansionPair>                 pairs;
      std::unordered_map<ExpansionPair, Elem>    index;
      std::vector<Elem>                          mul;  // row-major
      std::vector<Elem>                          inv;

      Elem product(Elem a, Elem b) const {
        return mul[a * pairs.size() + b];
      }
    };

    Ambient make_ambient(FiniteGroup const& G, IntermediateExtension const& P) {
      Ambient A;
      A.pairs = P.elements();
      auto const n = A.pairs.size();
      for (Elem i = 0; i < n; ++i) {
        A.index.emplace(A.pairs[i], i);
      }
      A.mul.resize(n * n);
      A.inv.resize(n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          A.mul[a * n + b] = A.index.at(pair_product(G, A.pairs[a], A.pairs[b]));
        }
        A.inv[a] = A.index.at(pair_inverse(G, A.pairs[a]));
      }
      return A;
    }

    // Closure of a member set under product (and inverse); nullopt if a
    // forbidden element shows up.
    std::optional<std::vector<Elem>> close(Ambient const&     A,
                                           std::vector<char>& member,
                                           std::vector<Elem>  members,
                                           bool               with_inverse,
                                           std::vector<char> const& forbidden) {
      auto add = [&](Elem x) {
        if (!member[x]) {
          member[x] = 1;
          members.push_back(x);
        }
        return !forbidden[x];
      };
      for (std::size_t i = 0; i < members.size(); ++i) {
        auto const x = members[i];
        if (forbidden[x]) {
          return std::nullopt;
        }
        if (with_inverse && !add(A.inv[x])) {
          return std::nullopt;
        }
        for (std::size_t j = 0; j <= i; ++j) {
          auto const y = members[j];
          if (!add(A.product(x, y)) || !add(A.product(y, x))) {
            return std::nullopt;
          }
        }
      }
      std::sort(members.begin(), members.end());
      return members;
    }

  }  // namespace

  ExtensionCatalog enumerate_intermediate_extensions(std::shared_ptr<FiniteGroup const> G,
                                                     EnumerationOptions const&          opts) {
    auto const& grp = *G;
    auto const  br  = birget_rhodes(G);
    auto const  P   = semidirect_product(G);
    auto const  A   = make_ambient(grp, P);
    auto const  N   = A.pairs.size();
    auto const  one = grp.identity();

    std::vector<char> in_br(N, 0);
    std::vector<Elem> base;
    for (auto const& p : br.elements()) {
      auto const i = A.index.at(p);
      in_br[i]     = 1;
      base.push_back(i);
    }
    std::vector<char> forbidden(N, 0);
    if (opts.require_monoid) {
      for (Elem i = 0; i < N; ++i) {
        forbidden[i] = contains(A.pairs[i].subset, one) ? 0 : 1;
      }
    }
    std::vector<Elem> extras;
    for (Elem i = 0; i < N; ++i) {
      if (!in_br[i] && !forbidden[i]) {
        extras.push_back(i);
      }
    }

    ExtensionCatalog out;
    out.seed = opts.seed;
    std::vector<std::vector<Elem>> found;

    auto accept = [&](std::vector<Elem> const& members) {
      if (std::find(found.begin(), found.end(), members) == found.end()) {
        found.push_back(members);
      }
    };

    auto const closed_as_is = [&](std::vector<Elem> const& members, std::vector<char> const& member) {
      for (auto x : members) {
        if (opts.inverse_only && !member[A.inv[x]]) {
          return false;
        }
        for (auto y : members) {
          if (!member[A.product(x, y)]) {
            return false;
          }
        }
      }
      return true;
    };

    if (grp.order() <= opts.exhaustive_max_order && extras.size() < 24) {
      out.exhaustive = true;
      std::uint64_t const combos = std::uint64_t{1} << extras.size();
      for (std::uint64_t mask = 0; mask < combos; ++mask) {
        ++out.candidates;
        std::vector<char> member(in_br);
        std::vector<Elem> members(base);
        for (std::size_t k = 0; k < extras.size(); ++k) {
          if ((mask >> k) & 1u) {
            member[extras[k]] = 1;
            members.push_back(extras[k]);
          }
        }
        if (closed_as_is(members, member)) {
          std::sort(members.begin(), members.end());
          accept(members);
        }
      }
    } else {
      std::mt19937_64 rng(opts.seed);
      {
        std::vector<char> member(in_br);
        ++out.candidates;
        if (auto m = close(A, member, base, opts.inverse_only, forbidden)) {
          accept(*m);
        }
      }
      if (!extras.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, extras.size() - 1);
        std::uniform_int_distribution<int>         how_many(1, 3);
        for (std::size_t s = 0; s < opts.samples; ++s) {
          ++out.candidates;
          std::vector<char> member(in_br);
          std::vector<Elem> members(base);
          for (int k = how_many(rng); k > 0; --k) {
            auto const x = extras[pick(rng)];
            if (!member[x]) {
              member[x] = 1;
              members.push_back(x);
            }
          }
          if (auto m = close(A, member, std::move(members), opts.inverse_only, forbidden)) {
            accept(*m);
          }
        }
      }
    }

    std::sort(found.begin(), found.end(),
              [](auto const& a, auto const& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    for (auto const& members : found) {
      std::vector<ExpansionPair> elements;
      elements.reserve(members.size());
      for (auto i : members) {
        elements.push_back(A.pairs[i]);
      }
      std::string name = "T" + std::to_string(out.extensions.size()) + "(" + grp.name() + ")";
      if (members.size() == br.size()) {
        name = br.name();
      } else if (members.size() == N) {
        name = P.name();
      }
      out.extensions.push_back(IntermediateExtension::from_elements(G, std::move(elements), name));
    }
    return out;
  }

}  // namespace brtk
