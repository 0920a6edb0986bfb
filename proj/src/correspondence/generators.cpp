#include "brtk/correspondence/generators.hpp"

#include <map>
#include <mutex>
#include <set>

#include "brtk/error.hpp"

namespace brtk {

  PremorphismSearch enumerate_premorphisms(std::shared_ptr<FiniteGroup const>     G,
                                           std::shared_ptr<FiniteSemigroup const> S,
                                           std::size_t                            budget) {
    if (!S->is_inverse() || !S->identity()) {
      throw NotInverseError("premorphism target '" + S->name() + "' is not an inverse monoid");
    }
    auto const n   = G->order();
    auto const one = G->identity();

    // Assign in index order with the identity first; test every (g, h) whose
    // four values g⁻¹, g, h, gh are already assigned.
    std::vector<Elem> order{one};
    for (Elem g = 0; g < n; ++g) {
      if (g != one) {
        order.push_back(g);
      }
    }
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
      position[order[i]] = i;
    }

    PremorphismSearch out;
    std::vector<Elem> table(n, 0);
    table[one] = *S->identity();

    auto consistent = [&](std::size_t upto) {
      auto const g_new = order[upto];
      auto assigned    = [&](Elem x) { return position[x] <= upto; };
      for (Elem g = 0; g < n; ++g) {
        if (!assigned(g) || !assigned(G->inverse(g))) {
          continue;
        }
        for (Elem h = 0; h < n; ++h) {
          auto const gh = G->product(g, h);
          if (!assigned(h) || !assigned(gh)) {
            continue;
          }
          // only quadruples that involve the new value
          if (g != g_new && G->inverse(g) != g_new && h != g_new && gh != g_new) {
            continue;
          }
          auto const gi = G->inverse(g);
          if (S->product(S->product(table[gi], table[g]), table[h]) != S->product(table[gi], table[gh])) {
            return false;
          }
        }
      }
      return true;
    };

    auto recurse = [&](auto&& self, std::size_t pos) -> void {
      if (!out.complete) {
        return;
      }
      if (pos == n) {
        out.premorphisms.push_back(make_premorphism(G, S, table));
        return;
      }
      for (Elem v = 0; v < S->size(); ++v) {
        if (++out.candidates > budget) {
          out.complete = false;
          return;
        }
        table[order[pos]] = v;
        if (consistent(pos)) {
          self(self, pos + 1);
        }
      }
    };
    if (consistent(0)) {
      recurse(recurse, 1);
    }
    return out;
  }

  std::vector<PartialBijection> restrict_action(GroupAction const& a, Bitset const& Y) {
    if (Y.size() != a.points) {
      throw ValidationError("restriction set lives on a different number of points");
    }
    auto const               pts = Y.members();
    std::vector<std::size_t> relabel(a.points, a.points);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      relabel[pts[i]] = i;
    }
    std::vector<PartialBijection> out;
    for (Elem g = 0; g < a.group->order(); ++g) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (auto y : pts) {
        auto const gy = a(g, static_cast<Elem>(y));
        if (Y.test(gy)) {
          pairs.emplace_back(relabel[y], relabel[gy]);
        }
      }
      out.push_back(PartialBijection::from_pairs(pts.size(), pairs));
    }
    return out;
  }

  Premorphism premorphism_from_maps(std::shared_ptr<FiniteGroup const>   G,
                                    PartialBijectionSemigroup const&     target,
                                    std::vector<PartialBijection> const& maps) {
    std::vector<Elem> table;
    for (auto const& f : maps) {
      table.push_back(target.index_or_throw(f));
    }
    return make_premorphism(std::move(G), target.semigroup, std::move(table));
  }

  std::shared_ptr<PartialBijectionSemigroup const> shared_symmetric_inverse_monoid(std::size_t n) {
    static std::mutex                                                          mu;
    static std::map<std::size_t, std::shared_ptr<PartialBijectionSemigroup const>> cache;
    std::lock_guard lock(mu);
    auto&           slot = cache[n];
    if (!slot) {
      slot = std::make_shared<PartialBijectionSemigroup const>(symmetric_inverse_monoid(n));
    }
    return slot;
  }

  std::vector<CatalogEntry> premorphism_catalog(std::size_t max_group_order, std::size_t max_points) {
    std::vector<std::shared_ptr<FiniteGroup const>> groups;
    for (std::size_t n = 2; n <= max_group_order; ++n) {
      groups.push_back(std::make_shared<FiniteGroup const>(FiniteGroup::cyclic(n)));
    }
    if (max_group_order >= 4) {
      groups.push_back(std::make_shared<FiniteGroup const>(FiniteGroup::from_descriptor("Z2xZ2")));
    }

    std::vector<CatalogEntry>                                       out;
    std::set<std::tuple<std::string, std::size_t, std::vector<Elem>>> seen;
    auto add = [&](std::string name, Premorphism theta) {
      auto key = std::tuple{theta.source->name(), theta.target->size(), theta.table};
      if (seen.insert(std::move(key)).second) {
        out.push_back({std::move(name), std::move(theta)});
      }
    };

    for (auto const& G : groups) {
      for (std::size_t n = 1; n <= max_points + 1; ++n) {
        auto const actions = all_actions(G, n);
        for (std::size_t k = 0; k < actions.size(); ++k) {
          for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Bitset Y(n);
            for (std::size_t x = 0; x < n; ++x) {
              if ((mask >> x) & 1u) {
                Y.set(x);
              }
            }
            if (Y.count() > max_points) {
              continue;
            }
            auto const target = shared_symmetric_inverse_monoid(Y.count());
            auto       theta  = premorphism_from_maps(G, *target, restrict_action(actions[k], Y));
            add(G->name() + " action " + std::to_string(k) + " on " + std::to_string(n) + " points restricted to "
                    + Y.to_string(),
                std::move(theta));
          }
        }
      }
    }

    // Partial identities: g ↦ id_{V} for g ≠ 1 with V fixed, on Z2.
    auto const z2 = groups.front();
    for (std::size_t n = 1; n <= max_points; ++n) {
      auto const target = shared_symmetric_inverse_monoid(n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Bitset V(n);
        for (std::size_t x = 0; x < n; ++x) {
          if ((mask >> x) & 1u) {
            V.set(x);
          }
        }
        std::vector<PartialBijection> maps{PartialBijection::identity(n), PartialBijection::identity_on(V)};
        add("Z2 partial identity on " + V.to_string(), premorphism_from_maps(z2, *target, maps));
      }
    }
    return out;
  }

}  // namespace brtk
