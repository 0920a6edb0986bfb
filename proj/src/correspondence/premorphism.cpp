#include "brtk/correspondence/premorphism.hpp"

#include <algorithm>
#include <numeric>

#include "brtk/algebra/homomorphism.hpp"
#include "brtk/error.hpp"

namespace brtk {

  Premorphism make_premorphism(std::shared_ptr<FiniteGroup const>     source,
                               std::shared_ptr<FiniteSemigroup const> target,
                               std::vector<Elem>                      table) {
    if (!source || !target) {
      throw ValidationError("premorphism without source or target");
    }
    if (!target->is_inverse()) {
      throw NotInverseError("premorphism target '" + target->name() + "' is not an inverse semigroup");
    }
    if (!target->identity()) {
      throw ValidationError("premorphism target '" + target->name() + "' has no identity");
    }
    if (table.size() != source->order()) {
      throw ValidationError("premorphism table has " + std::to_string(table.size()) + " entries for a group of order "
                            + std::to_string(source->order()));
    }
    for (auto v : table) {
      if (v >= target->size()) {
        throw ValidationError("premorphism value " + std::to_string(v) + " outside '" + target->name() + "'");
      }
    }
    return {std::move(source), std::move(target), std::move(table)};
  }

  std::string describe(Premorphism const& theta) {
    std::string out;
    for (Elem g = 0; g < theta.table.size(); ++g) {
      if (g != 0) {
        out += ", ";
      }
      out += theta.source->label(g) + " -> " + theta.target->label(theta.table[g]);
    }
    return out;
  }

  std::optional<std::pair<Elem, Elem>> homomorphism_failure(SemigroupHomomorphism const& phi) {
    return homomorphism_failure(*phi.source, *phi.target, phi.image);
  }

  PremorphismCheck check_unital_premorphism(Premorphism const& theta) {
    auto const& G = *theta.source;
    auto const& S = *theta.target;
    auto const  n = G.order();
    auto        t = [&](Elem g) { return theta.table[g]; };

    PremorphismCheck r;
    r.unital = S.identity() && t(G.identity()) == *S.identity();

    r.axiom = true;
    r.dual  = true;
    for (Elem g = 0; g < n; ++g) {
      auto const gi = G.inverse(g);
      for (Elem h = 0; h < n; ++h) {
        auto const lhs = S.product(S.product(t(gi), t(g)), t(h));
        auto const rhs = S.product(t(gi), t(G.product(g, h)));
        if (r.axiom && lhs != rhs) {
          r.axiom   = false;
          r.witness = std::pair{g, h};
        }
        auto const hi   = G.inverse(h);
        auto const dlhs = S.product(S.product(t(g), t(h)), t(hi));
        auto const drhs = S.product(t(G.product(g, h)), t(hi));
        if (r.dual && dlhs != drhs) {
          r.dual         = false;
          r.dual_witness = std::pair{g, h};
        }
      }
    }
    r.inverse_compatible = true;
    for (Elem g = 0; g < n && r.inverse_compatible; ++g) {
      auto const a = t(g);
      auto const b = t(G.inverse(g));
      // b is an inverse of a
      if (S.product(S.product(a, b), a) != a || S.product(S.product(b, a), b) != b) {
        r.inverse_compatible = false;
        r.inverse_witness    = g;
      }
    }
    return r;
  }

  void check_action(GroupAction const& a) {
    auto const& G = *a.group;
    auto const  n = a.points;
    if (a.act.size() != G.order() * n) {
      throw ValidationError("action table has the wrong size");
    }
    for (auto v : a.act) {
      if (v >= n) {
        throw ValidationError("action value out of range");
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (a(G.identity(), x) != x) {
        throw ValidationError("identity moves point " + std::to_string(x));
      }
      for (Elem g = 0; g < G.order(); ++g) {
        for (Elem h = 0; h < G.order(); ++h) {
          if (a(g, a(h, x)) != a(G.product(g, h), x)) {
            throw ValidationError("not an action at (g,h,x) = (" + std::to_string(g) + "," + std::to_string(h) + ","
                                  + std::to_string(x) + ")");
          }
        }
      }
    }
  }

  std::vector<GroupAction> all_actions(std::shared_ptr<FiniteGroup const> G, std::size_t n) {
    if (n == 0 || n > 5) {
      throw SizeLimitError("actions on " + std::to_string(n) + " points are outside 1..5", n);
    }
    // Sym(n) as permutations in lexicographic order, composed right to left.
    std::vector<std::vector<Elem>> perms;
    std::vector<Elem>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto const  m = perms.size();
    CayleyTable table(m);
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        std::vector<Elem> c(n);
        for (Elem x = 0; x < n; ++x) {
          c[x] = perms[a][perms[b][x]];
        }
        table.at(a, b) = static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    auto const sym = FiniteSemigroup::from_table(std::move(table), {}, "Sym" + std::to_string(n));
    auto const src = FiniteSemigroup::from_table(G->table(), G->labels(), G->name());
    std::pair<Elem, Elem> const fixed[] = {{G->identity(), 0}};
    auto const found = find_homomorphisms(src, sym, fixed);

    std::vector<GroupAction> out;
    for (auto const& phi : found.maps) {
      GroupAction a{G, n, std::vector<Elem>(G->order() * n)};
      for (Elem g = 0; g < G->order(); ++g) {
        for (Elem x = 0; x < n; ++x) {
          a.act[g * n + x] = perms[phi[g]][x];
        }
      }
      out.push_back(std::move(a));
    }
    return out;
  }

}  // namespace brtk
