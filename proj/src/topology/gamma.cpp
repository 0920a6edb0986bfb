#include "brtk/topology/gamma.hpp"

#include <algorithm>

#include "brtk/correspondence/generators.hpp"
#include "brtk/error.hpp"

namespace brtk {

  bool is_partial_homeomorphism(FiniteTopology const& t, PartialBijection const& f) {
    if (f.ground_size() != t.size()) {
      throw ValidationError("partial map and space have different point counts");
    }
    if (!t.is_open(f.domain()) || !t.is_open(f.image())) {
      return false;
    }
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (auto y = f(x); y && f.apply(t.neighbourhood(x)) != t.neighbourhood(*y)) {
        return false;
      }
    }
    return true;
  }

  Gamma gamma(std::shared_ptr<FiniteTopology const> t, std::size_t max_points) {
    auto const n = t->size();
    if (n > std::min<std::size_t>(max_points, 5)) {
      throw SizeLimitError("Gamma(X) with |X| = " + std::to_string(n) + " exceeds the bound "
                               + std::to_string(max_points),
                           n);
    }
    auto const I = shared_symmetric_inverse_monoid(n);
    if (t->is_discrete()) {
      return {std::move(t), I};
    }
    std::vector<PartialBijection> elements;
    for (auto const& f : I->elements) {
      if (is_partial_homeomorphism(*t, f)) {
        elements.push_back(f);
      }
    }
    auto const name = "Gamma(" + (t->name().empty() ? std::string("X") : t->name()) + ")";
    return {std::move(t),
            std::make_shared<PartialBijectionSemigroup const>(partial_bijection_semigroup(std::move(elements), name))};
  }

  namespace {

    std::vector<Bitset> all_subsets(std::size_t n) {
      std::vector<Bitset> out;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Bitset b(n);
        for (std::size_t x = 0; x < n; ++x) {
          if ((mask >> x) & 1u) {
            b.set(x);
          }
        }
        out.push_back(std::move(b));
      }
      return out;
    }

    template <typename Pred>
    Bitset select(Gamma const& G, Pred&& pred) {
      Bitset out(G.size());
      for (Elem i = 0; i < G.size(); ++i) {
        if (pred(G.at(i))) {
          out.set(i);
        }
      }
      return out;
    }

    Bitset inverted(Gamma const& G, Bitset const& S) {
      auto const& sg = G.semigroup();
      Bitset      out(G.size());
      for (Elem i = 0; i < G.size(); ++i) {
        if (S.test(sg.inverse(i))) {
          out.set(i);
        }
      }
      return out;
    }

    std::vector<Bitset> co_subbasis(Gamma const& G) {
      std::vector<Bitset> sub;
      auto const          opens = G.space->opens();
      for (auto const& K : all_subsets(G.space->size())) {
        for (auto const& V : opens) {
          sub.push_back(compact_open_set(G, K, V));
        }
      }
      return sub;
    }

    std::vector<Bitset> ico_subbasis(Gamma const& G) {
      auto       sub = co_subbasis(G);
      auto const n   = sub.size();
      for (std::size_t i = 0; i < n; ++i) {
        sub.push_back(inverted(G, sub[i]));
      }
      return sub;
    }

    std::string space_name(Gamma const& G) {
      return G.space->name().empty() ? std::string("X") : G.space->name();
    }

  }  // namespace

  Bitset compact_open_set(Gamma const& G, Bitset const& K, Bitset const& V) {
    return select(G, [&](PartialBijection const& f) { return K.is_subset_of(f.domain()) && f.apply(K).is_subset_of(V); });
  }

  TopologizedSemigroup tau_co(Gamma const& G) {
    auto name = "(Gamma(" + space_name(G) + "), tau_co)";
    return {name, G.elements->semigroup, generate_topology(G.size(), co_subbasis(G), name)};
  }

  TopologizedSemigroup tau_ico(Gamma const& G) {
    auto name = "(Gamma(" + space_name(G) + "), tau_ico)";
    return {name, G.elements->semigroup, generate_topology(G.size(), ico_subbasis(G), name)};
  }

  TopologizedSemigroup tau_hco(Gamma const& G) {
    auto        sub   = ico_subbasis(G);
    auto const& X     = *G.space;
    auto const  full  = Bitset::full(X.size());
    for (auto const& V : X.opens()) {
      // V⁻ and V⁺ (every W⁺ with W open is a Fell subbasic in a finite space)
      sub.push_back(select(G, [&](PartialBijection const& f) { return (full - f.domain()).intersects(V); }));
      sub.push_back(select(G, [&](PartialBijection const& f) { return (full - f.domain()).is_subset_of(V); }));
      sub.push_back(select(G, [&](PartialBijection const& f) { return (full - f.image()).intersects(V); }));
      sub.push_back(select(G, [&](PartialBijection const& f) { return (full - f.image()).is_subset_of(V); }));
    }
    auto name = "(Gamma(" + space_name(G) + "), tau_hco)";
    return {name, G.elements->semigroup, generate_topology(G.size(), sub, name)};
  }

  TopologizedSemigroup tau_point_sets(Gamma const& G) {
    std::vector<Bitset> sub;
    auto const          n = G.space->size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        sub.push_back(select(G, [&](PartialBijection const& f) { return f(x) == y; }));
      }
      sub.push_back(select(G, [&](PartialBijection const& f) { return !f.defined_at(x); }));
      sub.push_back(select(G, [&](PartialBijection const& f) { return !f.image().test(x); }));
    }
    auto name = "(Gamma(" + space_name(G) + "), v/w)";
    return {name, G.elements->semigroup, generate_topology(G.size(), sub, name)};
  }

  std::optional<Elem> Hyperspace::index_of(Bitset const& A) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), A);
    if (it == sets.end() || *it != A) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - sets.begin());
  }

  Hyperspace hyperspace(std::shared_ptr<FiniteTopology const> t, HyperKind kind, HyperPoints points) {
    auto const n = t->size();
    if (n > 12) {
      throw SizeLimitError("hyperspace of a " + std::to_string(n) + "-point space", n);
    }
    Hyperspace H;
    H.kind   = kind;
    H.points = points;
    for (auto& A : all_subsets(n)) {
      if (points == HyperPoints::closed ? t->is_closed(A) : A.any()) {
        H.sets.push_back(std::move(A));
      }
    }
    std::sort(H.sets.begin(), H.sets.end());
    auto const          m = H.sets.size();
    std::vector<Bitset> sub;
    for (auto const& V : t->opens()) {
      Bitset minus(m);
      Bitset plus(m);
      for (Elem i = 0; i < m; ++i) {
        if (H.sets[i].intersects(V)) {
          minus.set(i);
        }
        if (H.sets[i].is_subset_of(V)) {
          plus.set(i);
        }
      }
      sub.push_back(std::move(minus));
      sub.push_back(std::move(plus));
    }
    std::string name = (kind == HyperKind::fell ? "Fell " : "Vietoris ");
    name += (points == HyperPoints::closed ? "CL(" : "K(") + t->name() + ")";
    H.topology = generate_topology(m, sub, name);
    H.base     = std::move(t);
    return H;
  }

  Bitset vietoris_basic(Hyperspace const& H, std::vector<Bitset> const& Us) {
    Bitset cover(H.base->size());
    for (auto const& U : Us) {
      cover |= U;
    }
    Bitset out(H.sets.size());
    for (Elem i = 0; i < H.sets.size(); ++i) {
      auto const& A  = H.sets[i];
      bool        ok = A.is_subset_of(cover);
      for (auto const& U : Us) {
        ok = ok && A.intersects(U);
      }
      if (ok) {
        out.set(i);
      }
    }
    return out;
  }

  TopologicalCheck check_topological_inverse_semigroup(TopologizedSemigroup const& ts) {
    auto const&      S = *ts.carrier;
    auto const&      T = ts.topology;
    auto const       n = S.size();
    TopologicalCheck r;
    std::vector<std::vector<std::size_t>> nb(n);
    for (Elem s = 0; s < n; ++s) {
      nb[s] = T.neighbourhood(s).members();
    }
    for (Elem s = 0; s < n && r.product_continuous; ++s) {
      for (Elem t = 0; t < n && r.product_continuous; ++t) {
        auto const& target = T.neighbourhood(S.product(s, t));
        for (auto s2 : nb[s]) {
          for (auto t2 : nb[t]) {
            if (!target.test(S.product(static_cast<Elem>(s2), static_cast<Elem>(t2)))) {
              r.product_continuous = false;
              r.product_point      = std::pair{s, t};
              r.product_escape     = std::pair{static_cast<Elem>(s2), static_cast<Elem>(t2)};
              break;
            }
          }
          if (!r.product_continuous) {
            break;
          }
        }
      }
    }
    if (S.is_inverse()) {
      for (Elem s = 0; s < n && r.inversion_continuous; ++s) {
        auto const& target = T.neighbourhood(S.inverse(s));
        for (auto s2 : nb[s]) {
          if (!target.test(S.inverse(static_cast<Elem>(s2)))) {
            r.inversion_continuous = false;
            r.inversion_point      = s;
            break;
          }
        }
      }
    } else {
      r.inversion_continuous = false;
    }
    return r;
  }

  OrderClosure order_closed_iff_T2(TopologizedSemigroup const& ts) {
    auto const& S = *ts.carrier;
    auto const& T = ts.topology;
    if (!S.is_inverse()) {
      throw NotInverseError("order closure needs an inverse semigroup");
    }
    OrderClosure r;
    auto const   sep = separation_axioms(T);
    r.t2             = sep.t2;
    if (sep.t2_witness) {
      r.t2_witness = std::pair{static_cast<Elem>(sep.t2_witness->first), static_cast<Elem>(sep.t2_witness->second)};
    }
    r.order_closed = true;
    auto const n   = S.size();
    for (Elem s = 0; s < n && r.order_closed; ++s) {
      for (Elem t = 0; t < n && r.order_closed; ++t) {
        if (S.leq(s, t)) {
          continue;
        }
        // U_s x U_t must avoid the order
        bool hit = false;
        T.neighbourhood(s).for_each([&](std::size_t s2) {
          T.neighbourhood(t).for_each([&](std::size_t t2) {
            hit = hit || S.leq(static_cast<Elem>(s2), static_cast<Elem>(t2));
          });
        });
        if (hit) {
          r.order_closed  = false;
          r.order_witness = std::pair{s, t};
        }
      }
    }
    return r;
  }

  TopologizedSemigroup idempotent_part(TopologizedSemigroup const& ts, std::vector<Elem>* embedding) {
    auto const&       S = *ts.carrier;
    std::vector<Elem> E(S.idempotents().begin(), S.idempotents().end());
    std::vector<Elem> pos(S.size(), static_cast<Elem>(-1));
    for (Elem i = 0; i < E.size(); ++i) {
      pos[E[i]] = i;
    }
    CayleyTable              table(E.size());
    std::vector<std::string> labels;
    for (Elem i = 0; i < E.size(); ++i) {
      labels.push_back(S.label(E[i]));
      for (Elem j = 0; j < E.size(); ++j) {
        auto const p = pos[S.product(E[i], E[j])];
        if (p == static_cast<Elem>(-1)) {
          throw NotInverseError("idempotents of '" + S.name() + "' are not closed under the product");
        }
        table.at(i, j) = p;
      }
    }
    Bitset Ebits(S.size());
    for (auto e : E) {
      Ebits.set(e);
    }
    auto name = "E" + ts.name;
    TopologizedSemigroup out{name,
                             std::make_shared<FiniteSemigroup const>(
                                 FiniteSemigroup::from_table(std::move(table), std::move(labels), "E(" + S.name() + ")")),
                             subspace(ts.topology, Ebits).rename(name)};
    if (embedding) {
      *embedding = std::move(E);
    }
    return out;
  }

}  // namespace brtk
