#include "brtk/topology/space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "brtk/error.hpp"

namespace brtk {

  FiniteTopology FiniteTopology::from_neighbourhoods(std::vector<Bitset> U, std::string name) {
    auto const n = U.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (U[x].size() != n || !U[x].test(x)) {
        throw ValidationError("neighbourhood of point " + std::to_string(x) + " is malformed");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (auto y : U[x].members()) {
        if (!U[y].is_subset_of(U[x])) {
          throw ValidationError("neighbourhoods are not transitive at (" + std::to_string(x) + ","
                                + std::to_string(y) + ")");
        }
      }
    }
    FiniteTopology t;
    t._U    = std::move(U);
    t._name = std::move(name);
    return t;
  }

  FiniteTopology FiniteTopology::discrete(std::size_t n) {
    std::vector<Bitset> U;
    for (std::size_t x = 0; x < n; ++x) {
      U.push_back(Bitset(n, {x}));
    }
    return from_neighbourhoods(std::move(U), "discrete" + std::to_string(n));
  }

  FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
    return from_neighbourhoods(std::vector<Bitset>(n, Bitset::full(n)), "indiscrete" + std::to_string(n));
  }

  FiniteTopology FiniteTopology::sierpinski() {
    return from_neighbourhoods({Bitset::full(2), Bitset(2, {1})}, "sierpinski");
  }

  bool FiniteTopology::is_open(Bitset const& A) const {
    bool ok = true;
    A.for_each([&](std::size_t x) { ok = ok && _U[x].is_subset_of(A); });
    return ok;
  }

  bool FiniteTopology::is_closed(Bitset const& A) const {
    return is_open(A.complement());
  }

  Bitset FiniteTopology::interior(Bitset const& A) const {
    Bitset out(size());
    A.for_each([&](std::size_t x) {
      if (_U[x].is_subset_of(A)) {
        out.set(x);
      }
    });
    return out;
  }

  Bitset FiniteTopology::closure(Bitset const& A) const {
    return interior(A.complement()).complement();
  }

  std::vector<Bitset> FiniteTopology::opens(std::size_t bound) const {
    std::unordered_set<Bitset> seen{Bitset(size())};
    std::vector<Bitset>        out{Bitset(size())};
    for (auto const& u : _U) {
      auto const current = out.size();
      for (std::size_t i = 0; i < current; ++i) {
        auto v = out[i] | u;
        if (seen.insert(v).second) {
          out.push_back(std::move(v));
          if (out.size() > bound) {
            throw SizeLimitError("more than " + std::to_string(bound) + " open sets", out.size());
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool FiniteTopology::finer_than(FiniteTopology const& other) const {
    if (other.size() != size()) {
      throw ValidationError("comparing topologies on different point sets");
    }
    for (std::size_t x = 0; x < size(); ++x) {
      if (!_U[x].is_subset_of(other._U[x])) {
        return false;
      }
    }
    return true;
  }

  bool FiniteTopology::is_discrete() const {
    return std::all_of(_U.begin(), _U.end(), [](Bitset const& u) { return u.count() == 1; });
  }

  FiniteTopology generate_topology(std::size_t n, std::vector<Bitset> const& subbasis, std::string name) {
    std::vector<Bitset> U(n, Bitset::full(n));
    for (auto const& S : subbasis) {
      if (S.size() != n) {
        throw ValidationError("subbasis member over " + std::to_string(S.size()) + " points, expected "
                              + std::to_string(n));
      }
      S.for_each([&](std::size_t x) { U[x] &= S; });
    }
    return FiniteTopology::from_neighbourhoods(std::move(U), std::move(name));
  }

  Separation separation_axioms(FiniteTopology const& t) {
    Separation s;
    s.t0 = s.t1 = s.t2 = true;
    auto const n       = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) {
          continue;
        }
        auto const& Ux = t.neighbourhood(x);
        auto const& Uy = t.neighbourhood(y);
        if (x < y && s.t0 && Ux.test(y) && Uy.test(x)) {
          s.t0         = false;
          s.t0_witness = std::pair{x, y};
        }
        // T1: some open contains x and not y
        if (s.t1 && Ux.test(y)) {
          s.t1         = false;
          s.t1_witness = std::pair{x, y};
        }
        if (x < y && s.t2 && Ux.intersects(Uy)) {
          s.t2         = false;
          s.t2_witness = std::pair{x, y};
        }
      }
    }
    return s;
  }

  Continuity is_continuous(std::span<Elem const> f, FiniteTopology const& X, FiniteTopology const& Y) {
    if (f.size() != X.size()) {
      throw ValidationError("map is not total on the source");
    }
    for (auto v : f) {
      if (v >= Y.size()) {
        throw ValidationError("map leaves the target");
      }
    }
    Continuity c;
    for (std::size_t x = 0; x < X.size(); ++x) {
      auto const& target = Y.neighbourhood(f[x]);
      bool        ok     = true;
      X.neighbourhood(x).for_each([&](std::size_t y) { ok = ok && target.test(f[y]); });
      if (!ok) {
        c.continuous   = false;
        c.point        = x;
        c.witness_open = target;
        return c;
      }
    }
    return c;
  }

  FiniteTopology product(FiniteTopology const& a, FiniteTopology const& b) {
    auto const          n = a.size();
    auto const          m = b.size();
    std::vector<Bitset> U;
    U.reserve(n * m);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        Bitset u(n * m);
        a.neighbourhood(x).for_each([&](std::size_t x2) {
          b.neighbourhood(y).for_each([&](std::size_t y2) { u.set(x2 * m + y2); });
        });
        U.push_back(std::move(u));
      }
    }
    return FiniteTopology::from_neighbourhoods(std::move(U), a.name() + "x" + b.name());
  }

  FiniteTopology subspace(FiniteTopology const& t, Bitset const& Y) {
    auto const               pts = Y.members();
    std::vector<std::size_t> relabel(t.size(), t.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      relabel[pts[i]] = i;
    }
    std::vector<Bitset> U;
    for (auto y : pts) {
      Bitset u(pts.size());
      (t.neighbourhood(y) & Y).for_each([&](std::size_t z) { u.set(relabel[z]); });
      U.push_back(std::move(u));
    }
    return FiniteTopology::from_neighbourhoods(std::move(U), t.name() + "|" + Y.to_string());
  }

  std::vector<FiniteTopology> all_topologies(std::size_t n) {
    if (n > 4) {
      throw SizeLimitError("topologies on more than 4 points are not enumerated", n);
    }
    // Relations "y ∈ U_x" for x != y, kept when transitive.
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y) {
          off.emplace_back(x, y);
        }
      }
    }
    std::vector<FiniteTopology> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
      std::vector<Bitset> U;
      for (std::size_t x = 0; x < n; ++x) {
        U.push_back(Bitset(n, {x}));
      }
      for (std::size_t k = 0; k < off.size(); ++k) {
        if ((mask >> k) & 1u) {
          U[off[k].first].set(off[k].second);
        }
      }
      bool transitive = true;
      for (std::size_t x = 0; x < n && transitive; ++x) {
        for (auto y : U[x].members()) {
          transitive = transitive && U[y].is_subset_of(U[x]);
        }
      }
      if (transitive) {
        out.push_back(FiniteTopology::from_neighbourhoods(std::move(U), "T" + std::to_string(n) + "." + std::to_string(out.size())));
      }
    }
    return out;
  }

  std::vector<FiniteTopology> topology_types(std::size_t n) {
    std::vector<FiniteTopology>            out;
    std::set<std::vector<std::uint64_t>>   seen;
    std::vector<std::size_t>               perm(n);
    for (auto const& t : all_topologies(n)) {
      // canonical form: smallest relation matrix over all relabellings
      std::vector<std::uint64_t> best;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::uint64_t> rows(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
          t.neighbourhood(x).for_each([&](std::size_t y) { rows[perm[x]] |= std::uint64_t{1} << perm[y]; });
        }
        if (best.empty() || rows < best) {
          best = rows;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) {
        out.push_back(t);
        out.back().rename("type" + std::to_string(n) + "." + std::to_string(out.size() - 1));
      }
    }
    return out;
  }

}  // namespace brtk
