#pragma once

// Brute-force reference computations used to freeze expected values.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

  inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  // sum_k C(n,k)^2 k!
  inline std::uint64_t symmetric_inverse_monoid_size(std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      total += binomial(n, k) * binomial(n, k) * factorial(k);
    }
    return total;
  }

  using Graph = std::set<std::pair<std::size_t, std::size_t>>;

  // Every map X -> X ∪ {undefined}, keeping the injective ones.
  inline std::vector<Graph> all_partial_injections(std::size_t n) {
    std::vector<Graph> out;
    std::vector<std::size_t> img(n, 0);
    for (;;) {
      std::set<std::size_t> seen;
      Graph                 g;
      bool                  ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        if (img[x] < n) {
          ok = seen.insert(img[x]).second;
          g.emplace(x, img[x]);
        }
      }
      if (ok) {
        out.push_back(g);
      }
      std::size_t i = 0;
      while (i < n && ++img[i] == n + 1) {
        img[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    return out;
  }

  // Relation composition: {(x, z) : (x, y) in g, (y, z) in f}.
  inline Graph compose(Graph const& f, Graph const& g) {
    Graph out;
    for (auto [x, y] : g) {
      for (auto [y2, z] : f) {
        if (y == y2) {
          out.emplace(x, z);
        }
      }
    }
    return out;
  }

  inline std::size_t pairs_over(std::size_t n, bool with_one_and_g, std::size_t one = 0) {
    // Count (A, g) with A a nonempty subset of an n-element group, optionally
    // forcing {1, g} ⊆ A, by listing them.
    std::size_t count = 0;
    for (std::size_t g = 0; g < n; ++g) {
      for (std::uint64_t A = 1; A < (std::uint64_t{1} << n); ++A) {
        if (with_one_and_g && (((A >> one) & 1u) == 0 || ((A >> g) & 1u) == 0)) {
          continue;
        }
        ++count;
      }
    }
    return count;
  }

  // Topologies as explicit families of subsets (bit masks over <= 16 points).
  using Family = std::set<std::uint32_t>;

  // {∅, X} ∪ subbasis closed under pairwise ∪ and ∩ until nothing changes.
  inline Family close_topology(std::size_t n, std::vector<std::uint32_t> const& subbasis) {
    Family opens{0u, (1u << n) - 1u};
    opens.insert(subbasis.begin(), subbasis.end());
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::uint32_t> now(opens.begin(), opens.end());
      for (auto a : now) {
        for (auto b : now) {
          grew = opens.insert(a | b).second || grew;
          grew = opens.insert(a & b).second || grew;
        }
      }
    }
    return opens;
  }

  inline std::uint32_t preimage(std::vector<std::size_t> const& f, std::uint32_t V) {
    std::uint32_t out = 0;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if ((V >> f[x]) & 1u) {
        out |= 1u << x;
      }
    }
    return out;
  }

  inline bool continuous(std::vector<std::size_t> const& f, Family const& X, Family const& Y) {
    for (auto V : Y) {
      if (!X.contains(preimage(f, V))) {
        return false;
      }
    }
    return true;
  }

  inline std::uint32_t image(Graph const& f, std::uint32_t A) {
    std::uint32_t out = 0;
    for (auto [x, y] : f) {
      if ((A >> x) & 1u) {
        out |= 1u << y;
      }
    }
    return out;
  }

  // dom, im open and f, f^-1 carry opens inside their domains to opens.
  inline bool partial_homeomorphism(Graph const& f, Family const& opens) {
    std::uint32_t dom = 0;
    Graph         inv;
    for (auto [x, y] : f) {
      dom |= 1u << x;
      inv.emplace(y, x);
    }
    std::uint32_t const im = image(f, dom);
    if (!opens.contains(dom) || !opens.contains(im)) {
      return false;
    }
    for (auto U : opens) {
      if (!opens.contains(image(f, U & dom)) || !opens.contains(image(inv, U & im))) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle
