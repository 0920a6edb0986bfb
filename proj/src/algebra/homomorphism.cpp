#include "brtk/algebra/homomorphism.hpp"

#include "brtk/error.hpp"
#include "brtk/simd/kernels.hpp"

namespace brtk {

  std::optional<std::pair<Elem, Elem>> homomorphism_failure(FiniteSemigroup const& src,
                                                            FiniteSemigroup const& dst,
                                                            std::span<Elem const>  phi) {
    if (phi.size() != src.size()) {
      throw ValidationError("homomorphism table has " + std::to_string(phi.size()) + " entries, source has "
                            + std::to_string(src.size()));
    }
    for (auto v : phi) {
      if (v >= dst.size()) {
        throw ValidationError("homomorphism value " + std::to_string(v) + " outside the target");
      }
    }
    auto const& k = simd::active();
    for (Elem s = 0; s < src.size(); ++s) {
      auto const t = k.hom_row(src.table().data(), src.size(), dst.table().data(), dst.size(), phi.data(), s);
      if (t != simd::no_mismatch) {
        return std::pair{s, static_cast<Elem>(t)};
      }
    }
    return std::nullopt;
  }

  namespace {

    constexpr Elem unset = static_cast<Elem>(-1);

    struct Search {
      FiniteSemigroup const&  src;
      FiniteSemigroup const&  dst;
      CandidateFilter const&  filter;
      HomSearchOptions const& opts;
      std::vector<Elem>       order;
      std::vector<Elem>       value;
      std::vector<Elem>       assigned;  // in assignment order, doubles as trail
      std::vector<Elem>       dst_idempotents;
      HomSearchResult         result;
      bool                    stop = false;

      bool allowed(Elem s, Elem v) const {
        if (src.is_idempotent(s) && !dst.is_idempotent(v)) {
          return false;
        }
        return !filter || filter(s, v);
      }

      // Assigns s = v and everything it forces. Leaves partial work on the
      // trail when it fails; the caller unwinds.
      bool assign(Elem s, Elem v) {
        if (value[s] != unset) {
          return value[s] == v;
        }
        if (!allowed(s, v)) {
          return false;
        }
        value[s] = v;
        assigned.push_back(s);
        for (std::size_t q = assigned.size() - 1; q < assigned.size(); ++q) {
          auto const x = assigned[q];
          auto const vx = value[x];
          for (std::size_t i = 0; i <= q; ++i) {
            auto const y  = assigned[i];
            auto const vy = value[y];
            if (!force(src.product(x, y), dst.product(vx, vy))
                || !force(src.product(y, x), dst.product(vy, vx))) {
              return false;
            }
          }
        }
        return true;
      }

      bool force(Elem s, Elem v) {
        if (value[s] != unset) {
          return value[s] == v;
        }
        if (!allowed(s, v)) {
          return false;
        }
        value[s] = v;
        assigned.push_back(s);
        return true;
      }

      void unwind(std::size_t mark) {
        while (assigned.size() > mark) {
          value[assigned.back()] = unset;
          assigned.pop_back();
        }
      }

      void run(std::size_t pos) {
        if (stop) {
          return;
        }
        while (pos < order.size() && value[order[pos]] != unset) {
          ++pos;
        }
        if (pos == order.size()) {
          result.maps.push_back(value);
          if (result.maps.size() >= opts.max_results) {
            stop = true;
          }
          return;
        }
        auto const s = order[pos];
        auto try_value = [&](Elem v) {
          if (stop) {
            return;
          }
          if (++result.nodes > opts.node_budget) {
            result.complete = false;
            stop            = true;
            return;
          }
          auto const mark = assigned.size();
          if (assign(s, v)) {
            run(pos + 1);
          }
          unwind(mark);
        };
        if (src.is_idempotent(s)) {
          for (auto v : dst_idempotents) {
            try_value(v);
          }
        } else {
          for (Elem v = 0; v < dst.size(); ++v) {
            try_value(v);
          }
        }
      }
    };

  }  // namespace

  HomSearchResult find_homomorphisms(FiniteSemigroup const&                 src,
                                     FiniteSemigroup const&                 dst,
                                     std::span<std::pair<Elem, Elem> const> fixed,
                                     CandidateFilter const&                 filter,
                                     HomSearchOptions const&                opts,
                                     std::span<Elem const>                  priority) {
    Search search{src, dst, filter, opts, {}, std::vector<Elem>(src.size(), unset), {}, {}, {}, false};
    for (auto e : dst.idempotents()) {
      search.dst_idempotents.push_back(e);
    }
    std::vector<char> queued(src.size(), 0);
    for (auto s : priority) {
      if (s < src.size() && !queued[s]) {
        queued[s] = 1;
        search.order.push_back(s);
      }
    }
    for (Elem s = 0; s < src.size(); ++s) {
      if (!queued[s]) {
        search.order.push_back(s);
      }
    }
    for (auto [s, v] : fixed) {
      if (s >= src.size() || v >= dst.size()) {
        throw ValidationError("fixed homomorphism value out of range");
      }
      if (!search.assign(s, v)) {
        return search.result;
      }
    }
    search.run(0);
    return search.result;
  }

}  // namespace brtk
