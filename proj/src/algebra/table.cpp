#include "brtk/algebra/table.hpp"

#include <random>
#include <string>

#include "brtk/error.hpp"
#include "brtk/simd/kernels.hpp"

namespace brtk {

  CayleyTable::CayleyTable(std::size_t n, std::vector<Elem> data) : _n(n), _data(std::move(data)) {
    if (_data.size() != n * n) {
      throw ValidationError("table of order " + std::to_string(n) + " needs " + std::to_string(n * n)
                            + " entries, got " + std::to_string(_data.size()));
    }
    for (std::size_t i = 0; i < _data.size(); ++i) {
      if (_data[i] >= n) {
        throw ValidationError("table entry (" + std::to_string(i / n) + "," + std::to_string(i % n)
                              + ") = " + std::to_string(_data[i]) + " is out of range");
      }
    }
  }

  std::optional<std::array<Elem, 3>> find_associativity_failure_exhaustive(CayleyTable const& table) {
    auto const& k = simd::active();
    auto const  n = table.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        auto c = k.assoc_row(table.data(), n, a, b);
        if (c != simd::no_mismatch) {
          return std::array<Elem, 3>{a, b, static_cast<Elem>(c)};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::array<Elem, 3>> find_associativity_failure(CayleyTable const& table,
                                                                CheckOptions const& opts) {
    auto const n = table.size();
    if (n <= opts.eager_bound) {
      return find_associativity_failure_exhaustive(table);
    }
    auto const&     k = simd::active();
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < opts.sampled_rows; ++i) {
      auto a = static_cast<Elem>(rng() % n);
      auto b = static_cast<Elem>(rng() % n);
      auto c = k.assoc_row(table.data(), n, a, b);
      if (c != simd::no_mismatch) {
        return std::array<Elem, 3>{a, b, static_cast<Elem>(c)};
      }
    }
    return std::nullopt;
  }

}  // namespace brtk
