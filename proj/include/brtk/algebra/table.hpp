#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace brtk {

  // Dense element index into a finite structure.
  using Elem = std::uint32_t;

  // Row-major n x n multiplication table; entry (a, b) is the product ab.
  class CayleyTable {
   public:
    CayleyTable() = default;
    explicit CayleyTable(std::size_t n) : _n(n), _data(n * n, 0) {}
    CayleyTable(std::size_t n, std::vector<Elem> data);

    std::size_t size() const noexcept {
      return _n;
    }

    Elem operator()(Elem a, Elem b) const noexcept {
      return _data[std::size_t(a) * _n + b];
    }

    Elem& at(Elem a, Elem b) noexcept {
      return _data[std::size_t(a) * _n + b];
    }

    std::span<Elem const> row(Elem a) const noexcept {
      return {_data.data() + std::size_t(a) * _n, _n};
    }

    Elem const* data() const noexcept {
      return _data.data();
    }

    bool operator==(CayleyTable const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<Elem> _data;
  };

  // Controls the O(n^3) checks run on construction.
  struct CheckOptions {
    // Tables up to this size are checked exhaustively.
    std::size_t eager_bound = 512;
    // Above the bound, this many random (a, b) rows are checked.
    std::size_t   sampled_rows = 4096;
    std::uint64_t seed         = 0x5eed;
  };

  // First (a, b, c) with (ab)c != a(bc), in lexicographic order when the
  // check is exhaustive.
  std::optional<std::array<Elem, 3>> find_associativity_failure(CayleyTable const& table,
                                                                CheckOptions const& opts = {});

  // Exhaustive variant regardless of size.
  std::optional<std::array<Elem, 3>> find_associativity_failure_exhaustive(CayleyTable const& table);

}  // namespace brtk
