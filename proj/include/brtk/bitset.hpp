#pragma once

// A fixed-universe subset of {0, ..., size-1}, stored as 64-bit words. Word
// operations go through the SIMD kernel table. Iteration order is ascending,
// which is what every "first witness" report in the library relies on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace brtk {

  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t size);
    Bitset(std::size_t size, std::initializer_list<std::size_t> members);

    static Bitset full(std::size_t size);
    static Bitset from_indices(std::size_t size, std::vector<std::size_t> const& members);

    std::size_t size() const noexcept {
      return _size;
    }

    bool test(std::size_t i) const noexcept {
      return (_words[i >> 6] >> (i & 63)) & 1u;
    }

    Bitset& set(std::size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t(1) << (i & 63);
      return *this;
    }

    Bitset& reset(std::size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
      return *this;
    }

    std::size_t count() const noexcept;
    bool        none() const noexcept;
    bool        any() const noexcept {
      return !none();
    }

    bool is_subset_of(Bitset const& other) const;
    bool intersects(Bitset const& other) const;

    Bitset& operator&=(Bitset const& other);
    Bitset& operator|=(Bitset const& other);
    // set difference
    Bitset& operator-=(Bitset const& other);

    Bitset complement() const;

    // Smallest member, or size() when empty.
    std::size_t first() const noexcept;
    // Smallest member greater than i, or size().
    std::size_t next(std::size_t i) const noexcept;

    std::vector<std::size_t> members() const;

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t bits = _words[w];
        while (bits != 0) {
          f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
          bits &= bits - 1;
        }
      }
    }

    std::vector<std::uint64_t> const& words() const noexcept {
      return _words;
    }

    // "{0,2,3}"
    std::string to_string() const;

    bool operator==(Bitset const& other) const noexcept = default;
    // Lexicographic by (size, words from high to low); a total order only.
    std::strong_ordering operator<=>(Bitset const& other) const noexcept;

    std::size_t hash() const noexcept;

   private:
    void check_same(Bitset const& other) const;

    std::size_t                _size = 0;
    std::vector<std::uint64_t> _words;
  };

  inline Bitset operator&(Bitset a, Bitset const& b) {
    return a &= b;
  }
  inline Bitset operator|(Bitset a, Bitset const& b) {
    return a |= b;
  }
  inline Bitset operator-(Bitset a, Bitset const& b) {
    return a -= b;
  }

}  // namespace brtk

template <>
struct std::hash<brtk::Bitset> {
  std::size_t operator()(brtk::Bitset const& b) const noexcept {
    return b.hash();
  }
};
