#include "brtk/bitset.hpp"

#include <bit>

#include "brtk/error.hpp"
#include "brtk/simd/kernels.hpp"

namespace brtk {

  namespace {
    std::size_t word_count(std::size_t bits) {
      return (bits + 63) / 64;
    }
  }  // namespace

  Bitset::Bitset(std::size_t size) : _size(size), _words(word_count(size), 0) {}

  Bitset::Bitset(std::size_t size, std::initializer_list<std::size_t> members) : Bitset(size) {
    for (auto i : members) {
      if (i >= size) {
        throw Error("bitset member " + std::to_string(i) + " out of range " + std::to_string(size));
      }
      set(i);
    }
  }

  Bitset Bitset::full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b._words) {
      w = ~std::uint64_t(0);
    }
    if (size % 64 != 0) {
      b._words.back() = (std::uint64_t(1) << (size % 64)) - 1;
    }
    return b;
  }

  Bitset Bitset::from_indices(std::size_t size, std::vector<std::size_t> const& members) {
    Bitset b(size);
    for (auto i : members) {
      if (i >= size) {
        throw Error("bitset member " + std::to_string(i) + " out of range " + std::to_string(size));
      }
      b.set(i);
    }
    return b;
  }

  std::size_t Bitset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : _words) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool Bitset::none() const noexcept {
    for (auto w : _words) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  void Bitset::check_same(Bitset const& other) const {
    if (_size != other._size) {
      throw Error("bitset size mismatch: " + std::to_string(_size) + " vs "
                  + std::to_string(other._size));
    }
  }

  bool Bitset::is_subset_of(Bitset const& other) const {
    check_same(other);
    return simd::active().subset_words(_words.data(), other._words.data(), _words.size());
  }

  bool Bitset::intersects(Bitset const& other) const {
    check_same(other);
    return simd::active().intersect_words(_words.data(), other._words.data(), _words.size());
  }

  Bitset& Bitset::operator&=(Bitset const& other) {
    check_same(other);
    simd::active().and_words(_words.data(), other._words.data(), _words.size());
    return *this;
  }

  Bitset& Bitset::operator|=(Bitset const& other) {
    check_same(other);
    simd::active().or_words(_words.data(), other._words.data(), _words.size());
    return *this;
  }

  Bitset& Bitset::operator-=(Bitset const& other) {
    check_same(other);
    simd::active().andnot_words(_words.data(), other._words.data(), _words.size());
    return *this;
  }

  Bitset Bitset::complement() const {
    return full(_size) - *this;
  }

  std::size_t Bitset::first() const noexcept {
    for (std::size_t w = 0; w < _words.size(); ++w) {
      if (_words[w] != 0) {
        return w * 64 + static_cast<std::size_t>(std::countr_zero(_words[w]));
      }
    }
    return _size;
  }

  std::size_t Bitset::next(std::size_t i) const noexcept {
    ++i;
    if (i >= _size) {
      return _size;
    }
    std::size_t   w    = i >> 6;
    std::uint64_t bits = _words[w] & (~std::uint64_t(0) << (i & 63));
    while (true) {
      if (bits != 0) {
        return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      }
      if (++w == _words.size()) {
        return _size;
      }
      bits = _words[w];
    }
  }

  std::vector<std::size_t> Bitset::members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&out](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::string Bitset::to_string() const {
    std::string out = "{";
    bool        sep = false;
    for_each([&](std::size_t i) {
      if (sep) {
        out += ',';
      }
      out += std::to_string(i);
      sep = true;
    });
    out += '}';
    return out;
  }

  std::strong_ordering Bitset::operator<=>(Bitset const& other) const noexcept {
    if (auto c = _size <=> other._size; c != 0) {
      return c;
    }
    for (std::size_t w = _words.size(); w-- > 0;) {
      if (auto c = _words[w] <=> other._words[w]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t Bitset::hash() const noexcept {
    std::size_t h = _size * 0x9E3779B97F4A7C15ull;
    for (auto w : _words) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace brtk
