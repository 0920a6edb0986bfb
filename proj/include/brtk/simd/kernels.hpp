#pragma once

// Inner loops over Cayley tables and bitset words. Every kernel has a scalar
// reference implementation; on x86-64 an AVX2 variant is selected at runtime
// when the CPU supports it. Setting BRTK_SIMD=scalar in the environment forces
// the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace brtk::simd {

  enum class Isa { scalar, avx2 };

  std::string_view isa_name(Isa isa) noexcept;

  // Returned by the row kernels when the whole row is consistent.
  inline constexpr std::ptrdiff_t no_mismatch = -1;

  struct Kernels {
    Isa isa;

    // First c with T[T[a][b]][c] != T[a][T[b][c]], or no_mismatch.
    std::ptrdiff_t (*assoc_row)(std::uint32_t const* table,
                                std::size_t   n,
                                std::uint32_t a,
                                std::uint32_t b);

    // First t with phi[S[s][t]] != D[phi[s]][phi[t]], or no_mismatch. S is
    // n x n, D is m x m.
    std::ptrdiff_t (*hom_row)(std::uint32_t const* src,
                              std::size_t          n,
                              std::uint32_t const* dst,
                              std::size_t          m,
                              std::uint32_t const* phi,
                              std::uint32_t        s);

    // Writes every t with s t s == s and t s t == t to out (ascending) and
    // returns how many were written. out must hold n entries.
    std::size_t (*inverse_row)(std::uint32_t const* table,
                               std::size_t          n,
                               std::uint32_t        s,
                               std::uint32_t*       out);

    void (*and_words)(std::uint64_t* dst, std::uint64_t const* src, std::size_t n);
    void (*or_words)(std::uint64_t* dst, std::uint64_t const* src, std::size_t n);
    void (*andnot_words)(std::uint64_t* dst, std::uint64_t const* src, std::size_t n);
    bool (*subset_words)(std::uint64_t const* a, std::uint64_t const* b, std::size_t n);
    bool (*intersect_words)(std::uint64_t const* a, std::uint64_t const* b, std::size_t n);
  };

  // The kernels for the best supported instruction set (or the override).
  Kernels const& active() noexcept;

  // Explicit selection, used by the equivalence tests.
  Kernels const& scalar() noexcept;
  bool           avx2_available() noexcept;
  Kernels const& avx2();  // throws brtk::Error if unavailable

}  // namespace brtk::simd
