#pragma once

#include "brtk/simd/kernels.hpp"

namespace brtk::simd::detail {

  std::ptrdiff_t assoc_row_scalar(std::uint32_t const*, std::size_t, std::uint32_t, std::uint32_t);
  std::ptrdiff_t hom_row_scalar(std::uint32_t const*,
                                std::size_t,
                                std::uint32_t const*,
                                std::size_t,
                                std::uint32_t const*,
                                std::uint32_t);
  std::size_t    inverse_row_scalar(std::uint32_t const*, std::size_t, std::uint32_t, std::uint32_t*);
  void           and_words_scalar(std::uint64_t*, std::uint64_t const*, std::size_t);
  void           or_words_scalar(std::uint64_t*, std::uint64_t const*, std::size_t);
  void           andnot_words_scalar(std::uint64_t*, std::uint64_t const*, std::size_t);
  bool           subset_words_scalar(std::uint64_t const*, std::uint64_t const*, std::size_t);
  bool           intersect_words_scalar(std::uint64_t const*, std::uint64_t const*, std::size_t);

#if defined(BRTK_HAVE_AVX2)
  std::ptrdiff_t assoc_row_avx2(std::uint32_t const*, std::size_t, std::uint32_t, std::uint32_t);
  std::ptrdiff_t hom_row_avx2(std::uint32_t const*,
                              std::size_t,
                              std::uint32_t const*,
                              std::size_t,
                              std::uint32_t const*,
                              std::uint32_t);
  std::size_t    inverse_row_avx2(std::uint32_t const*, std::size_t, std::uint32_t, std::uint32_t*);
  void           and_words_avx2(std::uint64_t*, std::uint64_t const*, std::size_t);
  void           or_words_avx2(std::uint64_t*, std::uint64_t const*, std::size_t);
  void           andnot_words_avx2(std::uint64_t*, std::uint64_t const*, std::size_t);
  bool           subset_words_avx2(std::uint64_t const*, std::uint64_t const*, std::size_t);
  bool           intersect_words_avx2(std::uint64_t const*, std::uint64_t const*, std::size_t);
#endif

}  // namespace brtk::simd::detail
