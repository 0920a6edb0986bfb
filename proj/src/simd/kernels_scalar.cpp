#include "kernels_impl.hpp"

namespace brtk::simd::detail {

  std::ptrdiff_t assoc_row_scalar(std::uint32_t const* t,
                                  std::size_t          n,
                                  std::uint32_t        a,
                                  std::uint32_t        b) {
    std::uint32_t const* ab_row = t + std::size_t(t[a * n + b]) * n;
    std::uint32_t const* a_row  = t + std::size_t(a) * n;
    std::uint32_t const* b_row  = t + std::size_t(b) * n;
    for (std::size_t c = 0; c < n; ++c) {
      if (ab_row[c] != a_row[b_row[c]]) {
        return static_cast<std::ptrdiff_t>(c);
      }
    }
    return no_mismatch;
  }

  std::ptrdiff_t hom_row_scalar(std::uint32_t const* src,
                                std::size_t          n,
                                std::uint32_t const* dst,
                                std::size_t          m,
                                std::uint32_t const* phi,
                                std::uint32_t        s) {
    std::uint32_t const* s_row = src + std::size_t(s) * n;
    std::uint32_t const* d_row = dst + std::size_t(phi[s]) * m;
    for (std::size_t t = 0; t < n; ++t) {
      if (phi[s_row[t]] != d_row[phi[t]]) {
        return static_cast<std::ptrdiff_t>(t);
      }
    }
    return no_mismatch;
  }

  std::size_t inverse_row_scalar(std::uint32_t const* t,
                                 std::size_t          n,
                                 std::uint32_t        s,
                                 std::uint32_t*       out) {
    std::size_t          count = 0;
    std::uint32_t const* s_row = t + std::size_t(s) * n;
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t st = s_row[x];
      std::uint32_t xs = t[std::size_t(x) * n + s];
      if (t[std::size_t(st) * n + s] == s && t[std::size_t(xs) * n + x] == x) {
        out[count++] = x;
      }
    }
    return count;
  }

  void and_words_scalar(std::uint64_t* dst, std::uint64_t const* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] &= src[i];
    }
  }

  void or_words_scalar(std::uint64_t* dst, std::uint64_t const* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] |= src[i];
    }
  }

  void andnot_words_scalar(std::uint64_t* dst, std::uint64_t const* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] &= ~src[i];
    }
  }

  bool subset_words_scalar(std::uint64_t const* a, std::uint64_t const* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((a[i] & ~b[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool intersect_words_scalar(std::uint64_t const* a, std::uint64_t const* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((a[i] & b[i]) != 0) {
        return true;
      }
    }
    return false;
  }

}  // namespace brtk::simd::detail
