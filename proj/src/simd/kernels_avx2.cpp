// Compiled with -mavx2; only reached through the dispatcher after a CPU check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace brtk::simd::detail {

  namespace {
    constexpr std::size_t lanes = 8;

    inline __m256i load8(std::uint32_t const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
    }

    inline __m256i gather8(std::uint32_t const* base, __m256i idx) {
      return _mm256_i32gather_epi32(reinterpret_cast<int const*>(base), idx, 4);
    }

    // Bit i set iff lane i of a and b differ.
    inline unsigned mismatch_mask(__m256i a, __m256i b) {
      __m256i eq = _mm256_cmpeq_epi32(a, b);
      return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & 0xFFu;
    }
  }  // namespace

  std::ptrdiff_t assoc_row_avx2(std::uint32_t const* t,
                                std::size_t          n,
                                std::uint32_t        a,
                                std::uint32_t        b) {
    std::uint32_t const* ab_row = t + std::size_t(t[a * n + b]) * n;
    std::uint32_t const* a_row  = t + std::size_t(a) * n;
    std::uint32_t const* b_row  = t + std::size_t(b) * n;
    std::size_t          c      = 0;
    for (; c + lanes <= n; c += lanes) {
      __m256i  lhs  = load8(ab_row + c);
      __m256i  rhs  = gather8(a_row, load8(b_row + c));
      unsigned diff = mismatch_mask(lhs, rhs);
      if (diff != 0) {
        return static_cast<std::ptrdiff_t>(c + __builtin_ctz(diff));
      }
    }
    for (; c < n; ++c) {
      if (ab_row[c] != a_row[b_row[c]]) {
        return static_cast<std::ptrdiff_t>(c);
      }
    }
    return no_mismatch;
  }

  std::ptrdiff_t hom_row_avx2(std::uint32_t const* src,
                              std::size_t          n,
                              std::uint32_t const* dst,
                              std::size_t          m,
                              std::uint32_t const* phi,
                              std::uint32_t        s) {
    std::uint32_t const* s_row = src + std::size_t(s) * n;
    std::uint32_t const* d_row = dst + std::size_t(phi[s]) * m;
    std::size_t          t     = 0;
    for (; t + lanes <= n; t += lanes) {
      __m256i  lhs  = gather8(phi, load8(s_row + t));
      __m256i  rhs  = gather8(d_row, load8(phi + t));
      unsigned diff = mismatch_mask(lhs, rhs);
      if (diff != 0) {
        return static_cast<std::ptrdiff_t>(t + __builtin_ctz(diff));
      }
    }
    for (; t < n; ++t) {
      if (phi[s_row[t]] != d_row[phi[t]]) {
        return static_cast<std::ptrdiff_t>(t);
      }
    }
    return no_mismatch;
  }

  std::size_t inverse_row_avx2(std::uint32_t const* t,
                               std::size_t          n,
                               std::uint32_t        s,
                               std::uint32_t*       out) {
    std::size_t          count = 0;
    std::uint32_t const* s_row = t + std::size_t(s) * n;
    __m256i const        vn    = _mm256_set1_epi32(static_cast<int>(n));
    __m256i const        vs    = _mm256_set1_epi32(static_cast<int>(s));
    __m256i const        step  = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    std::size_t          x     = 0;
    for (; x + lanes <= n; x += lanes) {
      __m256i vx  = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(x)), step);
      __m256i st  = load8(s_row + x);
      __m256i sts = gather8(t, _mm256_add_epi32(_mm256_mullo_epi32(st, vn), vs));
      __m256i xs  = gather8(t, _mm256_add_epi32(_mm256_mullo_epi32(vx, vn), vs));
      __m256i xsx = gather8(t, _mm256_add_epi32(_mm256_mullo_epi32(xs, vn), vx));
      __m256i ok  = _mm256_and_si256(_mm256_cmpeq_epi32(sts, vs), _mm256_cmpeq_epi32(xsx, vx));
      unsigned bits = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(ok)));
      while (bits != 0) {
        unsigned lane = static_cast<unsigned>(__builtin_ctz(bits));
        out[count++]  = static_cast<std::uint32_t>(x + lane);
        bits &= bits - 1;
      }
    }
    for (; x < n; ++x) {
      std::uint32_t st = s_row[x];
      std::uint32_t xs = t[x * n + s];
      if (t[std::size_t(st) * n + s] == s && t[std::size_t(xs) * n + x] == x) {
        out[count++] = static_cast<std::uint32_t>(x);
      }
    }
    return count;
  }

  namespace {
    inline __m256i load4(std::uint64_t const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
    }

    inline void store4(std::uint64_t* p, __m256i v) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
    }
  }  // namespace

  void and_words_avx2(std::uint64_t* dst, std::uint64_t const* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      store4(dst + i, _mm256_and_si256(load4(dst + i), load4(src + i)));
    }
    for (; i < n; ++i) {
      dst[i] &= src[i];
    }
  }

  void or_words_avx2(std::uint64_t* dst, std::uint64_t const* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      store4(dst + i, _mm256_or_si256(load4(dst + i), load4(src + i)));
    }
    for (; i < n; ++i) {
      dst[i] |= src[i];
    }
  }

  void andnot_words_avx2(std::uint64_t* dst, std::uint64_t const* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      // _mm256_andnot_si256(x, y) computes ~x & y
      store4(dst + i, _mm256_andnot_si256(load4(src + i), load4(dst + i)));
    }
    for (; i < n; ++i) {
      dst[i] &= ~src[i];
    }
  }

  bool subset_words_avx2(std::uint64_t const* a, std::uint64_t const* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      __m256i extra = _mm256_andnot_si256(load4(b + i), load4(a + i));
      if (!_mm256_testz_si256(extra, extra)) {
        return false;
      }
    }
    for (; i < n; ++i) {
      if ((a[i] & ~b[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool intersect_words_avx2(std::uint64_t const* a, std::uint64_t const* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      if (!_mm256_testz_si256(load4(a + i), load4(b + i))) {
        return true;
      }
    }
    for (; i < n; ++i) {
      if ((a[i] & b[i]) != 0) {
        return true;
      }
    }
    return false;
  }

}  // namespace brtk::simd::detail
