#include <cstdlib>
#include <cstring>

#include "brtk/error.hpp"
#include "kernels_impl.hpp"

namespace brtk::simd {

  namespace {
    Kernels const scalar_kernels{Isa::scalar,
                                 detail::assoc_row_scalar,
                                 detail::hom_row_scalar,
                                 detail::inverse_row_scalar,
                                 detail::and_words_scalar,
                                 detail::or_words_scalar,
                                 detail::andnot_words_scalar,
                                 detail::subset_words_scalar,
                                 detail::intersect_words_scalar};

#if defined(BRTK_HAVE_AVX2)
    Kernels const avx2_kernels{Isa::avx2,
                               detail::assoc_row_avx2,
                               detail::hom_row_avx2,
                               detail::inverse_row_avx2,
                               detail::and_words_avx2,
                               detail::or_words_avx2,
                               detail::andnot_words_avx2,
                               detail::subset_words_avx2,
                               detail::intersect_words_avx2};
#endif

    Kernels const& select() noexcept {
      char const* env = std::getenv("BRTK_SIMD");
      if (env != nullptr && std::strcmp(env, "scalar") == 0) {
        return scalar_kernels;
      }
#if defined(BRTK_HAVE_AVX2)
      if (avx2_available()) {
        return avx2_kernels;
      }
#endif
      return scalar_kernels;
    }
  }  // namespace

  std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
      case Isa::avx2:
        return "avx2";
      case Isa::scalar:
      default:
        return "scalar";
    }
  }

  bool avx2_available() noexcept {
#if defined(BRTK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  }

  Kernels const& active() noexcept {
    static Kernels const& chosen = select();
    return chosen;
  }

  Kernels const& scalar() noexcept {
    return scalar_kernels;
  }

  Kernels const& avx2() {
#if defined(BRTK_HAVE_AVX2)
    if (avx2_available()) {
      return avx2_kernels;
    }
#endif
    throw Error("AVX2 kernels are not available on this machine/build");
  }

}  // namespace brtk::simd
