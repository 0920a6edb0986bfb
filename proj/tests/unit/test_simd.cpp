#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brtk/algebra/inverse.hpp"
#include "brtk/bitset.hpp"
#include "brtk/simd/kernels.hpp"

using namespace brtk;

namespace {

  std::vector<Elem> random_table(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(n - 1));
    std::vector<Elem>                   t(n * n);
    for (auto& x : t) {
      x = d(rng);
    }
    return t;
  }

  std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, double density) {
    std::bernoulli_distribution b(density);
    std::vector<std::uint64_t>  w(n, 0);
    for (auto& x : w) {
      for (int i = 0; i < 64; ++i) {
        x |= std::uint64_t{b(rng)} << i;
      }
    }
    return w;
  }

}  // namespace

TEST_CASE("dispatch honours availability", "[simd]") {
  auto const& k = simd::active();
  CHECK((k.isa == simd::Isa::scalar || simd::avx2_available()));
  CHECK(simd::scalar().isa == simd::Isa::scalar);
  if (!simd::avx2_available()) {
    CHECK_THROWS(simd::avx2());
  }
}

TEST_CASE("AVX2 table kernels match scalar", "[simd]") {
  if (!simd::avx2_available()) {
    SKIP("AVX2 not available");
  }
  auto const&     s = simd::scalar();
  auto const&     v = simd::avx2();
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u, 7u, 8u, 9u, 17u, 34u}) {
    for (int rep = 0; rep < 20; ++rep) {
      auto const t = random_table(rng, n);
      auto const u = random_table(rng, n);
      std::vector<Elem> phi(n);
      for (auto& x : phi) {
        x = static_cast<Elem>(rng() % n);
      }
      std::vector<Elem> out_s(n), out_v(n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          REQUIRE(s.assoc_row(t.data(), n, a, b) == v.assoc_row(t.data(), n, a, b));
        }
        REQUIRE(s.hom_row(t.data(), n, u.data(), n, phi.data(), a)
                == v.hom_row(t.data(), n, u.data(), n, phi.data(), a));
        auto const cs = s.inverse_row(t.data(), n, a, out_s.data());
        auto const cv = v.inverse_row(t.data(), n, a, out_v.data());
        REQUIRE(cs == cv);
        REQUIRE(std::equal(out_s.begin(), out_s.begin() + cs, out_v.begin()));
      }
    }
  }
  // genuine semigroups give no mismatch on either path
  auto const I = symmetric_inverse_monoid(3);
  auto const& T = I.semigroup->table();
  for (Elem a = 0; a < T.size(); ++a) {
    for (Elem b = 0; b < T.size(); ++b) {
      REQUIRE(v.assoc_row(T.data(), T.size(), a, b) == simd::no_mismatch);
    }
  }
}

TEST_CASE("AVX2 word kernels match scalar", "[simd]") {
  if (!simd::avx2_available()) {
    SKIP("AVX2 not available");
  }
  auto const&     s = simd::scalar();
  auto const&     v = simd::avx2();
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 13u}) {
    for (double p : {0.02, 0.5, 0.98}) {
      auto const a = random_words(rng, n, p);
      auto       b = random_words(rng, n, p);
      if (rng() % 3 == 0) {
        b = a;
      }
      for (auto op : {&simd::Kernels::and_words, &simd::Kernels::or_words, &simd::Kernels::andnot_words}) {
        auto xs = a;
        auto xv = a;
        (s.*op)(xs.data(), b.data(), n);
        (v.*op)(xv.data(), b.data(), n);
        REQUIRE(xs == xv);
      }
      REQUIRE(s.subset_words(a.data(), b.data(), n) == v.subset_words(a.data(), b.data(), n));
      REQUIRE(s.intersect_words(a.data(), b.data(), n) == v.intersect_words(a.data(), b.data(), n));
    }
  }
}

TEST_CASE("bitset operations", "[simd]") {
  Bitset a(130, {0, 5, 64, 129});
  Bitset b(130, {5, 64});
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b) == b);
  CHECK((a - b) == Bitset(130, {0, 129}));
  CHECK((a | b) == a);
  CHECK(a.count() == 4);
  CHECK(a.complement().count() == 126);
  CHECK(b.to_string() == "{5,64}");
  CHECK(a.intersects(b));
  CHECK_FALSE(Bitset(130, {1}).intersects(b));
}
