#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "chalk/kernels/kernels.hpp"
#include "chalk/rng.hpp"

using namespace chalk;
using namespace chalk::kernels;

namespace {

std::vector<uint8_t> random_bytes(Rng& rng, size_t n) {
  std::vector<uint8_t> v(n);
  for (auto& b : v) b = static_cast<uint8_t>(rng.uniform_index(256));
  return v;
}

bool have_avx2() { return avx2_table() != nullptr; }

}  // namespace

TEST_CASE("div255 identity used by the kernels is exact over the full range") {
  for (uint32_t x = 0; x <= 255u * 255u; ++x) {
    uint32_t expect = (x + 127) / 255;  // round(x/255)
    uint32_t got = (x + 128 + ((x + 128) >> 8)) >> 8;
    REQUIRE(got == expect);
  }
}

TEST_CASE("scalar and AVX2 kernels are byte-exact on random rows") {
  if (!have_avx2()) {
    MESSAGE("AVX2 not available; equivalence suite skipped");
    return;
  }
  const KernelTable& ref = scalar_table();
  const KernelTable& simd = *avx2_table();
  Rng rng(0xC0FFEE);

  // odd lengths on purpose: exercise the vector tails
  for (int n : {1, 7, 31, 96, 97, 255, 1000}) {
    CAPTURE(n);

    SUBCASE("composite_over_row") {
      auto src = random_bytes(rng, static_cast<size_t>(n) * 4);
      auto a = random_bytes(rng, static_cast<size_t>(n) * 3);
      auto b = a;
      ref.composite_over_row(a.data(), src.data(), n);
      simd.composite_over_row(b.data(), src.data(), n);
      CHECK(a == b);
    }
    SUBCASE("blend_mask_row") {
      auto src = random_bytes(rng, static_cast<size_t>(n) * 3);
      auto mask = random_bytes(rng, static_cast<size_t>(n));
      auto a = random_bytes(rng, static_cast<size_t>(n) * 3);
      auto b = a;
      ref.blend_mask_row(a.data(), src.data(), mask.data(), n);
      simd.blend_mask_row(b.data(), src.data(), mask.data(), n);
      CHECK(a == b);
    }
    SUBCASE("multiply_mask_row") {
      auto mask = random_bytes(rng, static_cast<size_t>(n));
      auto a = random_bytes(rng, static_cast<size_t>(n) * 3);
      auto b = a;
      ref.multiply_mask_row(a.data(), mask.data(), n);
      simd.multiply_mask_row(b.data(), mask.data(), n);
      CHECK(a == b);
    }
    SUBCASE("scale_rgb_row") {
      for (uint16_t g : {uint16_t{64}, uint16_t{256}, uint16_t{300}, uint16_t{1023}}) {
        uint16_t gain[3] = {g, static_cast<uint16_t>(g / 2 + 1), static_cast<uint16_t>(g + 5)};
        auto a = random_bytes(rng, static_cast<size_t>(n) * 3);
        auto b = a;
        ref.scale_rgb_row(a.data(), n, gain);
        simd.scale_rgb_row(b.data(), n, gain);
        CHECK(a == b);
      }
    }
    SUBCASE("noise_row") {
      std::vector<uint8_t> a(n), b(n);
      ref.noise_row(a.data(), n, 0xABCD1234u, 17, 5, 2, 1);
      simd.noise_row(b.data(), n, 0xABCD1234u, 17, 5, 2, 1);
      CHECK(a == b);
    }
    SUBCASE("apply_grain_row") {
      auto noise = random_bytes(rng, static_cast<size_t>(n));
      auto a = random_bytes(rng, static_cast<size_t>(n) * 3);
      auto b = a;
      ref.apply_grain_row(a.data(), noise.data(), n, 40);
      simd.apply_grain_row(b.data(), noise.data(), n, 40);
      CHECK(a == b);
    }
    SUBCASE("background_row") {
      for (auto mat : {Material::Tiles, Material::Plastic, Material::Wood, Material::Metal}) {
        BgParams p;
        p.material = mat;
        p.base_r = 190;
        p.base_g = 170;
        p.base_b = 150;
        p.seed = 0x5EED;
        p.noise_amp = 6;
        std::vector<uint8_t> a(static_cast<size_t>(n) * 3), b(a);
        for (int y : {0, 3, 130, 511}) {
          ref.background_row(a.data(), n, y, 11, p);
          simd.background_row(b.data(), n, y, 11, p);
          CHECK(a == b);
        }
      }
    }
    SUBCASE("shadow_mask_row") {
      ShadowParams p;
      p.ax = 0.0021f;
      p.bx = 0.0004f;
      p.cx = -1.1f;
      p.ay = -0.0003f;
      p.by = 0.0018f;
      p.cy = -0.9f;
      p.inv_soft = 0.7f;
      p.min_mul = 150;
      std::vector<uint8_t> a(n), b(n);
      for (int y : {0, 400, 999}) {
        ref.shadow_mask_row(a.data(), n, y, 3, p);
        simd.shadow_mask_row(b.data(), n, y, 3, p);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("kernel semantics: composite with zero alpha is identity, full alpha copies") {
  const KernelTable& ref = scalar_table();
  Rng rng(7);
  int n = 50;
  auto dst0 = random_bytes(rng, static_cast<size_t>(n) * 3);
  auto src = random_bytes(rng, static_cast<size_t>(n) * 4);

  auto dst = dst0;
  for (int i = 0; i < n; ++i) src[4 * i + 3] = 0;
  ref.composite_over_row(dst.data(), src.data(), n);
  CHECK(dst == dst0);

  for (int i = 0; i < n; ++i) src[4 * i + 3] = 255;
  ref.composite_over_row(dst.data(), src.data(), n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) REQUIRE(dst[3 * i + c] == src[4 * i + c]);
}

TEST_CASE("force_backend switches dispatch") {
  CHECK(force_backend(Backend::Scalar));
  CHECK(active_backend() == Backend::Scalar);
  if (have_avx2()) {
    CHECK(force_backend(Backend::Avx2));
    CHECK(active_backend() == Backend::Avx2);
  }
}
