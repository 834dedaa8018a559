#include <algorithm>
#include <cmath>

#include "chalk/kernels/kernels.hpp"
#include "kernels_common.hpp"

namespace chalk::kernels {

namespace {

void composite_over_row_scalar(uint8_t* dst, const uint8_t* src, int n) {
  for (int i = 0; i < n; ++i) {
    uint8_t a = src[4 * i + 3];
    if (a == 0) continue;
    for (int c = 0; c < 3; ++c) dst[3 * i + c] = mix255(dst[3 * i + c], src[4 * i + c], a);
  }
}

void blend_mask_row_scalar(uint8_t* dst, const uint8_t* src, const uint8_t* mask, int n) {
  for (int i = 0; i < n; ++i) {
    uint8_t m = mask[i];
    if (m == 0) continue;
    for (int c = 0; c < 3; ++c) dst[3 * i + c] = mix255(dst[3 * i + c], src[3 * i + c], m);
  }
}

void multiply_mask_row_scalar(uint8_t* dst, const uint8_t* mask, int n) {
  for (int i = 0; i < n; ++i) {
    uint32_t m = mask[i];
    if (m == 255) continue;
    for (int c = 0; c < 3; ++c)
      dst[3 * i + c] = static_cast<uint8_t>(div255r(dst[3 * i + c] * m));
  }
}

void scale_rgb_row_scalar(uint8_t* dst, int n, const uint16_t* gain) {
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) {
      uint32_t v = (static_cast<uint32_t>(dst[3 * i + c]) * gain[c]) >> 8;
      dst[3 * i + c] = static_cast<uint8_t>(std::min<uint32_t>(v, 255));
    }
}

void noise_row_scalar(uint8_t* out, int n, uint32_t seed, int y, int x0, int sx, int sy) {
  uint32_t ny = static_cast<uint32_t>(y) >> sy;
  for (int i = 0; i < n; ++i)
    out[i] = static_cast<uint8_t>(noise_hash32(static_cast<uint32_t>(x0 + i) >> sx, ny, seed));
}

void apply_grain_row_scalar(uint8_t* dst, const uint8_t* noise, int n, int amp) {
  for (int i = 0; i < n; ++i) {
    int delta = ((static_cast<int>(noise[i]) - 128) * amp) >> 7;
    for (int c = 0; c < 3; ++c) {
      int v = dst[3 * i + c] + delta;
      dst[3 * i + c] = static_cast<uint8_t>(std::clamp(v, 0, 255));
    }
  }
}

void background_row_scalar(uint8_t* dst, int n, int y, int x0, const BgParams& p) {
  const uint8_t base[3] = {p.base_r, p.base_g, p.base_b};
  for (int i = 0; i < n; ++i) {
    int x = x0 + i;
    uint32_t m = bg_modulation(p, x, y);
    uint32_t nz = noise_hash32(static_cast<uint32_t>(x), static_cast<uint32_t>(y), p.seed) & 0xFF;
    int delta = ((static_cast<int>(nz) - 128) * p.noise_amp) >> 7;
    for (int c = 0; c < 3; ++c) {
      int v = static_cast<int>((static_cast<uint32_t>(base[c]) * m) >> 8) + delta;
      dst[3 * i + c] = static_cast<uint8_t>(std::clamp(v, 0, 255));
    }
  }
}

void shadow_mask_row_scalar(uint8_t* out, int n, int y, int x0, const ShadowParams& p) {
  float fy = static_cast<float>(y);
  float span = static_cast<float>(255 - p.min_mul);
  float base = static_cast<float>(p.min_mul);
  for (int i = 0; i < n; ++i) {
    float fx = static_cast<float>(x0 + i);
    float u = (p.ax * fx + p.bx * fy) + p.cx;
    float v = (p.ay * fx + p.by * fy) + p.cy;
    float r2 = u * u + v * v;
    float t = (r2 - 1.0f) * p.inv_soft;
    t = std::min(std::max(t, 0.0f), 1.0f);
    float s = t * t * (3.0f - 2.0f * t);
    out[i] = static_cast<uint8_t>(std::lrintf(base + s * span));
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t = {
      composite_over_row_scalar, blend_mask_row_scalar,  multiply_mask_row_scalar,
      scale_rgb_row_scalar,      noise_row_scalar,       apply_grain_row_scalar,
      background_row_scalar,     shadow_mask_row_scalar,
  };
  return t;
}

}  // namespace chalk::kernels
