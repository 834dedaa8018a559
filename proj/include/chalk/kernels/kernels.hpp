#pragma once

#include <cstdint>

namespace chalk::kernels {

/// Per-pixel image kernels used by the compositing, background and
/// photometric stages. Every kernel has a scalar reference
/// implementation and an AVX2 variant; the two are byte-exact for the
/// same inputs (integer arithmetic, or float arithmetic with a pinned
/// operation order), which the kernel test suite enforces. Geometry and
/// label math deliberately do not pass through here.

enum class Backend { Scalar, Avx2 };

/// Backend chosen at startup: AVX2 when the CPU supports it, unless
/// overridden with CHALK_SIMD=scalar|avx2|auto.
Backend active_backend();
const char* backend_name(Backend b);

/// Test hook; returns false if the requested backend is unavailable.
bool force_backend(Backend b);

enum class Material : int { Tiles = 0, Plastic = 1, Wood = 2, Metal = 3 };

struct BgParams {
  Material material = Material::Plastic;
  uint8_t base_r = 200, base_g = 200, base_b = 200;
  uint32_t seed = 0;
  int noise_amp = 2;  // hash-noise amplitude in intensity levels
};

/// Soft elliptical shadow. (x,y) maps to normalized ellipse coords via
/// u = ax*x + bx*y + cx, v = ay*x + by*y + cy; u^2+v^2 <= 1 is the core.
struct ShadowParams {
  float ax = 0, bx = 0, cx = 0;
  float ay = 0, by = 0, cy = 0;
  float inv_soft = 1.0f;    // 1 / (penumbra width in r^2 units)
  uint8_t min_mul = 140;    // darkest multiplier (255 = no shadow)
};

// dst = src OVER dst, straight alpha, n pixels (dst RGB8, src RGBA8).
void composite_over_row(uint8_t* dst_rgb, const uint8_t* src_rgba, int n);

// dst = mix(dst, src, mask/255) with per-pixel mask, rounded.
void blend_mask_row(uint8_t* dst_rgb, const uint8_t* src_rgb, const uint8_t* mask_px, int n);

// dst *= mask/255 per pixel, rounded (shadow multiply).
void multiply_mask_row(uint8_t* dst_rgb, const uint8_t* mask_px, int n);

// Per-channel gain in Q8.8 fixed point, floor semantics, saturating.
void scale_rgb_row(uint8_t* dst_rgb, int n, const uint16_t gain_q88[3]);

// Stateless hash noise, one byte per pixel. Coordinates are right-shifted
// to stretch the noise (paper fiber look).
void noise_row(uint8_t* out_px, int n, uint32_t seed, int y, int x0, int shift_x, int shift_y);

// dst += (noise-128)*amp/128 on every channel, saturating.
void apply_grain_row(uint8_t* dst_rgb, const uint8_t* noise_px, int n, int amp);

// Procedural desk texture.
void background_row(uint8_t* dst_rgb, int n, int y, int x0, const BgParams& p);

// Shadow multiplier per pixel (255 = unshadowed).
void shadow_mask_row(uint8_t* mask_px, int n, int y, int x0, const ShadowParams& p);

/// Raw kernel table, exposed so tests can compare backends directly.
struct KernelTable {
  void (*composite_over_row)(uint8_t*, const uint8_t*, int);
  void (*blend_mask_row)(uint8_t*, const uint8_t*, const uint8_t*, int);
  void (*multiply_mask_row)(uint8_t*, const uint8_t*, int);
  void (*scale_rgb_row)(uint8_t*, int, const uint16_t*);
  void (*noise_row)(uint8_t*, int, uint32_t, int, int, int, int);
  void (*apply_grain_row)(uint8_t*, const uint8_t*, int, int);
  void (*background_row)(uint8_t*, int, int, int, const BgParams&);
  void (*shadow_mask_row)(uint8_t*, int, int, int, const ShadowParams&);
};

const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when the CPU lacks AVX2

}  // namespace chalk::kernels
