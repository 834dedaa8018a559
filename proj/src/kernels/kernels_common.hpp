#pragma once

#include <cstdint>

#include "chalk/kernels/kernels.hpp"

namespace chalk::kernels {

// Rounded division by 255, exact for x in [0, 65407].
inline uint32_t div255r(uint32_t x) { return (x + 128 + ((x + 128) >> 8)) >> 8; }

// out = d + round(a*(s-d)/255), written sign-split so the AVX2 path can
// reproduce it in unsigned 16-bit lanes.
inline uint8_t mix255(uint8_t d, uint8_t s, uint8_t a) {
  if (s >= d) return static_cast<uint8_t>(d + div255r(static_cast<uint32_t>(s - d) * a));
  return static_cast<uint8_t>(d - div255r(static_cast<uint32_t>(d - s) * a));
}

// Low-bias 32-bit hash; chosen over the 64-bit pipeline hash because it
// vectorizes in epi32 lanes.
inline uint32_t noise_hash32(uint32_t x, uint32_t y, uint32_t seed) {
  uint32_t h = (x * 0x9E3779B1u) ^ (y * 0x85EBCA77u) ^ seed;
  h ^= h >> 16;
  h *= 0x7FEB352Du;
  h ^= h >> 15;
  h *= 0x846CA68Bu;
  h ^= h >> 16;
  return h;
}

// Triangle wave with period 2*P, values in [0, P].
inline uint32_t tri_wave(uint32_t v, uint32_t p) {
  uint32_t m = v % (2 * p);
  return m < p ? p - m : m - p;
}

/// Brightness modulation in Q8 (256 = 1.0) for a background material at
/// pixel (x, y). Pure integer math; both backends must agree byte-exactly.
inline uint32_t bg_modulation(const BgParams& p, int xi, int yi) {
  uint32_t x = static_cast<uint32_t>(xi);
  uint32_t y = static_cast<uint32_t>(yi);
  switch (p.material) {
    case Material::Plastic:
      return 256;
    case Material::Tiles: {
      uint32_t tx = x & 255, ty = y & 255;
      if (tx < 4 || ty < 4) return 192;  // grout
      uint32_t th = noise_hash32(x >> 8, y >> 8, p.seed ^ 0x7115u);
      return 240 + (th & 15);
    }
    case Material::Wood: {
      uint32_t plank = y >> 7;
      uint32_t ph = noise_hash32(plank, 0, p.seed ^ 0x300Du);
      uint32_t wobble = noise_hash32(x >> 4, plank, p.seed ^ 0x77EEu) & 31;
      uint32_t stripe = tri_wave(y * 4 + wobble, 64);
      return 216 + (stripe >> 2) + (ph & 15);
    }
    case Material::Metal: {
      uint32_t streak = noise_hash32(y, x >> 6, p.seed ^ 0xA110u) & 15;
      return 240 + streak;
    }
  }
  return 256;
}

}  // namespace chalk::kernels
