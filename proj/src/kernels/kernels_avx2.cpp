// AVX2 kernel variants. Each mirrors the scalar reference element-for-
// element: integer kernels use the same div255/mulhi identities, the
// float shadow kernel keeps the scalar operation order (this file and
// the scalar file are built with -ffp-contract=off).

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "chalk/kernels/kernels.hpp"
#include "kernels_common.hpp"

namespace chalk::kernels {

namespace {

constexpr int kChunkPx = 96;  // px per chunk; 96*3 bytes = 18 u16 vectors

// Repack two u16 vectors (lo bytes 0..15, hi bytes 16..31) into one byte
// vector in memory order.
inline __m256i pack_u16_pair(__m256i lo, __m256i hi) {
  __m256i packed = _mm256_packus_epi16(lo, hi);
  return _mm256_permute4x64_epi64(packed, 0xD8);
}

inline void unpack_u8_to_u16(__m256i v, __m256i& lo, __m256i& hi) {
  __m256i p = _mm256_permute4x64_epi64(v, 0xD8);
  __m256i zero = _mm256_setzero_si256();
  lo = _mm256_unpacklo_epi8(p, zero);
  hi = _mm256_unpackhi_epi8(p, zero);
}

inline __m256i div255r_u16(__m256i x) {
  __m256i a1 = _mm256_add_epi16(x, _mm256_set1_epi16(128));
  return _mm256_srli_epi16(_mm256_add_epi16(a1, _mm256_srli_epi16(a1, 8)), 8);
}

// Byte-wise mix core: d = d +/- round(|s-d|*a/255) over nbytes bytes.
void mix_bytes(uint8_t* d, const uint8_t* s, const uint8_t* a, int nbytes) {
  int i = 0;
  for (; i + 32 <= nbytes; i += 32) {
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
    __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i mx = _mm256_max_epu8(vd, vs);
    __m256i mn = _mm256_min_epu8(vd, vs);
    __m256i diff = _mm256_sub_epi8(mx, mn);

    __m256i dl, dh, al, ah;
    unpack_u8_to_u16(diff, dl, dh);
    unpack_u8_to_u16(va, al, ah);
    __m256i ql = div255r_u16(_mm256_mullo_epi16(dl, al));
    __m256i qh = div255r_u16(_mm256_mullo_epi16(dh, ah));
    __m256i q = pack_u16_pair(ql, qh);

    __m256i s_ge_d = _mm256_cmpeq_epi8(mx, vs);
    __m256i up = _mm256_adds_epu8(vd, q);
    __m256i down = _mm256_subs_epu8(vd, q);
    __m256i out = _mm256_blendv_epi8(down, up, s_ge_d);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), out);
  }
  for (; i < nbytes; ++i) d[i] = mix255(d[i], s[i], a[i]);
}

void composite_over_row_avx2(uint8_t* dst, const uint8_t* src, int n) {
  uint8_t sbuf[kChunkPx * 3], abuf[kChunkPx * 3];
  for (int at = 0; at < n; at += kChunkPx) {
    int len = std::min(kChunkPx, n - at);
    for (int i = 0; i < len; ++i) {
      const uint8_t* px = src + 4 * (at + i);
      sbuf[3 * i] = px[0];
      sbuf[3 * i + 1] = px[1];
      sbuf[3 * i + 2] = px[2];
      abuf[3 * i] = abuf[3 * i + 1] = abuf[3 * i + 2] = px[3];
    }
    mix_bytes(dst + 3 * at, sbuf, abuf, len * 3);
  }
}

void blend_mask_row_avx2(uint8_t* dst, const uint8_t* src, const uint8_t* mask, int n) {
  uint8_t abuf[kChunkPx * 3];
  for (int at = 0; at < n; at += kChunkPx) {
    int len = std::min(kChunkPx, n - at);
    for (int i = 0; i < len; ++i)
      abuf[3 * i] = abuf[3 * i + 1] = abuf[3 * i + 2] = mask[at + i];
    mix_bytes(dst + 3 * at, src + 3 * at, abuf, len * 3);
  }
}

void multiply_mask_row_avx2(uint8_t* dst, const uint8_t* mask, int n) {
  uint8_t abuf[kChunkPx * 3];
  for (int at = 0; at < n; at += kChunkPx) {
    int len = std::min(kChunkPx, n - at);
    for (int i = 0; i < len; ++i)
      abuf[3 * i] = abuf[3 * i + 1] = abuf[3 * i + 2] = mask[at + i];
    int nbytes = len * 3;
    uint8_t* d = dst + 3 * at;
    int i = 0;
    for (; i + 32 <= nbytes; i += 32) {
      __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
      __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(abuf + i));
      __m256i dl, dh, ml, mh;
      unpack_u8_to_u16(vd, dl, dh);
      unpack_u8_to_u16(vm, ml, mh);
      __m256i ql = div255r_u16(_mm256_mullo_epi16(dl, ml));
      __m256i qh = div255r_u16(_mm256_mullo_epi16(dh, mh));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), pack_u16_pair(ql, qh));
    }
    for (; i < nbytes; ++i) d[i] = static_cast<uint8_t>(div255r(d[i] * abuf[i]));
  }
}

void scale_rgb_row_avx2(uint8_t* dst, int n, const uint16_t* gain) {
  // 96-byte gain pattern so vector loads never straddle the RGB phase.
  alignas(32) uint16_t gpat[96];
  for (int i = 0; i < 96; ++i) gpat[i] = gain[i % 3];
  int nbytes = n * 3;
  int i = 0;
  for (; i + 96 <= nbytes; i += 96) {
    for (int b = 0; b < 96; b += 32) {
      __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + b));
      __m256i dl, dh;
      unpack_u8_to_u16(vd, dl, dh);
      // (v*g)>>8 == mulhi(v<<8, g), exact.
      __m256i gl = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gpat + b));
      __m256i gh = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gpat + b + 16));
      __m256i ql = _mm256_mulhi_epu16(_mm256_slli_epi16(dl, 8), gl);
      __m256i qh = _mm256_mulhi_epu16(_mm256_slli_epi16(dh, 8), gh);
      ql = _mm256_min_epu16(ql, _mm256_set1_epi16(255));
      qh = _mm256_min_epu16(qh, _mm256_set1_epi16(255));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + b), pack_u16_pair(ql, qh));
    }
  }
  for (; i < nbytes; ++i) {
    uint32_t v = (static_cast<uint32_t>(dst[i]) * gain[(i % 3)]) >> 8;
    dst[i] = static_cast<uint8_t>(std::min<uint32_t>(v, 255));
  }
}

inline __m256i hash32_vec(__m256i x, __m256i y, __m256i seed) {
  __m256i h = _mm256_xor_si256(
      _mm256_xor_si256(_mm256_mullo_epi32(x, _mm256_set1_epi32(0x9E3779B1)),
                       _mm256_mullo_epi32(y, _mm256_set1_epi32(static_cast<int>(0x85EBCA77)))),
      seed);
  h = _mm256_xor_si256(h, _mm256_srli_epi32(h, 16));
  h = _mm256_mullo_epi32(h, _mm256_set1_epi32(0x7FEB352D));
  h = _mm256_xor_si256(h, _mm256_srli_epi32(h, 15));
  h = _mm256_mullo_epi32(h, _mm256_set1_epi32(static_cast<int>(0x846CA68B)));
  h = _mm256_xor_si256(h, _mm256_srli_epi32(h, 16));
  return h;
}

const __m256i kLaneIota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

void noise_row_avx2(uint8_t* out, int n, uint32_t seed, int y, int x0, int sx, int sy) {
  __m256i vseed = _mm256_set1_epi32(static_cast<int>(seed));
  __m256i vy = _mm256_set1_epi32(static_cast<int>(static_cast<uint32_t>(y) >> sy));
  int i = 0;
  alignas(32) uint32_t tmp[8];
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_add_epi32(_mm256_set1_epi32(x0 + i), kLaneIota);
    vx = _mm256_srli_epi32(vx, sx);
    __m256i h = hash32_vec(vx, vy, vseed);
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), h);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<uint8_t>(tmp[k]);
  }
  uint32_t ny = static_cast<uint32_t>(y) >> sy;
  for (; i < n; ++i)
    out[i] = static_cast<uint8_t>(noise_hash32(static_cast<uint32_t>(x0 + i) >> sx, ny, seed));
}

void apply_grain_row_avx2(uint8_t* dst, const uint8_t* noise, int n, int amp) {
  alignas(32) int16_t dbuf[kChunkPx * 3];
  for (int at = 0; at < n; at += kChunkPx) {
    int len = std::min(kChunkPx, n - at);
    for (int i = 0; i < len; ++i) {
      int16_t delta = static_cast<int16_t>(((static_cast<int>(noise[at + i]) - 128) * amp) >> 7);
      dbuf[3 * i] = dbuf[3 * i + 1] = dbuf[3 * i + 2] = delta;
    }
    int nbytes = len * 3;
    uint8_t* d = dst + 3 * at;
    int i = 0;
    for (; i + 32 <= nbytes; i += 32) {
      __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
      __m256i dl, dh;
      unpack_u8_to_u16(vd, dl, dh);
      __m256i el = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dbuf + i));
      __m256i eh = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dbuf + i + 16));
      __m256i ql = _mm256_add_epi16(dl, el);
      __m256i qh = _mm256_add_epi16(dh, eh);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), pack_u16_pair(ql, qh));
    }
    for (; i < nbytes; ++i) {
      int v = d[i] + dbuf[i];
      d[i] = static_cast<uint8_t>(std::clamp(v, 0, 255));
    }
  }
}

// Vectorized bg_modulation; must match kernels_common.hpp element-wise.
inline __m256i bg_modulation_vec(const BgParams& p, __m256i vx, int y) {
  switch (p.material) {
    case Material::Plastic:
      return _mm256_set1_epi32(256);
    case Material::Tiles: {
      __m256i tx = _mm256_and_si256(vx, _mm256_set1_epi32(255));
      __m256i grout_x = _mm256_cmpgt_epi32(_mm256_set1_epi32(4), tx);
      uint32_t ty = static_cast<uint32_t>(y) & 255;
      __m256i th = hash32_vec(_mm256_srli_epi32(vx, 8),
                              _mm256_set1_epi32(static_cast<int>(static_cast<uint32_t>(y) >> 8)),
                              _mm256_set1_epi32(static_cast<int>(p.seed ^ 0x7115u)));
      __m256i m = _mm256_add_epi32(_mm256_set1_epi32(240),
                                   _mm256_and_si256(th, _mm256_set1_epi32(15)));
      __m256i grout = ty < 4 ? _mm256_set1_epi32(-1) : grout_x;
      return _mm256_blendv_epi8(m, _mm256_set1_epi32(192), grout);
    }
    case Material::Wood: {
      uint32_t plank = static_cast<uint32_t>(y) >> 7;
      uint32_t ph = noise_hash32(plank, 0, p.seed ^ 0x300Du);
      __m256i wobble = _mm256_and_si256(
          hash32_vec(_mm256_srli_epi32(vx, 4), _mm256_set1_epi32(static_cast<int>(plank)),
                     _mm256_set1_epi32(static_cast<int>(p.seed ^ 0x77EEu))),
          _mm256_set1_epi32(31));
      __m256i arg = _mm256_add_epi32(_mm256_set1_epi32(y * 4), wobble);
      __m256i tri = _mm256_abs_epi32(
          _mm256_sub_epi32(_mm256_and_si256(arg, _mm256_set1_epi32(127)), _mm256_set1_epi32(64)));
      return _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(216 + (ph & 15))),
                              _mm256_srli_epi32(tri, 2));
    }
    case Material::Metal: {
      __m256i streak = _mm256_and_si256(
          hash32_vec(_mm256_set1_epi32(y), _mm256_srli_epi32(vx, 6),
                     _mm256_set1_epi32(static_cast<int>(p.seed ^ 0xA110u))),
          _mm256_set1_epi32(15));
      return _mm256_add_epi32(_mm256_set1_epi32(240), streak);
    }
  }
  return _mm256_set1_epi32(256);
}

void background_row_avx2(uint8_t* dst, int n, int y, int x0, const BgParams& p) {
  alignas(32) uint16_t mbuf[kChunkPx * 3];
  alignas(32) int16_t dbuf[kChunkPx * 3];
  alignas(32) uint16_t bpat[kChunkPx * 3];
  const uint16_t base[3] = {static_cast<uint16_t>(p.base_r << 8),
                            static_cast<uint16_t>(p.base_g << 8),
                            static_cast<uint16_t>(p.base_b << 8)};
  for (int i = 0; i < kChunkPx * 3; ++i) bpat[i] = base[i % 3];

  alignas(32) uint32_t mtmp[8];
  alignas(32) uint32_t ntmp[8];
  __m256i vseed = _mm256_set1_epi32(static_cast<int>(p.seed));
  __m256i vy = _mm256_set1_epi32(y);

  for (int at = 0; at < n; at += kChunkPx) {
    int len = std::min(kChunkPx, n - at);
    int i = 0;
    for (; i + 8 <= len; i += 8) {
      __m256i vx = _mm256_add_epi32(_mm256_set1_epi32(x0 + at + i), kLaneIota);
      __m256i m = bg_modulation_vec(p, vx, y);
      __m256i nz = _mm256_and_si256(hash32_vec(vx, vy, vseed), _mm256_set1_epi32(255));
      _mm256_store_si256(reinterpret_cast<__m256i*>(mtmp), m);
      _mm256_store_si256(reinterpret_cast<__m256i*>(ntmp), nz);
      for (int k = 0; k < 8; ++k) {
        uint16_t mv = static_cast<uint16_t>(mtmp[k]);
        int16_t dv =
            static_cast<int16_t>(((static_cast<int>(ntmp[k]) - 128) * p.noise_amp) >> 7);
        int b = 3 * (i + k);
        mbuf[b] = mbuf[b + 1] = mbuf[b + 2] = mv;
        dbuf[b] = dbuf[b + 1] = dbuf[b + 2] = dv;
      }
    }
    for (; i < len; ++i) {
      int x = x0 + at + i;
      uint16_t mv = static_cast<uint16_t>(bg_modulation(p, x, y));
      uint32_t nz = noise_hash32(static_cast<uint32_t>(x), static_cast<uint32_t>(y), p.seed) & 0xFF;
      int16_t dv = static_cast<int16_t>(((static_cast<int>(nz) - 128) * p.noise_amp) >> 7);
      mbuf[3 * i] = mbuf[3 * i + 1] = mbuf[3 * i + 2] = mv;
      dbuf[3 * i] = dbuf[3 * i + 1] = dbuf[3 * i + 2] = dv;
    }

    int nbytes = len * 3;
    uint8_t* d = dst + 3 * at;
    int b = 0;
    for (; b + 32 <= nbytes; b += 32) {
      __m256i bl = _mm256_load_si256(reinterpret_cast<const __m256i*>(bpat + b));
      __m256i bh = _mm256_load_si256(reinterpret_cast<const __m256i*>(bpat + b + 16));
      __m256i ml = _mm256_load_si256(reinterpret_cast<const __m256i*>(mbuf + b));
      __m256i mh = _mm256_load_si256(reinterpret_cast<const __m256i*>(mbuf + b + 16));
      __m256i el = _mm256_load_si256(reinterpret_cast<const __m256i*>(dbuf + b));
      __m256i eh = _mm256_load_si256(reinterpret_cast<const __m256i*>(dbuf + b + 16));
      __m256i ql = _mm256_add_epi16(_mm256_mulhi_epu16(bl, ml), el);
      __m256i qh = _mm256_add_epi16(_mm256_mulhi_epu16(bh, mh), eh);
      // values can exceed 255 (m up to 271); clamp high before packus
      ql = _mm256_min_epi16(_mm256_max_epi16(ql, _mm256_setzero_si256()), _mm256_set1_epi16(255));
      qh = _mm256_min_epi16(_mm256_max_epi16(qh, _mm256_setzero_si256()), _mm256_set1_epi16(255));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + b), pack_u16_pair(ql, qh));
    }
    for (; b < nbytes; ++b) {
      int v = static_cast<int>((static_cast<uint32_t>(bpat[b]) * mbuf[b]) >> 16) + dbuf[b];
      d[b] = static_cast<uint8_t>(std::clamp(v, 0, 255));
    }
  }
}

void shadow_mask_row_avx2(uint8_t* out, int n, int y, int x0, const ShadowParams& p) {
  float fy = static_cast<float>(y);
  float span = static_cast<float>(255 - p.min_mul);
  float base = static_cast<float>(p.min_mul);
  __m256 vbxfy = _mm256_set1_ps(p.bx * fy);
  __m256 vbyfy = _mm256_set1_ps(p.by * fy);
  __m256 vax = _mm256_set1_ps(p.ax), vay = _mm256_set1_ps(p.ay);
  __m256 vcx = _mm256_set1_ps(p.cx), vcy = _mm256_set1_ps(p.cy);
  __m256 vinv = _mm256_set1_ps(p.inv_soft);
  __m256 vone = _mm256_set1_ps(1.0f), vzero = _mm256_setzero_ps();
  __m256 vbase = _mm256_set1_ps(base), vspan = _mm256_set1_ps(span);
  __m256 iota = _mm256_setr_ps(0, 1, 2, 3, 4, 5, 6, 7);

  alignas(32) int32_t tmp[8];
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 fx = _mm256_add_ps(_mm256_set1_ps(static_cast<float>(x0 + i)), iota);
    __m256 u = _mm256_add_ps(_mm256_add_ps(_mm256_mul_ps(vax, fx), vbxfy), vcx);
    __m256 v = _mm256_add_ps(_mm256_add_ps(_mm256_mul_ps(vay, fx), vbyfy), vcy);
    __m256 r2 = _mm256_add_ps(_mm256_mul_ps(u, u), _mm256_mul_ps(v, v));
    __m256 t = _mm256_mul_ps(_mm256_sub_ps(r2, vone), vinv);
    t = _mm256_min_ps(_mm256_max_ps(t, vzero), vone);
    __m256 s = _mm256_mul_ps(_mm256_mul_ps(t, t),
                             _mm256_sub_ps(_mm256_set1_ps(3.0f), _mm256_mul_ps(_mm256_set1_ps(2.0f), t)));
    __m256 m = _mm256_add_ps(vbase, _mm256_mul_ps(s, vspan));
    __m256i q = _mm256_cvtps_epi32(m);  // round-to-nearest-even, same as lrintf
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), q);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<uint8_t>(tmp[k]);
  }
  for (; i < n; ++i) {
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

const KernelTable* avx2_table() {
  static const KernelTable t = {
      composite_over_row_avx2, blend_mask_row_avx2,  multiply_mask_row_avx2,
      scale_rgb_row_avx2,      noise_row_avx2,       apply_grain_row_avx2,
      background_row_avx2,     shadow_mask_row_avx2,
  };
  return __builtin_cpu_supports("avx2") ? &t : nullptr;
}

}  // namespace chalk::kernels

#else

namespace chalk::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace chalk::kernels

#endif
