#include <cstdlib>
#include <cstring>

#include "chalk/kernels/kernels.hpp"

namespace chalk::kernels {

namespace {

struct Active {
  const KernelTable* table;
  Backend backend;
};

Active resolve() {
  const char* env = std::getenv("CHALK_SIMD");
  const KernelTable* avx2 = avx2_table();
  if (env && std::strcmp(env, "scalar") == 0) return {&scalar_table(), Backend::Scalar};
  if (env && std::strcmp(env, "avx2") == 0 && avx2) return {avx2, Backend::Avx2};
  if (avx2) return {avx2, Backend::Avx2};
  return {&scalar_table(), Backend::Scalar};
}

Active& active() {
  static Active a = resolve();
  return a;
}

}  // namespace

Backend active_backend() { return active().backend; }

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool force_backend(Backend b) {
  if (b == Backend::Avx2) {
    const KernelTable* t = avx2_table();
    if (!t) return false;
    active() = {t, Backend::Avx2};
    return true;
  }
  active() = {&scalar_table(), Backend::Scalar};
  return true;
}

void composite_over_row(uint8_t* dst_rgb, const uint8_t* src_rgba, int n) {
  active().table->composite_over_row(dst_rgb, src_rgba, n);
}
void blend_mask_row(uint8_t* dst_rgb, const uint8_t* src_rgb, const uint8_t* mask_px, int n) {
  active().table->blend_mask_row(dst_rgb, src_rgb, mask_px, n);
}
void multiply_mask_row(uint8_t* dst_rgb, const uint8_t* mask_px, int n) {
  active().table->multiply_mask_row(dst_rgb, mask_px, n);
}
void scale_rgb_row(uint8_t* dst_rgb, int n, const uint16_t gain_q88[3]) {
  active().table->scale_rgb_row(dst_rgb, n, gain_q88);
}
void noise_row(uint8_t* out_px, int n, uint32_t seed, int y, int x0, int shift_x, int shift_y) {
  active().table->noise_row(out_px, n, seed, y, x0, shift_x, shift_y);
}
void apply_grain_row(uint8_t* dst_rgb, const uint8_t* noise_px, int n, int amp) {
  active().table->apply_grain_row(dst_rgb, noise_px, n, amp);
}
void background_row(uint8_t* dst_rgb, int n, int y, int x0, const BgParams& p) {
  active().table->background_row(dst_rgb, n, y, x0, p);
}
void shadow_mask_row(uint8_t* mask_px, int n, int y, int x0, const ShadowParams& p) {
  active().table->shadow_mask_row(mask_px, n, y, x0, p);
}

}  // namespace chalk::kernels
