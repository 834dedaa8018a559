#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <vector>

namespace chalk {

struct ImageGray8 {
  int width = 0, height = 0;
  std::vector<uint8_t> pixels;  // row-major, width*height

  ImageGray8() = default;
  ImageGray8(int w, int h, uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  uint8_t* row(int y) { return pixels.data() + static_cast<size_t>(y) * width; }
  const uint8_t* row(int y) const { return pixels.data() + static_cast<size_t>(y) * width; }
  bool operator==(const ImageGray8&) const = default;
};

struct ImageRGB8 {
  int width = 0, height = 0;
  std::vector<uint8_t> pixels;  // row-major, 3 bytes per pixel

  ImageRGB8() = default;
  ImageRGB8(int w, int h, uint8_t r = 255, uint8_t g = 255, uint8_t b = 255)
      : width(w), height(h), pixels(static_cast<size_t>(w) * h * 3) {
    for (size_t i = 0; i < pixels.size(); i += 3) {
      pixels[i] = r;
      pixels[i + 1] = g;
      pixels[i + 2] = b;
    }
  }

  uint8_t* px(int x, int y) { return pixels.data() + 3 * (static_cast<size_t>(y) * width + x); }
  const uint8_t* px(int x, int y) const {
    return pixels.data() + 3 * (static_cast<size_t>(y) * width + x);
  }
  uint8_t* row(int y) { return pixels.data() + 3 * static_cast<size_t>(y) * width; }
  const uint8_t* row(int y) const { return pixels.data() + 3 * static_cast<size_t>(y) * width; }
  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
  bool operator==(const ImageRGB8&) const = default;
};

struct ImageRGBA8 {
  int width = 0, height = 0;
  std::vector<uint8_t> pixels;  // row-major, 4 bytes per pixel

  ImageRGBA8() = default;
  ImageRGBA8(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h * 4, 0) {}

  uint8_t* px(int x, int y) { return pixels.data() + 4 * (static_cast<size_t>(y) * width + x); }
  const uint8_t* px(int x, int y) const {
    return pixels.data() + 4 * (static_cast<size_t>(y) * width + x);
  }
  const uint8_t* row(int y) const { return pixels.data() + 4 * static_cast<size_t>(y) * width; }
  bool operator==(const ImageRGBA8&) const = default;
};

// PNG I/O (libpng). Writers use fixed settings so output bytes are stable.
void write_png(const std::filesystem::path& path, const ImageRGB8& img);
void write_png(const std::filesystem::path& path, const ImageGray8& img);
void write_png(const std::filesystem::path& path, const ImageRGBA8& img);
ImageRGB8 read_png_rgb(const std::filesystem::path& path);
ImageRGBA8 read_png_rgba(const std::filesystem::path& path);
ImageGray8 read_png_gray(const std::filesystem::path& path);

}  // namespace chalk
