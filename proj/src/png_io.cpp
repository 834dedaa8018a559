#include <png.h>

#include <cstdio>
#include <memory>

#include "chalk/errors.hpp"
#include "chalk/image.hpp"

namespace chalk {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

void write_png_impl(const std::filesystem::path& path, int width, int height, int color_type,
                    const uint8_t* data, size_t stride) {
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw io_error("PngWrite", "cannot open " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw io_error("PngWrite", "libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw io_error("PngWrite", "libpng error writing " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < height; ++y) {
    png_write_row(png, const_cast<png_bytep>(data + stride * static_cast<size_t>(y)));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FilePtr fp;

  explicit PngReader(const std::filesystem::path& path) {
    fp.reset(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw io_error("PngRead", "cannot open " + path.string());
    png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
      png_destroy_read_struct(&png, &info, nullptr);
      throw io_error("PngRead", "libpng init failed");
    }
  }
  ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

}  // namespace

void write_png(const std::filesystem::path& path, const ImageRGB8& img) {
  write_png_impl(path, img.width, img.height, PNG_COLOR_TYPE_RGB, img.pixels.data(),
                 static_cast<size_t>(img.width) * 3);
}

void write_png(const std::filesystem::path& path, const ImageGray8& img) {
  write_png_impl(path, img.width, img.height, PNG_COLOR_TYPE_GRAY, img.pixels.data(),
                 static_cast<size_t>(img.width));
}

void write_png(const std::filesystem::path& path, const ImageRGBA8& img) {
  write_png_impl(path, img.width, img.height, PNG_COLOR_TYPE_RGBA, img.pixels.data(),
                 static_cast<size_t>(img.width) * 4);
}

ImageRGBA8 read_png_rgba(const std::filesystem::path& path) {
  PngReader r(path);
  if (setjmp(png_jmpbuf(r.png))) throw io_error("PngRead", "libpng error reading " + path.string());
  png_init_io(r.png, r.fp.get());
  png_read_info(r.png, r.info);

  png_set_expand(r.png);
  png_set_strip_16(r.png);
  png_set_gray_to_rgb(r.png);
  png_set_add_alpha(r.png, 0xFF, PNG_FILLER_AFTER);
  png_read_update_info(r.png, r.info);

  ImageRGBA8 img(static_cast<int>(png_get_image_width(r.png, r.info)),
                 static_cast<int>(png_get_image_height(r.png, r.info)));
  std::vector<png_bytep> rows(img.height);
  for (int y = 0; y < img.height; ++y)
    rows[y] = img.pixels.data() + 4 * static_cast<size_t>(y) * img.width;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
  return img;
}

ImageRGB8 read_png_rgb(const std::filesystem::path& path) {
  ImageRGBA8 rgba = read_png_rgba(path);
  ImageRGB8 img(rgba.width, rgba.height);
  for (size_t i = 0, j = 0; i < rgba.pixels.size(); i += 4, j += 3) {
    img.pixels[j] = rgba.pixels[i];
    img.pixels[j + 1] = rgba.pixels[i + 1];
    img.pixels[j + 2] = rgba.pixels[i + 2];
  }
  return img;
}

ImageGray8 read_png_gray(const std::filesystem::path& path) {
  ImageRGBA8 rgba = read_png_rgba(path);
  ImageGray8 img(rgba.width, rgba.height);
  for (size_t i = 0, j = 0; i < rgba.pixels.size(); i += 4, ++j) {
    // Integer rec.601 luma; exact and platform-stable.
    img.pixels[j] = static_cast<uint8_t>(
        (299 * rgba.pixels[i] + 587 * rgba.pixels[i + 1] + 114 * rgba.pixels[i + 2] + 500) / 1000);
  }
  return img;
}

}  // namespace chalk
