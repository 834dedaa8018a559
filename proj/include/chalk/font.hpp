#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chalk/image.hpp"

namespace chalk {

/// Embedded single-stroke vector font. Glyph skeletons live on a 32
/// units/em grid (baseline y=0, y up, cap height 21, x-height 14,
/// descender -7); ink is the skeleton dilated by the style's stroke
/// radius. Boxes derived from these metrics are exact by construction.

struct StrokePoint {
  float x, y;
};
using Stroke = std::vector<StrokePoint>;

struct Glyph {
  float min_x = 0, max_x = 0, min_y = 0, max_y = 0;  // skeleton extent
  std::vector<Stroke> strokes;
};

enum class FontId { Regular, Bold, Italic };

struct FontStyle {
  FontId id;
  float stroke_radius;  // em units
  float slant;          // x += slant*y shear
  float gap;            // inter-glyph gap, em units
};

class StrokeFont {
 public:
  static const StrokeFont& get(FontId id);

  /// Ink width of one glyph in em units (skeleton extent + stroke both
  /// sides). Unknown codepoints fall back to '?'.
  float ink_width(char32_t cp) const;
  /// Ink advance = ink width + gap.
  float advance(char32_t cp) const;
  float space_advance() const { return 7.0f + style_.gap; }

  /// Vertical ink extent of a glyph in em units (min_y, max_y), stroke
  /// included.
  void ink_vertical(char32_t cp, float& lo, float& hi) const;

  const Glyph& glyph(char32_t cp) const;
  const FontStyle& style() const { return style_; }

  static constexpr float kUnitsPerEm = 32.0f;
  static constexpr float kCapHeight = 21.0f;
  static constexpr float kXHeight = 14.0f;
  static constexpr float kAscent = 26.0f;   // accent tops over caps
  static constexpr float kDescent = -7.0f;

 private:
  StrokeFont(FontStyle style);
  FontStyle style_;
};

/// Codepoint table shared by all styles.
const std::unordered_map<char32_t, Glyph>& glyph_table();

/// Decode UTF-8; invalid sequences become '?'.
std::vector<char32_t> decode_utf8(std::string_view s);

struct ShapedWord {
  std::string text;
  // ink box in px, anti-aliasing margin included
  double x0, y0, x1, y1;
  double pen_after;  // pen x after the word (gap not trimmed)
};

/// Measure a word placed with its first glyph's ink starting at pen_x.
ShapedWord shape_word(const StrokeFont& font, double px_per_em_unit, std::string_view word,
                      double pen_x, double baseline_y);

/// Render a word onto the raster. Same placement rule as shape_word.
void draw_word(ImageRGB8& img, const StrokeFont& font, double px_per_em_unit,
               std::string_view word, double pen_x, double baseline_y, const uint8_t rgb[3]);

/// Anti-aliased thick line segment in page pixels (table rules etc).
void draw_line(ImageRGB8& img, double x0, double y0, double x1, double y1, double radius_px,
               const uint8_t rgb[3]);

}  // namespace chalk
