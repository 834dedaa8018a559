#include "chalk/font.hpp"

#include <algorithm>
#include <cmath>

namespace chalk {

namespace {

const Glyph& fallback_glyph() { return glyph_table().at(U'?'); }

// Sheared horizontal extent of a glyph skeleton.
void sheared_extent(const Glyph& g, float slant, float& mn, float& mx) {
  if (slant == 0.0f) {
    mn = g.min_x;
    mx = g.max_x;
    return;
  }
  mn = 1e9f;
  mx = -1e9f;
  for (const auto& s : g.strokes)
    for (const auto& p : s) {
      float x = p.x + slant * p.y;
      mn = std::min(mn, x);
      mx = std::max(mx, x);
    }
}

double seg_dist(double px, double py, double ax, double ay, double bx, double by) {
  double dx = bx - ax, dy = by - ay;
  double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double qx = ax + t * dx - px, qy = ay + t * dy - py;
  return std::sqrt(qx * qx + qy * qy);
}

}  // namespace

StrokeFont::StrokeFont(FontStyle style) : style_(style) {}

const StrokeFont& StrokeFont::get(FontId id) {
  static const StrokeFont regular({FontId::Regular, 1.35f, 0.0f, 2.6f});
  static const StrokeFont bold({FontId::Bold, 2.1f, 0.0f, 2.6f});
  static const StrokeFont italic({FontId::Italic, 1.35f, 0.18f, 2.6f});
  switch (id) {
    case FontId::Bold:
      return bold;
    case FontId::Italic:
      return italic;
    default:
      return regular;
  }
}

const Glyph& StrokeFont::glyph(char32_t cp) const {
  auto it = glyph_table().find(cp);
  return it == glyph_table().end() ? fallback_glyph() : it->second;
}

float StrokeFont::ink_width(char32_t cp) const {
  const Glyph& g = glyph(cp);
  float mn, mx;
  sheared_extent(g, style_.slant, mn, mx);
  return (mx - mn) + 2.0f * style_.stroke_radius;
}

float StrokeFont::advance(char32_t cp) const { return ink_width(cp) + style_.gap; }

void StrokeFont::ink_vertical(char32_t cp, float& lo, float& hi) const {
  const Glyph& g = glyph(cp);
  lo = g.min_y - style_.stroke_radius;
  hi = g.max_y + style_.stroke_radius;
}

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = U'?';
    size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6 && i + 1 < s.size()) {
      cp = ((c & 0x1F) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
      len = 2;
    } else if ((c >> 4) == 0xE && i + 2 < s.size()) {
      cp = ((c & 0x0F) << 12) | ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
           (static_cast<unsigned char>(s[i + 2]) & 0x3F);
      len = 3;
    } else if ((c >> 3) == 0x1E && i + 3 < s.size()) {
      cp = ((c & 0x07) << 18) | ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
           ((static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
           (static_cast<unsigned char>(s[i + 3]) & 0x3F);
      len = 4;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

ShapedWord shape_word(const StrokeFont& font, double scale, std::string_view word, double pen_x,
                      double baseline_y) {
  ShapedWord w;
  w.text = std::string(word);
  auto cps = decode_utf8(word);
  double pen = pen_x;
  double y_lo = 1e18, y_hi = -1e18;
  double x_start = pen_x, x_end = pen_x;
  for (size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    double ink_w = font.ink_width(cp) * scale;
    float vlo, vhi;
    font.ink_vertical(cp, vlo, vhi);
    y_lo = std::min(y_lo, static_cast<double>(vlo) * scale);
    y_hi = std::max(y_hi, static_cast<double>(vhi) * scale);
    if (i == 0) x_start = pen;
    x_end = pen + ink_w;
    pen += ink_w + font.style().gap * scale;
  }
  if (cps.empty()) {
    y_lo = 0;
    y_hi = 0;
  }
  // half-pixel anti-aliasing margin on every side
  w.x0 = x_start - 0.5;
  w.x1 = x_end + 0.5;
  w.y0 = baseline_y - y_hi - 0.5;
  w.y1 = baseline_y - y_lo + 0.5;
  w.pen_after = pen;
  return w;
}

namespace {

void blend_px(ImageRGB8& img, int x, int y, double cov, const uint8_t rgb[3]) {
  if (cov <= 0.0 || !img.in_bounds(x, y)) return;
  cov = std::min(cov, 1.0);
  uint8_t* p = img.px(x, y);
  for (int c = 0; c < 3; ++c)
    p[c] = static_cast<uint8_t>(std::lround(p[c] * (1.0 - cov) + rgb[c] * cov));
}

}  // namespace

void draw_word(ImageRGB8& img, const StrokeFont& font, double scale, std::string_view word,
               double pen_x, double baseline_y, const uint8_t rgb[3]) {
  auto cps = decode_utf8(word);
  double pen = pen_x;
  double r_px = std::max(font.style().stroke_radius * scale, 0.7);
  float slant = font.style().slant;

  ShapedWord bounds = shape_word(font, scale, word, pen_x, baseline_y);
  int tx0 = static_cast<int>(std::floor(bounds.x0));
  int ty0 = static_cast<int>(std::floor(bounds.y0));
  int tw = static_cast<int>(std::ceil(bounds.x1)) - tx0 + 1;
  int th = static_cast<int>(std::ceil(bounds.y1)) - ty0 + 1;
  if (tw <= 0 || th <= 0) return;
  std::vector<float> cov(static_cast<size_t>(tw) * th, 0.0f);

  for (char32_t cp : cps) {
    const Glyph& g = font.glyph(cp);
    float smn, smx;
    sheared_extent(g, slant, smn, smx);
    double ink_w = (static_cast<double>(smx - smn) + 2.0 * font.style().stroke_radius) * scale;
    // glyph origin so that ink starts exactly at pen
    double ox = pen - (static_cast<double>(smn) - font.style().stroke_radius) * scale;

    for (const auto& stroke : g.strokes) {
      for (size_t i = 0; i + 1 < stroke.size(); ++i) {
        double ax = ox + (stroke[i].x + slant * stroke[i].y) * scale;
        double ay = baseline_y - stroke[i].y * scale;
        double bx = ox + (stroke[i + 1].x + slant * stroke[i + 1].y) * scale;
        double by = baseline_y - stroke[i + 1].y * scale;
        int px0 = static_cast<int>(std::floor(std::min(ax, bx) - r_px - 1));
        int px1 = static_cast<int>(std::ceil(std::max(ax, bx) + r_px + 1));
        int py0 = static_cast<int>(std::floor(std::min(ay, by) - r_px - 1));
        int py1 = static_cast<int>(std::ceil(std::max(ay, by) + r_px + 1));
        for (int y = py0; y <= py1; ++y) {
          if (y < ty0 || y >= ty0 + th) continue;
          for (int x = px0; x <= px1; ++x) {
            if (x < tx0 || x >= tx0 + tw) continue;
            double d = seg_dist(x + 0.5, y + 0.5, ax, ay, bx, by);
            double c = std::clamp(r_px + 0.5 - d, 0.0, 1.0);
            float& cell = cov[static_cast<size_t>(y - ty0) * tw + (x - tx0)];
            cell = std::max(cell, static_cast<float>(c));
          }
        }
      }
    }
    pen += ink_w + font.style().gap * scale;
  }

  for (int y = 0; y < th; ++y)
    for (int x = 0; x < tw; ++x) {
      float c = cov[static_cast<size_t>(y) * tw + x];
      if (c > 0.0f) blend_px(img, tx0 + x, ty0 + y, c, rgb);
    }
}

void draw_line(ImageRGB8& img, double x0, double y0, double x1, double y1, double radius_px,
               const uint8_t rgb[3]) {
  int px0 = static_cast<int>(std::floor(std::min(x0, x1) - radius_px - 1));
  int px1 = static_cast<int>(std::ceil(std::max(x0, x1) + radius_px + 1));
  int py0 = static_cast<int>(std::floor(std::min(y0, y1) - radius_px - 1));
  int py1 = static_cast<int>(std::ceil(std::max(y0, y1) + radius_px + 1));
  for (int y = py0; y <= py1; ++y)
    for (int x = px0; x <= px1; ++x) {
      double d = seg_dist(x + 0.5, y + 0.5, x0, y0, x1, y1);
      blend_px(img, x, y, std::clamp(radius_px + 0.5 - d, 0.0, 1.0), rgb);
    }
}

}  // namespace chalk
