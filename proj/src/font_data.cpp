// Embedded glyph skeletons. Single-stroke letterforms on a 32 units/em
// grid, baseline y=0, y up: cap height 21, x-height 14, descender -7.
// Curves are polyline-approximated elliptical arcs.

#include <cmath>
#include <unordered_map>
#include <vector>

#include "chalk/font.hpp"

namespace chalk {

namespace {

using Pts = Stroke;

Pts pl(std::initializer_list<StrokePoint> pts) { return Pts(pts); }

Pts arc(float cx, float cy, float rx, float ry, float a0_deg, float a1_deg, int segs) {
  Pts p;
  p.reserve(segs + 1);
  for (int i = 0; i <= segs; ++i) {
    float a = (a0_deg + (a1_deg - a0_deg) * i / segs) * static_cast<float>(M_PI) / 180.0f;
    p.push_back({cx + rx * std::cos(a), cy + ry * std::sin(a)});
  }
  return p;
}

Pts circle(float cx, float cy, float rx, float ry, int segs = 12) {
  return arc(cx, cy, rx, ry, 0, 360, segs);
}

// Concatenate path pieces into one continuous stroke.
Pts join(std::initializer_list<Pts> pieces) {
  Pts out;
  for (const Pts& p : pieces) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct Builder {
  std::unordered_map<char32_t, Glyph> table;

  void add(char32_t cp, std::vector<Stroke> strokes) {
    Glyph g;
    g.strokes = std::move(strokes);
    g.min_x = 1e9f;
    g.max_x = -1e9f;
    g.min_y = 1e9f;
    g.max_y = -1e9f;
    for (const auto& s : g.strokes)
      for (const auto& p : s) {
        g.min_x = std::min(g.min_x, p.x);
        g.max_x = std::max(g.max_x, p.x);
        g.min_y = std::min(g.min_y, p.y);
        g.max_y = std::max(g.max_y, p.y);
      }
    table[cp] = std::move(g);
  }

  enum class Accent { Acute, Tilde, Diaeresis };

  void add_accented(char32_t cp, char32_t base_cp, Accent acc, bool tall,
                    bool strip_dot = false) {
    const Glyph& base = table.at(base_cp);
    std::vector<Stroke> strokes = base.strokes;
    if (strip_dot) {
      // dotted bases ('i') store the dot as their first stroke
      strokes.erase(strokes.begin());
    }
    float cx = 0.5f * (base.min_x + base.max_x);
    float lo = tall ? 22.6f : 16.3f;
    switch (acc) {
      case Accent::Acute:
        strokes.push_back(pl({{cx - 1.4f, lo}, {cx + 1.4f, lo + 3.0f}}));
        break;
      case Accent::Diaeresis:
        strokes.push_back(pl({{cx - 2.1f, lo + 0.4f}, {cx - 2.1f, lo + 1.2f}}));
        strokes.push_back(pl({{cx + 2.1f, lo + 0.4f}, {cx + 2.1f, lo + 1.2f}}));
        break;
      case Accent::Tilde:
        strokes.push_back(pl({{cx - 3.0f, lo + 0.3f},
                              {cx - 1.1f, lo + 1.9f},
                              {cx + 1.1f, lo + 0.3f},
                              {cx + 3.0f, lo + 1.9f}}));
        break;
    }
    add(cp, std::move(strokes));
  }

  // 180-degree rotation of another glyph (forms the inverted marks).
  void add_rotated(char32_t cp, char32_t base_cp, float pivot_x, float pivot_y) {
    const Glyph& base = table.at(base_cp);
    std::vector<Stroke> strokes;
    for (const auto& s : base.strokes) {
      Stroke r;
      for (const auto& p : s) r.push_back({2 * pivot_x - p.x, 2 * pivot_y - p.y});
      strokes.push_back(std::move(r));
    }
    add(cp, std::move(strokes));
  }
};

std::unordered_map<char32_t, Glyph> build_table() {
  Builder b;

  // --- uppercase ---
  b.add(U'A', {pl({{0, 0}, {6, 21}, {12, 0}}), pl({{2.7f, 6.5f}, {9.3f, 6.5f}})});
  b.add(U'B', {pl({{0, 0}, {0, 21}}),
               join({pl({{0, 21}, {6.5f, 21}}), arc(6.5f, 17, 4.5f, 4, 90, -90, 8),
                     pl({{6.5f, 13}, {0, 13}})}),
               join({pl({{0, 13}, {7, 13}}), arc(7, 6.5f, 5, 6.5f, 90, -90, 8),
                     pl({{7, 0}, {0, 0}})})});
  b.add(U'C', {arc(6, 10.5f, 6, 10.5f, 35, 325, 14)});
  b.add(U'D', {pl({{0, 0}, {0, 21}}),
               join({pl({{0, 21}, {5.5f, 21}}), arc(5.5f, 10.5f, 6.5f, 10.5f, 90, -90, 12),
                     pl({{5.5f, 0}, {0, 0}})})});
  b.add(U'E', {pl({{11, 21}, {0, 21}, {0, 0}, {11, 0}}), pl({{0, 11}, {9, 11}})});
  b.add(U'F', {pl({{11, 21}, {0, 21}, {0, 0}}), pl({{0, 11}, {8.5f, 11}})});
  b.add(U'G', {arc(6, 10.5f, 6, 10.5f, 35, 325, 14), pl({{6.8f, 9}, {12, 9}, {12, 4.2f}})});
  b.add(U'H', {pl({{0, 0}, {0, 21}}), pl({{12, 0}, {12, 21}}), pl({{0, 11}, {12, 11}})});
  b.add(U'I', {pl({{1.5f, 0}, {1.5f, 21}})});
  b.add(U'J', {join({pl({{8, 21}, {8, 4.5f}}), arc(4, 4.5f, 4, 4.5f, 0, -180, 8)})});
  b.add(U'K', {pl({{0, 0}, {0, 21}}), pl({{11, 21}, {0, 8}}), pl({{4.2f, 13}, {11.5f, 0}})});
  b.add(U'L', {pl({{0, 21}, {0, 0}, {10.5f, 0}})});
  b.add(U'M', {pl({{0, 0}, {0, 21}, {7.5f, 4}, {15, 21}, {15, 0}})});
  b.add(U'N', {pl({{0, 0}, {0, 21}, {12, 0}, {12, 21}})});
  b.add(U'O', {circle(6, 10.5f, 6, 10.5f, 16)});
  b.add(U'P', {pl({{0, 0}, {0, 21}}),
               join({pl({{0, 21}, {7, 21}}), arc(7, 16, 4.8f, 5, 90, -90, 8),
                     pl({{7, 11}, {0, 11}})})});
  b.add(U'Q', {circle(6, 10.5f, 6, 10.5f, 16), pl({{7.5f, 4.5f}, {13, -1.5f}})});
  b.add(U'R', {pl({{0, 0}, {0, 21}}),
               join({pl({{0, 21}, {7, 21}}), arc(7, 16, 4.8f, 5, 90, -90, 8),
                     pl({{7, 11}, {0, 11}})}),
               pl({{5.5f, 11}, {12, 0}})});
  b.add(U'S', {pl({{10.6f, 18.4f},
                   {8.4f, 20.6f},
                   {5, 21},
                   {2.4f, 19.6f},
                   {1.3f, 17},
                   {2, 14.4f},
                   {4.4f, 12.6f},
                   {7.8f, 11},
                   {9.9f, 9.2f},
                   {10.7f, 6.6f},
                   {9.9f, 3.4f},
                   {7.4f, 0.9f},
                   {4, 0},
                   {1.2f, 1.6f},
                   {0.4f, 3.4f}})});
  b.add(U'T', {pl({{0, 21}, {12, 21}}), pl({{6, 21}, {6, 0}})});
  b.add(U'U', {join({pl({{0, 21}, {0, 6}}), arc(6, 6, 6, 6, 180, 360, 10),
                     pl({{12, 6}, {12, 21}})})});
  b.add(U'V', {pl({{0, 21}, {6, 0}, {12, 21}})});
  b.add(U'W', {pl({{0, 21}, {3.8f, 0}, {7.5f, 16}, {11.2f, 0}, {15, 21}})});
  b.add(U'X', {pl({{0, 0}, {12, 21}}), pl({{0, 21}, {12, 0}})});
  b.add(U'Y', {pl({{0, 21}, {6, 10}}), pl({{12, 21}, {6, 10}}), pl({{6, 10}, {6, 0}})});
  b.add(U'Z', {pl({{0.5f, 21}, {11.5f, 21}, {0.5f, 0}, {11.5f, 0}})});

  // --- lowercase ---
  b.add(U'a', {circle(4.5f, 7, 4.5f, 7), pl({{9, 14}, {9, 0}})});
  b.add(U'b', {pl({{0, 22}, {0, 0}}), circle(4.6f, 7, 4.4f, 7)});
  b.add(U'c', {arc(4.5f, 7, 4.5f, 7, 40, 320, 10)});
  b.add(U'd', {pl({{9, 22}, {9, 0}}), circle(4.4f, 7, 4.4f, 7)});
  b.add(U'e', {pl({{0.3f, 7.8f}, {8.7f, 7.8f}}), arc(4.5f, 7, 4.5f, 7, 10, 305, 12)});
  b.add(U'f', {join({arc(4.2f, 18.6f, 2.9f, 3.2f, 20, 180, 6), pl({{1.3f, 18.6f}, {1.3f, 0}})}),
               pl({{0, 14}, {5.5f, 14}})});
  b.add(U'g', {circle(4.4f, 7, 4.4f, 7),
               join({pl({{8.8f, 14}, {8.8f, -2.5f}}), arc(4.9f, -2.5f, 3.9f, 4.2f, 0, -160, 7)})});
  b.add(U'h', {pl({{0, 22}, {0, 0}}),
               join({arc(4.5f, 9.3f, 4.5f, 4.7f, 180, 0, 8), pl({{9, 9.3f}, {9, 0}})})});
  b.add(U'i', {pl({{1.2f, 17.6f}, {1.2f, 18.4f}}), pl({{1.2f, 14}, {1.2f, 0}})});
  b.add(U'j', {pl({{2.6f, 17.6f}, {2.6f, 18.4f}}),
               join({pl({{2.6f, 14}, {2.6f, -2.8f}}), arc(-0.4f, -2.8f, 3, 4, 0, -120, 6)})});
  b.add(U'k', {pl({{0, 22}, {0, 0}}), pl({{8, 14}, {0, 5.2f}}), pl({{3.1f, 8.6f}, {8.6f, 0}})});
  b.add(U'l', {pl({{1.2f, 22}, {1.2f, 0}})});
  b.add(U'm', {pl({{0, 14}, {0, 0}}),
               join({arc(3.3f, 9.8f, 3.3f, 4.2f, 180, 0, 7), pl({{6.6f, 9.8f}, {6.6f, 0}})}),
               join({arc(9.9f, 9.8f, 3.3f, 4.2f, 180, 0, 7), pl({{13.2f, 9.8f}, {13.2f, 0}})})});
  b.add(U'n', {pl({{0, 14}, {0, 0}}),
               join({arc(4.5f, 9.3f, 4.5f, 4.7f, 180, 0, 8), pl({{9, 9.3f}, {9, 0}})})});
  b.add(U'o', {circle(4.5f, 7, 4.5f, 7)});
  b.add(U'p', {pl({{0, 14}, {0, -7}}), circle(4.6f, 7, 4.4f, 7)});
  b.add(U'q', {circle(4.4f, 7, 4.4f, 7), pl({{8.8f, 14}, {8.8f, -7}})});
  b.add(U'r', {pl({{0, 14}, {0, 0}}), arc(4.3f, 9.4f, 4.3f, 4.6f, 180, 35, 6)});
  b.add(U's', {pl({{8.3f, 12.3f},
                   {6.2f, 13.9f},
                   {3.2f, 14},
                   {1.1f, 12.4f},
                   {0.9f, 10.6f},
                   {2.4f, 9},
                   {6, 7.7f},
                   {8.2f, 6.3f},
                   {8.9f, 4.3f},
                   {7.9f, 1.8f},
                   {5.2f, 0.2f},
                   {2.2f, 0.3f},
                   {0.4f, 1.8f}})});
  b.add(U't', {join({pl({{2.2f, 19.5f}, {2.2f, 3}}), arc(4.7f, 3, 2.5f, 3, 180, 270, 5)}),
               pl({{0, 14}, {6, 14}})});
  b.add(U'u', {join({pl({{0, 14}, {0, 4.5f}}), arc(4.5f, 4.5f, 4.5f, 4.5f, 180, 360, 8)}),
               pl({{9, 14}, {9, 0}})});
  b.add(U'v', {pl({{0, 14}, {4.5f, 0}, {9, 14}})});
  b.add(U'w', {pl({{0, 14}, {3.1f, 0}, {6.1f, 11}, {9.1f, 0}, {12.2f, 14}})});
  b.add(U'x', {pl({{0, 0}, {9, 14}}), pl({{0, 14}, {9, 0}})});
  b.add(U'y', {pl({{0, 14}, {4.4f, 0.6f}}), pl({{8.8f, 14}, {2.0f, -7}})});
  b.add(U'z', {pl({{0.4f, 14}, {8.4f, 14}, {0.4f, 0}, {8.4f, 0}})});

  // --- digits ---
  b.add(U'0', {circle(5, 10.5f, 5, 10.5f, 14)});
  b.add(U'1', {pl({{1.8f, 16.8f}, {5.2f, 21}, {5.2f, 0}}), pl({{1.6f, 0}, {8.6f, 0}})});
  b.add(U'2', {join({arc(5, 16.1f, 4.7f, 4.9f, 155, 0, 9),
                     pl({{9.7f, 16.1f}, {9.3f, 13.2f}, {0.3f, 0}, {9.9f, 0}})})});
  b.add(U'3', {join({arc(4.8f, 16.3f, 4.6f, 4.7f, 150, -70, 9),
                     arc(4.7f, 5.9f, 5.2f, 5.9f, 68, -160, 11)})});
  b.add(U'4', {pl({{7, 21}, {0, 6.2f}, {10.6f, 6.2f}}), pl({{7, 21}, {7, 0}})});
  b.add(U'5', {join({pl({{9.2f, 21}, {1.8f, 21}, {1.5f, 12.3f}}),
                     arc(4.8f, 6.4f, 5.1f, 6.3f, 115, -140, 12)})});
  b.add(U'6', {join({arc(5.6f, 14.8f, 5, 6, 60, 180, 8), pl({{0.6f, 14.8f}, {0.6f, 4.6f}})}),
               circle(5, 4.6f, 4.5f, 4.6f)});
  b.add(U'7', {pl({{0.4f, 21}, {9.8f, 21}, {3.4f, 0}})});
  b.add(U'8', {circle(5, 15.7f, 4.2f, 5.2f), circle(5, 5.2f, 4.8f, 5.3f)});
  b.add(U'9', {circle(5, 16.4f, 4.5f, 4.6f),
               join({pl({{9.4f, 16.4f}, {9.4f, 6.4f}}), arc(4.4f, 6.4f, 5, 6.4f, 0, -120, 8)})});

  // --- punctuation ---
  b.add(U'.', {pl({{0.9f, 0.4f}, {0.9f, 1.2f}})});
  b.add(U',', {pl({{1.3f, 1.6f}, {0.2f, -2.6f}})});
  b.add(U':', {pl({{0.9f, 0.4f}, {0.9f, 1.2f}}), pl({{0.9f, 8.6f}, {0.9f, 9.4f}})});
  b.add(U';', {pl({{1.3f, 8.6f}, {1.3f, 9.4f}}), pl({{1.3f, 1.6f}, {0.2f, -2.6f}})});
  b.add(U'-', {pl({{0, 7.2f}, {6.5f, 7.2f}})});
  b.add(U'_', {pl({{0, -2}, {9, -2}})});
  b.add(U'(', {arc(7, 7.5f, 5.5f, 13.5f, 105, 255, 8)});
  b.add(U')', {arc(1, 7.5f, 5.5f, 13.5f, 75, -75, 8)});
  b.add(U'/', {pl({{0, -2.5f}, {7.5f, 22}})});
  b.add(U'\'', {pl({{0.9f, 21}, {0.5f, 16.5f}})});
  b.add(U'"', {pl({{0.9f, 21}, {0.5f, 16.5f}}), pl({{3.9f, 21}, {3.5f, 16.5f}})});
  b.add(U'!', {pl({{1, 21}, {1, 5.8f}}), pl({{1, 0.4f}, {1, 1.2f}})});
  b.add(U'?', {join({arc(4.5f, 16.4f, 4.3f, 4.7f, 180, -55, 9),
                     pl({{6.97f, 12.55f}, {4.6f, 9.2f}, {4.6f, 5.6f}})}),
               pl({{4.6f, 0.4f}, {4.6f, 1.2f}})});
  b.add(U'&', {circle(3.8f, 16.8f, 3, 4, 10), circle(4.2f, 5.4f, 4.2f, 5.4f),
               pl({{8.4f, 9}, {11, 0.2f}})});
  b.add(U'%', {circle(2.4f, 17.6f, 2.4f, 2.6f, 8), circle(7.8f, 3.4f, 2.4f, 2.6f, 8),
               pl({{1.2f, 0}, {9, 21}})});
  b.add(U'º', {circle(2.6f, 18.2f, 2.5f, 2.6f, 8)});
  b.add(U'ª', {circle(2.4f, 17.8f, 2.2f, 2.5f, 8), pl({{4.6f, 20.3f}, {4.6f, 15.3f}})});
  b.add_rotated(U'¿', U'?', 3.7f, 7.0f);
  b.add_rotated(U'¡', U'!', 1.0f, 7.0f);

  // --- accented (Spanish) ---
  b.add_accented(U'á', U'a', Builder::Accent::Acute, false);
  b.add_accented(U'é', U'e', Builder::Accent::Acute, false);
  b.add_accented(U'í', U'i', Builder::Accent::Acute, false, /*strip_dot=*/true);
  b.add_accented(U'ó', U'o', Builder::Accent::Acute, false);
  b.add_accented(U'ú', U'u', Builder::Accent::Acute, false);
  b.add_accented(U'ü', U'u', Builder::Accent::Diaeresis, false);
  b.add_accented(U'ñ', U'n', Builder::Accent::Tilde, false);
  b.add_accented(U'Á', U'A', Builder::Accent::Acute, true);
  b.add_accented(U'É', U'E', Builder::Accent::Acute, true);
  b.add_accented(U'Í', U'I', Builder::Accent::Acute, true);
  b.add_accented(U'Ó', U'O', Builder::Accent::Acute, true);
  b.add_accented(U'Ú', U'U', Builder::Accent::Acute, true);
  b.add_accented(U'Ü', U'U', Builder::Accent::Diaeresis, true);
  b.add_accented(U'Ñ', U'N', Builder::Accent::Tilde, true);

  return std::move(b.table);
}

}  // namespace

const std::unordered_map<char32_t, Glyph>& glyph_table() {
  static const std::unordered_map<char32_t, Glyph> table = build_table();
  return table;
}

}  // namespace chalk
