#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace chalk {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Row-major 3x3 matrix. Enough linear algebra for camera math and
/// homographies; anything heavier belongs in a real linalg library.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return {}; }

  static Mat3 rot_x(double rad) {
    double c = std::cos(rad), s = std::sin(rad);
    return {{1, 0, 0, 0, c, -s, 0, s, c}};
  }
  static Mat3 rot_y(double rad) {
    double c = std::cos(rad), s = std::sin(rad);
    return {{c, 0, s, 0, 1, 0, -s, 0, c}};
  }
  static Mat3 rot_z(double rad) {
    double c = std::cos(rad), s = std::sin(rad);
    return {{c, -s, 0, s, c, 0, 0, 0, 1}};
  }

  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }

  Mat3 transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }

  /// Inverse via adjugate; caller guarantees non-singularity.
  Mat3 inverse() const {
    double d = det();
    Mat3 r;
    r.m = {(m[4] * m[8] - m[5] * m[7]) / d, (m[2] * m[7] - m[1] * m[8]) / d,
           (m[1] * m[5] - m[2] * m[4]) / d, (m[5] * m[6] - m[3] * m[8]) / d,
           (m[0] * m[8] - m[2] * m[6]) / d, (m[2] * m[3] - m[0] * m[5]) / d,
           (m[3] * m[7] - m[4] * m[6]) / d, (m[1] * m[6] - m[0] * m[7]) / d,
           (m[0] * m[4] - m[1] * m[3]) / d};
    return r;
  }
};

/// Apply a homography (projective 3x3) to a 2D point.
inline Vec2 apply_homography(const Mat3& h, const Vec2& p) {
  double w = h.m[6] * p.x + h.m[7] * p.y + h.m[8];
  return {(h.m[0] * p.x + h.m[1] * p.y + h.m[2]) / w,
          (h.m[3] * p.x + h.m[4] * p.y + h.m[5]) / w};
}

/// Axis-aligned box, two-corner form. Follows the label-file convention:
/// x0 < x1, y0 < y1, pixel units.
struct Box {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  double cx() const { return 0.5 * (x0 + x1); }
  double cy() const { return 0.5 * (y0 + y1); }

  bool valid() const { return x0 < x1 && y0 < y1; }
  bool contains(const Box& inner) const {
    return inner.x0 >= x0 && inner.y0 >= y0 && inner.x1 <= x1 && inner.y1 <= y1;
  }
  Box united(const Box& o) const {
    return {std::min(x0, o.x0), std::min(y0, o.y0), std::max(x1, o.x1), std::max(y1, o.y1)};
  }
  bool operator==(const Box&) const = default;
};

inline double deg_to_rad(double d) { return d * M_PI / 180.0; }

}  // namespace chalk
