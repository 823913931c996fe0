// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>

namespace trendlab {

struct Vector2 {
  double x{0.0};
  double y{0.0};

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : y; }

  friend constexpr Vector2 operator+(Vector2 a, Vector2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vector2 operator-(Vector2 a, Vector2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vector2 operator*(double s, Vector2 v) { return {s * v.x, s * v.y}; }
};

constexpr double dot(Vector2 a, Vector2 b) { return a.x * b.x + a.y * b.y; }

/// Dense 2x2 real matrix, row-major.
struct Matrix2 {
  double a11{0.0}, a12{0.0};
  double a21{0.0}, a22{0.0};

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2 zero() { return {}; }
  static constexpr Matrix2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

  /// Outer product col * row^T.
  static constexpr Matrix2 outer(Vector2 col, Vector2 row) {
    return {col.x * row.x, col.x * row.y, col.y * row.x, col.y * row.y};
  }

  constexpr Matrix2 transpose() const { return {a11, a21, a12, a22}; }
  constexpr double trace() const { return a11 + a22; }
  constexpr double det() const { return a11 * a22 - a12 * a21; }

  constexpr Vector2 column(std::size_t j) const {
    return j == 0 ? Vector2{a11, a21} : Vector2{a12, a22};
  }

  friend constexpr Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }
  friend constexpr Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend constexpr Matrix2 operator*(double s, const Matrix2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
  }
  friend constexpr Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend constexpr Vector2 operator*(const Matrix2& m, Vector2 v) {
    return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
  }
};

/// Row vector times matrix (u^T A).
constexpr Vector2 left_multiply(Vector2 u, const Matrix2& m) {
  return {u.x * m.a11 + u.y * m.a21, u.x * m.a12 + u.y * m.a22};
}

inline double max_abs(const Matrix2& m) {
  return std::max(std::max(std::fabs(m.a11), std::fabs(m.a12)),
                  std::max(std::fabs(m.a21), std::fabs(m.a22)));
}

inline double max_abs_diff(const Matrix2& a, const Matrix2& b) { return max_abs(a - b); }

}  // namespace trendlab
