#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cubetile/rational.hpp"

namespace cubetile {

/// A point of Q^d. Used both for translates t and for sample points x.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }
  /// e_axis scaled by `length`.
  static Point axis(std::size_t dim, std::size_t axis, const Rational& length = Rational(1));

  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t j) const { return coords_[j]; }
  Rational& operator[](std::size_t j) { return coords_[j]; }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  [[nodiscard]] bool is_integral() const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Rational& s, Point p);

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic; fixes every tie-break in the library's outputs.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  /// "(p/q, r, ...)"
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// Throws DimensionMismatch unless both points live in the same dimension.
void require_same_dim(const Point& a, const Point& b);

}  // namespace cubetile
