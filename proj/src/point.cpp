#include "cubetile/point.hpp"

#include <algorithm>

#include "cubetile/errors.hpp"

namespace cubetile {

Point Point::axis(std::size_t dim, std::size_t axis, const Rational& length) {
  Point p = zero(dim);
  p[axis] = length;
  return p;
}

bool Point::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_integer(); });
}

Point& Point::operator+=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= o.coords_[j];
  return *this;
}

Point operator*(const Rational& s, Point p) {
  for (auto& c : p.coords_) c *= s;
  return p;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t j = 0; j < n; ++j) {
    if (auto c = a[j] <=> b[j]; c != 0) return c;
  }
  return a.dim() <=> b.dim();
}

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) out += ", ";
    out += coords_[j].to_string();
  }
  return out + ")";
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  RationalHash h;
  std::size_t seed = p.dim();
  for (const auto& c : p) seed ^= h(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace cubetile
