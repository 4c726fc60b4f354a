#pragma once

// Translate sets of the unit cube [0,1)^d.
//
// A set is either a finite list of translates or a periodic pattern
// { offset + period (.) k : k in Z^d } with integer periods. Infinite sets
// exist only through the periodic mode.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubetile/point.hpp"
#include "cubetile/rational.hpp"

namespace cubetile {

enum class Mode { Finite, Periodic };

class TranslateSet {
 public:
  /// Structural validation only (dimension, positive periods). Use
  /// canonicalize() to reduce, sort, and reject duplicates.
  TranslateSet(std::size_t dim, Mode mode, std::vector<Point> offsets, std::vector<std::int64_t> period = {});

  static TranslateSet finite(std::size_t dim, std::vector<Point> offsets);
  static TranslateSet periodic(std::vector<std::int64_t> period, std::vector<Point> offsets);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] Mode mode() const { return mode_; }
  [[nodiscard]] bool is_periodic() const { return mode_ == Mode::Periodic; }
  [[nodiscard]] const std::vector<Point>& offsets() const { return offsets_; }
  [[nodiscard]] const std::vector<std::int64_t>& period() const { return period_; }
  [[nodiscard]] std::size_t size() const { return offsets_.size(); }
  [[nodiscard]] bool is_canonical() const { return canonical_; }

  /// Product of the periods: the number of offsets a periodic tiling must have.
  [[nodiscard]] std::int64_t period_volume() const;

  /// The point as a vector of the period lattice: period (.) k.
  [[nodiscard]] Point lattice_vector(const std::vector<std::int64_t>& k) const;

  /// Exact membership in the represented (possibly infinite) set.
  [[nodiscard]] bool contains(const Point& t) const;

  /// Reduces t into the fundamental box [0, period) coordinatewise.
  [[nodiscard]] Point reduce(const Point& t) const;

  /// Same mode and period, new offsets. The result is canonicalized.
  [[nodiscard]] TranslateSet with_offsets(std::vector<Point> offsets) const;

  friend bool operator==(const TranslateSet& a, const TranslateSet& b);

 private:
  friend TranslateSet canonicalize(const TranslateSet& set);

  std::size_t dim_;
  Mode mode_;
  std::vector<Point> offsets_;
  std::vector<std::int64_t> period_;
  bool canonical_ = false;
};

/// Open axis-aligned box with rational corners.
class Window {
 public:
  Window(Point lower, Point upper);

  /// The box (-N-1, N+1)^d.
  static Window radius(std::size_t dim, const Rational& n);
  /// The box (lo, hi)^d.
  static Window cube(std::size_t dim, const Rational& lo, const Rational& hi);

  [[nodiscard]] std::size_t dim() const { return lower_.dim(); }
  [[nodiscard]] const Point& lower() const { return lower_; }
  [[nodiscard]] const Point& upper() const { return upper_; }
  [[nodiscard]] bool contains(const Point& p) const;
  /// True when this box lies inside `outer`.
  [[nodiscard]] bool inside(const Window& outer) const;
  [[nodiscard]] Window translated(const Point& shift) const;

 private:
  Point lower_;
  Point upper_;
};

/// Reduces coordinates (mod period in periodic mode), sorts offsets
/// lexicographically. Throws DuplicateTranslate if two offsets coincide.
TranslateSet canonicalize(const TranslateSet& set);

/// Every translate of the represented set inside the open window, sorted.
/// A finite set simply yields those of its translates that fall inside.
std::vector<Point> enumerate_window(const TranslateSet& set, const Window& window);

/// lcm of all offset coordinate denominators (1 for the empty set).
std::int64_t common_denominator(const TranslateSet& set);

/// t * q as integers; throws if some coordinate of t is not a multiple of 1/q.
std::vector<std::int64_t> scale_to_grid(const Point& t, std::int64_t q);

/// Translates every offset by `shift`.
TranslateSet translate_all(const TranslateSet& set, const Point& shift);

namespace detail {
/// Integers k with lo < o + period * k < hi, as an inclusive range (empty when first > second).
std::pair<mpz_class, mpz_class> period_index_range(const Rational& o, std::int64_t period, const Rational& lo,
                                                   const Rational& hi);
}  // namespace detail

}  // namespace cubetile
