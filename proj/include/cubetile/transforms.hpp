#pragma once

// Verdict-preserving rewrites of translate sets.
//
// A slide along axis j with anchor a and shift b moves by b * e_j exactly the
// translates whose j-th coordinate is not congruent to a modulo 1. It maps
// spectra to spectra and tilings to tilings.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cubetile/point.hpp"
#include "cubetile/rational.hpp"
#include "cubetile/translate_set.hpp"

namespace cubetile {

struct SlideSpec {
  std::size_t axis = 0;  // 0-based
  Rational anchor;
  Rational shift;
};

/// Whether `t` is moved by the slide.
bool slide_moves(const Point& t, const SlideSpec& spec);

/// Throws TranslateCollision when two image translates coincide (only
/// possible for non-orthogonal inputs).
TranslateSet slide(const TranslateSet& set, const SlideSpec& spec);

/// Moves the whole class { u : u_axis - t_axis in Z } by -(t_axis - t'_axis)
/// so that t and t' end up with equal axis coordinates. Realized as a slide
/// anchored at t_axis followed by a global translation.
///
/// Throws PreconditionError unless both translates are in the set and
/// t_axis - t'_axis is not an integer.
TranslateSet keller_shift(const TranslateSet& set, const Point& t, const Point& t_prime, std::size_t axis = 0);

enum class LineOrder { Lexicographic, ReverseLexicographic };

struct IntegerizeOptions {
  LineOrder order = LineOrder::Lexicographic;
  /// Called with every intermediate set, after each slide.
  std::function<void(const TranslateSet&, const SlideSpec&)> trace;
};

struct IntegerizeResult {
  TranslateSet set;
  /// Source offset and its (unreduced) image, in source order.
  std::vector<std::pair<Point, Point>> moves;
  std::vector<SlideSpec> slides;
};

/// Slides the set, axis by axis and line by line, until every translate in
/// (-N, N)^d is integral. The lines of one axis are processed in
/// lexicographic order of their off-axis integer coordinates; the running sum
/// of shifts stays in (-1, 1), so no translate moves by a full unit on any
/// axis.
///
/// Throws NotOrthogonal unless the set is orthogonal on the working box
/// (-N-3, N+3)^d (globally, for periodic sets).
IntegerizeResult integerize(const TranslateSet& set, std::int64_t cutoff, const IntegerizeOptions& options = {});

}  // namespace cubetile
