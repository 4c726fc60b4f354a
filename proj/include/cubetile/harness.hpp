#pragma once

// Generators for tiling and non-tiling translate sets, and the cross-check
// that runs the exact tiling decision against the spectral completeness test
// on the same set. A tiling set is a spectrum and a spectrum is a tiling set,
// so the two must always agree; disagreement means a bug.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubetile/analysis.hpp"
#include "cubetile/tiling.hpp"
#include "cubetile/translate_set.hpp"

namespace cubetile {

/// Z^d as a periodic set: period [1, ..., 1], offset at the origin.
TranslateSet gen_lattice(std::size_t dim);

/// Z^d with every column along `axis` shifted by its own amount. Columns are
/// indexed by their off-axis coordinates in [0, period_j), lexicographically;
/// `shifts` holds one value in [0, 1) per column.
TranslateSet gen_shifted_columns(std::size_t dim, const std::vector<std::int64_t>& period,
                                 const std::vector<Rational>& shifts, std::size_t axis);

struct RandomSlideOptions {
  /// Period per axis of the starting copy of Z^d.
  std::int64_t period = 2;
  /// All shifts and anchors share one denominator drawn from 2..max_denominator.
  std::int64_t max_denominator = 8;
};

/// Z^d rewritten by `steps` random moves, each either a slide or a column
/// shift along a fixed (seed-chosen) column axis. Both preserve tiling, so the
/// result always tiles. Deterministic for a fixed seed.
TranslateSet gen_random_slides(std::uint64_t seed, std::size_t dim, std::size_t steps,
                               const RandomSlideOptions& options = {});

/// The lattice spanned by the columns of a lower unitriangular rational
/// matrix (row-major, diagonal ignored and taken as 1), as a periodic set.
TranslateSet gen_triangular_lattice(const std::vector<std::vector<Rational>>& lower);

/// A random lower unitriangular lattice with entries k/den, den <= max_denominator.
TranslateSet gen_random_triangular_lattice(std::uint64_t seed, std::size_t dim, std::int64_t max_denominator);

/// Moves one offset by a non-integer multiple of 1/den on one axis so that the
/// result no longer tiles. Throws PreconditionError if no such move is found.
TranslateSet perturb_one_offset(const TranslateSet& set, std::uint64_t seed);

/// A deterministic rational Halton sequence in the period box (the unit box
/// for finite sets).
std::vector<Point> default_samples(const TranslateSet& set, std::size_t count = 8);

struct CrossCheckOptions {
  std::int64_t cutoff = 100;
  double eps = 0.05;
  /// Replaces the default Halton samples when set.
  std::optional<std::vector<Point>> samples;
  /// Centres of uncovered cells added as samples for Hole verdicts.
  std::size_t hole_samples = 16;
  std::int64_t cell_budget = kDefaultCellBudget;
};

enum class SpectrumOutcome { LikelySpectrum, NotSpectrum };

struct CrossCheckResult {
  std::string id;
  TilingVerdict tiling;
  SpectrumOutcome spectrum = SpectrumOutcome::LikelySpectrum;
  /// Sample with a certified completeness deficit, when that is the evidence.
  std::optional<Point> deficit_witness;
  /// Non-orthogonal pairs, when that is the evidence.
  ViolationReport violations{ViolationKind::Orthogonality, {}};
  std::vector<CompletenessReport> completeness;
  bool agreement = false;

  /// "id: TILES / LikelySpectrum / agree" style one-liner.
  [[nodiscard]] std::string summary() const;
};

CrossCheckResult cross_check(const TranslateSet& set, const CrossCheckOptions& options = {}, std::string id = "set");

}  // namespace cubetile
