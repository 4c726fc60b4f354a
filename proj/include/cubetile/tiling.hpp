#pragma once

// Exact tiling decisions.
//
// A periodic set with common denominator q tiles R^d iff its cubes cover each
// cell of side 1/q of one period torus exactly once. Cubes are half-open, so a
// cube at scaled offset o covers cells o .. o+q-1 on each axis (mod N_j q)
// and boundaries are never counted twice.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubetile/exact_cover.hpp"
#include "cubetile/point.hpp"
#include "cubetile/translate_set.hpp"

namespace cubetile {

inline constexpr std::int64_t kDefaultCellBudget = 100'000'000;

struct TorusGrid {
  std::size_t dim = 0;
  std::vector<std::int64_t> period;
  std::int64_t denominator = 1;
  /// Cells per axis: period[j] * denominator.
  std::vector<std::int64_t> extent;
  /// Row-major over cell indices, axis 0 most significant.
  std::vector<std::int32_t> multiplicity;

  [[nodiscard]] std::size_t cell_count() const { return multiplicity.size(); }
  [[nodiscard]] std::vector<std::int64_t> cell_of(std::size_t index) const;
  [[nodiscard]] std::size_t index_of(const std::vector<std::int64_t>& cell) const;
  /// Lower corner of a cell as a point of R^d.
  [[nodiscard]] Point corner(const std::vector<std::int64_t>& cell) const;
  [[nodiscard]] std::int64_t total_multiplicity() const;
};

/// Throws GridTooLarge above `cell_budget` cells, PreconditionError for finite sets.
TorusGrid torus_cover_map(const TranslateSet& set, std::int64_t cell_budget = kDefaultCellBudget);

enum class TilingOutcome { Tiles, Overlap, Hole };

struct TilingVerdict {
  TilingOutcome outcome = TilingOutcome::Tiles;
  /// Witness cell (grid indices) and its lower corner; empty for Tiles.
  std::vector<std::int64_t> cell;
  std::optional<Point> cell_corner;
  /// Two translates whose cubes both contain the witness cell (Overlap only).
  std::optional<std::pair<Point, Point>> covering;

  [[nodiscard]] bool tiles() const { return outcome == TilingOutcome::Tiles; }
  /// "TILES" | "OVERLAP at <cell>: <t> | <u>" | "HOLE at <cell>"
  [[nodiscard]] std::string to_text() const;
};

TilingVerdict check_tiling(const TranslateSet& set, std::int64_t cell_budget = kDefaultCellBudget);

/// Every translate whose cube contains the given cell of the grid, as actual
/// translates (not reduced offsets), sorted.
std::vector<Point> covering_translates(const TranslateSet& set, const TorusGrid& grid,
                                       const std::vector<std::int64_t>& cell);

/// Centres of the uncovered cells of the grid, in cell order.
std::vector<Point> hole_centres(const TorusGrid& grid, std::size_t limit);

struct EnumerationOptions {
  /// Drop tilings that are torus translates (by grid vectors) of an earlier one.
  bool dedup_translations = false;
  /// When set, candidate rows are shuffled with this seed, which changes the
  /// order tilings appear in (used for sampling).
  std::optional<std::uint64_t> shuffle_seed;
  std::int64_t cell_budget = kDefaultCellBudget;
};

/// Streams every tiling of the period torus by cubes placed on the 1/q grid.
/// Each stream holds its own search state; use one instance per consumer.
class TilingEnumerator {
 public:
  TilingEnumerator(std::size_t dim, std::vector<std::int64_t> period, std::int64_t denominator,
                   EnumerationOptions options = {});

  std::optional<TranslateSet> next();

 private:
  [[nodiscard]] std::vector<std::int64_t> translation_key(const std::vector<std::size_t>& rows) const;

  std::size_t dim_;
  std::vector<std::int64_t> period_;
  std::int64_t q_;
  EnumerationOptions options_;
  std::vector<std::int64_t> extent_;
  std::vector<std::vector<std::int64_t>> candidates_;  // scaled grid positions, by row
  std::unique_ptr<ExactCover> search_;
  std::set<std::vector<std::int64_t>> seen_;
};

/// Whether some cube of the set contains the point.
bool is_covered(const TranslateSet& set, const Point& p);

/// The first (lexicographic) cell of the decomposition of the window by all
/// cube faces that no cube covers, returned as the cell centre.
std::optional<Point> hole_finder(const TranslateSet& set, const Window& window);

}  // namespace cubetile
