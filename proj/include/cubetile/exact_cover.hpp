#pragma once

// Dancing-links exact cover search (Knuth's Algorithm X) as a resumable
// stream: each call to next() continues the backtracking search from the
// previous solution.

#include <cstddef>
#include <optional>
#include <vector>

namespace cubetile {

class ExactCover {
 public:
  /// `rows[r]` lists the columns row r covers. Rows enter each column list in
  /// the order given by `row_order` (identity when empty), which fixes the
  /// order solutions are produced in.
  ExactCover(std::size_t columns, const std::vector<std::vector<std::size_t>>& rows,
             const std::vector<std::size_t>& row_order = {});

  /// Next exact cover as sorted row indices; nullopt once exhausted.
  std::optional<std::vector<std::size_t>> next();

  [[nodiscard]] std::size_t nodes_visited() const { return visited_; }

 private:
  void cover(std::size_t c);
  void uncover(std::size_t c);
  void cover_row_others(std::size_t node);
  void uncover_row_others(std::size_t node);
  [[nodiscard]] std::size_t choose_column() const;
  std::vector<std::size_t> current_solution() const;

  // Node 0 is the root, nodes 1..columns are column headers.
  std::vector<std::size_t> left_, right_, up_, down_, column_, row_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> stack_;
  bool started_ = false;
  bool done_ = false;
  std::size_t visited_ = 0;
};

}  // namespace cubetile
