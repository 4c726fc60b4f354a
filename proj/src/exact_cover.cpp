#include "cubetile/exact_cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cubetile {

ExactCover::ExactCover(std::size_t columns, const std::vector<std::vector<std::size_t>>& rows,
                       const std::vector<std::size_t>& row_order) {
  const std::size_t headers = columns + 1;
  std::size_t total = headers;
  for (const auto& r : rows) total += r.size();
  left_.resize(total);
  right_.resize(total);
  up_.resize(total);
  down_.resize(total);
  column_.resize(total);
  row_.resize(total, 0);
  size_.assign(headers, 0);

  for (std::size_t c = 0; c < headers; ++c) {
    left_[c] = c == 0 ? columns : c - 1;
    right_[c] = c == columns ? 0 : c + 1;
    up_[c] = down_[c] = column_[c] = c;
  }

  std::vector<std::size_t> order = row_order;
  if (order.empty()) {
    order.resize(rows.size());
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != rows.size()) throw std::invalid_argument("row order must be a permutation of the rows");

  std::size_t next = headers;
  for (auto r : order) {
    const std::size_t first = next;
    for (auto col : rows[r]) {
      if (col >= columns) throw std::invalid_argument("row references a column out of range");
      const std::size_t c = col + 1;
      const std::size_t n = next++;
      column_[n] = c;
      row_[n] = r;
      up_[n] = up_[c];
      down_[n] = c;
      down_[up_[c]] = n;
      up_[c] = n;
      ++size_[c];
      left_[n] = n == first ? n : n - 1;
      right_[n] = first;
      if (n != first) {
        right_[n - 1] = n;
        left_[first] = n;
      }
    }
  }
}

void ExactCover::cover(std::size_t c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (std::size_t i = down_[c]; i != c; i = down_[i]) {
    for (std::size_t j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[column_[j]];
    }
  }
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = up_[c]; i != c; i = up_[i]) {
    for (std::size_t j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

void ExactCover::cover_row_others(std::size_t node) {
  for (std::size_t j = right_[node]; j != node; j = right_[j]) cover(column_[j]);
}

void ExactCover::uncover_row_others(std::size_t node) {
  for (std::size_t j = left_[node]; j != node; j = left_[j]) uncover(column_[j]);
}

// Fewest remaining candidates; ties go to the lowest column index.
std::size_t ExactCover::choose_column() const {
  std::size_t best = right_[0];
  for (std::size_t c = right_[best]; c != 0; c = right_[c]) {
    if (size_[c] < size_[best]) best = c;
  }
  return best;
}

std::vector<std::size_t> ExactCover::current_solution() const {
  std::vector<std::size_t> rows;
  rows.reserve(stack_.size());
  for (auto n : stack_) rows.push_back(row_[n]);
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::optional<std::vector<std::size_t>> ExactCover::next() {
  if (done_) return std::nullopt;
  bool descend = !started_;
  started_ = true;
  while (true) {
    if (descend) {
      ++visited_;
      if (right_[0] == 0) return current_solution();  // the next call resumes by backtracking
      const std::size_t c = choose_column();
      if (size_[c] > 0) {
        cover(c);
        const std::size_t r = down_[c];
        stack_.push_back(r);
        cover_row_others(r);
        continue;
      }
    }
    // Backtrack: advance the deepest choice to its next candidate row.
    descend = false;
    while (!stack_.empty()) {
      const std::size_t r = stack_.back();
      uncover_row_others(r);
      const std::size_t c = column_[r];
      const std::size_t alt = down_[r];
      if (alt != c) {
        stack_.back() = alt;
        cover_row_others(alt);
        descend = true;
        break;
      }
      uncover(c);
      stack_.pop_back();
    }
    if (!descend) {
      done_ = true;
      return std::nullopt;
    }
  }
}

}  // namespace cubetile
