#pragma once

#include <string>
#include <vector>

namespace chordal {

/// Square matrix of nonnegative integers, 0-based indices.
class FilledMatrix {
 public:
  FilledMatrix() = default;
  explicit FilledMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  static FilledMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int operator()(int i, int j) const { return data_[index(i, j)]; }
  int& operator()(int i, int j) { return data_[index(i, j)]; }

  std::vector<std::vector<int>> rows() const;
  bool is_symmetric() const;
  bool has_zero_diagonal() const;
  /// Symmetric 0/1 matrix with one 1 in every row.
  bool is_perfect_matching() const;
  int row_sum(int i) const;
  int col_sum(int j) const;

  /// Chord list "i-j xm" (1-based, i < j), one per line, sorted.
  std::string chord_list() const;
  /// Rows of space-separated entries.
  std::string render() const;

  bool operator==(const FilledMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<int> data_;
};

}  // namespace chordal
