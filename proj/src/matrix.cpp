#include "chordal/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace chordal {

FilledMatrix FilledMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  FilledMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n_) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < m.n_; ++j) {
      if (rows[i][j] < 0) throw std::invalid_argument("matrix entries must be nonnegative");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<std::vector<int>> FilledMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

bool FilledMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool FilledMatrix::has_zero_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) != 0) return false;
  return true;
}

bool FilledMatrix::is_perfect_matching() const {
  if (!is_symmetric()) return false;
  for (int i = 0; i < n_; ++i) {
    int ones = 0;
    for (int j = 0; j < n_; ++j) {
      int x = (*this)(i, j);
      if (x > 1) return false;
      ones += x;
    }
    if (ones != 1) return false;
  }
  return true;
}

int FilledMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

int FilledMatrix::col_sum(int j) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, j);
  return s;
}

std::string FilledMatrix::chord_list() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (int m = (*this)(i, j); m > 0) out << i + 1 << '-' << j + 1 << " x" << m << '\n';
  return out.str();
}

std::string FilledMatrix::render() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace chordal
