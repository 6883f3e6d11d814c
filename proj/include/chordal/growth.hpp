#pragma once

#include <stdexcept>
#include <vector>

#include "chordal/crystals.hpp"
#include "chordal/matrix.hpp"
#include "chordal/weights.hpp"

namespace chordal {

/// Local rules for a cell with corners alpha (NW), beta (NE), gamma (SW),
/// delta (SE). zero_one: Fomin rules for 0/1 fillings. burge: vertical strips.
/// rsk: horizontal strips.
enum class RuleSet { zero_one, burge, rsk };

RuleSet rule_for(Family f);

/// Inputs outside the domain of a local rule.
class MalformedCell : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Filling that grows into something other than a tableau of the family.
class InvalidOutput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Computes beta from gamma, delta, alpha and the cell entry m.
Partition cell_forward(RuleSet rule, const Partition& gamma, const Partition& delta,
                       const Partition& alpha, int m);

struct CellSolution {
  Partition gamma;
  int m = 0;
  bool operator==(const CellSolution&) const = default;
};

/// Computes gamma and m from beta, delta, alpha.
CellSolution cell_backward(RuleSet rule, const Partition& beta, const Partition& delta,
                           const Partition& alpha);

/// Corner labels alpha_{i,j}, 0 <= j <= i <= n, of a triangular growth diagram
/// with the tableau on the diagonal alpha_{k,k}, and the cell entries m_{i,j}
/// for 1 <= j < i <= n. Cell (i,j) has corners NW alpha_{i-1,j-1},
/// NE alpha_{i-1,j}, SW alpha_{i,j-1}, SE alpha_{i,j}.
class CornerGrid {
 public:
  CornerGrid() = default;
  explicit CornerGrid(int n);

  int size() const { return n_; }
  const Partition& corner(int i, int j) const { return corners_[i][j]; }
  Partition& corner(int i, int j) { return corners_[i][j]; }
  int entry(int i, int j) const { return entries_[i][j]; }
  int& entry(int i, int j) { return entries_[i][j]; }

  /// Symmetric n x n matrix of cell entries with zero diagonal.
  FilledMatrix matrix() const;

 private:
  int n_ = 0;
  std::vector<std::vector<Partition>> corners_;
  std::vector<std::vector<int>> entries_;
};

/// Diagonal and subdiagonal labels used to start the backward sweep:
/// mu^k and mu^k cap mu^{k+1} (doubled for vacillating tableaux, with one cell
/// removed from the last row on repeated steps).
CornerGrid seed_grid(const TableauSeq& t);

/// Backward sweep from the diagonal. Throws InvalidOutput if the borders do
/// not come out empty.
CornerGrid growth_diagram(const TableauSeq& t);
FilledMatrix growth_matrix(const TableauSeq& t);

/// Forward sweep of the lower triangle of `filling` from empty borders.
CornerGrid grow_forward(RuleSet rule, const FilledMatrix& filling);

/// Tableau on the diagonal of the forward sweep. Throws InvalidOutput if the
/// filling does not come from a tableau of the family.
TableauSeq growth_inverse(Family family, int rank, const FilledMatrix& filling);

/// Sums of k x k blocks; the size must be divisible by k.
FilledMatrix blocksum(const FilledMatrix& m, int k);

enum class BlowupDir { SE, NE };

/// Replaces each entry by a k x k 0/1 block carrying a diagonal chain (SE) or
/// anti-diagonal chain (NE). Every row and column sum of m must equal k.
FilledMatrix blowup(BlowupDir dir, const FilledMatrix& m, int k);

}  // namespace chordal
