#pragma once

#include <vector>

#include "chordal/crystals.hpp"
#include "chordal/matrix.hpp"
#include "chordal/weights.hpp"

namespace chordal {

/// Corner opposite lambda in a promotion cell: dom(kappa + nu - lambda).
Partition local_rule(const WeightVec& lambda, const WeightVec& kappa, const WeightVec& nu);

enum class FillRule { osc, fan };

/// osc: 1 if kappa + nu - lambda has a negative entry, else 0.
/// fan: number of negative entries of kappa + nu - lambda.
int fill_value(FillRule rule, const WeightVec& lambda, const WeightVec& kappa, const WeightVec& nu);

/// Promotion of a weight-zero tableau. Vacillating tableaux are promoted by
/// embedding them as oscillating tableaux and promoting twice.
TableauSeq promote(const TableauSeq& t);
TableauSeq promote_power(const TableauSeq& t, int times);

/// mu^{i,j}, 0 <= i, j < n: entry (j - i) mod n of the i-th promotion.
class PromotionGrid {
 public:
  explicit PromotionGrid(const TableauSeq& t);
  int size() const { return n_; }
  int rank() const { return rank_; }
  /// Indices are taken mod n.
  const Partition& at(int i, int j) const;

 private:
  int n_;
  int rank_;
  std::vector<TableauSeq> rows_;
};

enum class ChordMap { M_O, M_F, M_VO, M_VF };

/// Chord matrix read off the promotion grid. M_VO and M_VF go through the
/// oscillating and fan embeddings of a vacillating tableau.
FilledMatrix chord_matrix(ChordMap map, const TableauSeq& t);
ChordMap default_chord_map(Family f);

/// Moves entry (i, j) to (i-1, j-1), indices mod n.
FilledMatrix rotate_matrix(const FilledMatrix& m);

}  // namespace chordal
