#include "chordal/promotion.hpp"

#include <stdexcept>

#include "chordal/growth.hpp"
#include "chordal/virtualize.hpp"

namespace chordal {

Partition local_rule(const WeightVec& lambda, const WeightVec& kappa, const WeightVec& nu) {
  return dominant_representative(kappa + nu - lambda);
}

int fill_value(FillRule rule, const WeightVec& lambda, const WeightVec& kappa, const WeightVec& nu) {
  WeightVec w = kappa + nu - lambda;
  int negatives = 0;
  for (int x : w.entries()) negatives += x < 0;
  if (rule == FillRule::osc) return negatives > 0 ? 1 : 0;
  return negatives;
}

namespace {

TableauSeq promote_direct(const TableauSeq& t) {
  const int n = t.length();
  const int r = t.rank;
  TableauSeq out{t.family, r, std::vector<Partition>(n + 1)};
  WeightVec prev = WeightVec::zero(r);
  for (int j = 1; j < n; ++j) {
    Partition next = local_rule(WeightVec::from_partition(t.steps[j], r), prev,
                                WeightVec::from_partition(t.steps[j + 1], r));
    out.steps[j] = next;
    prev = WeightVec::from_partition(next, r);
  }
  return out;
}

}  // namespace

TableauSeq promote(const TableauSeq& t) {
  if (!is_weight_zero(t)) throw std::invalid_argument("promotion needs a weight-zero tableau");
  if (t.length() == 0) return t;
  if (t.family != Family::vacillating) return promote_direct(t);
  TableauSeq twice = promote_direct(promote_direct(iota_v_to_o(t)));
  auto back = iota_inverse(Embedding::vac_to_osc, twice);
  if (!back) throw NotInImage("promoted embedding is not a vacillating tableau");
  return *back;
}

TableauSeq promote_power(const TableauSeq& t, int times) {
  TableauSeq cur = t;
  for (int k = 0; k < times; ++k) cur = promote(cur);
  return cur;
}

PromotionGrid::PromotionGrid(const TableauSeq& t) : n_(t.length()), rank_(t.rank) {
  if (n_ < 1) throw std::invalid_argument("promotion grid needs a nonempty tableau");
  rows_.push_back(t);
  for (int i = 1; i < n_; ++i) rows_.push_back(promote(rows_.back()));
}

const Partition& PromotionGrid::at(int i, int j) const {
  i = ((i % n_) + n_) % n_;
  j = ((j % n_) + n_) % n_;
  return rows_[i].steps[((j - i) % n_ + n_) % n_];
}

namespace {

FilledMatrix read_grid(FillRule rule, const TableauSeq& t) {
  PromotionGrid g(t);
  const int n = g.size();
  const int r = g.rank();
  FilledMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m(i - 1, j - 1) = fill_value(rule, WeightVec::from_partition(g.at(i - 1, j - 1), r),
                                   WeightVec::from_partition(g.at(i, j - 1), r),
                                   WeightVec::from_partition(g.at(i - 1, j), r));
  return m;
}

void require_family(const TableauSeq& t, Family f) {
  if (t.family != f) throw std::invalid_argument("chord map expects a " + family_name(f) + " tableau");
}

}  // namespace

FilledMatrix chord_matrix(ChordMap map, const TableauSeq& t) {
  if (!is_weight_zero(t)) throw std::invalid_argument("chord matrix needs a weight-zero tableau");
  switch (map) {
    case ChordMap::M_O:
      require_family(t, Family::oscillating);
      return read_grid(FillRule::osc, t);
    case ChordMap::M_F:
      require_family(t, Family::fan);
      return read_grid(FillRule::fan, t);
    case ChordMap::M_VO:
      require_family(t, Family::vacillating);
      return blocksum(read_grid(FillRule::osc, iota_v_to_o(t)), 2);
    case ChordMap::M_VF: {
      require_family(t, Family::vacillating);
      FilledMatrix m = blocksum(read_grid(FillRule::fan, iota_v_to_f(t)), 2);
      for (int i = 0; i < m.size(); ++i) m(i, i) -= 2 * (t.rank - 1);
      return m;
    }
  }
  throw std::logic_error("bad chord map");
}

ChordMap default_chord_map(Family f) {
  switch (f) {
    case Family::oscillating: return ChordMap::M_O;
    case Family::fan: return ChordMap::M_F;
    case Family::vacillating: return ChordMap::M_VO;
  }
  throw std::logic_error("bad family");
}

FilledMatrix rotate_matrix(const FilledMatrix& m) {
  const int n = m.size();
  FilledMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out((i + n - 1) % n, (j + n - 1) % n) = m(i, j);
  return out;
}

}  // namespace chordal
