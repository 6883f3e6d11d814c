#include "chordal/virtualize.hpp"

#include <algorithm>

namespace chordal {

namespace {

void require(const TableauSeq& t, Family f) {
  if (t.family != f) throw std::invalid_argument("expected a " + family_name(f) + " tableau");
  if (std::string why = tableau_violation(t); !why.empty()) throw std::invalid_argument(why);
}

Partition doubled(const Partition& p) { return union_parts(p, p); }

Partition plus_ones(const Partition& p, int rank) {
  WeightVec w = WeightVec::from_partition(p, rank);
  for (int i = 0; i < rank; ++i) w[i] += 1;
  return w.to_partition();
}

}  // namespace

std::vector<Letter> psi_spin(Letter x, int rank) {
  std::vector<Letter> v;
  for (int i = 1; i <= rank; ++i)
    if (spin_sign(x, i) > 0) v.push_back({i});
  for (int i = rank; i >= 1; --i)
    if (spin_sign(x, i) < 0) v.push_back({-i});
  return v;
}

std::array<Letter, 2> psi_vec(Letter x, int rank) {
  if (x.code == 0) return {Letter{-rank}, Letter{rank}};
  return {x, x};
}

Word psi_word(const Word& w) {
  Word out{CrystalKind::cvec, w.rank, {}};
  for (Letter x : w.letters) {
    if (w.kind == CrystalKind::spin) {
      for (Letter y : psi_spin(x, w.rank)) out.letters.push_back(y);
    } else if (w.kind == CrystalKind::bvec) {
      for (Letter y : psi_vec(x, w.rank)) out.letters.push_back(y);
    } else {
      throw std::invalid_argument("psi_word expects a spin or B vector word");
    }
  }
  return out;
}

std::optional<Word> virtual_apply(int i, Dir dir, const Word& cword) {
  if (cword.kind != CrystalKind::cvec) throw std::invalid_argument("expected a C vector word");
  auto once = tensor_apply(i, dir, cword);
  if (!once || i == cword.rank) return once;
  return tensor_apply(i, dir, *once);
}

TableauSeq iota_f_to_o(const TableauSeq& fan) {
  require(fan, Family::fan);
  const int r = fan.rank;
  TableauSeq out{Family::oscillating, r, {Partition()}};
  for (std::size_t t = 1; t < fan.steps.size(); ++t) {
    Letter sign;
    for (int i = 0; i < r; ++i)
      if (fan.steps[t].part(i) < fan.steps[t - 1].part(i)) sign.code |= 1 << i;
    WeightVec cur = WeightVec::from_partition(fan.steps[t - 1], r);
    for (Letter v : psi_spin(sign, r)) {
      cur += letter_weight(CrystalKind::cvec, r, v);
      out.steps.push_back(cur.to_partition());
    }
  }
  return out;
}

TableauSeq iota_f_to_o_via_words(const TableauSeq& fan) {
  require(fan, Family::fan);
  return word_to_tableau(psi_word(tableau_to_word(fan)));
}

TableauSeq iota_v_to_o(const TableauSeq& vac) {
  require(vac, Family::vacillating);
  const int r = vac.rank;
  TableauSeq out{Family::oscillating, r, {Partition()}};
  for (std::size_t i = 1; i < vac.steps.size(); ++i) {
    const Partition& a = vac.steps[i - 1];
    const Partition& b = vac.steps[i];
    Partition mid = union_parts(a, b);
    if (a == b) mid = add_box(mid, r, -1);
    out.steps.push_back(mid);
    out.steps.push_back(doubled(b));
  }
  return out;
}

TableauSeq iota_v_to_f(const TableauSeq& vac) {
  require(vac, Family::vacillating);
  const int r = vac.rank;
  TableauSeq out{Family::fan, r, {Partition()}};
  for (std::size_t i = 1; i < vac.steps.size(); ++i) {
    const Partition& a = vac.steps[i - 1];
    const Partition& b = vac.steps[i];
    Partition mid;
    if (a == b)
      mid = add_box(plus_ones(doubled(a), r), r, -2);
    else if (contains(b, a))
      mid = plus_ones(doubled(a), r);
    else
      mid = plus_ones(doubled(b), r);
    out.steps.push_back(mid);
    out.steps.push_back(doubled(b));
  }
  return out;
}

TableauSeq apply_embedding(Embedding e, const TableauSeq& t) {
  switch (e) {
    case Embedding::fan_to_osc: return iota_f_to_o(t);
    case Embedding::vac_to_osc: return iota_v_to_o(t);
    case Embedding::vac_to_fan: return iota_v_to_f(t);
  }
  throw std::logic_error("bad embedding");
}

std::optional<TableauSeq> iota_inverse(Embedding e, const TableauSeq& t) {
  Family target = e == Embedding::vac_to_fan ? Family::fan : Family::oscillating;
  Family source = e == Embedding::fan_to_osc ? Family::fan : Family::vacillating;
  if (t.family != target || !is_valid(t)) return std::nullopt;
  int stride = e == Embedding::fan_to_osc ? t.rank : 2;
  if (t.length() % stride != 0) return std::nullopt;
  TableauSeq pre{source, t.rank, {}};
  for (int k = 0; k <= t.length(); k += stride) {
    const Partition& p = t.steps[k];
    if (e == Embedding::fan_to_osc) {
      pre.steps.push_back(p);
      continue;
    }
    std::vector<int> half;
    for (int x : p.parts()) {
      if (x % 2 != 0) return std::nullopt;
      half.push_back(x / 2);
    }
    pre.steps.push_back(Partition(half));
  }
  if (!is_valid(pre)) return std::nullopt;
  if (apply_embedding(e, pre) != t) return std::nullopt;
  return pre;
}

}  // namespace chordal
