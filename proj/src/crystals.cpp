#include "chordal/crystals.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "chordal/parallel.hpp"

namespace chordal {

int default_jobs() {
  if (const char* env = std::getenv("CHORDAL_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

Letter spin_letter(std::string_view signs) {
  Letter x;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == '-')
      x.code |= 1 << i;
    else if (signs[i] != '+')
      throw std::invalid_argument("spin letter: expected + or -");
  }
  return x;
}

std::string spin_signs(Letter x, int rank) {
  std::string s;
  for (int i = 1; i <= rank; ++i) s += spin_sign(x, i) > 0 ? '+' : '-';
  return s;
}

CrystalKind crystal_kind_for(Family f) {
  switch (f) {
    case Family::oscillating: return CrystalKind::cvec;
    case Family::fan: return CrystalKind::spin;
    case Family::vacillating: return CrystalKind::bvec;
  }
  throw std::logic_error("bad family");
}

Family family_for(CrystalKind k) {
  switch (k) {
    case CrystalKind::cvec: return Family::oscillating;
    case CrystalKind::spin: return Family::fan;
    case CrystalKind::bvec: return Family::vacillating;
  }
  throw std::logic_error("bad kind");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::oscillating: return "oscillating";
    case Family::fan: return "fan";
    case Family::vacillating: return "vacillating";
  }
  throw std::logic_error("bad family");
}

Family parse_family(std::string_view name) {
  if (name == "osc" || name == "oscillating") return Family::oscillating;
  if (name == "fan" || name == "fans") return Family::fan;
  if (name == "vac" || name == "vacillating") return Family::vacillating;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string kind_name(CrystalKind k) {
  switch (k) {
    case CrystalKind::spin: return "spin";
    case CrystalKind::cvec: return "cvec";
    case CrystalKind::bvec: return "bvec";
  }
  throw std::logic_error("bad kind");
}

CrystalKind parse_kind(std::string_view name) {
  if (name == "spin") return CrystalKind::spin;
  if (name == "cvec") return CrystalKind::cvec;
  if (name == "bvec") return CrystalKind::bvec;
  throw std::invalid_argument("unknown crystal kind: " + std::string(name));
}

std::vector<Letter> crystal_letters(CrystalKind kind, int rank) {
  std::vector<Letter> out;
  if (kind == CrystalKind::spin) {
    for (int code = 0; code < (1 << rank); ++code) out.push_back({code});
    return out;
  }
  for (int a = 1; a <= rank; ++a) out.push_back({a});
  if (kind == CrystalKind::bvec) out.push_back({0});
  for (int a = rank; a >= 1; --a) out.push_back({-a});
  return out;
}

int letter_order(CrystalKind kind, int rank, Letter x) {
  if (kind == CrystalKind::spin) throw std::invalid_argument("spin letters are not ordered");
  int a = x.code;
  if (a > 0) return a;
  int zero = kind == CrystalKind::bvec ? 1 : 0;
  if (a == 0) return rank + 1;
  return 2 * rank + 1 + zero + a;
}

namespace {

void check_letter(CrystalKind kind, int rank, Letter x) {
  if (kind == CrystalKind::spin) {
    if (x.code < 0 || x.code >= (1 << rank)) throw std::invalid_argument("bad spin letter");
    return;
  }
  int a = std::abs(x.code);
  if (a > rank || (a == 0 && kind != CrystalKind::bvec))
    throw std::invalid_argument("bad vector letter");
}

MaybeLetter spin_op(int rank, int i, Dir dir, Letter x) {
  int bit_i = 1 << (i - 1);
  if (i == rank) {
    bool minus = x.code & bit_i;
    if (dir == Dir::lower && !minus) return Letter{x.code | bit_i};
    if (dir == Dir::raise && minus) return Letter{x.code & ~bit_i};
    return std::nullopt;
  }
  int bit_j = 1 << i;
  bool mi = x.code & bit_i, mj = x.code & bit_j;
  // lower: (+,-) -> (-,+); raise: (-,+) -> (+,-)
  if (dir == Dir::lower && !mi && mj) return Letter{(x.code | bit_i) & ~bit_j};
  if (dir == Dir::raise && mi && !mj) return Letter{(x.code & ~bit_i) | bit_j};
  return std::nullopt;
}

MaybeLetter vector_lower(CrystalKind kind, int rank, int i, int a) {
  if (i < rank) {
    if (a == i) return Letter{i + 1};
    if (a == -(i + 1)) return Letter{-i};
    return std::nullopt;
  }
  if (kind == CrystalKind::cvec) {
    if (a == rank) return Letter{-rank};
    return std::nullopt;
  }
  if (a == rank) return Letter{0};
  if (a == 0) return Letter{-rank};
  return std::nullopt;
}

MaybeLetter vector_raise(CrystalKind kind, int rank, int i, int a) {
  if (i < rank) {
    if (a == i + 1) return Letter{i};
    if (a == -i) return Letter{-(i + 1)};
    return std::nullopt;
  }
  if (kind == CrystalKind::cvec) {
    if (a == -rank) return Letter{rank};
    return std::nullopt;
  }
  if (a == -rank) return Letter{0};
  if (a == 0) return Letter{rank};
  return std::nullopt;
}

}  // namespace

MaybeLetter apply_letter_op(CrystalKind kind, int rank, int i, Dir dir, Letter x) {
  if (i < 1 || i > rank) throw std::out_of_range("crystal operator index out of range");
  check_letter(kind, rank, x);
  if (kind == CrystalKind::spin) return spin_op(rank, i, dir, x);
  return dir == Dir::lower ? vector_lower(kind, rank, i, x.code)
                           : vector_raise(kind, rank, i, x.code);
}

WeightVec letter_weight(CrystalKind kind, int rank, Letter x) {
  check_letter(kind, rank, x);
  WeightVec w = WeightVec::zero(rank);
  if (kind == CrystalKind::spin) {
    for (int i = 1; i <= rank; ++i) w[i - 1] = spin_sign(x, i);
  } else if (x.code > 0) {
    w[x.code - 1] = 1;
  } else if (x.code < 0) {
    w[-x.code - 1] = -1;
  }
  return w;
}

StringStats string_stats(CrystalKind kind, int rank, int i, Letter x) {
  StringStats s;
  for (MaybeLetter y = apply_letter_op(kind, rank, i, Dir::raise, x); y;
       y = apply_letter_op(kind, rank, i, Dir::raise, *y))
    ++s.epsilon;
  for (MaybeLetter y = apply_letter_op(kind, rank, i, Dir::lower, x); y;
       y = apply_letter_op(kind, rank, i, Dir::lower, *y))
    ++s.phi;
  return s;
}

namespace {

// Signature rule. Factors are read left to right (u_n first); each contributes
// phi pluses followed by epsilon minuses, and a minus cancels a later plus.
struct Signature {
  int epsilon = 0, phi = 0;
  int last_plus = -1;   // index into letters of the factor holding the rightmost free plus
  int first_minus = -1; // factor holding the leftmost free minus
};

Signature signature(const Word& w, int i) {
  Signature sig;
  std::vector<int> minus_stack;  // factor index per free minus
  for (int k = static_cast<int>(w.letters.size()) - 1; k >= 0; --k) {
    StringStats s = string_stats(w.kind, w.rank, i, w.letters[k]);
    for (int p = 0; p < s.phi; ++p) {
      if (!minus_stack.empty()) {
        minus_stack.pop_back();
      } else {
        ++sig.phi;
        sig.last_plus = k;
      }
    }
    for (int m = 0; m < s.epsilon; ++m) minus_stack.push_back(k);
  }
  sig.epsilon = static_cast<int>(minus_stack.size());
  if (!minus_stack.empty()) sig.first_minus = minus_stack.front();
  return sig;
}

}  // namespace

StringStats string_stats(const Word& w, int i) {
  if (i < 1 || i > w.rank) throw std::out_of_range("crystal operator index out of range");
  Signature sig = signature(w, i);
  return {sig.epsilon, sig.phi};
}

std::optional<Word> tensor_apply(int i, Dir dir, const Word& w) {
  if (i < 1 || i > w.rank) throw std::out_of_range("crystal operator index out of range");
  Signature sig = signature(w, i);
  int k = dir == Dir::lower ? sig.last_plus : sig.first_minus;
  if (k < 0) return std::nullopt;
  Word out = w;
  MaybeLetter y = apply_letter_op(w.kind, w.rank, i, dir, w.letters[k]);
  if (!y) throw std::logic_error("signature rule selected an inert factor");
  out.letters[k] = *y;
  return out;
}

WeightVec word_weight(const Word& w) {
  WeightVec sum = WeightVec::zero(w.rank);
  for (Letter x : w.letters) sum += letter_weight(w.kind, w.rank, x);
  return sum;
}

bool is_highest(const Word& w) {
  for (int i = 1; i <= w.rank; ++i)
    if (signature(w, i).epsilon != 0) return false;
  return true;
}

bool is_prefix_dominant(const Word& w) {
  WeightVec sum = WeightVec::zero(w.rank);
  for (Letter x : w.letters) {
    sum += letter_weight(w.kind, w.rank, x);
    if (!sum.is_dominant()) return false;
  }
  return true;
}

std::string tableau_violation(const TableauSeq& t) {
  if (t.rank < 1) return "rank must be positive";
  if (t.steps.empty()) return "no steps";
  if (!t.steps.front().empty()) return "first step must be the empty partition";
  for (std::size_t k = 0; k < t.steps.size(); ++k)
    if (static_cast<int>(t.steps[k].length()) > t.rank)
      return "step " + std::to_string(k) + " has more than r parts";
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    const Partition& p = t.steps[k - 1];
    const Partition& q = t.steps[k];
    std::string where = "step " + std::to_string(k) + ": ";
    if (t.family == Family::fan) {
      for (int i = 0; i < t.rank; ++i)
        if (std::abs(q.part(i) - p.part(i)) != 1) return where + "not a (+-1,...,+-1) step";
      continue;
    }
    StepRelation rel = step_classify(p, q);
    if (rel.kind == StepKind::add_box || rel.kind == StepKind::remove_box) continue;
    if (t.family == Family::vacillating && rel.kind == StepKind::equal) {
      if (static_cast<int>(q.length()) != t.rank)
        return where + "repeated step needs r nonzero parts";
      continue;
    }
    return where + "not a single box step";
  }
  return {};
}

bool is_weight_zero(const TableauSeq& t) { return is_valid(t) && t.steps.back().empty(); }

TableauSeq word_to_tableau(const Word& w) {
  if (!is_highest(w)) throw std::invalid_argument("word is not highest weight");
  TableauSeq t{family_for(w.kind), w.rank, {Partition()}};
  WeightVec sum = WeightVec::zero(w.rank);
  for (Letter x : w.letters) {
    sum += letter_weight(w.kind, w.rank, x);
    t.steps.push_back(sum.to_partition());
  }
  return t;
}

Word tableau_to_word(const TableauSeq& t) {
  if (std::string why = tableau_violation(t); !why.empty()) throw std::invalid_argument(why);
  Word w{crystal_kind_for(t.family), t.rank, {}};
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    const Partition& p = t.steps[k - 1];
    const Partition& q = t.steps[k];
    if (t.family == Family::fan) {
      Letter x;
      for (int i = 0; i < t.rank; ++i)
        if (q.part(i) < p.part(i)) x.code |= 1 << i;
      w.letters.push_back(x);
      continue;
    }
    StepRelation rel = step_classify(p, q);
    if (rel.kind == StepKind::add_box)
      w.letters.push_back({rel.row});
    else if (rel.kind == StepKind::remove_box)
      w.letters.push_back({-rel.row});
    else
      w.letters.push_back({0});
  }
  return w;
}

std::vector<Partition> successors(Family family, int rank, const Partition& p) {
  std::vector<Partition> out;
  WeightVec base = WeightVec::from_partition(p, rank);
  if (family == Family::fan) {
    for (int mask = 0; mask < (1 << rank); ++mask) {
      WeightVec q = base;
      for (int i = 0; i < rank; ++i) q[i] += (mask >> i) & 1 ? -1 : 1;
      if (q.is_dominant()) out.push_back(q.to_partition());
    }
  } else {
    for (int i = 0; i < rank; ++i) {
      WeightVec q = base;
      q[i] += 1;
      if (q.is_dominant()) out.push_back(q.to_partition());
      q[i] -= 2;
      if (q.is_dominant()) out.push_back(q.to_partition());
    }
    if (family == Family::vacillating && static_cast<int>(p.length()) == rank) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Steps needed at least to get from p back to the empty partition.
int distance_home(Family family, const Partition& p) {
  return family == Family::fan ? p.part(0) : p.size();
}

void extend(Family family, int rank, int n, TableauSeq& cur,
            const std::function<void(const TableauSeq&)>& visit) {
  int remaining = n - cur.length();
  if (remaining == 0) {
    if (cur.steps.back().empty()) visit(cur);
    return;
  }
  for (const Partition& q : successors(family, rank, cur.steps.back())) {
    if (distance_home(family, q) > remaining - 1) continue;
    cur.steps.push_back(q);
    extend(family, rank, n, cur, visit);
    cur.steps.pop_back();
  }
}

}  // namespace

void for_each_zero(Family family, int rank, int n, const std::vector<Partition>& prefix,
                   const std::function<void(const TableauSeq&)>& visit) {
  if (rank < 1 || n < 0) throw std::invalid_argument("need r >= 1 and n >= 0");
  TableauSeq cur{family, rank, prefix.empty() ? std::vector<Partition>{Partition()} : prefix};
  if (!is_valid(cur) || cur.length() > n) return;
  if (distance_home(family, cur.steps.back()) > n - cur.length()) return;
  extend(family, rank, n, cur, visit);
}

std::vector<TableauSeq> enumerate_zero(Family family, int rank, int n, int jobs) {
  if (jobs <= 1 || n < 4) {
    std::vector<TableauSeq> out;
    for_each_zero(family, rank, n, {}, [&](const TableauSeq& t) { out.push_back(t); });
    return out;
  }
  // Split on all valid prefixes of a fixed depth, in lexicographic order.
  int depth = std::min(3, n);
  std::vector<std::vector<Partition>> prefixes{{Partition()}};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::vector<Partition>> next;
    for (const auto& pre : prefixes)
      for (const Partition& q : successors(family, rank, pre.back())) {
        auto ext = pre;
        ext.push_back(q);
        next.push_back(std::move(ext));
      }
    prefixes = std::move(next);
  }
  std::vector<std::vector<TableauSeq>> parts(prefixes.size());
  parallel_for(prefixes.size(), jobs, [&](std::size_t k) {
    for_each_zero(family, rank, n, prefixes[k],
                  [&](const TableauSeq& t) { parts[k].push_back(t); });
  });
  std::vector<TableauSeq> out;
  for (auto& v : parts)
    for (auto& t : v) out.push_back(std::move(t));
  return out;
}

}  // namespace chordal
