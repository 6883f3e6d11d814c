#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordal/weights.hpp"

namespace chordal {

/// spin: type B spin crystal; cvec: vector crystal of type C; bvec: vector
/// crystal of type B.
enum class CrystalKind { spin, cvec, bvec };

enum class Family { oscillating, fan, vacillating };

enum class Dir { raise, lower };

/// A crystal letter.
///
/// Vector letters: code i for the letter i, -i for its bar, 0 for the zero
/// letter of the B vector crystal. Spin letters: bit (i-1) of `code` is set
/// when the i-th sign is minus.
struct Letter {
  int code = 0;
  auto operator<=>(const Letter&) const = default;
};

using MaybeLetter = std::optional<Letter>;

Letter spin_letter(std::string_view signs);
std::string spin_signs(Letter x, int rank);
/// Sign (+1 or -1) of coordinate i (1-based) of a spin letter.
inline int spin_sign(Letter x, int i) { return (x.code >> (i - 1)) & 1 ? -1 : 1; }

CrystalKind crystal_kind_for(Family f);
Family family_for(CrystalKind k);
std::string family_name(Family f);
Family parse_family(std::string_view name);
std::string kind_name(CrystalKind k);
CrystalKind parse_kind(std::string_view name);

/// All letters of the crystal in increasing order.
std::vector<Letter> crystal_letters(CrystalKind kind, int rank);
/// Position of a vector letter in 1<..<r<(0)<rbar<..<1bar.
int letter_order(CrystalKind kind, int rank, Letter x);

/// e_i or f_i on a single letter. Throws std::out_of_range unless 1 <= i <= r.
MaybeLetter apply_letter_op(CrystalKind kind, int rank, int i, Dir dir, Letter x);

/// Weight of a letter. Spin weights are doubled (entries +-1).
WeightVec letter_weight(CrystalKind kind, int rank, Letter x);

struct StringStats {
  int epsilon = 0;
  int phi = 0;
  bool operator==(const StringStats&) const = default;
};

StringStats string_stats(CrystalKind kind, int rank, int i, Letter x);

/// Word u_n (x) ... (x) u_1. letters[0] is u_1, the rightmost tensor factor.
struct Word {
  CrystalKind kind = CrystalKind::cvec;
  int rank = 1;
  std::vector<Letter> letters;
  bool operator==(const Word&) const = default;
};

StringStats string_stats(const Word& w, int i);

/// e_i or f_i on a word by the tensor product rule; nullopt when it vanishes.
std::optional<Word> tensor_apply(int i, Dir dir, const Word& w);

WeightVec word_weight(const Word& w);
bool is_highest(const Word& w);
/// All prefix sums of weights u_1, u_1+u_2, ... are dominant.
bool is_prefix_dominant(const Word& w);

/// Sequence of partitions (mu^0, ..., mu^n). Spin families use doubled weights.
struct TableauSeq {
  Family family = Family::oscillating;
  int rank = 1;
  std::vector<Partition> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }
  bool operator==(const TableauSeq&) const = default;
};

/// Empty string when valid, else the reason.
std::string tableau_violation(const TableauSeq& t);
inline bool is_valid(const TableauSeq& t) { return tableau_violation(t).empty(); }
/// Valid and ends at the empty partition.
bool is_weight_zero(const TableauSeq& t);

/// Throws std::invalid_argument if w is not highest weight.
TableauSeq word_to_tableau(const Word& w);
Word tableau_to_word(const TableauSeq& t);

/// Partitions reachable in one step from `p`, sorted.
std::vector<Partition> successors(Family family, int rank, const Partition& p);

/// Visits every weight-zero tableau of length n starting with `prefix`
/// (which must start at the empty partition), in lexicographic order.
void for_each_zero(Family family, int rank, int n, const std::vector<Partition>& prefix,
                   const std::function<void(const TableauSeq&)>& visit);

/// All weight-zero tableaux of length n in lexicographic order. With jobs > 1
/// the work is split by step prefixes; the output order does not change.
std::vector<TableauSeq> enumerate_zero(Family family, int rank, int n, int jobs = 1);

}  // namespace chordal
