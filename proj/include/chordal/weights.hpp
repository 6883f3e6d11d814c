#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chordal {

/// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "311" (one digit per part) or "3,1,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  /// Part in row `row` (0-based); zero past the end.
  int part(std::size_t row) const { return row < parts_.size() ? parts_[row] : 0; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// Compact form padded with zeros to `width` rows, e.g. "310". Parts above 9
  /// force the comma form.
  std::string compact(std::size_t width = 0) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Integer vector of fixed length r. Entries may be negative.
class WeightVec {
 public:
  WeightVec() = default;
  explicit WeightVec(std::vector<int> entries) : entries_(std::move(entries)) {}
  static WeightVec zero(int rank) { return WeightVec(std::vector<int>(rank, 0)); }
  /// Pads `p` with zeros to length `rank`; throws if p has more parts.
  static WeightVec from_partition(const Partition& p, int rank);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_dominant() const;
  /// Throws std::invalid_argument unless dominant.
  Partition to_partition() const;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  bool operator==(const WeightVec&) const = default;

 private:
  std::vector<int> entries_;
};

enum class RootType { B, C };

struct RootSystemData {
  RootType type;
  int rank;
  std::vector<WeightVec> simple_roots;
};

RootSystemData root_system(RootType type, int rank);

/// Absolute values sorted weakly decreasing: the dominant element of the
/// orbit under signed permutations.
Partition dominant_representative(const WeightVec& w);

/// Row-wise sum.
Partition union_parts(const Partition& p, const Partition& q);
/// Row-wise minimum.
Partition intersect_parts(const Partition& p, const Partition& q);
/// Row-wise maximum (union of Ferrers diagrams).
Partition join_parts(const Partition& p, const Partition& q);
/// True when the diagram of `inner` lies inside that of `outer`.
bool contains(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& inner, const Partition& outer);
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

/// `p` with one box added (delta > 0) or removed in row `row` (1-based).
/// Throws if the result is not a partition.
Partition add_box(const Partition& p, int row, int delta = 1);

enum class StepKind { equal, add_box, remove_box, vertical_strip, horizontal_strip, other };

struct StepRelation {
  StepKind kind;
  int row = 0;  ///< 1-based row for add_box / remove_box, else 0.
  bool operator==(const StepRelation&) const = default;
};

/// Finest relation of q relative to p.
StepRelation step_classify(const Partition& p, const Partition& q);

}  // namespace chordal
