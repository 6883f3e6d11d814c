#include "chordal/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace chordal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.find(',') != std::string_view::npos) {
    std::string cur;
    for (char c : text) {
      if (c == ',') {
        parts.push_back(std::stoi(cur));
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(std::stoi(cur));
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("partition: bad character");
      parts.push_back(c - '0');
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::compact(std::size_t width) const {
  std::size_t w = std::max(width, parts_.size());
  bool wide = std::any_of(parts_.begin(), parts_.end(), [](int x) { return x > 9; });
  std::string out;
  for (std::size_t i = 0; i < w; ++i) {
    if (wide) {
      if (i) out += ',';
      out += std::to_string(part(i));
    } else {
      out += static_cast<char>('0' + part(i));
    }
  }
  return out;
}

WeightVec WeightVec::from_partition(const Partition& p, int rank) {
  if (static_cast<int>(p.length()) > rank)
    throw std::invalid_argument("partition has more parts than the rank");
  std::vector<int> e(rank, 0);
  for (std::size_t i = 0; i < p.length(); ++i) e[i] = p.part(i);
  return WeightVec(std::move(e));
}

bool WeightVec::is_dominant() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) return false;
    if (i > 0 && entries_[i] > entries_[i - 1]) return false;
  }
  return true;
}

Partition WeightVec::to_partition() const {
  if (!is_dominant()) throw std::invalid_argument("weight is not dominant");
  return Partition(entries_);
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RootSystemData root_system(RootType type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  RootSystemData d{type, rank, {}};
  for (int i = 0; i + 1 < rank; ++i) {
    WeightVec a = WeightVec::zero(rank);
    a[i] = 1;
    a[i + 1] = -1;
    d.simple_roots.push_back(a);
  }
  WeightVec last = WeightVec::zero(rank);
  last[rank - 1] = type == RootType::B ? 1 : 2;
  d.simple_roots.push_back(last);
  return d;
}

Partition dominant_representative(const WeightVec& w) {
  std::vector<int> a(w.entries());
  for (int& x : a) x = std::abs(x);
  std::sort(a.begin(), a.end(), std::greater<>());
  return Partition(std::move(a));
}

namespace {

template <class Op>
Partition rowwise(const Partition& p, const Partition& q, Op op) {
  std::size_t len = std::max(p.length(), q.length());
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = op(p.part(i), q.part(i));
  return Partition(std::move(out));
}

}  // namespace

Partition union_parts(const Partition& p, const Partition& q) {
  return rowwise(p, q, [](int a, int b) { return a + b; });
}

Partition intersect_parts(const Partition& p, const Partition& q) {
  return rowwise(p, q, [](int a, int b) { return std::min(a, b); });
}

Partition join_parts(const Partition& p, const Partition& q) {
  return rowwise(p, q, [](int a, int b) { return std::max(a, b); });
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
  if (!contains(outer, inner)) return false;
  for (std::size_t i = 0; i < outer.length(); ++i)
    if (outer.part(i) - inner.part(i) > 1) return false;
  return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!contains(outer, inner)) return false;
  for (std::size_t i = 1; i < outer.length(); ++i)
    if (outer.part(i) > inner.part(i - 1)) return false;
  return true;
}

Partition add_box(const Partition& p, int row, int delta) {
  if (row < 1) throw std::invalid_argument("row must be positive");
  std::vector<int> parts(std::max<std::size_t>(p.length(), row), 0);
  for (std::size_t i = 0; i < p.length(); ++i) parts[i] = p.part(i);
  parts[row - 1] += delta;
  return Partition(std::move(parts));
}

StepRelation step_classify(const Partition& p, const Partition& q) {
  if (p == q) return {StepKind::equal};
  std::size_t len = std::max(p.length(), q.length());
  int diff_rows = 0, diff_row = 0, diff = 0;
  for (std::size_t i = 0; i < len; ++i) {
    int d = q.part(i) - p.part(i);
    if (d != 0) {
      ++diff_rows;
      diff_row = static_cast<int>(i) + 1;
      diff = d;
    }
  }
  if (diff_rows == 1 && diff == 1) return {StepKind::add_box, diff_row};
  if (diff_rows == 1 && diff == -1) return {StepKind::remove_box, diff_row};
  if (is_vertical_strip(p, q)) return {StepKind::vertical_strip};
  if (is_horizontal_strip(p, q)) return {StepKind::horizontal_strip};
  return {StepKind::other};
}

}  // namespace chordal
