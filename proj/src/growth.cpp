#include "chordal/growth.hpp"

#include <algorithm>
#include <string>

namespace chordal {

RuleSet rule_for(Family f) {
  switch (f) {
    case Family::oscillating: return RuleSet::zero_one;
    case Family::fan: return RuleSet::burge;
    case Family::vacillating: return RuleSet::rsk;
  }
  throw std::logic_error("bad family");
}

namespace {

// Row (1-based) of the single box in outer/inner, 0 if equal, -1 otherwise.
int box_row(const Partition& inner, const Partition& outer) {
  StepRelation rel = step_classify(inner, outer);
  if (rel.kind == StepKind::equal) return 0;
  if (rel.kind == StepKind::add_box) return rel.row;
  return -1;
}

bool strip(RuleSet rule, const Partition& inner, const Partition& outer) {
  if (rule == RuleSet::zero_one) return box_row(inner, outer) >= 0;
  if (rule == RuleSet::burge) return is_vertical_strip(inner, outer);
  return is_horizontal_strip(inner, outer);
}

std::vector<int> padded(const Partition& p, std::size_t len) {
  std::vector<int> v(len, 0);
  for (std::size_t i = 0; i < p.length() && i < len; ++i) v[i] = p.part(i);
  return v;
}

Partition zero_one_forward(const Partition& g, const Partition& d, const Partition& a, int m) {
  if (m != 0 && !(g == d && d == a)) throw MalformedCell("a 1 needs gamma = delta = alpha");
  if (g == d && d == a) return m == 1 ? add_box(g, 1) : g;
  if (g == d) return a;
  if (g == a) return d;
  if (d != a) return join_parts(d, a);
  return add_box(d, box_row(g, d) + 1);
}

CellSolution zero_one_backward(const Partition& b, const Partition& d, const Partition& a) {
  if (b == d && d == a) return {b, 0};
  if (b == d) return {a, 0};
  if (b == a) return {d, 0};
  if (d != a) return {intersect_parts(d, a), 0};
  int k = box_row(d, b);
  if (k == 1) return {d, 1};
  return {add_box(d, k - 1, -1), 0};
}

Partition burge_forward(const Partition& g, const Partition& d, const Partition& a, int m) {
  std::vector<int> beta;
  int carry = m;
  for (std::size_t i = 0;; ++i) {
    int G = g.part(i), D = d.part(i), A = a.part(i);
    int ind = G == D && D == A ? 1 : 0;
    int b = std::max(D, A) + std::min(ind, carry);
    if (b == 0) break;
    beta.push_back(b);
    carry = carry - std::min(ind, carry) + std::min(D, A) - G;
  }
  return Partition(beta);
}

CellSolution burge_backward(const Partition& b, const Partition& d, const Partition& a) {
  std::size_t len = b.length();
  auto B = padded(b, len), D = padded(d, len), A = padded(a, len);
  std::vector<int> gamma(len, 0);
  int carry = 0;
  for (std::size_t k = len; k-- > 0;) {
    int ind = D[k] == A[k] && A[k] == B[k] ? 1 : 0;
    gamma[k] = std::min(D[k], A[k]) - std::min(ind, carry);
    carry = carry - std::min(ind, carry) + B[k] - std::max(D[k], A[k]);
  }
  return {Partition(gamma), carry};
}

Partition rsk_forward(const Partition& g, const Partition& d, const Partition& a, int m) {
  std::vector<int> beta;
  int carry = m;
  for (std::size_t i = 0;; ++i) {
    int b = std::max(d.part(i), a.part(i)) + carry;
    if (b == 0) break;
    beta.push_back(b);
    carry = std::min(d.part(i), a.part(i)) - g.part(i);
  }
  return Partition(beta);
}

CellSolution rsk_backward(const Partition& b, const Partition& d, const Partition& a) {
  std::size_t len = b.length();
  auto B = padded(b, len), D = padded(d, len), A = padded(a, len);
  std::vector<int> gamma(len, 0);
  int carry = 0;
  for (std::size_t k = len; k-- > 0;) {
    gamma[k] = std::min(D[k], A[k]) - carry;
    carry = B[k] - std::max(D[k], A[k]);
  }
  return {Partition(gamma), carry};
}

}  // namespace

Partition cell_forward(RuleSet rule, const Partition& gamma, const Partition& delta,
                       const Partition& alpha, int m) {
  if (m < 0 || (rule == RuleSet::zero_one && m > 1)) throw MalformedCell("cell entry out of range");
  if (!strip(rule, gamma, delta) || !strip(rule, gamma, alpha))
    throw MalformedCell("gamma does not sit below delta and alpha as the rule requires");
  switch (rule) {
    case RuleSet::zero_one: return zero_one_forward(gamma, delta, alpha, m);
    case RuleSet::burge: return burge_forward(gamma, delta, alpha, m);
    case RuleSet::rsk: return rsk_forward(gamma, delta, alpha, m);
  }
  throw std::logic_error("bad rule");
}

CellSolution cell_backward(RuleSet rule, const Partition& beta, const Partition& delta,
                           const Partition& alpha) {
  if (!strip(rule, delta, beta) || !strip(rule, alpha, beta))
    throw MalformedCell("beta does not sit above delta and alpha as the rule requires");
  switch (rule) {
    case RuleSet::zero_one: return zero_one_backward(beta, delta, alpha);
    case RuleSet::burge: return burge_backward(beta, delta, alpha);
    case RuleSet::rsk: return rsk_backward(beta, delta, alpha);
  }
  throw std::logic_error("bad rule");
}

CornerGrid::CornerGrid(int n) : n_(n), corners_(n + 1), entries_(n + 1) {
  for (int i = 0; i <= n; ++i) {
    corners_[i].resize(i + 1);
    entries_[i].assign(i + 1, 0);
  }
}

FilledMatrix CornerGrid::matrix() const {
  FilledMatrix m(n_);
  for (int i = 2; i <= n_; ++i)
    for (int j = 1; j < i; ++j) {
      m(i - 1, j - 1) = entries_[i][j];
      m(j - 1, i - 1) = entries_[i][j];
    }
  return m;
}

CornerGrid seed_grid(const TableauSeq& t) {
  if (std::string why = tableau_violation(t); !why.empty()) throw std::invalid_argument(why);
  const int n = t.length();
  CornerGrid g(n);
  bool vac = t.family == Family::vacillating;
  for (int k = 0; k <= n; ++k) {
    const Partition& p = t.steps[k];
    g.corner(k, k) = vac ? union_parts(p, p) : p;
    if (k == n) break;
    const Partition& q = t.steps[k + 1];
    Partition sub = intersect_parts(p, q);
    if (vac) {
      sub = union_parts(sub, sub);
      if (p == q) sub = add_box(sub, t.rank, -1);
    }
    g.corner(k + 1, k) = sub;
  }
  return g;
}

CornerGrid growth_diagram(const TableauSeq& t) {
  CornerGrid g = seed_grid(t);
  const int n = g.size();
  RuleSet rule = rule_for(t.family);
  for (int d = 1; d < n; ++d)
    for (int i = d + 1; i <= n; ++i) {
      int j = i - d;
      CellSolution s = cell_backward(rule, g.corner(i - 1, j), g.corner(i, j), g.corner(i - 1, j - 1));
      g.corner(i, j - 1) = s.gamma;
      g.entry(i, j) = s.m;
    }
  for (int i = 0; i <= n; ++i)
    if (!g.corner(i, 0).empty() || !g.corner(n, i).empty())
      throw InvalidOutput("growth diagram border is not empty");
  return g;
}

FilledMatrix growth_matrix(const TableauSeq& t) { return growth_diagram(t).matrix(); }

CornerGrid grow_forward(RuleSet rule, const FilledMatrix& filling) {
  const int n = filling.size();
  CornerGrid g(n);
  for (int i = n; i >= 2; --i)
    for (int j = 1; j < i; ++j) {
      int m = filling(i - 1, j - 1);
      g.entry(i, j) = m;
      g.corner(i - 1, j) = cell_forward(rule, g.corner(i, j - 1), g.corner(i, j), g.corner(i - 1, j - 1), m);
    }
  return g;
}

TableauSeq growth_inverse(Family family, int rank, const FilledMatrix& filling) {
  if (!filling.is_symmetric() || !filling.has_zero_diagonal())
    throw InvalidOutput("filling must be symmetric with zero diagonal");
  CornerGrid g;
  try {
    g = grow_forward(rule_for(family), filling);
  } catch (const MalformedCell& e) {
    throw InvalidOutput(std::string("filling violates the local rules: ") + e.what());
  }
  const int n = filling.size();
  TableauSeq t{family, rank, {}};
  for (int k = 0; k <= n; ++k) {
    const Partition& p = g.corner(k, k);
    if (family != Family::vacillating) {
      t.steps.push_back(p);
      continue;
    }
    std::vector<int> half;
    for (int x : p.parts()) {
      if (x % 2) throw InvalidOutput("diagonal label is not doubled");
      half.push_back(x / 2);
    }
    t.steps.push_back(Partition(half));
  }
  if (std::string why = tableau_violation(t); !why.empty())
    throw InvalidOutput("diagonal is not a " + family_name(family) + " tableau: " + why);
  CornerGrid seed = seed_grid(t);
  for (int k = 0; k < n; ++k)
    if (seed.corner(k + 1, k) != g.corner(k + 1, k))
      throw InvalidOutput("subdiagonal label does not match the diagonal");
  return t;
}

FilledMatrix blocksum(const FilledMatrix& m, int k) {
  if (k < 1 || m.size() % k) throw std::invalid_argument("matrix size must be divisible by k");
  FilledMatrix out(m.size() / k);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out(i / k, j / k) += m(i, j);
  return out;
}

FilledMatrix blowup(BlowupDir dir, const FilledMatrix& m, int k) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    if (m.row_sum(i) != k || m.col_sum(i) != k)
      throw std::invalid_argument("blowup needs every row and column sum equal to k");
  FilledMatrix out(n * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = m(i, j);
      if (a == 0) continue;
      int r = 0, c = 0;
      for (int s = 0; s < (j - i + n) % n; ++s) r += m(i, (i + s) % n);
      for (int s = 0; s < (i - j + n) % n; ++s) c += m((j + s) % n, j);
      for (int t = 0; t < a; ++t) {
        int row = dir == BlowupDir::SE ? r + t : k - 1 - r - t;
        int col = dir == BlowupDir::SE ? c + t : k - c - a + t;
        out(i * k + row, j * k + col) = 1;
      }
    }
  return out;
}

}  // namespace chordal
