#include "chordal/sieving.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chordal/parallel.hpp"
#include "chordal/promotion.hpp"

namespace chordal {

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, Coeff c) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q_integer(int m) {
  if (m < 0) throw std::invalid_argument("q-integer of a negative number");
  return IntPolynomial(std::vector<Coeff>(m, 1));
}

IntPolynomial IntPolynomial::cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  IntPolynomial p = monomial(m) - monomial(0);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = p.divide_exact(cyclotomic(d));
  return p;
}

IntPolynomial::Coeff IntPolynomial::at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), Coeff{0});
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPolynomial::Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

namespace {

// Long division by d (leading coefficient +-1); returns {quotient, remainder}.
std::pair<IntPolynomial, IntPolynomial> long_divide(const IntPolynomial& num, const IntPolynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  auto lead = d.coeffs().back();
  if (lead != 1 && lead != -1) throw std::domain_error("divisor must have leading coefficient +-1");
  std::vector<IntPolynomial::Coeff> rem = num.coeffs();
  int dd = d.degree();
  if (num.degree() < dd) return {IntPolynomial(), num};
  std::vector<IntPolynomial::Coeff> quot(num.degree() - dd + 1, 0);
  for (int k = num.degree(); k >= dd; --k) {
    auto c = rem[k] * lead;
    if (c == 0) continue;
    quot[k - dd] = c;
    for (int t = 0; t <= dd; ++t) rem[k - dd + t] -= c * d.coeffs()[t];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

}  // namespace

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
  auto [q, r] = long_divide(*this, d);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

IntPolynomial IntPolynomial::remainder(const IntPolynomial& d) const { return long_divide(*this, d).second; }

IntPolynomial IntPolynomial::mod_cyclic(int n) const {
  if (n < 1) throw std::invalid_argument("modulus exponent must be positive");
  std::vector<Coeff> out(n, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k % n] += coeffs_[k];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Coeff c = coeffs_[k];
    if (c == 0) continue;
    Coeff a = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << '*';
    out << 'q';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

int local_energy(CrystalKind kind, int rank, Letter a, Letter b) {
  if (kind == CrystalKind::cvec) return letter_order(kind, rank, a) <= letter_order(kind, rank, b) ? 0 : 1;
  if (kind == CrystalKind::bvec) {
    if (a.code == -1 && b.code == 1) return 2;
    if (a.code == 0 && b.code == 0) return 1;
    return letter_order(kind, rank, a) <= letter_order(kind, rank, b) ? 0 : 1;
  }
  // Raise to the classical highest weight eps (x) (+...+). The longest raising
  // path in the square of the spin crystal has r(r+1) steps.
  Word w{kind, rank, {b, a}};
  const int bound = rank * (rank + 1);
  for (int step = 0;; ++step) {
    bool moved = false;
    for (int i = 1; i <= rank && !moved; ++i)
      if (auto up = tensor_apply(i, Dir::raise, w)) {
        w = *up;
        moved = true;
      }
    if (!moved) break;
    if (step >= bound) throw std::logic_error("spin energy: raising did not terminate");
  }
  if (w.letters[0].code != 0) throw std::logic_error("spin energy: unexpected highest weight");
  int minus = std::popcount(static_cast<unsigned>(w.letters[1].code));
  return (minus + 1) / 2;
}

int energy(const Word& w) {
  const int n = static_cast<int>(w.letters.size());
  int e = 0;
  // b_i = u_{n+1-i} = letters[n-i]
  for (int i = 1; i < n; ++i) e += i * local_energy(w.kind, w.rank, w.letters[n - i], w.letters[n - i - 1]);
  return e;
}

int energy_shift(CrystalKind kind, int rank, int n) {
  switch (kind) {
    case CrystalKind::bvec: return 0;
    case CrystalKind::cvec: return n / 2;
    case CrystalKind::spin: return rank % 4 == 0 || rank % 4 == 3 ? 0 : n / 2;
  }
  throw std::logic_error("bad kind");
}

namespace {

IntPolynomial sum_over_tableaux(Family family, int rank, int n, int jobs,
                                const std::function<int(const Word&)>& stat) {
  std::vector<TableauSeq> xs = enumerate_zero(family, rank, n, jobs);
  std::vector<int> values(xs.size());
  parallel_for(xs.size(), jobs, [&](std::size_t k) { values[k] = stat(tableau_to_word(xs[k])); });
  std::vector<IntPolynomial::Coeff> coeffs;
  for (int v : values) {
    if (v < 0) throw std::logic_error("negative statistic");
    if (static_cast<int>(coeffs.size()) <= v) coeffs.resize(v + 1, 0);
    ++coeffs[v];
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial f_poly(CrystalKind kind, int rank, int n, int jobs) {
  IntPolynomial sum = sum_over_tableaux(family_for(kind), rank, n, jobs, energy);
  return sum * IntPolynomial::monomial(energy_shift(kind, rank, n));
}

IntPolynomial g_poly(int n, int rank) {
  if (n < 1 || rank < 1) throw std::invalid_argument("g needs n >= 1 and r >= 1");
  IntPolynomial num = IntPolynomial::monomial(0), den = IntPolynomial::monomial(0);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      num = num * IntPolynomial::q_integer(i + j + 2 * rank);
      den = den * IntPolynomial::q_integer(i + j);
    }
  return num.divide_exact(den);
}

std::vector<int> descent_set(const Word& w) {
  if (w.kind != CrystalKind::bvec) throw std::invalid_argument("descents are defined on B vector words");
  std::vector<int> des;
  const int n = static_cast<int>(w.letters.size());
  for (int i = 1; i < n; ++i) {
    Letter lo = w.letters[i - 1], hi = w.letters[i];  // u_i, u_{i+1}
    if (letter_order(w.kind, w.rank, hi) <= letter_order(w.kind, w.rank, lo)) continue;
    if (lo.code > 0 && hi.code == -lo.code) {
      int balance = 0;
      for (int k = 0; k < i - 1; ++k) {
        if (w.letters[k].code == lo.code) ++balance;
        if (w.letters[k].code == -lo.code) --balance;
      }
      if (balance == 0) continue;
    }
    des.push_back(i);
  }
  return des;
}

int descent_major(const Word& w) {
  auto des = descent_set(w);
  return std::accumulate(des.begin(), des.end(), 0);
}

IntPolynomial h_poly(int rank, int n, int jobs) {
  return sum_over_tableaux(Family::vacillating, rank, n, jobs, descent_major);
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Adds entries 1..n one at a time; row_of[k] is the row of entry k.
void syt_maj(const Partition& shape, std::vector<int>& filled, std::vector<int>& row_of, int placed,
             int maj, std::vector<IntPolynomial::Coeff>& coeffs) {
  int n = shape.size();
  if (placed == n) {
    if (static_cast<int>(coeffs.size()) <= maj) coeffs.resize(maj + 1, 0);
    ++coeffs[maj];
    return;
  }
  for (std::size_t r = 0; r < shape.length(); ++r) {
    if (filled[r] >= shape.part(r)) continue;
    if (r > 0 && filled[r] >= filled[r - 1]) continue;
    ++filled[r];
    row_of.push_back(static_cast<int>(r));
    int m = maj;
    if (placed > 0 && row_of[placed] > row_of[placed - 1]) m += placed;
    syt_maj(shape, filled, row_of, placed + 1, m, coeffs);
    row_of.pop_back();
    --filled[r];
  }
}

}  // namespace

IntPolynomial syt_h_poly(int rank, int n) {
  std::vector<Partition> shapes;
  std::vector<int> cur;
  partitions_of(n, n, cur, shapes);
  std::vector<IntPolynomial::Coeff> coeffs;
  const int rows = 2 * rank + 1;
  for (const Partition& s : shapes) {
    bool ok = n % 2 == 0 ? static_cast<int>(s.length()) <= rows : static_cast<int>(s.length()) == rows;
    for (int p : s.parts()) ok = ok && (p % 2 == n % 2);
    if (!ok) continue;
    std::vector<int> filled(s.length(), 0), row_of;
    syt_maj(s, filled, row_of, 0, 0, coeffs);
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<int> OrbitDecomposition::sizes() const {
  std::vector<int> s;
  for (const auto& o : orbits) s.push_back(static_cast<int>(o.size()));
  return s;
}

OrbitDecomposition orbit_decomposition(const std::vector<TableauSeq>& xs, int order) {
  std::map<std::vector<Partition>, bool> seen;
  OrbitDecomposition d;
  for (const TableauSeq& x : xs) {
    if (seen.count(x.steps)) continue;
    std::vector<TableauSeq> orbit{x};
    seen[x.steps] = true;
    TableauSeq cur = promote(x);
    while (cur != x) {
      if (static_cast<int>(orbit.size()) >= order)
        throw std::runtime_error("promotion orbit longer than the expected order");
      seen[cur.steps] = true;
      orbit.push_back(cur);
      cur = promote(cur);
    }
    if (order % static_cast<int>(orbit.size()) != 0)
      throw std::runtime_error("promotion orbit size does not divide the expected order");
    d.orbits.push_back(std::move(orbit));
  }
  return d;
}

CspReport csp_check(const std::vector<TableauSeq>& xs, int order, const IntPolynomial& f) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  CspReport rep;
  rep.order = order;
  OrbitDecomposition d = orbit_decomposition(xs, order);
  rep.orbit_sizes = d.sizes();
  std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
  IntPolynomial expected;
  for (int s : rep.orbit_sizes)
    for (int j = 0; j < s; ++j) expected += IntPolynomial::monomial(j * (order / s));
  rep.expected_residue = expected;
  rep.residue = f.mod_cyclic(order);
  rep.holds = rep.residue == rep.expected_residue;
  if (!rep.holds) {
    IntPolynomial diff = rep.residue - rep.expected_residue;
    for (int dd = 0; dd < order; ++dd) {
      int m = order / std::gcd(dd, order);
      if (!diff.mod_cyclic(m).remainder(IntPolynomial::cyclotomic(m)).is_zero()) {
        rep.first_mismatch_d = dd;
        break;
      }
    }
  }
  return rep;
}

}  // namespace chordal
