#include <gtest/gtest.h>

#include <functional>

#include "chordal/json_io.hpp"
#include "chordal/promotion.hpp"
#include "chordal/sieving.hpp"
#include "chordal/verify.hpp"

using namespace chordal;

namespace {

IntPolynomial poly(std::vector<IntPolynomial::Coeff> c) { return IntPolynomial(std::move(c)); }

const IntPolynomial kF42 = poly({0, 0, 0, 0, 1, 0, 1, 0, 1});
const IntPolynomial kF62 = poly({0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 1, 2, 1, 1});
const IntPolynomial kF72 = poly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 2, 2, 2, 1, 1, 1, 1});

// f computed with a caller supplied pairing of adjacent factors. `pair(w, i)`
// returns H of the i-th weighted pair, 1 <= i < n.
IntPolynomial f_with(CrystalKind kind, int r, int n, const std::function<int(const Word&, int)>& pair) {
  IntPolynomial f;
  for (const TableauSeq& t : enumerate_zero(family_for(kind), r, n)) {
    Word w = tableau_to_word(t);
    int e = 0;
    for (int i = 1; i < n; ++i) e += i * pair(w, i);
    f += IntPolynomial::monomial(energy_shift(kind, r, n) + e);
  }
  return f;
}

// b_i = u_{n+1-i}, the i-th factor from the left.
Letter b(const Word& w, int i) { return w.letters[w.letters.size() - i]; }

IntPolynomial q_factorial(int n) {
  IntPolynomial p = poly({1});
  for (int k = 1; k <= n; ++k) p = p * IntPolynomial::q_integer(k);
  return p;
}

// Sum of q^maj over SYT of shape lambda: q^{b(lambda)} [n]_q! / prod [hook]_q.
IntPolynomial q_hook(const std::vector<int>& lambda) {
  int n = 0, bl = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) n += lambda[i], bl += static_cast<int>(i) * lambda[i];
  IntPolynomial num = q_factorial(n) * IntPolynomial::monomial(bl);
  IntPolynomial den = poly({1});
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
      den = den * IntPolynomial::q_integer(arm + leg + 1);
    }
  return num.divide_exact(den);
}

void partitions(int n, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) return f(cur);
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, f);
    cur.pop_back();
  }
}

IntPolynomial hook_h(int r, int n) {
  IntPolynomial h;
  std::vector<int> cur;
  partitions(n, n, cur, [&](const std::vector<int>& lam) {
    int rows = static_cast<int>(lam.size());
    for (int x : lam)
      if (x % 2 != n % 2) return;
    if (n % 2 == 0 ? rows <= 2 * r + 1 : rows == 2 * r + 1) h += q_hook(lam);
  });
  return h;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(IntPolynomial::q_integer(3), poly({1, 1, 1}));
  EXPECT_EQ(IntPolynomial::cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(IntPolynomial::cyclotomic(4), poly({1, 0, 1}));
  EXPECT_EQ(IntPolynomial::cyclotomic(6), poly({1, -1, 1}));
  EXPECT_EQ(IntPolynomial::cyclotomic(12), poly({1, 0, -1, 0, 1}));
  EXPECT_EQ(poly({1, 2, 0, 0}), poly({1, 2}));
  EXPECT_EQ(poly({1, 1}) * poly({-1, 1}), poly({-1, 0, 1}));
  EXPECT_EQ(poly({-1, 0, 1}).divide_exact(poly({-1, 1})), poly({1, 1}));
  EXPECT_THROW(poly({1, 0, 1}).divide_exact(poly({-1, 1})), std::domain_error);
  EXPECT_EQ(kF42.mod_cyclic(4), poly({2, 0, 1}));
  EXPECT_EQ(poly({1, 0, 1, 0, 1}).pretty(), "q^4 + q^2 + 1");
  EXPECT_EQ(poly({0, 0, 2}).pretty(), "2*q^2");
  EXPECT_EQ(IntPolynomial().pretty(), "0");
  EXPECT_EQ(kF62.at_one(), 14);
}

TEST(Energy, LocalExamples) {
  EXPECT_EQ(local_energy(CrystalKind::cvec, 2, {1}, {2}), 0);
  EXPECT_EQ(local_energy(CrystalKind::cvec, 2, {-2}, {1}), 1);
  EXPECT_EQ(local_energy(CrystalKind::bvec, 2, {0}, {0}), 1);
  EXPECT_EQ(local_energy(CrystalKind::bvec, 2, {-1}, {1}), 2);
  EXPECT_EQ(local_energy(CrystalKind::spin, 2, spin_letter("--"), spin_letter("++")), 1);
  EXPECT_EQ(energy(Word{CrystalKind::cvec, 2, {{1}}}), 0);
}

TEST(Energy, ConstantOnSpinComponents) {
  for (int r = 1; r <= 3; ++r)
    for (Letter x : crystal_letters(CrystalKind::spin, r))
      for (Letter y : crystal_letters(CrystalKind::spin, r)) {
        Word w{CrystalKind::spin, r, {y, x}};
        for (int i = 1; i <= r; ++i)
          if (auto up = tensor_apply(i, Dir::raise, w))
            EXPECT_EQ(local_energy(CrystalKind::spin, r, up->letters[1], up->letters[0]),
                      local_energy(CrystalKind::spin, r, x, y));
      }
}

TEST(Energy, SpinRankFourTerminates) {
  for (Letter x : crystal_letters(CrystalKind::spin, 4))
    for (Letter y : crystal_letters(CrystalKind::spin, 4)) EXPECT_GE(local_energy(CrystalKind::spin, 4, x, y), 0);
}

TEST(Energy, ConventionRegression) {
  auto left_to_right = [](const Word& w, int i) {
    return local_energy(w.kind, w.rank, b(w, i), b(w, i + 1));
  };
  auto swapped = [](const Word& w, int i) {
    return local_energy(w.kind, w.rank, b(w, i + 1), b(w, i));
  };
  EXPECT_EQ(f_with(CrystalKind::spin, 2, 4, left_to_right), kF42);
  EXPECT_EQ(f_with(CrystalKind::spin, 2, 6, left_to_right), kF62);
  EXPECT_EQ(f_with(CrystalKind::bvec, 2, 7, left_to_right), kF72);
  EXPECT_NE(f_with(CrystalKind::spin, 2, 4, swapped), kF42);
  EXPECT_NE(f_with(CrystalKind::bvec, 2, 7, swapped), kF72);
}

TEST(Polys, Published) {
  EXPECT_EQ(f_poly(CrystalKind::spin, 2, 4), kF42);
  EXPECT_EQ(f_poly(CrystalKind::spin, 2, 6), kF62);
  EXPECT_EQ(f_poly(CrystalKind::bvec, 2, 7), kF72);
  EXPECT_EQ(g_poly(2, 2), poly({1, 0, 1, 0, 1}));
  EXPECT_EQ(g_poly(3, 2), poly({1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1}));
  EXPECT_EQ(g_poly(1, 5), poly({1}));
  EXPECT_EQ(h_poly(2, 7), poly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 3, 2, 2, 1, 1}));
  EXPECT_EQ(h_poly(1, 2), poly({1}));
  EXPECT_EQ(f_poly(CrystalKind::spin, 2, 4, 3), kF42);
}

TEST(Polys, OscillatingTwoSteps) {
  // Only word 1bar (x) 1: E = H(1bar (x) 1) = 1 and c = 1.
  EXPECT_EQ(f_poly(CrystalKind::cvec, 2, 2), poly({0, 0, 1}));
}

TEST(Polys, SpecializeToCardinality) {
  for (Family fam : {Family::oscillating, Family::fan, Family::vacillating})
    for (int r = 1; r <= 2; ++r)
      for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(f_poly(crystal_kind_for(fam), r, n).at_one(),
                  static_cast<IntPolynomial::Coeff>(enumerate_zero(fam, r, n).size()));
}

TEST(Polys, GCountsFansAndAgreesWithF) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 5; ++n) {
      auto count = static_cast<IntPolynomial::Coeff>(enumerate_zero(Family::fan, r, 2 * n).size());
      EXPECT_EQ(g_poly(n, r).at_one(), count);
      EXPECT_EQ(static_cast<IntPolynomial::Coeff>(fan_count_formula(n, r)), count);
      if (n + r <= 6) EXPECT_EQ(g_poly(n, r).mod_cyclic(2 * n), f_poly(CrystalKind::spin, r, 2 * n).mod_cyclic(2 * n));
    }
}

TEST(Descents, Examples) {
  Word w{CrystalKind::bvec, 1, {{1}, {-1}}};
  EXPECT_TRUE(descent_set(w).empty());
  EXPECT_EQ(descent_major(w), 0);
}

TEST(Descents, HMatchesSytAndHookFormula) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 8; ++n) {
      IntPolynomial syt = syt_h_poly(r, n);
      EXPECT_EQ(syt, hook_h(r, n)) << "r=" << r << " n=" << n;
      if (r <= 2 && n <= 7) EXPECT_EQ(h_poly(r, n), syt) << "r=" << r << " n=" << n;
    }
}

TEST(Sieving, Singleton) {
  std::vector<TableauSeq> one{TableauSeq{Family::oscillating, 1, {Partition()}}};
  EXPECT_TRUE(csp_check(one, 1, poly({1})).holds);
}

TEST(Sieving, FansWithFAndG) {
  auto xs = enumerate_zero(Family::fan, 2, 4);
  CspReport rep = csp_check(xs, 4, f_poly(CrystalKind::spin, 2, 4));
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.residue, rep.expected_residue);
  EXPECT_EQ(rep.first_mismatch_d, -1);
  EXPECT_TRUE(csp_check(xs, 4, g_poly(2, 2)).holds);
}

TEST(Sieving, ReportsFirstMismatch) {
  auto xs = enumerate_zero(Family::fan, 2, 4);
  CspReport rep = csp_check(xs, 4, poly({3}));
  EXPECT_FALSE(rep.holds);
  EXPECT_EQ(rep.first_mismatch_d, 1);
  EXPECT_EQ(rep.expected_residue, poly({2, 0, 1}));
}

TEST(Sieving, OrbitsPartitionTheSet) {
  auto xs = enumerate_zero(Family::oscillating, 2, 8);
  OrbitDecomposition d = orbit_decomposition(xs, 8);
  std::size_t total = 0;
  for (int s : d.sizes()) {
    EXPECT_EQ(8 % s, 0);
    total += s;
  }
  EXPECT_EQ(total, xs.size());
  EXPECT_THROW(orbit_decomposition(xs, 3), std::runtime_error);
}
