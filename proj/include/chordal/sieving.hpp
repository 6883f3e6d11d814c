#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chordal/crystals.hpp"

namespace chordal {

/// Polynomial in q with integer coefficients; coeffs()[k] multiplies q^k.
class IntPolynomial {
 public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs);
  static IntPolynomial monomial(int degree, Coeff c = 1);
  /// [m]_q = 1 + q + ... + q^{m-1}.
  static IntPolynomial q_integer(int m);
  /// Cyclotomic polynomial Phi_m.
  static IntPolynomial cyclotomic(int m);

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Coeff coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : 0; }
  Coeff at_one() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  /// Exact division by a polynomial with leading coefficient +-1. Throws
  /// std::domain_error when the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& d) const;
  /// Remainder on division by a monic polynomial.
  IntPolynomial remainder(const IntPolynomial& d) const;
  /// Remainder mod q^n - 1: exponents folded mod n.
  IntPolynomial mod_cyclic(int n) const;

  /// "q^4 + q^2 + 1"; "0" for the zero polynomial.
  std::string pretty() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// Local energy H(a (x) b) with a the left factor.
int local_energy(CrystalKind kind, int rank, Letter a, Letter b);

/// E = sum_{i=1}^{n-1} i H(b_i (x) b_{i+1}), b_1 the leftmost factor u_n.
int energy(const Word& w);

/// Shift exponent c with f = q^c sum q^E.
int energy_shift(CrystalKind kind, int rank, int n);

/// sum over highest weight words of weight zero and length n of q^{c + E}.
IntPolynomial f_poly(CrystalKind kind, int rank, int n, int jobs = 1);

/// prod_{1<=i<=j<=n-1} [i+j+2r]_q / [i+j]_q.
IntPolynomial g_poly(int n, int rank);

/// Major index of a B vector word.
int descent_major(const Word& w);
std::vector<int> descent_set(const Word& w);

/// sum over weight-zero vacillating tableaux of length n of q^maj.
IntPolynomial h_poly(int rank, int n, int jobs = 1);

/// Same count through standard Young tableaux: for even n, shapes with even
/// parts and at most 2r+1 rows; for odd n, odd parts and exactly 2r+1 rows.
IntPolynomial syt_h_poly(int rank, int n);

struct OrbitDecomposition {
  std::vector<std::vector<TableauSeq>> orbits;
  std::vector<int> sizes() const;
};

/// Orbits under promotion; throws std::runtime_error if an orbit size does not
/// divide `order`.
OrbitDecomposition orbit_decomposition(const std::vector<TableauSeq>& xs, int order);

struct CspReport {
  bool holds = false;
  int order = 0;
  std::vector<int> orbit_sizes;
  IntPolynomial residue;
  IntPolynomial expected_residue;
  int first_mismatch_d = -1;  ///< -1 when none
};

/// Checks f(zeta^d) = #fixed points of pr^d for every d by comparing
/// f mod (q^n - 1) with the orbit polynomial.
CspReport csp_check(const std::vector<TableauSeq>& xs, int order, const IntPolynomial& f);

}  // namespace chordal
