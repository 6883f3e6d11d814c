#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordal/crystals.hpp"
#include "chordal/growth.hpp"
#include "chordal/json_io.hpp"

namespace chordal {

/// Outcome of an exhaustive or randomized property suite.
struct SuiteResult {
  explicit SuiteResult(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<json> counterexamples;  ///< first few failures

  bool passed() const { return failures == 0; }
  void fail(json detail);
  void merge(const SuiteResult& other);
  json to_json() const;
};

/// Tableau lengths 1..n_max (even only for fans) at every rank 1..r_max.
struct Scope {
  Family family;
  int r_max;
  int n_max;
};

/// Growth matrix equals the chord matrix (for vacillating tableaux both
/// M_VO and M_VF), and growth_inverse recovers the tableau.
SuiteResult verify_main(const Scope& s, int jobs = 1);
/// chord_matrix(pr T) = rotate(chord_matrix(T)).
SuiteResult verify_rotation(const Scope& s, int jobs = 1);
/// pr^n = id.
SuiteResult verify_order(const Scope& s, int jobs = 1);
/// Chord matrices symmetric with zero diagonal; M_O a perfect matching.
SuiteResult verify_structure(const Scope& s, int jobs = 1);
/// Fans: blowup_SE(M_F(F), r) = M_O(iota(F)) and the Burge corner labels are
/// the 0/1 corner labels of the blown up filling at block corners.
/// Vacillating: blowup_NE(M_VO(V), 2) = M_O(iota(V)) and likewise for RSK.
SuiteResult verify_blowup_lemmas(const Scope& s, int jobs = 1);
/// cell_forward and cell_backward invert each other on `cases` random valid
/// cells per rule and direction.
SuiteResult verify_rule_inversion(std::size_t cases, std::uint64_t seed = 1);
/// Number of fans of length 2n against the product formula.
SuiteResult verify_fan_counts(int r_max, int n_max);

/// Replays the checked-in figure and polynomial fixtures ({"cases": [...]}).
SuiteResult run_golden(const json& fixtures);

/// prod_{1<=i<=j<=n-1} (i+j+2r)/(i+j), exactly.
std::uint64_t fan_count_formula(int n, int rank);

}  // namespace chordal
