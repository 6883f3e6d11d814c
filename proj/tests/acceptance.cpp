// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "chordal/crystals.hpp"
#include "chordal/growth.hpp"
#include "chordal/json_io.hpp"
#include "chordal/parallel.hpp"
#include "chordal/promotion.hpp"
#include "chordal/sieving.hpp"
#include "chordal/verify.hpp"
#include "chordal/virtualize.hpp"

using namespace chordal;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) note << "; ";
    ok = false;
    note << what;
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o, Clock::time_point start) {
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::string detail = o.note.str();
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              detail.empty() ? "" : " ", detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::size_t instances = 0;

void require_suite(Outcome& o, const SuiteResult& s) {
  instances += s.instances;
  o.require(s.passed() && s.instances > 0,
            s.name + " " + std::to_string(s.failures) + "/" + std::to_string(s.instances) + " failed " +
                (s.counterexamples.empty() ? "" : s.counterexamples.front().dump()));
}

IntPolynomial poly(std::vector<IntPolynomial::Coeff> c) { return IntPolynomial(std::move(c)); }

const char* kFan = "000,111,222,311,422,331,222,111,000";
const char* kVac = "000,100,200,210,211,111,111,110,100,000";

void criterion1(int) {
  auto start = Clock::now();
  Outcome o;
  const std::vector<std::string> orbit{
      "000,111,222,311,422,331,222,111,000", "000,111,200,311,220,111,000,111,000",
      "000,111,222,311,220,111,222,111,000", "000,111,200,111,200,311,200,111,000",
      "000,111,220,311,422,311,222,111,000", "000,111,220,331,220,311,200,111,000",
      "000,111,222,111,220,111,220,111,000", "000,111,000,111,200,311,220,111,000",
      "000,111,222,311,422,331,222,111,000"};
  TableauSeq f = tableau_from_compact(Family::fan, 3, kFan);
  TableauSeq cur = f;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    o.require(cur == tableau_from_compact(Family::fan, 3, orbit[k]), "orbit row " + std::to_string(k));
    cur = promote(cur);
  }
  FilledMatrix expected = FilledMatrix::from_rows({{0, 0, 0, 0, 0, 0, 0, 3},
                                                   {0, 0, 2, 0, 0, 0, 1, 0},
                                                   {0, 2, 0, 0, 0, 1, 0, 0},
                                                   {0, 0, 0, 0, 2, 0, 1, 0},
                                                   {0, 0, 0, 2, 0, 1, 0, 0},
                                                   {0, 0, 1, 0, 1, 0, 1, 0},
                                                   {0, 1, 0, 1, 0, 1, 0, 0},
                                                   {3, 0, 0, 0, 0, 0, 0, 0}});
  o.require(chord_matrix(ChordMap::M_F, f) == expected, "M_F differs from the displayed matrix");
  o.require(std::chrono::duration<double>(Clock::now() - start).count() < 1.0, "slower than 1 s");
  report(1, "golden fan orbit and M_F", o, start);
}

void criterion2(int) {
  auto start = Clock::now();
  Outcome o;
  TableauSeq v = tableau_from_compact(Family::vacillating, 3, kVac);
  TableauSeq osc = tableau_from_compact(
      Family::oscillating, 3, "000,100,200,300,400,410,420,421,422,322,222,221,222,221,220,210,200,100,000");
  o.require(iota_v_to_o(v) == osc, "iota_VO differs from the displayed oscillating tableau");
  FilledMatrix expected = FilledMatrix::from_rows({{0, 0, 0, 0, 0, 1, 1, 0, 0},
                                                   {0, 0, 0, 0, 2, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 0, 0, 1, 1, 0},
                                                   {0, 0, 0, 0, 0, 0, 0, 1, 1},
                                                   {0, 2, 0, 0, 0, 0, 0, 0, 0},
                                                   {1, 0, 0, 0, 0, 0, 0, 0, 1},
                                                   {1, 0, 1, 0, 0, 0, 0, 0, 0},
                                                   {0, 0, 1, 1, 0, 0, 0, 0, 0},
                                                   {0, 0, 0, 1, 0, 1, 0, 0, 0}});
  o.require(chord_matrix(ChordMap::M_VO, v) == expected, "M_VO differs from the displayed matrix");
  o.require(std::chrono::duration<double>(Clock::now() - start).count() < 1.0, "slower than 1 s");
  report(2, "golden vacillating embedding and M_VO", o, start);
}

const Scope kOsc{Family::oscillating, 3, 8};
const Scope kFans{Family::fan, 3, 6};
const Scope kVacs{Family::vacillating, 2, 6};

void criterion3(int jobs) {
  auto start = Clock::now();
  Outcome o;
  instances = 0;
  for (const Scope& s : {kOsc, kFans, kVacs}) require_suite(o, verify_main(s, jobs));
  if (o.ok) o.note << instances << " tableaux";
  report(3, "growth matrices equal chord matrices", o, start);
}

void criterion4(int jobs) {
  auto start = Clock::now();
  Outcome o;
  instances = 0;
  for (const Scope& s : {kOsc, kFans, kVacs}) {
    require_suite(o, verify_order(s, jobs));
    require_suite(o, verify_rotation(s, jobs));
    require_suite(o, verify_structure(s, jobs));
  }
  require_suite(o, verify_blowup_lemmas(kFans, jobs));
  require_suite(o, verify_blowup_lemmas(kVacs, jobs));
  require_suite(o, verify_order(Scope{Family::vacillating, 3, 6}, jobs));
  if (o.ok) o.note << instances << " instances";
  report(4, "promotion order, rotation, structure, blowup lemmas", o, start);
}

void criterion5(int) {
  auto start = Clock::now();
  Outcome o;
  SuiteResult s = verify_rule_inversion(10000, 7);
  require_suite(o, s);
  // Forward and backward generators for each of the three rules.
  o.require(s.instances >= 6 * 10000, "fewer than 10^4 cells per rule and direction");
  report(5, "local rules invert each other", o, start);
}

void criterion6(int jobs) {
  auto start = Clock::now();
  Outcome o;
  auto expect = [&](const std::string& name, const IntPolynomial& got, const IntPolynomial& want) {
    o.require(got == want, name + " = " + got.pretty() + ", expected " + want.pretty());
  };
  expect("g_{2,2}", g_poly(2, 2), poly({1, 0, 1, 0, 1}));
  expect("g_{3,2}", g_poly(3, 2), poly({1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1}));
  expect("f_{4,2}", f_poly(CrystalKind::spin, 2, 4, jobs), poly({0, 0, 0, 0, 1, 0, 1, 0, 1}));
  expect("f_{6,2}", f_poly(CrystalKind::spin, 2, 6, jobs),
         poly({0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 1, 2, 1, 1}));
  expect("f_{7,2}", f_poly(CrystalKind::bvec, 2, 7, jobs),
         poly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 2, 2, 2, 1, 1, 1, 1}));
  expect("h_{7,2}", h_poly(2, 7, jobs), poly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 3, 2, 2, 1, 1}));
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 7; ++n)
      expect("h_{" + std::to_string(n) + "," + std::to_string(r) + "}", h_poly(r, n, jobs), syt_h_poly(r, n));
  report(6, "polynomial fixtures", o, start);
}

void csp(Outcome& o, Family fam, int r, int n, const IntPolynomial& f, const std::string& label) {
  std::vector<TableauSeq> xs = enumerate_zero(fam, r, n);
  CspReport rep = csp_check(xs, n, f);
  o.require(rep.holds, label + " fails at d=" + std::to_string(rep.first_mismatch_d));
}

std::string tag(const char* what, int r, int n) {
  return std::string(what) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
}

void criterion7(int jobs) {
  auto start = Clock::now();
  Outcome o;
  int checks = 0;
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 8; ++n) {
      csp(o, Family::oscillating, r, n, f_poly(CrystalKind::cvec, r, n, jobs), tag("oscillating f", r, n));
      if (n % 2 == 0) csp(o, Family::fan, r, n, f_poly(CrystalKind::spin, r, n, jobs), tag("fans f", r, n));
      checks += 1 + (n % 2 == 0);
    }
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 7; ++n, ++checks)
      csp(o, Family::vacillating, r, n, h_poly(r, n, jobs), tag("vacillating h", r, n));
  // Conjectures: fans of length 2n with g_{n,r}, and B vector words with f.
  for (int r = 1; r <= 5; ++r)
    for (int n = 1; n + r <= 6; ++n, ++checks)
      csp(o, Family::fan, r, 2 * n, g_poly(n, r), tag("fans g", r, 2 * n));
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 6; ++n, ++checks)
      csp(o, Family::vacillating, r, n, f_poly(CrystalKind::bvec, r, n, jobs), tag("B vector f", r, n));
  if (o.ok) o.note << checks << " checks";
  report(7, "cyclic sieving", o, start);
}

void criterion8(int) {
  auto start = Clock::now();
  Outcome o;
  require_suite(o, verify_fan_counts(3, 5));
  o.require(enumerate_zero(Family::fan, 2, 8).size() == 84, "84 fans at r=2, length 8");
  o.require(fan_count_formula(4, 2) == 84, "product formula at r=2, n=4");
  report(8, "fan counts match the product formula", o, start);
}

}  // namespace

int main() {
  int jobs = default_jobs();
  using Step = void (*)(int);
  for (Step step : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8}) {
    try {
      step(jobs);
    } catch (const std::exception& e) {
      std::printf("FAIL exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%s\n", failures ? "acceptance FAILED" : "acceptance passed");
  return failures ? 1 : 0;
}
