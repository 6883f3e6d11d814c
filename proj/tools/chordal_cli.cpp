// chordal: enumeration, promotion, chord matrices, growth diagrams and
// cyclic sieving checks for oscillating tableaux, fans of Dyck paths and
// vacillating tableaux.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "chordal/growth.hpp"
#include "chordal/json_io.hpp"
#include "chordal/parallel.hpp"
#include "chordal/promotion.hpp"
#include "chordal/sieving.hpp"
#include "chordal/verify.hpp"
#include "chordal/virtualize.hpp"

#ifndef CHORDAL_FIXTURE_DIR
#define CHORDAL_FIXTURE_DIR "tests/fixtures"
#endif

using namespace chordal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "osc";
  int r = 1;
  int n = 0;
  std::string tableau;
  std::string format = "json";
  int jobs = default_jobs();
  bool count_only = false;
  int times = 1;
  std::string map;
  std::string filling;
  std::string suite;
  std::size_t cases = 10000;
  std::uint64_t seed = 1;
  bool deep = false;
  std::string poly = "f";
  bool conjecture = false;
  std::string fixtures = std::string(CHORDAL_FIXTURE_DIR) + "/golden.json";
  bool r_set = false, n_set = false, family_set = false;
};

std::string compact(const TableauSeq& t) {
  std::string s;
  for (std::size_t k = 0; k < t.steps.size(); ++k) s += (k ? "," : "") + t.steps[k].compact(t.rank);
  return s;
}

void print(const Options& o, const json& j, const std::string& ascii) {
  if (o.format == "ascii")
    std::cout << ascii;
  else
    std::cout << j.dump(1) << '\n';
}

// JSON text, a path to a JSON file, or compact "000,111,...".
TableauSeq read_tableau(const Options& o) {
  if (o.tableau.empty()) throw UsageError("--tableau is required");
  std::string text = o.tableau;
  if (std::ifstream f(text); f && text.find(',') == std::string::npos) {
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  TableauSeq t;
  auto first = text.find_first_not_of(" \n\t");
  if (first != std::string::npos && text[first] == '{')
    t = tableau_from_json(json::parse(text));
  else
    t = tableau_from_compact(parse_family(o.family), o.r, text);
  if (std::string why = tableau_violation(t); !why.empty()) throw UsageError("invalid tableau: " + why);
  return t;
}

int cmd_enumerate(const Options& o) {
  auto xs = enumerate_zero(parse_family(o.family), o.r, o.n, o.jobs);
  if (o.count_only) {
    std::cout << xs.size() << '\n';
    return kExitOk;
  }
  json arr = json::array();
  std::string ascii;
  for (const auto& t : xs) {
    arr.push_back(to_json(t));
    ascii += compact(t) + '\n';
  }
  print(o, arr, ascii);
  return kExitOk;
}

int cmd_promote(const Options& o) {
  TableauSeq t = promote_power(read_tableau(o), o.times);
  print(o, to_json(t), compact(t) + '\n');
  return kExitOk;
}

ChordMap parse_map(const std::string& s, Family f) {
  if (s.empty()) return default_chord_map(f);
  if (s == "M_O") return ChordMap::M_O;
  if (s == "M_F") return ChordMap::M_F;
  if (s == "M_VO") return ChordMap::M_VO;
  if (s == "M_VF") return ChordMap::M_VF;
  throw UsageError("unknown chord map: " + s);
}

int cmd_chord(const Options& o) {
  TableauSeq t = read_tableau(o);
  FilledMatrix m = chord_matrix(parse_map(o.map, t.family), t);
  print(o, {{"matrix", to_json(m)}}, m.render() + "\n" + m.chord_list());
  return kExitOk;
}

int cmd_growth(const Options& o) {
  if (!o.filling.empty()) {
    FilledMatrix m = matrix_from_json(json::parse(o.filling));
    try {
      TableauSeq t = growth_inverse(parse_family(o.family), o.r, m);
      print(o, to_json(t), compact(t) + '\n');
      return kExitOk;
    } catch (const InvalidOutput& e) {
      std::cerr << "invalid filling: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  TableauSeq t = read_tableau(o);
  CornerGrid g = growth_diagram(t);
  FilledMatrix m = g.matrix();
  bool round_trip = growth_inverse(t.family, t.rank, m) == t;
  std::string ascii = m.render();
  for (int i = 0; i <= g.size(); ++i) {
    for (int j = 0; j <= i; ++j) ascii += (j ? " " : "") + g.corner(i, j).compact(t.rank);
    ascii += '\n';
  }
  print(o,
        {{"filling", lower_triangle_json(m)}, {"matrix", to_json(m)},
         {"corners", to_json(g, static_cast<std::size_t>(t.rank))}, {"round_trip", round_trip}},
        ascii);
  return round_trip ? kExitOk : kExitFailure;
}

// Scale of a suite: explicit flags, else the default range, else --deep.
Scope scope_for(const Options& o, Family f, int r_default, int n_default, int r_deep, int n_deep) {
  Scope s{f, o.deep ? r_deep : r_default, o.deep ? n_deep : n_default};
  if (o.r_set) s.r_max = o.r;
  if (o.n_set) s.n_max = o.n;
  return s;
}

int cmd_verify(const Options& o) {
  std::vector<SuiteResult> results;
  const Family osc = Family::oscillating, fan = Family::fan, vac = Family::vacillating;
  auto families = [&](std::vector<Family> all) {
    return o.family_set ? std::vector<Family>{parse_family(o.family)} : all;
  };
  auto scaled = [&](Family f) {
    if (f == osc) return scope_for(o, f, 3, 8, 4, 10);
    if (f == fan) return scope_for(o, f, 3, 6, 4, 10);
    return scope_for(o, f, 2, 6, 3, 8);
  };
  if (o.suite == "osc-main") {
    results.push_back(verify_main(scaled(osc), o.jobs));
  } else if (o.suite == "fans-main") {
    results.push_back(verify_main(scaled(fan), o.jobs));
    results.push_back(verify_fan_counts(o.r_set ? o.r : 3, o.deep ? 7 : 5));
  } else if (o.suite == "vac-main") {
    results.push_back(verify_main(scaled(vac), o.jobs));
  } else if (o.suite == "rotation") {
    for (Family f : families({osc, fan, vac})) {
      results.push_back(verify_rotation(scaled(f), o.jobs));
      results.push_back(verify_structure(scaled(f), o.jobs));
    }
  } else if (o.suite == "order") {
    for (Family f : families({osc, fan, vac})) results.push_back(verify_order(scaled(f), o.jobs));
  } else if (o.suite == "blowup-lemmas") {
    for (Family f : families({fan, vac})) results.push_back(verify_blowup_lemmas(scaled(f), o.jobs));
  } else if (o.suite == "rule-inversion") {
    results.push_back(verify_rule_inversion(o.cases, o.seed));
  } else {
    throw UsageError("unknown suite: " + o.suite);
  }
  bool ok = true;
  json arr = json::array();
  std::string ascii;
  for (const auto& r : results) {
    ok = ok && r.passed();
    arr.push_back(r.to_json());
    ascii += (r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.instances) + " instances, " +
             std::to_string(r.failures) + " failures)\n";
  }
  print(o, {{"passed", ok}, {"suites", arr}}, ascii);
  return ok ? kExitOk : kExitFailure;
}

int cmd_csp(const Options& o) {
  Family fam = parse_family(o.family);
  std::vector<TableauSeq> xs = enumerate_zero(fam, o.r, o.n, o.jobs);
  IntPolynomial f;
  if (o.poly == "f") {
    f = f_poly(crystal_kind_for(fam), o.r, o.n, o.jobs);
  } else if (o.poly == "g") {
    if (fam != Family::fan || o.n % 2) throw UsageError("g is defined for fans of even length");
    f = g_poly(o.n / 2, o.r);
  } else if (o.poly == "h") {
    if (fam != Family::vacillating) throw UsageError("h is defined for vacillating tableaux");
    f = h_poly(o.r, o.n, o.jobs);
  } else {
    throw UsageError("unknown polynomial: " + o.poly);
  }
  CspReport rep = csp_check(xs, o.n, f);
  json j = to_json(rep);
  j["polynomial"] = to_json(f);
  j["conjecture"] = o.conjecture;
  print(o, j,
        std::string(rep.holds ? "holds" : "fails") + "\n" + o.poly + " = " + f.pretty() +
            "\nresidue = " + rep.residue.pretty() + "\nexpected = " + rep.expected_residue.pretty() + '\n');
  if (o.conjecture) return kExitOk;
  return rep.holds ? kExitOk : kExitFailure;
}

int cmd_poly(const Options& o) {
  IntPolynomial p;
  if (o.poly == "g")
    p = g_poly(o.n, o.r);
  else if (o.poly == "h")
    p = h_poly(o.r, o.n, o.jobs);
  else if (o.poly == "h-syt")
    p = syt_h_poly(o.r, o.n);
  else if (o.poly == "f")
    p = f_poly(crystal_kind_for(parse_family(o.family)), o.r, o.n, o.jobs);
  else
    throw UsageError("unknown polynomial: " + o.poly);
  print(o, to_json(p), p.pretty() + '\n');
  return kExitOk;
}

int cmd_golden(const Options& o) {
  std::ifstream f(o.fixtures);
  if (!f) throw UsageError("cannot open fixtures: " + o.fixtures);
  SuiteResult r = run_golden(json::parse(f));
  std::string ascii = std::string(r.passed() ? "PASS" : "FAIL") + " golden (" + std::to_string(r.instances) +
                      " cases, " + std::to_string(r.failures) + " failures)\n";
  print(o, r.to_json(), ascii);
  return r.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Promotion, chord diagrams and growth diagrams for crystal tableaux"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "osc | fan | vac")
        ->check(CLI::IsMember({"osc", "oscillating", "fan", "vac", "vacillating"}))
        ->each([&](const std::string&) { o.family_set = true; });
    sub->add_option("--r", o.r, "rank")->check(CLI::PositiveNumber)->each([&](const std::string&) { o.r_set = true; });
    sub->add_option("--n", o.n, "length")->check(CLI::NonNegativeNumber)->each([&](const std::string&) {
      o.n_set = true;
    });
    sub->add_option("--format", o.format, "json | ascii")->check(CLI::IsMember({"json", "ascii"}));
    sub->add_option("--jobs", o.jobs, "worker threads (default from CHORDAL_JOBS)")->check(CLI::PositiveNumber);
  };

  auto* en = app.add_subcommand("enumerate", "list weight-zero tableaux");
  common(en);
  en->add_flag("--count-only", o.count_only, "print only the number of tableaux");

  auto* pr = app.add_subcommand("promote", "apply promotion");
  common(pr);
  pr->add_option("--tableau", o.tableau, "JSON, JSON file, or compact 000,111,...");
  pr->add_option("--times", o.times, "number of promotions")->check(CLI::NonNegativeNumber);

  auto* ch = app.add_subcommand("chord", "chord matrix from the promotion grid");
  common(ch);
  ch->add_option("--tableau", o.tableau, "JSON, JSON file, or compact 000,111,...");
  ch->add_option("--map", o.map, "M_O | M_F | M_VO | M_VF");

  auto* gr = app.add_subcommand("growth", "growth diagram of a tableau, or its inverse from a filling");
  common(gr);
  gr->add_option("--tableau", o.tableau, "JSON, JSON file, or compact 000,111,...");
  gr->add_option("--filling", o.filling, "JSON matrix or lower triangle");

  auto* ve = app.add_subcommand("verify", "run a property suite");
  common(ve);
  ve->add_option("suite", o.suite, "osc-main | fans-main | vac-main | rotation | order | blowup-lemmas | rule-inversion")
      ->required();
  ve->add_option("--cases", o.cases, "random cells per rule and direction");
  ve->add_option("--seed", o.seed, "seed for rule-inversion");
  ve->add_flag("--deep", o.deep, "larger ranges");

  auto* cs = app.add_subcommand("csp", "cyclic sieving check under promotion");
  common(cs);
  cs->add_option("--poly", o.poly, "f | g | h")->check(CLI::IsMember({"f", "g", "h"}));
  cs->add_flag("--conjecture", o.conjecture, "record the outcome without failing");

  auto* po = app.add_subcommand("poly", "print f, g, h or h-syt");
  common(po);
  po->add_option("--poly", o.poly, "f | g | h | h-syt")->check(CLI::IsMember({"f", "g", "h", "h-syt"}));

  auto* go = app.add_subcommand("golden", "replay the figure fixtures");
  common(go);
  go->add_option("--fixtures", o.fixtures, "fixture file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*en) return cmd_enumerate(o);
    if (*pr) return cmd_promote(o);
    if (*ch) return cmd_chord(o);
    if (*gr) return cmd_growth(o);
    if (*ve) return cmd_verify(o);
    if (*cs) return cmd_csp(o);
    if (*po) return cmd_poly(o);
    if (*go) return cmd_golden(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
