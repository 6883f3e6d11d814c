#include "chordal/verify.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <random>

#include "chordal/parallel.hpp"
#include "chordal/promotion.hpp"
#include "chordal/sieving.hpp"
#include "chordal/virtualize.hpp"

namespace chordal {

namespace {
constexpr std::size_t kMaxCounterexamples = 10;
}

void SuiteResult::fail(json detail) {
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(detail));
}

void SuiteResult::merge(const SuiteResult& other) {
  instances += other.instances;
  failures += other.failures;
  for (const json& c : other.counterexamples)
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
}

json SuiteResult::to_json() const {
  return {{"suite", name},
          {"passed", passed()},
          {"instances", instances},
          {"failures", failures},
          {"counterexamples", counterexamples}};
}

namespace {

// Runs `check` on every weight-zero tableau in scope. `check` returns an empty
// string on success, else a description.
SuiteResult for_all(const std::string& name, const Scope& s, int jobs,
                    const std::function<std::string(const TableauSeq&)>& check) {
  SuiteResult res{name};
  std::mutex mu;
  for (int r = 1; r <= s.r_max; ++r)
    for (int n = 1; n <= s.n_max; ++n) {
      if (s.family == Family::fan && n % 2) continue;
      std::vector<TableauSeq> xs = enumerate_zero(s.family, r, n, jobs);
      parallel_for(xs.size(), jobs, [&](std::size_t k) {
        std::string why;
        try {
          why = check(xs[k]);
        } catch (const std::exception& e) {
          why = std::string("exception: ") + e.what();
        }
        std::lock_guard lock(mu);
        ++res.instances;
        if (!why.empty()) res.fail({{"tableau", to_json(xs[k])}, {"reason", why}});
      });
    }
  return res;
}

}  // namespace

SuiteResult verify_main(const Scope& s, int jobs) {
  return for_all("main-" + family_name(s.family), s, jobs, [](const TableauSeq& t) -> std::string {
    FilledMatrix g = growth_matrix(t);
    FilledMatrix c = chord_matrix(default_chord_map(t.family), t);
    if (g != c) return "growth matrix differs from chord matrix";
    if (t.family == Family::vacillating) {
      if (chord_matrix(ChordMap::M_VF, t) != g) return "growth matrix differs from the fan chord matrix";
      // G_F(iota_VF(V)) = G_O(iota_VO(V)) + (r-1) S, S the 2n x 2n block
      // diagonal matrix of n swap blocks.
      FilledMatrix s = growth_matrix(iota_v_to_o(t));
      for (int i = 0; i + 1 < s.size(); i += 2) {
        s(i, i + 1) += t.rank - 1;
        s(i + 1, i) += t.rank - 1;
      }
      if (growth_matrix(iota_v_to_f(t)) != s) return "fan and oscillating growth matrices of the embeddings disagree";
    }
    if (t.family == Family::fan && iota_f_to_o(t) != iota_f_to_o_via_words(t))
      return "fan embedding differs from the word route";
    if (growth_inverse(t.family, t.rank, g) != t) return "growth_inverse does not recover the tableau";
    return {};
  });
}

SuiteResult verify_rotation(const Scope& s, int jobs) {
  return for_all("rotation-" + family_name(s.family), s, jobs, [](const TableauSeq& t) -> std::string {
    std::vector<ChordMap> maps{default_chord_map(t.family)};
    if (t.family == Family::vacillating) maps.push_back(ChordMap::M_VF);
    TableauSeq p = promote(t);
    for (ChordMap m : maps)
      if (chord_matrix(m, p) != rotate_matrix(chord_matrix(m, t))) return "promotion does not rotate the chords";
    return {};
  });
}

SuiteResult verify_order(const Scope& s, int jobs) {
  return for_all("order-" + family_name(s.family), s, jobs, [](const TableauSeq& t) -> std::string {
    if (promote_power(t, t.length()) != t) return "pr^n is not the identity";
    if (t.family == Family::fan && iota_f_to_o(promote(t)) != promote_power(iota_f_to_o(t), t.rank))
      return "fan promotion is not r oscillating promotions of the embedding";
    if (t.family == Family::vacillating) {
      // Promotion through the fan embedding agrees.
      TableauSeq f = promote(promote(iota_v_to_f(t)));
      auto back = iota_inverse(Embedding::vac_to_fan, f);
      if (!back || *back != promote(t)) return "promotion through fans differs";
    }
    return {};
  });
}

SuiteResult verify_structure(const Scope& s, int jobs) {
  return for_all("structure-" + family_name(s.family), s, jobs, [](const TableauSeq& t) -> std::string {
    std::vector<ChordMap> maps{default_chord_map(t.family)};
    if (t.family == Family::vacillating) maps.push_back(ChordMap::M_VF);
    for (ChordMap m : maps) {
      FilledMatrix c = chord_matrix(m, t);
      if (!c.is_symmetric()) return "chord matrix not symmetric";
      if (!c.has_zero_diagonal()) return "chord matrix has a nonzero diagonal";
      int expected = t.family == Family::oscillating ? 1 : t.family == Family::fan ? t.rank : 2;
      for (int i = 0; i < c.size(); ++i)
        if (c.row_sum(i) != expected) return "chord matrix row sum is wrong";
      if (t.family == Family::oscillating && !c.is_perfect_matching()) return "M_O is not a perfect matching";
    }
    return {};
  });
}

namespace {

// Corner labels of `coarse` must equal those of `fine` at multiples of k.
bool corners_match(const CornerGrid& coarse, const CornerGrid& fine, int k) {
  for (int i = 0; i <= coarse.size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (coarse.corner(i, j) != fine.corner(i * k, j * k)) return false;
  return true;
}

}  // namespace

SuiteResult verify_blowup_lemmas(const Scope& s, int jobs) {
  if (s.family == Family::fan) {
    return for_all("blowup-fan", s, jobs, [](const TableauSeq& f) -> std::string {
      const int r = f.rank;
      FilledMatrix mf = chord_matrix(ChordMap::M_F, f);
      FilledMatrix up = blowup(BlowupDir::SE, mf, r);
      if (up != chord_matrix(ChordMap::M_O, iota_f_to_o(f))) return "blowup_SE(M_F) differs from M_O of the embedding";
      if (blocksum(up, r) != mf) return "blocksum does not undo blowup_SE";
      if (!corners_match(growth_diagram(f), grow_forward(RuleSet::zero_one, up), r))
        return "Burge corners differ from 0/1 corners of the blown up filling";
      return {};
    });
  }
  if (s.family == Family::vacillating) {
    return for_all("blowup-vac", s, jobs, [](const TableauSeq& v) -> std::string {
      FilledMatrix mv = chord_matrix(ChordMap::M_VO, v);
      FilledMatrix up = blowup(BlowupDir::NE, mv, 2);
      if (up != chord_matrix(ChordMap::M_O, iota_v_to_o(v))) return "blowup_NE(M_VO) differs from M_O of the embedding";
      if (blocksum(up, 2) != mv) return "blocksum does not undo blowup_NE";
      if (!corners_match(growth_diagram(v), grow_forward(RuleSet::zero_one, up), 2))
        return "RSK corners differ from 0/1 corners of the blown up filling";
      return {};
    });
  }
  throw std::invalid_argument("blowup lemmas concern fans and vacillating tableaux");
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Partition random_partition(Rng& rng, int max_rows, int max_part) {
  std::vector<int> parts;
  int rows = uniform(rng, 0, max_rows);
  int cap = max_part;
  for (int i = 0; i < rows; ++i) {
    cap = uniform(rng, 0, cap);
    parts.push_back(cap);
  }
  return Partition(parts);
}

// Random outer partition with outer/inner a strip of the rule's kind.
Partition grow_strip(Rng& rng, RuleSet rule, const Partition& inner) {
  std::size_t rows = inner.length() + 3;
  std::vector<int> out(rows, 0);
  if (rule == RuleSet::zero_one) {
    if (uniform(rng, 0, 2) == 0) return inner;
    std::vector<int> addable;
    for (std::size_t i = 0; i <= inner.length(); ++i)
      if (i == 0 || inner.part(i - 1) > inner.part(i)) addable.push_back(static_cast<int>(i) + 1);
    return add_box(inner, addable[uniform(rng, 0, static_cast<int>(addable.size()) - 1)]);
  }
  for (std::size_t i = 0; i < rows; ++i) {
    int lo = inner.part(i);
    int hi = rule == RuleSet::burge ? lo + 1 : (i == 0 ? lo + 3 : inner.part(i - 1));
    if (i > 0) hi = std::min(hi, out[i - 1]);
    out[i] = uniform(rng, lo, std::max(lo, hi));
  }
  return Partition(out);
}

Partition shrink_strip(Rng& rng, RuleSet rule, const Partition& outer) {
  if (rule == RuleSet::zero_one) {
    if (uniform(rng, 0, 2) == 0 || outer.empty()) return outer;
    std::vector<int> removable;
    for (std::size_t i = 0; i < outer.length(); ++i)
      if (outer.part(i) > outer.part(i + 1)) removable.push_back(static_cast<int>(i) + 1);
    return add_box(outer, removable[uniform(rng, 0, static_cast<int>(removable.size()) - 1)], -1);
  }
  std::size_t rows = outer.length();
  std::vector<int> out(rows + 1, 0);
  for (std::size_t i = rows; i-- > 0;) {
    int hi = outer.part(i);
    int lo = rule == RuleSet::burge ? hi - 1 : outer.part(i + 1);
    lo = std::max(lo, out[i + 1]);
    out[i] = uniform(rng, std::min(lo, hi), hi);
  }
  return Partition(out);
}

std::string rule_name(RuleSet r) {
  switch (r) {
    case RuleSet::zero_one: return "zero_one";
    case RuleSet::burge: return "burge";
    case RuleSet::rsk: return "rsk";
  }
  return "?";
}

}  // namespace

SuiteResult verify_rule_inversion(std::size_t cases, std::uint64_t seed) {
  SuiteResult res{"rule-inversion"};
  Rng rng(seed);
  for (RuleSet rule : {RuleSet::zero_one, RuleSet::burge, RuleSet::rsk}) {
    for (std::size_t c = 0; c < cases; ++c) {
      ++res.instances;
      Partition g = random_partition(rng, 5, 6);
      Partition d = grow_strip(rng, rule, g), a = grow_strip(rng, rule, g);
      int m = rule == RuleSet::zero_one ? (g == d && d == a ? uniform(rng, 0, 1) : 0) : uniform(rng, 0, 3);
      json cell = {{"rule", rule_name(rule)}, {"direction", "forward"}, {"gamma", to_json(g)},
                   {"delta", to_json(d)}, {"alpha", to_json(a)}, {"m", m}};
      try {
        Partition b = cell_forward(rule, g, d, a, m);
        CellSolution back = cell_backward(rule, b, d, a);
        if (back.gamma != g || back.m != m) {
          cell["beta"] = to_json(b);
          res.fail(cell);
        }
      } catch (const std::exception& e) {
        cell["error"] = e.what();
        res.fail(cell);
      }
    }
    for (std::size_t c = 0; c < cases; ++c) {
      ++res.instances;
      Partition b = random_partition(rng, 5, 6);
      Partition d = shrink_strip(rng, rule, b), a = shrink_strip(rng, rule, b);
      json cell = {{"rule", rule_name(rule)}, {"direction", "backward"}, {"beta", to_json(b)},
                   {"delta", to_json(d)}, {"alpha", to_json(a)}};
      try {
        CellSolution s = cell_backward(rule, b, d, a);
        if (cell_forward(rule, s.gamma, d, a, s.m) != b) res.fail(cell);
      } catch (const std::exception& e) {
        cell["error"] = e.what();
        res.fail(cell);
      }
    }
  }
  return res;
}

namespace {

std::string compact_steps(const TableauSeq& t) {
  std::string s;
  for (std::size_t k = 0; k < t.steps.size(); ++k) s += (k ? "," : "") + t.steps[k].compact(t.rank);
  return s;
}

json golden_value(const json& c) {
  const std::string op = c.at("op");
  const int r = c.at("r");
  if (op == "poly") {
    const std::string which = c.at("poly");
    const int n = c.at("n");
    if (which == "g") return to_json(g_poly(n, r));
    if (which == "h") return to_json(h_poly(r, n));
    return to_json(f_poly(crystal_kind_for(parse_family(c.at("family").get<std::string>())), r, n));
  }
  TableauSeq t = tableau_from_compact(parse_family(c.at("family").get<std::string>()), r,
                                      c.at("tableau").get<std::string>());
  if (op == "orbit") {
    json rows = json::array();
    TableauSeq cur = t;
    for (int k = 0; k <= t.length(); ++k) {
      rows.push_back(compact_steps(cur));
      cur = promote(cur);
    }
    return rows;
  }
  if (op == "chord") return to_json(chord_matrix(default_chord_map(t.family), t));
  if (op == "growth-matrix") return to_json(growth_matrix(t));
  if (op == "growth-corners") return to_json(growth_diagram(t), static_cast<std::size_t>(r));
  if (op == "embed-osc") return compact_steps(iota_v_to_o(t));
  if (op == "promote") return compact_steps(promote(t));
  if (op == "word") return to_json(tableau_to_word(t));
  throw std::invalid_argument("unknown golden op: " + op);
}

}  // namespace

SuiteResult run_golden(const json& fixtures) {
  SuiteResult res{"golden"};
  for (const json& c : fixtures.at("cases")) {
    ++res.instances;
    try {
      json got = golden_value(c);
      if (got != c.at("expected")) res.fail({{"name", c.at("name")}, {"expected", c.at("expected")}, {"got", got}});
    } catch (const std::exception& e) {
      res.fail({{"name", c.at("name")}, {"error", e.what()}});
    }
  }
  return res;
}

std::uint64_t fan_count_formula(int n, int rank) {
  std::uint64_t num = 1, den = 1;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      num *= static_cast<std::uint64_t>(i + j + 2 * rank);
      den *= static_cast<std::uint64_t>(i + j);
      std::uint64_t g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  if (den != 1) throw std::logic_error("fan count formula is not an integer");
  return num;
}

SuiteResult verify_fan_counts(int r_max, int n_max) {
  SuiteResult res{"fan-counts"};
  for (int r = 1; r <= r_max; ++r)
    for (int n = 1; n <= n_max; ++n) {
      ++res.instances;
      std::uint64_t count = 0;
      for_each_zero(Family::fan, r, 2 * n, {}, [&](const TableauSeq&) { ++count; });
      std::uint64_t want = fan_count_formula(n, r);
      if (count != want) res.fail({{"r", r}, {"n", n}, {"enumerated", count}, {"formula", want}});
    }
  return res;
}

}  // namespace chordal
