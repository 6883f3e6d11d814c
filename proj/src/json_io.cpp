#include "chordal/json_io.hpp"

#include <stdexcept>
#include <string>

namespace chordal {

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (j.is_string()) return Partition::parse(j.get<std::string>());
  if (!j.is_array()) throw std::invalid_argument("partition must be an array");
  return Partition(j.get<std::vector<int>>());
}

json to_json(const Word& w) {
  json letters = json::array();
  for (Letter x : w.letters) {
    if (w.kind == CrystalKind::spin)
      letters.push_back(spin_signs(x, w.rank));
    else
      letters.push_back(x.code);
  }
  return {{"kind", kind_name(w.kind)}, {"r", w.rank}, {"letters", letters}};
}

Word word_from_json(const json& j) {
  Word w{parse_kind(j.at("kind").get<std::string>()), j.at("r").get<int>(), {}};
  for (const json& x : j.at("letters")) {
    if (w.kind == CrystalKind::spin) {
      auto s = x.get<std::string>();
      if (static_cast<int>(s.size()) != w.rank) throw std::invalid_argument("spin letter has wrong length");
      w.letters.push_back(spin_letter(s));
    } else {
      int a = x.get<int>();
      if (std::abs(a) > w.rank || (a == 0 && w.kind != CrystalKind::bvec))
        throw std::invalid_argument("letter out of range");
      w.letters.push_back({a});
    }
  }
  return w;
}

json to_json(const TableauSeq& t) {
  json steps = json::array();
  for (const Partition& p : t.steps) steps.push_back(to_json(p));
  return {{"family", family_name(t.family)}, {"r", t.rank}, {"steps", steps}};
}

TableauSeq tableau_from_json(const json& j) {
  TableauSeq t{parse_family(j.at("family").get<std::string>()), j.at("r").get<int>(), {}};
  for (const json& s : j.at("steps")) t.steps.push_back(partition_from_json(s));
  return t;
}

TableauSeq tableau_from_compact(Family family, int rank, std::string_view text) {
  TableauSeq t{family, rank, {}};
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      t.steps.push_back(Partition::parse(cur));
      cur.clear();
    } else if (c != ' ' && c != '(' && c != ')') {
      cur += c;
    }
  }
  t.steps.push_back(Partition::parse(cur));
  return t;
}

json to_json(const FilledMatrix& m) { return json(m.rows()); }

FilledMatrix matrix_from_json(const json& j) {
  auto rows = j.get<std::vector<std::vector<int>>>();
  if (rows.empty()) return FilledMatrix();
  bool square = true;
  for (const auto& row : rows) square = square && row.size() == rows.size();
  if (square) return FilledMatrix::from_rows(rows);
  const int n = static_cast<int>(rows.size()) + 1;
  FilledMatrix m(n);
  for (int i = 1; i < n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != i)
      throw std::invalid_argument("lower triangle rows must have lengths 1, 2, ...");
    for (int j2 = 0; j2 < i; ++j2) {
      int v = rows[i - 1][j2];
      if (v < 0) throw std::invalid_argument("matrix entries must be nonnegative");
      m(i, j2) = v;
      m(j2, i) = v;
    }
  }
  return m;
}

json lower_triangle_json(const FilledMatrix& m) {
  json rows = json::array();
  for (int i = 1; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < i; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const IntPolynomial& p) { return {{"coeffs", p.coeffs()}}; }

IntPolynomial polynomial_from_json(const json& j) {
  return IntPolynomial(j.at("coeffs").get<std::vector<IntPolynomial::Coeff>>());
}

json to_json(const CspReport& r) {
  json out = {{"holds", r.holds},
              {"order", r.order},
              {"orbit_sizes", r.orbit_sizes},
              {"residue", to_json(r.residue)},
              {"expected_residue", to_json(r.expected_residue)}};
  out["first_mismatch_d"] = r.first_mismatch_d < 0 ? json(nullptr) : json(r.first_mismatch_d);
  return out;
}

json to_json(const CornerGrid& g, std::size_t width) {
  json rows = json::array();
  for (int i = 0; i <= g.size(); ++i) {
    json row = json::array();
    for (int j = 0; j <= i; ++j) row.push_back(g.corner(i, j).compact(width));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chordal
