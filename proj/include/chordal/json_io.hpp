#pragma once

#include <string_view>

#include <json.hpp>

#include "chordal/crystals.hpp"
#include "chordal/growth.hpp"
#include "chordal/matrix.hpp"
#include "chordal/sieving.hpp"

namespace chordal {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// {"kind": "spin|cvec|bvec", "r": r, "letters": [...]}; spin letters are
/// sign strings, barred letters negative integers.
json to_json(const Word& w);
Word word_from_json(const json& j);

/// {"family": ..., "r": r, "steps": [[...], ...]}. Steps may also be compact
/// strings such as "311".
json to_json(const TableauSeq& t);
TableauSeq tableau_from_json(const json& j);

/// "000,111,220,111,000": single-digit parts, one partition per comma.
TableauSeq tableau_from_compact(Family family, int rank, std::string_view text);

json to_json(const FilledMatrix& m);
/// Accepts a square array of arrays, or the lower triangle as rows of
/// lengths 1, 2, ..., n-1.
FilledMatrix matrix_from_json(const json& j);
/// Rows of lengths 1, ..., n-1 holding the entries below the diagonal.
json lower_triangle_json(const FilledMatrix& m);

json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const json& j);

json to_json(const CspReport& r);

/// Corner labels as rows of compact strings padded to `width`.
json to_json(const CornerGrid& g, std::size_t width);

}  // namespace chordal
