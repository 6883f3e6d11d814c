#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chordal/crystals.hpp"

namespace chordal {

/// Embeds a spin letter into the r-fold tensor power of the C vector crystal.
/// Returns (v_1, ..., v_r), increasing in 1<..<r<rbar<..<1bar; v_1 is the
/// rightmost factor.
std::vector<Letter> psi_spin(Letter x, int rank);

/// Embeds a B vector letter into the square of the C vector crystal:
/// a -> a(x)a, abar -> abar(x)abar, 0 -> r(x)rbar. Returned rightmost first.
std::array<Letter, 2> psi_vec(Letter x, int rank);

/// Image of a spin or B vector word as a C vector word.
Word psi_word(const Word& w);

/// f_i^2 for i < r and f_r on a C vector word (and likewise for e).
std::optional<Word> virtual_apply(int i, Dir dir, const Word& cword);

enum class Embedding { fan_to_osc, vac_to_osc, vac_to_fan };

TableauSeq iota_f_to_o(const TableauSeq& fan);
TableauSeq iota_v_to_o(const TableauSeq& vac);
TableauSeq iota_v_to_f(const TableauSeq& vac);
TableauSeq apply_embedding(Embedding e, const TableauSeq& t);

/// Same as iota_f_to_o, computed through words and psi_spin.
TableauSeq iota_f_to_o_via_words(const TableauSeq& fan);

/// Preimage under the embedding, or nullopt when `t` is not in its image.
std::optional<TableauSeq> iota_inverse(Embedding e, const TableauSeq& t);

class NotInImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chordal
