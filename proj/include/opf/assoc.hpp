#pragma once

#include "opf/lincomb.hpp"
#include "opf/rational.hpp"
#include "opf/word.hpp"

namespace opf {

using WordComb = LinComb<Word, Rational>;

/// Concatenation, extended bilinearly.
WordComb assoc_concat(const WordComb& x, const WordComb& y);
/// Symmetrized associative product xy + yx.
WordComb assoc_sym(const WordComb& x, const WordComb& y);

inline WordComb word(const char* letters) { return WordComb(Word(letters)); }

}  // namespace opf
