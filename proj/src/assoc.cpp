#include "opf/assoc.hpp"

namespace opf {

WordComb assoc_concat(const WordComb& x, const WordComb& y) {
  return bilinear(x, y, [](const Word& a, const Word& b) { return WordComb(a + b); });
}

WordComb assoc_sym(const WordComb& x, const WordComb& y) { return assoc_concat(x, y) + assoc_concat(y, x); }

}  // namespace opf
