#include "opf/word.hpp"

#include "opf/error.hpp"

namespace opf {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("empty word");
  for (char c : letters_)
    if (c < 'a' || c > 'z') throw Error(std::string("word letter out of range: '") + c + "'");
}

}  // namespace opf
