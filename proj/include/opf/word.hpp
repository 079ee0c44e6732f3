#pragma once

#include <string>
#include <utility>

namespace opf {

/// Nonempty word over generators 'a'..'z': a basis element of the free
/// associative algebra.
class Word {
 public:
  /// Throws opf::Error on an empty word or a character outside a..z.
  explicit Word(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

 private:
  std::string letters_;
};

inline std::string to_string(const Word& w) { return w.letters(); }

}  // namespace opf
