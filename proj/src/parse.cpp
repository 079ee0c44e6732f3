#include "opf/parse.hpp"

#include <cctype>
#include <vector>

#include "opf/error.hpp"

namespace opf {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  char peek() {
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int number(const char* what) {
    skip_blanks();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000L) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    if (value < 1) throw ParseError(std::string(what) + " must be >= 1", start);
    return static_cast<int>(value);
  }

  void finish() {
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(what + ", got " + got, pos_);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

RootedTree rooted(Cursor& c) {
  Label root = c.number("label");
  if (!c.accept('(')) return RootedTree(root);
  std::vector<RootedTree> kids;
  do {
    kids.push_back(rooted(c));
  } while (c.accept(','));
  c.expect(')');
  return RootedTree(root, std::move(kids));
}

BinaryTerm binary(Cursor& c) {
  if (!c.accept('(')) return BinaryTerm::leaf(c.number("label"));
  BinaryTerm l = binary(c);
  c.expect('*');
  BinaryTerm r = binary(c);
  c.expect(')');
  return BinaryTerm::product(std::move(l), std::move(r));
}

PlanarBinaryTree planar(Cursor& c) {
  if (c.accept('o')) return PlanarBinaryTree::leaf();
  if (!c.accept('(')) c.fail("expected 'o' or '('");
  PlanarBinaryTree l = planar(c);
  c.expect(',');
  PlanarBinaryTree r = planar(c);
  c.expect(')');
  GenIndex gen = 0;
  std::size_t at = c.pos();
  if (c.accept(':')) gen = c.number("generator index");
  try {
    return PlanarBinaryTree::node(std::move(l), std::move(r), gen);
  } catch (const Error& e) {
    throw ParseError(e.what(), at);
  }
}

template <class F>
auto whole(std::string_view text, F f) {
  Cursor c(text);
  auto out = f(c);
  c.finish();
  return out;
}

}  // namespace

RootedTree parse_rooted(std::string_view text) { return whole(text, rooted); }
BinaryTerm parse_binary(std::string_view text) { return whole(text, binary); }
PlanarBinaryTree parse_pbt(std::string_view text) { return whole(text, planar); }

Word parse_word(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < 'a' || text[i] > 'z') throw ParseError("expected letter a-z", i);
  if (text.empty()) throw ParseError("empty word", 0);
  return Word(std::string(text));
}

Term parse_term(std::string_view text, BasisKind kind) {
  switch (kind) {
    case BasisKind::Rooted: return parse_rooted(text);
    case BasisKind::Binary: return parse_binary(text);
    case BasisKind::Planar: return parse_pbt(text);
    case BasisKind::Word: return parse_word(text);
  }
  throw Error("unknown basis kind");
}

std::string format_term(const Term& t) {
  return std::visit([](const auto& x) { return to_string(x); }, t);
}

BasisKind parse_basis_kind(std::string_view name) {
  if (name == "rooted") return BasisKind::Rooted;
  if (name == "commag" || name == "binary" || name == "mag") return BasisKind::Binary;
  if (name == "pbt" || name == "planar") return BasisKind::Planar;
  if (name == "word") return BasisKind::Word;
  throw Error("unknown basis kind '" + std::string(name) + "'");
}

std::string_view basis_kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::Rooted: return "rooted";
    case BasisKind::Binary: return "binary";
    case BasisKind::Planar: return "pbt";
    case BasisKind::Word: return "word";
  }
  return "?";
}

}  // namespace opf
