#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "opf/binary_term.hpp"
#include "opf/planar_binary_tree.hpp"
#include "opf/rooted_tree.hpp"
#include "opf/word.hpp"

namespace opf {

// Term grammar shared by the CLI, JSON files and test fixtures:
//
//   rooted tree   := label | label "(" tree ("," tree)* ")"    1(2,3(4))
//   binary term   := label | "(" term "*" term ")"             (2*(1*3))
//   planar binary := "o" | "(" pbt "," pbt ")" [":" genIndex]  ((o,o),o):2
//   word          := letters a-z                               abba
//   label, genIndex := decimal integer >= 1
//
// Blanks between tokens are skipped. Child order of rooted trees is not
// significant on input; the result is canonical.

enum class BasisKind { Rooted, Binary, Planar, Word };

using Term = std::variant<RootedTree, BinaryTerm, PlanarBinaryTree, Word>;

RootedTree parse_rooted(std::string_view text);
BinaryTerm parse_binary(std::string_view text);
PlanarBinaryTree parse_pbt(std::string_view text);
Word parse_word(std::string_view text);

/// Throws ParseError (with byte offset) on syntax errors and opf::Error on
/// duplicate labels.
Term parse_term(std::string_view text, BasisKind kind);
std::string format_term(const Term& t);

BasisKind parse_basis_kind(std::string_view name);
std::string_view basis_kind_name(BasisKind kind);

}  // namespace opf
