#pragma once

// Text formats: word expressions and Lie pair files.
//
// Word expression: whitespace-separated letter tokens f<i>, F<i> (aliases
// f, g, F, G for index 1, 2), joined into terms by + and -, each term with an
// optional rational coefficient:  "F1 f2 F1 - 3/2 f1 F2 + 1".
//
// Lie pair file (JSON):
//   {"dim": 2,
//    "bracket1": [[1, 2, 1, "1"]],
//    "bracket2": [[1, 2, 2, "1"]]}
// Each entry [i, j, k, "p/q"] with i < j sets [e_i, e_j] to have coefficient
// p/q on e_k; [e_j, e_i] follows by antisymmetry, omitted entries are zero.

#include "lie2u/lie2.hpp"

#include <string_view>

namespace lie2u {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q", "p" or "-p/q". Rejects zero denominators.
Scalar parse_rational(std::string_view text);

struct ParsedExpression {
  NcPolynomial polynomial;
  bool used_aliases;
};

ParsedExpression parse_expression(std::string_view text, int d);
Word parse_word(std::string_view text, int d);

LiePair parse_lie_pair(std::string_view json_text);
LiePair read_lie_pair_file(const std::string& path);
std::string to_json(const LiePair& g);

}  // namespace lie2u
