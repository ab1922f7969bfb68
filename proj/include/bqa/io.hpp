#pragma once

#include <string>
#include <vector>

#include "bqa/monomial.hpp"
#include "bqa/nakayama.hpp"

namespace bqa {

/// Parses the line-oriented algebra format:
///
///   vertices: 5
///   arrows: a1 1 2; a2 3 2
///   relations: a1 a2
///
/// Vertices are 1-based in the text. `#` starts a comment. Throws SyntaxError
/// (with a line number) on malformed input, and the MonomialAlgebra::build
/// errors on semantically invalid input.
MonomialAlgebra parse_algebra(const std::string& text);
MonomialAlgebra read_algebra_file(const std::string& path);

/// Inverse of parse_algebra up to whitespace and comments.
std::string format_algebra(const MonomialAlgebra& a);

/// Summand list such as "P1 P2 I3/s top=2,len=1"; tokens separated by
/// whitespace, ';' or '+'. Vertices 1-based. Throws SyntaxError.
std::vector<Uniserial> parse_summands(const MonomialAlgebra& b, const std::string& text);

const std::string& paper_example_text();
MonomialAlgebra paper_example_algebra();

}  // namespace bqa
