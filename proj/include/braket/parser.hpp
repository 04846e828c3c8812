#pragma once

#include <string>
#include <string_view>

#include "braket/term.hpp"

namespace braket {

// Grammar (ASCII, whitespace between factors ignored):
//   term   := factor { factor }
//   factor := bra | ket | "(" term ")"
//   bra    := "<" label "|"
//   ket    := "|" label [":" ("v"|"f")] ">"
// The compact inner product "<x|y>" lexes as the bra "<x|" followed by the
// ket "y>"; the shared "|" belongs to both tokens. Unparenthesized runs
// group left-associatively.
//
// Throws SyntaxError or AlternationViolation, both carrying a SourceSpan.
Term parse_term(std::string_view text);

// Canonical text form: every concatenation is parenthesized, a bra directly
// followed by a ket shares the "|" ("<x|y>"), Default markings render bare.
// parse_term(render(s)) reconstructs s exactly (tree shape and markings).
std::string render(const Term& s);

}  // namespace braket
