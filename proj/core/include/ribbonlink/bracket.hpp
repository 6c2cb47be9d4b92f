#pragma once

#include "ribbonlink/diagram.hpp"
#include "ribbonlink/laurent.hpp"

namespace ribbonlink {

inline constexpr int kDefaultBracketLimit = 16;

// Kauffman bracket by full state sum, normalized so that the crossingless
// unknot has bracket 1. Free loops count as extra split unknots. Throws
// LimitExceeded above `limit` crossings (2^n states are enumerated).
LaurentPolynomial kauffman_bracket(const LinkDiagram& diagram, int limit = kDefaultBracketLimit);

// (-A^3)^(-w) <D>, invariant under all Reidemeister moves of the oriented diagram.
LaurentPolynomial normalized_invariant(const LinkDiagram& diagram, int limit = kDefaultBracketLimit);

// f2 == f1, or f2 == f1 with A replaced by A^-1.
bool equivalent_up_to_mirror(const LaurentPolynomial& f1, const LaurentPolynomial& f2);

}  // namespace ribbonlink
