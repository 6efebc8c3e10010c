#pragma once

#include <string_view>

#include "valdim/lgroup.hpp"
#include "valdim/pp.hpp"

namespace valdim {

// Element literals, checked against g:
//   Z^n, lex:  3  |  (1,2)  |  [1,2]
//   Q:         3  |  -2/5
//   C, Cminus: {w:1,w*2:0}  (cut:value pieces, last cut = top)
//   trivial:   0
// Throws SyntaxError with a byte offset.
GroupElement parse_element(const LGroup& g, std::string_view text);
// As above, plus "inf"; throws NotPositive for elements below 0.
ConeElement parse_cone_element(const LGroup& g, std::string_view text);

// sum((c;d),(c;d),...) with c, d cone literals. Returns the canonical form.
PpFormula parse_pp(const LGroup& g, std::string_view text);

}  // namespace valdim
