#pragma once

#include <string>

#include "svectkit/bundles.hpp"
#include "svectkit/coxzoo.hpp"

namespace svectkit {

// Text forms accepted for group elements:
//   "2*x1+x2-3*x3+4*c"   linear combination of generators and c
//   "[l1,l2,l3,m]"       normal-form coordinates
LElt parse_lelt(const WeightTriple& w, const std::string& s);

// Bundle expressions: "E", "E<x>", "E<x>(y)", "E<x>[k]", "E<x>(y)[k]"
// with x, y in the element syntax above.
ExtBundleExpr parse_bundle(const WeightTriple& w, const std::string& s);

// Symbol grammar: "star:2,3,5", "can:2,3,6", "svect:2,3,7",
// "extcan:2,4,5", "nak:12,3".
TypeSymbol parse_symbol(const std::string& s);

std::string lelt_json(const LElt& x);  // {"l":[l1,l2,l3],"m":m}

}  // namespace svectkit
