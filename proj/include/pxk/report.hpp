#pragma once

// Canonical analysis reports.  The JSON form is deterministic byte-for-byte
// for a given input (object keys sorted, no floating point, facets in
// canonical order), so regenerating a report never produces a diff.

#include <string>

#include "pxk/complex.hpp"
#include "pxk/polytope.hpp"

namespace pxk {

inline constexpr int report_schema_version = 1;

struct Report {
    std::string json;        // canonical serialization, newline-terminated
    std::string text;        // human-readable rendering of the same data
    bool theorem_ok = true;  // false when computed cross-checks disagree
};

// Full report on a complex.  base is a facet index; -1 selects the canonical
// default, the lexicographically least facet (index 0).  Sections whose
// preconditions fail (e.g. parity census of a non-pure complex) are null.
Report analyze_complex(const SimplicialComplex& c, int base = -1);

// Full report on a simple polytope.  base_vertex -1 selects vertex 0.
Report analyze_polytope(const SimplePolytope& p, int base_vertex = -1);

// Balancedness-only report on a complex.
Report color_complex(const SimplicialComplex& c);

}  // namespace pxk
