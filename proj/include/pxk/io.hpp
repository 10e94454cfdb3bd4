#pragma once

// File formats.
//
// Complex, line format: one facet per line, labels separated by spaces or
// commas; '#' starts a comment; blank lines ignored.  A label containing
// special characters (spaces, commas, braces, '#' or quotes) is written in
// double quotes with '\' escaping, e.g. "{1,2,4}" for a subdivision vertex.
// Complex, JSON: {"facets": [[1,2,4], ...]} with numbers or strings as labels.
// The two are auto-detected: a file whose first non-blank byte is '{' or '['
// is JSON (quoted line-format labels keep line files unambiguous).
//
// Polytope (JSON only): {"dim": d, "facets": [...],
//                        "vertices": {"v": ["F1","F3"], ...}}.
//
// Facet path (JSON only): [[1,2,4],[2,4,5],...]; a loops file is an array of
// such paths.
//
// Digit-string labels normalize to integer labels on input; writers emit
// integer labels as JSON numbers, so reading back what was written is exact.

#include <string>
#include <vector>

#include "pxk/complex.hpp"
#include "pxk/polytope.hpp"
#include "pxk/projectivity.hpp"

namespace pxk::io {

SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex(const std::string& file);

SimplePolytope parse_polytope(const std::string& text);
SimplePolytope read_polytope(const std::string& file);

FacetPath parse_path(const std::string& text, const SimplicialComplex& c);
FacetPath read_path(const std::string& file, const SimplicialComplex& c);
std::vector<FacetPath> parse_loops(const std::string& text, const SimplicialComplex& c);
std::vector<FacetPath> read_loops(const std::string& file, const SimplicialComplex& c);

// Canonical writers: facets in canonical order, deterministic byte-for-byte.
std::string write_complex_lines(const SimplicialComplex& c);
std::string write_complex_json(const SimplicialComplex& c);
std::string write_polytope_json(const SimplePolytope& p);

std::string read_file(const std::string& file);
void write_file(const std::string& file, const std::string& content);

// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace pxk::io
