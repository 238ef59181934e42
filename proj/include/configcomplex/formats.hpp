#pragma once

#include <iosfwd>
#include <string>

#include "configcomplex/complex.hpp"
#include "configcomplex/configuration.hpp"
#include "configcomplex/constructions.hpp"
#include "configcomplex/lattice.hpp"

namespace configcomplex {

// Text formats. Blank lines and everything after '#' are ignored on input.
// Malformed input throws FormatError with a line number.

// Digit runs compare as numbers, everything else bytewise: "2" < "10",
// "(0,9)" < "(0,10)".
bool natural_less(const std::string& a, const std::string& b);

// k K
// n N
// <point> <line> <color>     one record per incidence, sorted by point, color
ColoredConfiguration read_config(std::istream& in);
void write_config(std::ostream& out, const ColoredConfiguration& c);

// k, then k rows of k+1 integers (any generating set; canonicalized).
struct CodeFile {
    LinearCode code;
    bool was_canonical = true;
};
CodeFile read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& code);

// group d_1 ... d_r        (invariant factors; "group 1" for the trivial group)
// <element>                one per line, coordinates separated by spaces
DifferenceSet read_difference_set(std::istream& in);
void write_difference_set(std::ostream& out, const DifferenceSet& d);
SidonSet read_sidon(std::istream& in);
void write_sidon(std::ostream& out, const SidonSet& b);

// q, then q^2 addition entries and q^2 multiplication entries, row-major.
Semifield read_semifield(std::istream& in);
void write_semifield(std::ostream& out, const Semifield& s);

// simplicial-complex
// vertices N
// <name> ...                         N vertex names
// facets M
// +<line> <vertex> ...               positive facet of a line
// -<point> <vertex> ...              negative facet of a point
void write_complex(std::ostream& out, const QuotientComplex& x);
// Reads the format above, or a bare facet list of 0-based vertex indices.
SimplicialComplex read_complex(std::istream& in);
// One facet per line, 0-based vertex indices.
void write_facet_list(std::ostream& out, const SimplicialComplex& x);

// File helpers; a missing or unreadable file throws FormatError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace configcomplex
