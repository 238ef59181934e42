#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "configcomplex/configuration.hpp"
#include "configcomplex/lattice.hpp"
#include "configcomplex/report.hpp"

namespace configcomplex {

using Facet = std::vector<int>;  // sorted vertex indices

// Vertex names plus facets. Facets are sorted and deduplicated on
// construction; a facet inside another one or an unused vertex is rejected.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> vertex_names, std::vector<Facet> facets);

    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<Facet>& facets() const { return facets_; }
    // Largest facet size minus one.
    int dimension() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> vertex_names_;
    std::vector<Facet> facets_;
};

// X(C) with provenance. positive[l][i-1] is the vertex of line l's facet
// reached by color i; negative[p][i-1] = phi_j(phi_i(p)) for the reference
// color j. When a positive and a negative facet coincide (which happens for
// 2-colored inputs) the complex keeps one copy and `degenerate` is set.
struct QuotientComplex {
    SimplicialComplex complex;  // vertices are the points
    std::vector<std::string> line_names;
    int reference_color = 0;
    std::vector<std::vector<int>> positive;  // indexed by line
    std::vector<std::vector<int>> negative;  // indexed by point
    bool degenerate = false;
    std::vector<std::pair<int, int>> coincidences;  // (line, point)

    Facet positive_facet(int line) const;
    Facet negative_facet(int point) const;
};

// reference_color 0 means k + 1 (the last color).
QuotientComplex quotient_complex(const ColoredConfiguration& c, int reference_color = 0);

// The negative facet family is the same set for every reference color.
bool reference_color_independence(const ColoredConfiguration& c);

// Rebuilds the facets as W_k / H: for every y in the Hermite box of H and
// x = (y, -sum y), the positive facet rooted at x - e_{k+1} and the negative
// facet rooted at x + e_{k+1}, mapped through the labeling. True iff the
// resulting multiset of facets equals that of quotient_complex(c).
bool cross_check_with_lattice(const ColoredConfiguration& c);

// The colored incidence structure of one facet family: vertices are points,
// facets are lines, and the color is the one recorded in the provenance.
// The positive family reproduces c and the negative one its dual.
ColoredConfiguration facet_family(const QuotientComplex& x, FacetSign sign);

// Every pair of vertices lies in a common facet.
bool is_two_neighborly(const SimplicialComplex& x);

// Every face of dimension >= 2 lies in exactly one facet.
bool faces_have_unique_facets(const SimplicialComplex& x);

inline constexpr std::size_t kDefaultFaceCap = 1000000;

class FaceCapExceeded : public Error {
public:
    using Error::Error;
};

struct HomologyGroup {
    std::int64_t rank = 0;
    std::vector<std::int64_t> torsion;  // each >= 2, divisibility order

    bool operator==(const HomologyGroup&) const = default;
    std::string to_string() const;  // "Z^2", "Z + Z_2", "0"
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;       // H_0 .. H_max_dim
    std::vector<std::int64_t> face_counts;   // dimensions 0 .. max_dim + 1
};

// Integral simplicial homology from boundary matrices. Throws
// FaceCapExceeded if more than `face_cap` faces would be enumerated.
HomologyResult homology(const SimplicialComplex& x, int max_dim, std::size_t face_cap = kDefaultFaceCap);

// Face counts by dimension, all dimensions.
std::vector<std::int64_t> face_counts(const SimplicialComplex& x, std::size_t face_cap = kDefaultFaceCap);

std::int64_t euler_characteristic(const SimplicialComplex& x, std::size_t face_cap = kDefaultFaceCap);

// Each group element permutes the vertices, sends positive facets to positive
// facets and negative to negative, respects the group law on unit
// generators, and (except the identity) fixes no vertex.
Report verify_complex_action(const QuotientComplex& x, const FiniteAbelianGroup& group,
                             const std::vector<std::vector<int>>& point_perm);

}  // namespace configcomplex
