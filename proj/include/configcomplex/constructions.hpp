#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "configcomplex/abelian_group.hpp"
#include "configcomplex/configuration.hpp"
#include "configcomplex/report.hpp"

namespace configcomplex {

// Subset A of G; planar when every nonzero g is a1 - a2 for exactly one pair.
struct DifferenceSet {
    FiniteAbelianGroup group;
    std::vector<GroupElement> elements;

    // |A| - 1.
    std::int64_t order() const { return static_cast<std::int64_t>(elements.size()) - 1; }
};

Report validate_difference_set(const DifferenceSet& d);

struct PlanarConfiguration {
    ColoredConfiguration config;
    ConfigAction translations;  // G acting by p -> p + g, l -> l + g
};

// Points and lines are the elements of G, p ~ l iff p - l is in A, and the
// color is the position of p - l in A sorted by group index (1-based).
// Throws InvalidInput if `d` is not planar.
PlanarConfiguration config_from_difference_set(const DifferenceSet& d);

// {i mod n : Tr(w^i) = 0} with n = q^2 + q + 1, w the least primitive element
// of GF(q^3) and Tr the trace down to GF(q). Requires a prime power q <= 16.
DifferenceSet singer_difference_set(std::int64_t q);

struct DifferenceSetSearch {
    std::vector<DifferenceSet> sets;  // least translates, sorted
    std::string reason;               // why the list is empty, if known
};

// All planar difference sets of the given size in Z_n up to translation, each
// as its lexicographically least translate containing 0 (which also contains
// 1). Requires n <= 200.
DifferenceSetSearch search_difference_sets(std::int64_t n, std::size_t size);

// Cayley tables over {0, ..., q-1}; 0 is the additive zero, 1 the one.
struct Semifield {
    std::int64_t q = 0;
    std::vector<std::int64_t> add;  // add[a * q + b]
    std::vector<std::int64_t> mul;

    std::int64_t plus(std::int64_t a, std::int64_t b) const { return add[static_cast<std::size_t>(a * q + b)]; }
    std::int64_t times(std::int64_t a, std::int64_t b) const { return mul[static_cast<std::size_t>(a * q + b)]; }
};

// Additive group, unique left and right division, both distributive laws,
// two-sided one, and commutativity of multiplication.
Report validate_semifield(const Semifield& s);

// GF(q) in the encoding of FiniteField::make.
Semifield semifield_from_field(std::int64_t q);

// Points (x,y), lines [a,b], (x,y) ~ [a,b] iff y = a*x + b, colored by x + a.
// Throws InvalidInput unless `s` is a valid commutative semifield.
ColoredConfiguration config_from_semifield(const Semifield& s);

// B = {b_0, ..., b_k} with b_0 = 0 and all differences b_i - b_j distinct.
// The listing order matters: b_i is the coordinate attached to e_{i+1}.
struct SidonSet {
    FiniteAbelianGroup group;
    std::vector<GroupElement> elements;
};

// Distinct differences, b_0 = 0, and B generates G.
Report validate_sidon(const SidonSet& b);

// Translate so that the first element is 0.
SidonSet normalize_sidon(const SidonSet& b);

// Generating Sidon sets of the given size up to translation, as least
// translates containing 0 (elements ascending). Requires |G| <= 1000.
std::vector<SidonSet> search_sidon_sets(const FiniteAbelianGroup& g, std::size_t size);

}  // namespace configcomplex
