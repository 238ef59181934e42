#pragma once

#include <optional>

#include "configcomplex/configuration.hpp"
#include "configcomplex/constructions.hpp"
#include "configcomplex/lattice.hpp"
#include "configcomplex/report.hpp"

namespace configcomplex {

// L = {x in A_k : x_1 b_0 + ... + x_{k+1} b_k = 0} for B = (b_0, ..., b_k).
// The kernel is computed with a Hermite transform, independently of the
// labeling search. Throws InvalidInput unless B is a valid Sidon set.
LinearCode sidon_to_code(const SidonSet& b);

// G = A_k / L and b_i = pi(e_{i+1} - e_1), so b_0 = 0. Up to translation these
// are the images of the e_i - e_{k+1}, and sidon_to_code(code_to_sidon(L)) == L.
// Throws InvalidInput unless L has radius 1.
SidonSet code_to_sidon(const LinearCode& l);

// eta: points = lines = A_k / L, p ~ l with color i iff p - l = pi(e_i - e_{k+1}).
ColoredConfiguration code_to_config(const LinearCode& l);

// theta: the stabilizer of the labeling. Throws InvalidInput if c is not a
// valid colored configuration.
LinearCode config_to_code(const ColoredConfiguration& c);

struct RoundTrip {
    Report report;
    LinearCode code;
    std::optional<Isomorphism> isomorphism;  // c -> eta(theta(c))
    bool identity_colors = false;
};

// eta(theta(c)) compared with c by is_isomorphic.
RoundTrip roundtrip_config(const ColoredConfiguration& c);

// For a colored projective plane: theta, then code_to_sidon. The result is
// checked to be planar and to give back a configuration isomorphic to c.
// Throws InvalidInput("not a projective plane") on other inputs.
DifferenceSet recover_difference_set(const ColoredConfiguration& c);

}  // namespace configcomplex
