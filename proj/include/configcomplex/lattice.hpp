#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "configcomplex/abelian_group.hpp"
#include "configcomplex/configuration.hpp"
#include "configcomplex/error.hpp"
#include "configcomplex/int_matrix.hpp"

namespace configcomplex {

// Point of A_k: k+1 integer coordinates summing to zero.
class LatticeVector {
public:
    explicit LatticeVector(std::vector<std::int64_t> coords);

    static LatticeVector zero(std::size_t k);
    // e_i - e_j with 0-based coordinate indices.
    static LatticeVector unit_difference(std::size_t k, std::size_t i, std::size_t j);
    // sum_i y_i (e_i - e_{k+1}) for y in Z^k.
    static LatticeVector from_reduced(std::span<const std::int64_t> y);

    std::size_t k() const { return coords_.size() - 1; }
    std::span<const std::int64_t> coords() const { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    // First k coordinates; the coefficients in the basis e_i - e_{k+1}.
    std::vector<std::int64_t> reduced() const { return {coords_.begin(), coords_.end() - 1}; }

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator-() const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

private:
    std::vector<std::int64_t> coords_;
};

// d(x, y) = |x - y|_1 / 2.
std::int64_t distance(const LatticeVector& x, const LatticeVector& y);

// The k(k+1) vectors x + e_i - e_j, i != j, ordered by (i, j).
std::vector<LatticeVector> neighbors(const LatticeVector& x);

// All v with d(0, v) <= radius, sorted.
std::vector<LatticeVector> lattice_ball(std::size_t k, int radius);

enum class FacetSign { positive, negative };

// {root + e_i} for a positive facet (root sums to -1), {root - e_i} for a
// negative one (root sums to +1). Throws InvalidInput on a wrong root sum.
std::vector<LatticeVector> facet_vertices(std::span<const std::int64_t> root, FacetSign sign);

// Full-rank sublattice of A_k, stored as its canonical Hermite basis
// (k rows of k+1 integers).
class LinearCode {
public:
    // Any generating set of rows; canonicalized. Throws InvalidInput if a row
    // is not sum-zero or the rank is not k.
    static LinearCode from_generators(const IntMatrix& rows);

    std::size_t k() const { return basis_.cols() - 1; }
    const IntMatrix& basis() const { return basis_; }
    // |A_k / L|, the product of the Hermite pivots.
    std::int64_t index() const;
    // Pivots h_11, ..., h_kk; the box 0 <= y_i < h_ii is a fundamental domain.
    std::vector<std::int64_t> pivots() const;

    bool contains(std::span<const std::int64_t> v) const;
    // Coset representative reduced into the fundamental box.
    LatticeVector reduce(const LatticeVector& v) const;
    QuotientMap quotient() const { return quotient_group(basis_); }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    IntMatrix basis_;
};

// {0} together with all e_i - e_j: the k^2 + k + 1 vectors of a unit ball.
std::vector<LatticeVector> ball_vectors(std::size_t k);

// Ball vectors have pairwise distinct images in A_k / L.
bool code_is_radius1(const LinearCode& code);
// Radius 1 and index k^2 + k + 1.
bool code_is_perfect(const LinearCode& code);

class PathIndependenceError : public Error {
public:
    using Error::Error;
};

// Permutation action of A_k on the points of a colored (k+1)-configuration:
// translation by -e_i + e_j acts as g_{i,j} = phi_j o phi_i.
class LatticeAction {
public:
    // Verifies inverse pairs, commutation, the triangle relations
    // g_{i,j} = g_{m,j} o g_{i,m}, and transitivity. Throws
    // PathIndependenceError with a witness when a relation fails.
    static LatticeAction build(const ColoredConfiguration& c, int base_point = 0);

    std::size_t k() const { return k_; }
    const ColoredConfiguration& config() const { return config_; }
    int base_point() const { return base_point_; }
    const LatticeVector& base_vertex() const { return base_vertex_; }

    // Same generators, labeling anchored at l(v0) = p0.
    LatticeAction rebased(const LatticeVector& v0, int p0) const;

    // g_{i,j}, colors 1-based.
    const std::vector<int>& generator(int i, int j) const;
    // Point permutation induced by translation by t.
    std::vector<int> translation(const LatticeVector& t) const;
    int translate(int point, const LatticeVector& t) const;
    // l(v) = translate(p0, v - v0).
    int label(const LatticeVector& v) const { return translate(base_point_, v - base_vertex_); }

private:
    LatticeAction(ColoredConfiguration c) : config_(std::move(c)), base_vertex_(LatticeVector::zero(0)) {}

    ColoredConfiguration config_;
    std::size_t k_ = 0;
    int base_point_ = 0;
    LatticeVector base_vertex_;
    std::vector<std::vector<int>> generators_;  // (i-1)*(k+1) + (j-1)
    std::vector<std::int64_t> step_order_;      // order of g_{k+1,i}
};

// H = {v : l(v) = l(0)}, found by a breadth-first search over the orbit of the
// base point (points in sorted order, generators in color order) and the
// Schreier relations of the spanning tree. Throws InternalError if the result
// fails rank k, index n, or the label/coset agreement on a radius-2 patch.
LinearCode stabilizer_code(const LatticeAction& action);

// A_k / H acting on the configuration by translation of labels.
ConfigAction translation_action(const LatticeAction& action, const LinearCode& stabilizer);

}  // namespace configcomplex
