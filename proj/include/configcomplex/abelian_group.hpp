#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "configcomplex/int_matrix.hpp"

namespace configcomplex {

// Residues, one per cyclic factor.
using GroupElement = std::vector<std::int64_t>;

// Finite abelian group Z_{d_1} x ... x Z_{d_r} in invariant-factor form
// (d_i >= 2, d_i | d_{i+1}). The empty factor list is the trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    // Throws InvalidInput unless `factors` is already in invariant-factor form.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    // Cyclic group of order n (trivial for n == 1).
    static FiniteAbelianGroup cyclic(std::int64_t n);
    // Any list of moduli >= 1; normalized through the Smith form. The
    // returned group is isomorphic, but element coordinates change.
    static FiniteAbelianGroup from_moduli(std::span<const std::int64_t> moduli);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t order() const { return order_; }
    bool is_trivial() const { return factors_.empty(); }

    GroupElement zero() const { return GroupElement(factors_.size(), 0); }
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, std::int64_t n) const;
    GroupElement reduce(std::span<const std::int64_t> coords) const;
    bool contains(const GroupElement& a) const;

    // Canonical order: lexicographic on coordinates, first factor most significant.
    std::int64_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::int64_t index) const;
    std::vector<GroupElement> elements() const;

    // Order of the subgroup generated by `gens`.
    std::int64_t generated_order(std::span<const GroupElement> gens) const;

    std::string element_name(const GroupElement& a) const;
    std::string name() const;  // "Z_7", "Z_3 x Z_3", "trivial"

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

// A_k / L for a full-rank sublattice L of A_k, together with the projection.
// Lattice vectors are given with all k+1 coordinates (sum zero).
class QuotientMap {
public:
    const FiniteAbelianGroup& group() const { return group_; }
    std::size_t lattice_dim() const { return k_; }

    GroupElement project(std::span<const std::int64_t> lattice_vector) const;
    // A lattice vector whose projection is `g`.
    std::vector<std::int64_t> lift(const GroupElement& g) const;

    friend QuotientMap quotient_group(const IntMatrix& sublattice_rows);

private:
    std::size_t k_ = 0;
    FiniteAbelianGroup group_;
    IntMatrix v_;      // k x k, column transform of the Smith form
    IntMatrix v_inv_;  // its inverse
    std::vector<std::size_t> kept_;  // Smith diagonal positions with d > 1
};

// Throws InvalidInput("infinite quotient") if the rows do not have rank k, or
// if a row is not a sum-zero vector.
QuotientMap quotient_group(const IntMatrix& sublattice_rows);

}  // namespace configcomplex
