#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace configcomplex {

bool is_prime(std::int64_t n);
// Distinct prime factors by trial division, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);
// (p, m) with n == p^m, or nullopt when n is not a prime power >= 2.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n);

// GF(p^m), elements encoded as integers in [0, p^m): the base-p digits are the
// polynomial coefficients (digit i is the coefficient of x^i). The encoding is
// the canonical element order; 0 and 1 are the additive and multiplicative
// identities.
class FiniteField {
public:
    using Element = std::int64_t;

    // Modulus is the first monic irreducible of degree m when the lower
    // coefficient lists are enumerated in increasing base-p encoding.
    static FiniteField make(std::int64_t p, int m);
    // Explicit modulus, lowest coefficient first, monic of degree m.
    static FiniteField with_modulus(std::int64_t p, std::vector<std::int64_t> modulus);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return m_; }
    std::int64_t size() const { return size_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element pow(Element a, std::int64_t e) const;
    Element inverse(Element a) const;  // throws on zero

    std::int64_t multiplicative_order(Element a) const;
    bool is_primitive(Element a) const;
    // Least primitive element in canonical order.
    Element primitive_element() const;

    // Relative trace to the subfield of size q = p^d: sum of x^(q^i) for
    // i < m/d. Requires d | m.
    Element trace_to_subfield(std::int64_t q, Element x) const;

    std::vector<std::int64_t> coefficients(Element a) const;
    Element from_coefficients(const std::vector<std::int64_t>& c) const;

private:
    FiniteField(std::int64_t p, std::vector<std::int64_t> modulus);

    std::int64_t p_ = 2;
    int m_ = 1;
    std::int64_t size_ = 2;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> order_factors_;  // prime factors of size - 1
};

// Trial-division irreducibility test over GF(p); coefficients lowest first.
bool is_irreducible(std::int64_t p, const std::vector<std::int64_t>& poly);

}  // namespace configcomplex
