#include "configcomplex/finite_field.hpp"

#include "configcomplex/checked.hpp"
#include "configcomplex/error.hpp"

namespace configcomplex {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n) {
    if (n < 2) return std::nullopt;
    const auto factors = prime_factors(n);
    if (factors.size() != 1) return std::nullopt;
    int m = 0;
    while (n > 1) {
        n /= factors[0];
        ++m;
    }
    return std::pair{factors[0], m};
}

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::int64_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::int64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = mod_floor(f[shift + i] - lead * g[i], p);
        trim(f);
    }
    return f;
}

Poly digits(std::int64_t value, std::int64_t p, int count) {
    Poly out(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = value % p;
        value /= p;
    }
    return out;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace

bool is_irreducible(std::int64_t p, const std::vector<std::int64_t>& poly) {
    Poly f = poly;
    for (auto& c : f) c = mod_floor(c, p);
    trim(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d) {
        const std::int64_t count = ipow(p, d);
        for (std::int64_t enc = 0; enc < count; ++enc) {
            Poly g = digits(enc, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FiniteField::FiniteField(std::int64_t p, std::vector<std::int64_t> modulus)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
    size_ = ipow(p_, m_);
    order_factors_ = prime_factors(size_ - 1);
}

FiniteField FiniteField::make(std::int64_t p, int m) {
    if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
    if (m < 1) throw InvalidInput("field degree must be at least 1");
    if (ipow(p, m) > (std::int64_t{1} << 24)) throw InvalidInput("field too large for this tool");
    const std::int64_t count = ipow(p, m);
    for (std::int64_t enc = 0; enc < count; ++enc) {
        Poly f = digits(enc, p, m);
        f.push_back(1);
        if (is_irreducible(p, f)) return FiniteField(p, std::move(f));
    }
    throw InternalError("no irreducible polynomial found");
}

FiniteField FiniteField::with_modulus(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1) throw InvalidInput("modulus must be monic of degree >= 1");
    if (!is_irreducible(p, modulus)) throw InvalidInput("modulus is not irreducible");
    return FiniteField(p, std::move(modulus));
}

std::vector<std::int64_t> FiniteField::coefficients(Element a) const {
    if (a < 0 || a >= size_) throw InvalidInput("field element out of range");
    return digits(a, p_, m_);
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<std::int64_t>& c) const {
    Poly f = poly_mod(c, modulus_, p_);
    Element out = 0;
    for (std::size_t i = f.size(); i-- > 0;) out = out * p_ + mod_floor(f[i], p_);
    return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
    auto x = coefficients(a);
    const auto y = coefficients(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p_;
    return from_coefficients(x);
}

FiniteField::Element FiniteField::neg(Element a) const {
    auto x = coefficients(a);
    for (auto& c : x) c = mod_floor(-c, p_);
    return from_coefficients(x);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
    const auto x = coefficients(a);
    const auto y = coefficients(b);
    Poly prod(x.size() + y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    return from_coefficients(prod);
}

FiniteField::Element FiniteField::pow(Element a, std::int64_t e) const {
    if (e < 0) return pow(inverse(a), checked_neg(e));
    Element result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FiniteField::Element FiniteField::inverse(Element a) const {
    if (a == 0) throw InvalidInput("zero has no multiplicative inverse");
    return pow(a, size_ - 2);
}

std::int64_t FiniteField::multiplicative_order(Element a) const {
    if (a == 0) throw InvalidInput("zero has no multiplicative order");
    std::int64_t order = size_ - 1;
    for (std::int64_t r : order_factors_)
        while (order % r == 0 && pow(a, order / r) == 1) order /= r;
    return order;
}

bool FiniteField::is_primitive(Element a) const { return a != 0 && multiplicative_order(a) == size_ - 1; }

FiniteField::Element FiniteField::primitive_element() const {
    for (Element a = 1; a < size_; ++a)
        if (is_primitive(a)) return a;
    throw InternalError("finite field has no primitive element");
}

FiniteField::Element FiniteField::trace_to_subfield(std::int64_t q, Element x) const {
    const auto pp = prime_power(q);
    if (!pp || pp->first != p_ || m_ % pp->second != 0)
        throw InvalidInput("trace target is not a subfield");
    const int terms = m_ / pp->second;
    Element acc = 0, y = x;
    for (int i = 0; i < terms; ++i) {
        acc = add(acc, y);
        y = pow(y, q);
    }
    return acc;
}

}  // namespace configcomplex
