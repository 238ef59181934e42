#include "configcomplex/abelian_group.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "configcomplex/checked.hpp"
#include "configcomplex/normal_form.hpp"

namespace configcomplex {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw InvalidInput("group factor must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw InvalidInput("group factors must form a divisibility chain");
        order_ = checked_mul(order_, factors_[i]);
    }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n) {
    if (n < 1) throw InvalidInput("cyclic group order must be positive");
    return n == 1 ? FiniteAbelianGroup{} : FiniteAbelianGroup({n});
}

FiniteAbelianGroup FiniteAbelianGroup::from_moduli(std::span<const std::int64_t> moduli) {
    IntMatrix diag(moduli.size(), moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 1) throw InvalidInput("group modulus must be positive");
        diag(i, i) = moduli[i];
    }
    std::vector<std::int64_t> factors;
    for (std::int64_t d : smith_diagonal(diag))
        if (d > 1) factors.push_back(d);
    return FiniteAbelianGroup(std::move(factors));
}

GroupElement FiniteAbelianGroup::reduce(std::span<const std::int64_t> coords) const {
    if (coords.size() != factors_.size()) throw InvalidInput("group element has wrong number of coordinates");
    GroupElement out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out[i] = mod_floor(coords[i], factors_[i]);
    return out;
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
    if (a.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= factors_[i]) return false;
    return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement out(factors_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(checked_add(a.at(i), b.at(i)), factors_[i]);
    return out;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    GroupElement out(factors_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(checked_sub(a.at(i), b.at(i)), factors_[i]);
    return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const { return sub(zero(), a); }

GroupElement FiniteAbelianGroup::scale(const GroupElement& a, std::int64_t n) const {
    GroupElement out(factors_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mod_floor(checked_mul(mod_floor(n, factors_[i]), a.at(i)), factors_[i]);
    return out;
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
    if (!contains(a)) throw InvalidInput("element not in group");
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) throw InvalidInput("element index out of range");
    GroupElement out(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        out[i] = index % factors_[i];
        index /= factors_[i];
    }
    return out;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::int64_t FiniteAbelianGroup::generated_order(std::span<const GroupElement> gens) const {
    std::vector<bool> seen(static_cast<std::size_t>(order_), false);
    std::deque<GroupElement> queue{zero()};
    seen[0] = true;
    std::int64_t count = 1;
    while (!queue.empty()) {
        const GroupElement g = queue.front();
        queue.pop_front();
        for (const auto& h : gens) {
            GroupElement next = add(g, h);
            const auto idx = static_cast<std::size_t>(index_of(next));
            if (seen[idx]) continue;
            seen[idx] = true;
            ++count;
            queue.push_back(std::move(next));
        }
    }
    return count;
}

std::string FiniteAbelianGroup::element_name(const GroupElement& a) const {
    if (a.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    return os.str();
}

std::string FiniteAbelianGroup::name() const {
    if (factors_.empty()) return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << "Z_" << factors_[i];
    return os.str();
}

GroupElement QuotientMap::project(std::span<const std::int64_t> x) const {
    if (x.size() != k_ + 1) throw InvalidInput("lattice vector has wrong dimension");
    GroupElement out;
    out.reserve(kept_.size());
    for (std::size_t j : kept_) {
        std::int64_t z = 0;
        for (std::size_t i = 0; i < k_; ++i) z = checked_add(z, checked_mul(x[i], v_(i, j)));
        out.push_back(z);
    }
    return group_.reduce(out);
}

std::vector<std::int64_t> QuotientMap::lift(const GroupElement& g) const {
    if (!group_.contains(g)) throw InvalidInput("element not in quotient group");
    std::vector<std::int64_t> z(k_, 0);
    for (std::size_t t = 0; t < kept_.size(); ++t) z[kept_[t]] = g[t];
    std::vector<std::int64_t> x(k_ + 1, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < k_; ++j) acc = checked_add(acc, checked_mul(z[j], v_inv_(j, i)));
        x[i] = acc;
        x[k_] = checked_sub(x[k_], acc);
    }
    return x;
}

QuotientMap quotient_group(const IntMatrix& rows) {
    if (rows.cols() == 0) throw InvalidInput("lattice vectors need at least one coordinate");
    const std::size_t k = rows.cols() - 1;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        std::int64_t sum = 0;
        for (auto v : rows.row(r)) sum = checked_add(sum, v);
        if (sum != 0) throw InvalidInput("sublattice row is not in A_k (coordinate sum is nonzero)");
    }
    QuotientMap q;
    q.k_ = k;
    const IntMatrix projected = rows.left_columns(k);
    const auto smith = snf(projected);
    std::vector<std::int64_t> factors;
    for (std::size_t j = 0; j < k; ++j) {
        const std::int64_t d = j < smith.s.rows() ? smith.s(j, j) : 0;
        if (d == 0) throw InvalidInput("infinite quotient: sublattice does not have full rank");
        if (d > 1) {
            factors.push_back(d);
            q.kept_.push_back(j);
        }
    }
    q.group_ = FiniteAbelianGroup(std::move(factors));
    q.v_ = smith.v;
    q.v_inv_ = hnf_with_transform(smith.v).u;
    return q;
}

}  // namespace configcomplex
