#include "configcomplex/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "configcomplex/checked.hpp"
#include "configcomplex/normal_form.hpp"

namespace configcomplex {

LatticeVector::LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InvalidInput("lattice vector needs at least one coordinate");
    std::int64_t sum = 0;
    for (auto v : coords_) sum = checked_add(sum, v);
    if (sum != 0) throw InvalidInput("lattice vector coordinates must sum to zero");
}

LatticeVector LatticeVector::zero(std::size_t k) { return LatticeVector(std::vector<std::int64_t>(k + 1, 0)); }

LatticeVector LatticeVector::unit_difference(std::size_t k, std::size_t i, std::size_t j) {
    std::vector<std::int64_t> c(k + 1, 0);
    c.at(i) += 1;
    c.at(j) -= 1;
    return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::from_reduced(std::span<const std::int64_t> y) {
    std::vector<std::int64_t> c(y.begin(), y.end());
    std::int64_t sum = 0;
    for (auto v : y) sum = checked_add(sum, v);
    c.push_back(checked_neg(sum));
    return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    if (o.coords_.size() != coords_.size()) throw InvalidInput("lattice dimension mismatch");
    std::vector<std::int64_t> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coords_[i], o.coords_[i]);
    return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    if (o.coords_.size() != coords_.size()) throw InvalidInput("lattice dimension mismatch");
    std::vector<std::int64_t> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(coords_[i], o.coords_[i]);
    return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-() const { return zero(k()) - *this; }

std::int64_t distance(const LatticeVector& x, const LatticeVector& y) {
    const LatticeVector d = x - y;
    std::int64_t norm = 0;
    for (auto v : d.coords()) norm = checked_add(norm, abs_checked(v));
    return norm / 2;
}

std::vector<LatticeVector> neighbors(const LatticeVector& x) {
    std::vector<LatticeVector> out;
    const std::size_t dim = x.k() + 1;
    out.reserve(dim * (dim - 1));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (i != j) out.push_back(x + LatticeVector::unit_difference(x.k(), i, j));
    return out;
}

std::vector<LatticeVector> lattice_ball(std::size_t k, int radius) {
    std::vector<LatticeVector> out;
    std::vector<std::int64_t> c(k + 1, 0);
    const std::int64_t budget = 2 * static_cast<std::int64_t>(radius);
    std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t used,
                                                                            std::int64_t sum) {
        if (pos == k) {
            const std::int64_t last = -sum;
            if (used + abs_checked(last) <= budget) {
                c[k] = last;
                out.emplace_back(c);
            }
            return;
        }
        for (std::int64_t v = -(budget - used); v <= budget - used; ++v) {
            c[pos] = v;
            rec(pos + 1, used + abs_checked(v), sum + v);
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticeVector> facet_vertices(std::span<const std::int64_t> root, FacetSign sign) {
    std::int64_t sum = 0;
    for (auto v : root) sum = checked_add(sum, v);
    const std::int64_t want = sign == FacetSign::positive ? -1 : 1;
    if (root.empty() || sum != want)
        throw InvalidInput(sign == FacetSign::positive ? "positive facet root must have coordinate sum -1"
                                                       : "negative facet root must have coordinate sum +1");
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < root.size(); ++i) {
        std::vector<std::int64_t> c(root.begin(), root.end());
        c[i] = checked_add(c[i], sign == FacetSign::positive ? 1 : -1);
        out.emplace_back(std::move(c));
    }
    return out;
}

LinearCode LinearCode::from_generators(const IntMatrix& rows) {
    if (rows.cols() < 2) throw InvalidInput("linear code needs k >= 1");
    const std::size_t k = rows.cols() - 1;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        std::int64_t sum = 0;
        for (auto v : rows.row(r)) sum = checked_add(sum, v);
        if (sum != 0) throw InvalidInput("code generator is not in A_k (coordinate sum is nonzero)");
    }
    LinearCode code;
    code.basis_ = hnf(rows);
    if (code.basis_.rows() != k) throw InvalidInput("code generators do not span a rank-k sublattice");
    for (std::size_t t = 0; t < k; ++t)
        if (code.basis_(t, t) <= 0) throw InternalError("Hermite pivot outside the leading block");
    return code;
}

std::vector<std::int64_t> LinearCode::pivots() const {
    std::vector<std::int64_t> out;
    for (std::size_t t = 0; t < k(); ++t) out.push_back(basis_(t, t));
    return out;
}

std::int64_t LinearCode::index() const {
    std::int64_t idx = 1;
    for (auto p : pivots()) idx = checked_mul(idx, p);
    return idx;
}

LatticeVector LinearCode::reduce(const LatticeVector& v) const {
    if (v.k() != k()) throw InvalidInput("lattice dimension mismatch");
    std::vector<std::int64_t> c(v.coords().begin(), v.coords().end());
    for (std::size_t t = 0; t < k(); ++t) {
        const std::int64_t q = floor_div(c[t], basis_(t, t));
        if (q == 0) continue;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_axpy(c[j], q, basis_(t, j));
    }
    return LatticeVector(std::move(c));
}

bool LinearCode::contains(std::span<const std::int64_t> v) const {
    const LatticeVector r = reduce(LatticeVector(std::vector<std::int64_t>(v.begin(), v.end())));
    return std::all_of(r.coords().begin(), r.coords().end(), [](std::int64_t x) { return x == 0; });
}

std::vector<LatticeVector> ball_vectors(std::size_t k) {
    std::vector<LatticeVector> out{LatticeVector::zero(k)};
    const auto rest = neighbors(LatticeVector::zero(k));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

bool code_is_radius1(const LinearCode& code) {
    const QuotientMap q = code.quotient();
    std::set<GroupElement> images;
    for (const auto& v : ball_vectors(code.k()))
        if (!images.insert(q.project(v.coords())).second) return false;
    return true;
}

bool code_is_perfect(const LinearCode& code) {
    const auto k = static_cast<std::int64_t>(code.k());
    return code_is_radius1(code) && code.index() == k * k + k + 1;
}

namespace {

std::int64_t permutation_order(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::int64_t order = 1;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::int64_t len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

}  // namespace

LatticeAction LatticeAction::build(const ColoredConfiguration& c, int base_point) {
    if (c.k() < 2) throw InvalidInput("lattice action needs a configuration with at least 2 colors");
    if (!c.has_complete_coloring()) throw InvalidInput("lattice action needs a complete proper coloring");
    if (base_point < 0 || base_point >= c.num_points()) throw InvalidInput("base point out of range");

    LatticeAction a(c);
    const int colors = c.k();
    a.k_ = static_cast<std::size_t>(colors - 1);
    a.base_point_ = base_point;
    a.base_vertex_ = LatticeVector::zero(a.k_);
    a.generators_.assign(static_cast<std::size_t>(colors * colors), {});
    const auto n = static_cast<std::size_t>(c.num_points());
    for (int i = 1; i <= colors; ++i)
        for (int j = 1; j <= colors; ++j) {
            if (i == j) continue;
            std::vector<int> g(n);
            for (std::size_t p = 0; p < n; ++p)
                g[p] = c.line_phi_point(c.point_phi_line(static_cast<int>(p), i), j);
            a.generators_[static_cast<std::size_t>((i - 1) * colors + (j - 1))] = std::move(g);
        }

    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    auto fail = [&](const std::string& what, std::size_t p) {
        throw PathIndependenceError("coloring violates path-independence: " + what + " at point " +
                                    c.point_names()[p]);
    };
    auto first_diff = [](const std::vector<int>& x, const std::vector<int>& y) {
        for (std::size_t p = 0; p < x.size(); ++p)
            if (x[p] != y[p]) return p;
        return x.size();
    };
    for (int i = 1; i <= colors; ++i)
        for (int j = 1; j <= colors; ++j) {
            if (i == j) continue;
            const auto& gij = a.generator(i, j);
            if (auto p = first_diff(compose(gij, a.generator(j, i)), identity); p < n)
                fail("g_{" + std::to_string(i) + "," + std::to_string(j) + "} is not inverse to g_{" +
                         std::to_string(j) + "," + std::to_string(i) + "}",
                     p);
            for (int m = 1; m <= colors; ++m) {
                if (m == i || m == j) continue;
                if (auto p = first_diff(compose(a.generator(m, j), a.generator(i, m)), gij); p < n)
                    fail("g_{" + std::to_string(i) + "," + std::to_string(j) + "} differs from the path through color " +
                             std::to_string(m),
                         p);
            }
            for (int s = 1; s <= colors; ++s)
                for (int t = 1; t <= colors; ++t) {
                    if (s == t) continue;
                    const auto& gst = a.generator(s, t);
                    if (auto p = first_diff(compose(gij, gst), compose(gst, gij)); p < n)
                        fail("g_{" + std::to_string(i) + "," + std::to_string(j) + "} and g_{" + std::to_string(s) +
                                 "," + std::to_string(t) + "} do not commute",
                             p);
                }
        }

    // Transitivity: the orbit of the base point is everything.
    std::vector<bool> seen(n, false);
    std::deque<int> queue{base_point};
    seen[static_cast<std::size_t>(base_point)] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const int p = queue.front();
        queue.pop_front();
        for (const auto& g : a.generators_) {
            if (g.empty()) continue;
            const int q = g[static_cast<std::size_t>(p)];
            if (seen[static_cast<std::size_t>(q)]) continue;
            seen[static_cast<std::size_t>(q)] = true;
            ++reached;
            queue.push_back(q);
        }
    }
    if (reached != n)
        throw PathIndependenceError("lattice action is not transitive: orbit of point " +
                                    c.point_names()[static_cast<std::size_t>(base_point)] + " has " +
                                    std::to_string(reached) + " of " + std::to_string(n) + " points");

    for (int i = 1; i < colors; ++i) a.step_order_.push_back(permutation_order(a.generator(colors, i)));
    return a;
}

LatticeAction LatticeAction::rebased(const LatticeVector& v0, int p0) const {
    if (v0.k() != k_) throw InvalidInput("base vertex has wrong dimension");
    if (p0 < 0 || p0 >= config_.num_points()) throw InvalidInput("base point out of range");
    LatticeAction copy = *this;
    copy.base_vertex_ = v0;
    copy.base_point_ = p0;
    return copy;
}

const std::vector<int>& LatticeAction::generator(int i, int j) const {
    const int colors = static_cast<int>(k_) + 1;
    if (i < 1 || j < 1 || i > colors || j > colors || i == j) throw InvalidInput("generator needs distinct colors");
    return generators_[static_cast<std::size_t>((i - 1) * colors + (j - 1))];
}

int LatticeAction::translate(int point, const LatticeVector& t) const {
    if (t.k() != k_) throw InvalidInput("translation has wrong dimension");
    const int last = static_cast<int>(k_) + 1;
    for (std::size_t i = 0; i < k_; ++i) {
        std::int64_t steps = mod_floor(t[i], step_order_[i]);
        // Translation by e_i - e_{k+1} is g_{k+1,i}.
        const auto& g = generator(last, static_cast<int>(i) + 1);
        for (; steps > 0; --steps) point = g[static_cast<std::size_t>(point)];
    }
    return point;
}

std::vector<int> LatticeAction::translation(const LatticeVector& t) const {
    std::vector<int> out(static_cast<std::size_t>(config_.num_points()));
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = translate(static_cast<int>(p), t);
    return out;
}

LinearCode stabilizer_code(const LatticeAction& action) {
    const std::size_t k = action.k();
    const ColoredConfiguration& c = action.config();
    const auto n = static_cast<std::size_t>(c.num_points());
    const int last = static_cast<int>(k) + 1;
    const int start = action.label(LatticeVector::zero(k));

    std::vector<std::vector<std::int64_t>> rep(n);
    std::vector<bool> have(n, false);
    rep[static_cast<std::size_t>(start)] = std::vector<std::int64_t>(k, 0);
    have[static_cast<std::size_t>(start)] = true;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        const int p = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < k; ++i) {
            const int q = action.generator(last, static_cast<int>(i) + 1)[static_cast<std::size_t>(p)];
            if (have[static_cast<std::size_t>(q)]) continue;
            rep[static_cast<std::size_t>(q)] = rep[static_cast<std::size_t>(p)];
            rep[static_cast<std::size_t>(q)][i] = checked_add(rep[static_cast<std::size_t>(q)][i], 1);
            have[static_cast<std::size_t>(q)] = true;
            queue.push_back(q);
        }
    }
    for (std::size_t p = 0; p < n; ++p)
        if (!have[p]) throw InternalError("stabilizer search did not reach point " + c.point_names()[p]);

    IntMatrix relations(0, k + 1);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < k; ++i) {
            const auto q = static_cast<std::size_t>(action.generator(last, static_cast<int>(i) + 1)[p]);
            std::vector<std::int64_t> y(k);
            for (std::size_t t = 0; t < k; ++t) y[t] = checked_sub(rep[p][t] + (t == i ? 1 : 0), rep[q][t]);
            const LatticeVector v = LatticeVector::from_reduced(y);
            relations.append_row(v.coords());
        }
    const LinearCode code = LinearCode::from_generators(relations);

    if (code.index() != static_cast<std::int64_t>(n))
        throw InternalError("stabilizer index " + std::to_string(code.index()) + " differs from point count " +
                            std::to_string(n));
    const LatticeVector origin = LatticeVector::zero(k);
    for (const auto& v : lattice_ball(k, 2))
        if ((action.label(v) == start) != code.contains(v.coords()))
            throw InternalError("stabilizer membership disagrees with the labeling");
    const auto unit = lattice_ball(k, 1);
    for (const auto& v : unit)
        for (const auto& w : unit)
            if ((action.label(v) == action.label(w)) != code.contains((v - w).coords()))
                throw InternalError("labels disagree with cosets of the stabilizer");
    return code;
}

ConfigAction translation_action(const LatticeAction& action, const LinearCode& stabilizer) {
    const ColoredConfiguration& c = action.config();
    const QuotientMap q = stabilizer.quotient();
    ConfigAction out;
    out.group = q.group();
    std::vector<int> colors(static_cast<std::size_t>(c.k()));
    std::iota(colors.begin(), colors.end(), 1);
    for (const auto& g : out.group.elements()) {
        const LatticeVector t(q.lift(g));
        auto points = action.translation(t);
        std::vector<int> lines(static_cast<std::size_t>(c.num_lines()));
        for (int l = 0; l < c.num_lines(); ++l)
            lines[static_cast<std::size_t>(l)] =
                c.point_phi_line(points[static_cast<std::size_t>(c.line_phi_point(l, 1))], 1);
        out.point_perm.push_back(std::move(points));
        out.line_perm.push_back(std::move(lines));
        out.color_perm.push_back(colors);
    }
    return out;
}

}  // namespace configcomplex
