#include "configcomplex/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "configcomplex/error.hpp"
#include "configcomplex/finite_field.hpp"

namespace configcomplex {

namespace {

std::string describe(const FiniteAbelianGroup& g, const std::vector<GroupElement>& elems) {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? ", " : "") + g.element_name(elems[i]);
    return s + "}";
}

bool check_members(const FiniteAbelianGroup& g, const std::vector<GroupElement>& elems, Report& report) {
    std::set<std::int64_t> seen;
    for (const auto& e : elems) {
        if (!g.contains(e)) {
            report.fail("membership", "element is not a reduced element of " + g.name());
            return false;
        }
        if (!seen.insert(g.index_of(e)).second) {
            report.fail("duplicate", "element " + g.element_name(e) + " listed twice");
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> sorted_indices(const FiniteAbelianGroup& g, const std::vector<GroupElement>& elems) {
    std::vector<std::int64_t> idx;
    for (const auto& e : elems) idx.push_back(g.index_of(e));
    std::sort(idx.begin(), idx.end());
    return idx;
}

// Least translate containing 0, as sorted indices.
std::vector<std::int64_t> least_translate(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& idx) {
    std::vector<std::int64_t> best;
    for (auto a : idx) {
        const GroupElement shift = g.neg(g.element_at(a));
        std::vector<std::int64_t> t;
        for (auto b : idx) t.push_back(g.index_of(g.add(g.element_at(b), shift)));
        std::sort(t.begin(), t.end());
        if (best.empty() || t < best) best = std::move(t);
    }
    return best;
}

// Sets {0, prefix..., rest ascending} of the given size whose differences are
// pairwise distinct and nonzero; `emit` sees the sorted index list.
void sidon_backtrack(const FiniteAbelianGroup& g, std::size_t size, const std::vector<std::int64_t>& prefix,
                     const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    const auto n = g.order();
    std::vector<GroupElement> all = g.elements();
    std::vector<std::vector<std::int64_t>> diff(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                g.index_of(g.sub(all[static_cast<std::size_t>(a)], all[static_cast<std::size_t>(b)]));

    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[0] = 1;  // the zero difference is never allowed
    std::vector<std::int64_t> chosen;

    auto try_add = [&](std::int64_t x, std::vector<std::int64_t>& added) {
        for (auto b : chosen) {
            for (auto d : {diff[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)],
                           diff[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)]}) {
                if (used[static_cast<std::size_t>(d)]) return false;
                used[static_cast<std::size_t>(d)] = 1;
                added.push_back(d);
            }
        }
        return true;
    };
    auto undo = [&](const std::vector<std::int64_t>& added) {
        for (auto d : added) used[static_cast<std::size_t>(d)] = 0;
    };

    std::vector<std::int64_t> start{0};
    start.insert(start.end(), prefix.begin(), prefix.end());
    for (auto x : start) {
        std::vector<std::int64_t> added;
        if (!try_add(x, added)) return;
        chosen.push_back(x);
    }
    if (chosen.size() > size) return;

    std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
        if (chosen.size() == size) {
            emit(chosen);
            return;
        }
        for (std::int64_t x = from; x < n; ++x) {
            std::vector<std::int64_t> added;
            if (try_add(x, added)) {
                chosen.push_back(x);
                rec(x + 1);
                chosen.pop_back();
            }
            undo(added);
        }
    };
    rec(chosen.back() + 1);
}

}  // namespace

Report validate_difference_set(const DifferenceSet& d) {
    Report report;
    const auto& g = d.group;
    if (d.elements.empty()) {
        report.fail("empty", "difference set has no elements");
        return report;
    }
    if (!check_members(g, d.elements, report)) return report;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> reps(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < d.elements.size(); ++i)
        for (std::size_t j = 0; j < d.elements.size(); ++j)
            if (i != j) reps[static_cast<std::size_t>(g.index_of(g.sub(d.elements[i], d.elements[j])))].push_back({i, j});
    for (std::int64_t x = 1; x < g.order(); ++x) {
        const auto& r = reps[static_cast<std::size_t>(x)];
        const std::string name = g.element_name(g.element_at(x));
        if (r.empty()) {
            report.fail("missing-difference", "difference " + name + " is not represented");
            return report;
        }
        if (r.size() > 1) {
            report.fail("repeated-difference",
                        "difference " + name + " = " + g.element_name(d.elements[r[0].first]) + " - " +
                            g.element_name(d.elements[r[0].second]) + " = " +
                            g.element_name(d.elements[r[1].first]) + " - " + g.element_name(d.elements[r[1].second]));
            return report;
        }
    }
    return report;
}

PlanarConfiguration config_from_difference_set(const DifferenceSet& d) {
    if (const Report r = validate_difference_set(d); !r.ok())
        throw InvalidInput("not a planar difference set: " + r.failures.front().detail);
    const auto& g = d.group;
    const auto n = g.order();
    const std::vector<std::int64_t> a = sorted_indices(g, d.elements);
    const int k = static_cast<int>(a.size());
    std::vector<int> color_of(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < a.size(); ++i) color_of[static_cast<std::size_t>(a[i])] = static_cast<int>(i) + 1;

    std::vector<std::string> names;
    const auto elems = g.elements();
    for (const auto& e : elems) names.push_back(g.element_name(e));

    std::vector<Incidence> incidences;
    for (std::int64_t p = 0; p < n; ++p)
        for (int c = 1; c <= k; ++c) {
            // p - l = a_c, so l = p - a_c.
            const auto l = g.index_of(g.sub(elems[static_cast<std::size_t>(p)], g.element_at(a[static_cast<std::size_t>(c - 1)])));
            incidences.push_back({static_cast<int>(p), static_cast<int>(l), c});
        }
    ColoredConfiguration config(k, names, names, std::move(incidences));

    ConfigAction action;
    action.group = g;
    std::vector<int> colors(static_cast<std::size_t>(k));
    std::iota(colors.begin(), colors.end(), 1);
    for (const auto& t : elems) {
        std::vector<int> perm;
        for (const auto& e : elems) perm.push_back(static_cast<int>(g.index_of(g.add(e, t))));
        action.point_perm.push_back(perm);
        action.line_perm.push_back(std::move(perm));
        action.color_perm.push_back(colors);
    }
    return {std::move(config), std::move(action)};
}

DifferenceSet singer_difference_set(std::int64_t q) {
    const auto pm = prime_power(q);
    if (!pm) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
    if (q > 16) throw InvalidInput("Singer construction is limited to q <= 16");
    const FiniteField f = FiniteField::make(pm->first, 3 * pm->second);
    const auto omega = f.primitive_element();
    const std::int64_t n = q * q + q + 1;
    // Tr(c x) = c Tr(x) for c in GF(q)*, and w^n generates GF(q)*, so the zero
    // pattern of Tr(w^i) has period n.
    DifferenceSet d{FiniteAbelianGroup::cyclic(n), {}};
    FiniteField::Element x = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        if (f.trace_to_subfield(q, x) == 0) d.elements.push_back({i});
        x = f.mul(x, omega);
    }
    if (const Report r = validate_difference_set(d); !r.ok())
        throw InternalError("Singer set for q = " + std::to_string(q) + " is not planar: " + r.failures.front().detail);
    return d;
}

DifferenceSetSearch search_difference_sets(std::int64_t n, std::size_t size) {
    if (n < 1 || n > 200) throw InvalidInput("difference-set search needs 1 <= n <= 200");
    if (size < 2) throw InvalidInput("difference-set search needs size >= 2");
    DifferenceSetSearch out;
    const auto k = static_cast<std::int64_t>(size) - 1;
    if (n != k * k + k + 1) {
        out.reason = "order mismatch: size " + std::to_string(size) + " needs |G| = " + std::to_string(k * k + k + 1);
        return out;
    }
    const auto g = FiniteAbelianGroup::cyclic(n);
    sidon_backtrack(g, size, {1}, [&](const std::vector<std::int64_t>& idx) {
        if (least_translate(g, idx) != idx) return;
        DifferenceSet d{g, {}};
        for (auto i : idx) d.elements.push_back(g.element_at(i));
        out.sets.push_back(std::move(d));
    });
    if (out.sets.empty()) out.reason = "no planar difference set exists";
    return out;
}

Report validate_semifield(const Semifield& s) {
    Report report;
    const auto q = s.q;
    if (q < 2) {
        report.fail("size", "a semifield needs at least two elements");
        return report;
    }
    const auto cells = static_cast<std::size_t>(q * q);
    if (s.add.size() != cells || s.mul.size() != cells) {
        report.fail("shape", "tables must have q^2 entries each");
        return report;
    }
    for (std::size_t i = 0; i < cells; ++i)
        if (s.add[i] < 0 || s.add[i] >= q || s.mul[i] < 0 || s.mul[i] >= q) {
            report.fail("shape", "table entry outside [0, q)");
            return report;
        }
    auto name = [](std::int64_t x) { return std::to_string(x); };

    // Additive group with identity 0.
    for (std::int64_t a = 0; a < q; ++a)
        if (s.plus(0, a) != a || s.plus(a, 0) != a) {
            report.fail("additive-identity", "0 + " + name(a) + " != " + name(a));
            return report;
        }
    for (std::int64_t a = 0; a < q; ++a) {
        std::vector<char> row(static_cast<std::size_t>(q), 0);
        for (std::int64_t b = 0; b < q; ++b) row[static_cast<std::size_t>(s.plus(a, b))] = 1;
        if (std::count(row.begin(), row.end(), 1) != q) {
            report.fail("additive-inverse", name(a) + " has no unique additive inverse");
            return report;
        }
    }
    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b)
            for (std::int64_t c = 0; c < q; ++c)
                if (s.plus(s.plus(a, b), c) != s.plus(a, s.plus(b, c))) {
                    report.fail("additive-associativity", "(" + name(a) + " + " + name(b) + ") + " + name(c) +
                                                              " differs from " + name(a) + " + (" + name(b) + " + " +
                                                              name(c) + ")");
                    return report;
                }

    // Unique division on both sides by nonzero a.
    for (std::int64_t a = 1; a < q; ++a) {
        std::vector<int> left(static_cast<std::size_t>(q), 0), right(static_cast<std::size_t>(q), 0);
        for (std::int64_t x = 0; x < q; ++x) {
            ++left[static_cast<std::size_t>(s.times(a, x))];
            ++right[static_cast<std::size_t>(s.times(x, a))];
        }
        for (std::int64_t b = 0; b < q; ++b) {
            if (left[static_cast<std::size_t>(b)] != 1) {
                report.fail("division", "division not unique: " + name(a) + " * x = " + name(b) + " has " +
                                            std::to_string(left[static_cast<std::size_t>(b)]) + " solutions");
                return report;
            }
            if (right[static_cast<std::size_t>(b)] != 1) {
                report.fail("division", "division not unique: y * " + name(a) + " = " + name(b) + " has " +
                                            std::to_string(right[static_cast<std::size_t>(b)]) + " solutions");
                return report;
            }
        }
    }

    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b)
            for (std::int64_t c = 0; c < q; ++c) {
                if (s.times(a, s.plus(b, c)) != s.plus(s.times(a, b), s.times(a, c))) {
                    report.fail("left-distributivity",
                                name(a) + " * (" + name(b) + " + " + name(c) + ") != " + name(a) + "*" + name(b) +
                                    " + " + name(a) + "*" + name(c));
                    return report;
                }
                if (s.times(s.plus(a, b), c) != s.plus(s.times(a, c), s.times(b, c))) {
                    report.fail("right-distributivity",
                                "(" + name(a) + " + " + name(b) + ") * " + name(c) + " != " + name(a) + "*" + name(c) +
                                    " + " + name(b) + "*" + name(c));
                    return report;
                }
            }

    for (std::int64_t a = 0; a < q; ++a)
        if (s.times(1, a) != a || s.times(a, 1) != a) {
            report.fail("multiplicative-identity", "1 * " + name(a) + " != " + name(a));
            return report;
        }

    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = a + 1; b < q; ++b)
            if (s.times(a, b) != s.times(b, a)) {
                report.fail("commutativity", name(a) + " * " + name(b) + " != " + name(b) + " * " + name(a));
                return report;
            }
    return report;
}

Semifield semifield_from_field(std::int64_t q) {
    const auto pm = prime_power(q);
    if (!pm) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
    if (q > 256) throw InvalidInput("semifield tables are limited to q <= 256");
    const FiniteField f = FiniteField::make(pm->first, pm->second);
    Semifield s{q, {}, {}};
    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b) {
            s.add.push_back(f.add(a, b));
            s.mul.push_back(f.mul(a, b));
        }
    return s;
}

ColoredConfiguration config_from_semifield(const Semifield& s) {
    if (const Report r = validate_semifield(s); !r.ok())
        throw InvalidInput("not a commutative semifield: " + r.failures.front().detail);
    const auto q = s.q;
    std::vector<std::string> points, lines;
    for (std::int64_t x = 0; x < q; ++x)
        for (std::int64_t y = 0; y < q; ++y) {
            points.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
            lines.push_back("[" + std::to_string(x) + "," + std::to_string(y) + "]");
        }
    // b = y - a x: the unique z with z + a x = y.
    std::vector<std::int64_t> minus(static_cast<std::size_t>(q * q));
    for (std::int64_t u = 0; u < q; ++u)
        for (std::int64_t v = 0; v < q; ++v) minus[static_cast<std::size_t>(s.plus(u, v) * q + v)] = u;

    std::vector<Incidence> incidences;
    for (std::int64_t x = 0; x < q; ++x)
        for (std::int64_t y = 0; y < q; ++y) {
            std::vector<Incidence> here;
            for (std::int64_t a = 0; a < q; ++a) {
                const auto b = minus[static_cast<std::size_t>(y * q + s.times(a, x))];
                here.push_back({static_cast<int>(x * q + y), static_cast<int>(a * q + b),
                                static_cast<int>(s.plus(x, a)) + 1});
            }
            std::sort(here.begin(), here.end(), [](const Incidence& l, const Incidence& r) { return l.color < r.color; });
            incidences.insert(incidences.end(), here.begin(), here.end());
        }
    ColoredConfiguration c(static_cast<int>(q), std::move(points), std::move(lines), std::move(incidences));
    if (const Report r = validate_colored_configuration(c); !r.ok())
        throw InternalError("semifield configuration failed validation: " + r.failures.front().detail);
    return c;
}

Report validate_sidon(const SidonSet& b) {
    Report report;
    const auto& g = b.group;
    if (b.elements.empty()) {
        report.fail("empty", "Sidon set has no elements");
        return report;
    }
    if (!check_members(g, b.elements, report)) return report;
    if (b.elements.front() != g.zero())
        report.fail("normalization", "first element is " + g.element_name(b.elements.front()) + ", expected 0");
    std::map<std::int64_t, std::pair<std::size_t, std::size_t>> seen;
    bool repeated = false;
    for (std::size_t i = 0; i < b.elements.size() && !repeated; ++i)
        for (std::size_t j = 0; j < b.elements.size() && !repeated; ++j) {
            if (i == j) continue;
            const auto d = g.index_of(g.sub(b.elements[i], b.elements[j]));
            auto [it, fresh] = seen.emplace(d, std::make_pair(i, j));
            if (!fresh) {
                report.fail("distinct-differences",
                            "difference " + g.element_name(g.element_at(d)) + " = " +
                                g.element_name(b.elements[it->second.first]) + " - " +
                                g.element_name(b.elements[it->second.second]) + " = " + g.element_name(b.elements[i]) +
                                " - " + g.element_name(b.elements[j]));
                repeated = true;
            }
        }
    if (g.generated_order(b.elements) != g.order())
        report.fail("generation", describe(g, b.elements) + " generates a subgroup of order " +
                                      std::to_string(g.generated_order(b.elements)) + " in " + g.name());
    return report;
}

SidonSet normalize_sidon(const SidonSet& b) {
    if (b.elements.empty()) return b;
    SidonSet out{b.group, {}};
    const GroupElement shift = b.group.neg(b.elements.front());
    for (const auto& e : b.elements) out.elements.push_back(b.group.add(e, shift));
    return out;
}

std::vector<SidonSet> search_sidon_sets(const FiniteAbelianGroup& g, std::size_t size) {
    if (g.order() > 1000) throw InvalidInput("Sidon search is limited to |G| <= 1000");
    if (size < 1) throw InvalidInput("Sidon search needs size >= 1");
    std::vector<SidonSet> out;
    sidon_backtrack(g, size, {}, [&](const std::vector<std::int64_t>& idx) {
        if (least_translate(g, idx) != idx) return;
        SidonSet s{g, {}};
        for (auto i : idx) s.elements.push_back(g.element_at(i));
        if (g.generated_order(s.elements) != g.order()) return;
        out.push_back(std::move(s));
    });
    return out;
}

}  // namespace configcomplex
