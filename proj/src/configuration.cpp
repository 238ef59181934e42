#include "configcomplex/configuration.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "configcomplex/error.hpp"

namespace configcomplex {

ColoredConfiguration::ColoredConfiguration(int k, std::vector<std::string> point_names,
                                           std::vector<std::string> line_names, std::vector<Incidence> incidences)
    : k_(k),
      point_names_(std::move(point_names)),
      line_names_(std::move(line_names)),
      incidences_(std::move(incidences)) {
    if (k_ < 1) throw InvalidInput("configuration needs k >= 1");
    for (const auto* names : {&point_names_, &line_names_}) {
        std::set<std::string> unique(names->begin(), names->end());
        if (unique.size() != names->size()) throw InvalidInput("duplicate vertex id in configuration");
    }
    point_table_.assign(point_names_.size() * static_cast<std::size_t>(k_), kMissing);
    line_table_.assign(line_names_.size() * static_cast<std::size_t>(k_), kMissing);
    for (const auto& inc : incidences_) {
        if (inc.point < 0 || inc.point >= num_points() || inc.line < 0 || inc.line >= num_lines())
            throw InvalidInput("incidence refers to an unknown point or line");
        if (inc.color < 1 || inc.color > k_) throw InvalidInput("incidence color outside [1, k]");
        auto& ps = point_table_[static_cast<std::size_t>(inc.point * k_ + inc.color - 1)];
        ps = ps == kMissing ? inc.line : kConflict;
        auto& ls = line_table_[static_cast<std::size_t>(inc.line * k_ + inc.color - 1)];
        ls = ls == kMissing ? inc.point : kConflict;
    }
    complete_ = incidences_.size() == point_names_.size() * static_cast<std::size_t>(k_) &&
                point_names_.size() == line_names_.size() &&
                std::all_of(point_table_.begin(), point_table_.end(), [](int v) { return v >= 0; }) &&
                std::all_of(line_table_.begin(), line_table_.end(), [](int v) { return v >= 0; });
}

std::optional<int> ColoredConfiguration::line_of(int point, int color) const {
    if (point < 0 || point >= num_points() || color < 1 || color > k_) return std::nullopt;
    const int v = point_table_[static_cast<std::size_t>(point * k_ + color - 1)];
    return v >= 0 ? std::optional<int>(v) : std::nullopt;
}

std::optional<int> ColoredConfiguration::point_of(int line, int color) const {
    if (line < 0 || line >= num_lines() || color < 1 || color > k_) return std::nullopt;
    const int v = line_table_[static_cast<std::size_t>(line * k_ + color - 1)];
    return v >= 0 ? std::optional<int>(v) : std::nullopt;
}

Vertex ColoredConfiguration::phi(Vertex v, int color) const {
    const auto next = v.side == Side::point ? line_of(v.index, color) : point_of(v.index, color);
    if (!next) {
        std::ostringstream os;
        os << "phi undefined at " << (v.side == Side::point ? "point " : "line ")
           << (v.side == Side::point ? point_names_ : line_names_).at(static_cast<std::size_t>(v.index))
           << " for color " << color;
        throw InvalidInput(os.str());
    }
    return {v.side == Side::point ? Side::line : Side::point, *next};
}

std::vector<int> ColoredConfiguration::points_on_line(int line) const {
    std::vector<int> out;
    for (const auto& inc : incidences_)
        if (inc.line == line) out.push_back(inc.point);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ColoredConfiguration::lines_through_point(int point) const {
    std::vector<int> out;
    for (const auto& inc : incidences_)
        if (inc.point == point) out.push_back(inc.line);
    std::sort(out.begin(), out.end());
    return out;
}

Vertex phi(const ColoredConfiguration& c, Vertex v, int color) { return c.phi(v, color); }

namespace {

std::string vertex_name(const ColoredConfiguration& c, Vertex v) {
    return (v.side == Side::point ? "point " + c.point_names()[static_cast<std::size_t>(v.index)]
                                  : "line " + c.line_names()[static_cast<std::size_t>(v.index)]);
}

}  // namespace

Report validate_configuration(const ColoredConfiguration& c) {
    Report report;
    const int k = c.k();
    if (c.num_points() == 0) {
        report.fail("empty", "configuration has no points");
        return report;
    }
    if (c.num_points() != c.num_lines()) {
        std::ostringstream os;
        os << c.num_points() << " points but " << c.num_lines() << " lines";
        report.fail("balance", os.str());
    }

    std::set<std::pair<int, int>> pairs;
    std::vector<int> point_degree(static_cast<std::size_t>(c.num_points()), 0);
    std::vector<int> line_degree(static_cast<std::size_t>(c.num_lines()), 0);
    for (const auto& inc : c.incidences()) {
        if (!pairs.insert({inc.point, inc.line}).second) {
            report.fail("duplicate-incidence", "point " + c.point_names()[static_cast<std::size_t>(inc.point)] +
                                                   " and line " + c.line_names()[static_cast<std::size_t>(inc.line)] +
                                                   " are listed twice");
            continue;
        }
        ++point_degree[static_cast<std::size_t>(inc.point)];
        ++line_degree[static_cast<std::size_t>(inc.line)];
    }
    for (int p = 0; p < c.num_points(); ++p)
        if (point_degree[static_cast<std::size_t>(p)] != k)
            report.fail("regularity", "point " + c.point_names()[static_cast<std::size_t>(p)] + " has degree " +
                                          std::to_string(point_degree[static_cast<std::size_t>(p)]));
    for (int l = 0; l < c.num_lines(); ++l)
        if (line_degree[static_cast<std::size_t>(l)] != k)
            report.fail("regularity", "line " + c.line_names()[static_cast<std::size_t>(l)] + " has degree " +
                                          std::to_string(line_degree[static_cast<std::size_t>(l)]));

    // Two points on two common lines form a 4-cycle in G(C).
    std::vector<std::set<int>> lines_of(static_cast<std::size_t>(c.num_points()));
    for (const auto& [p, l] : pairs) lines_of[static_cast<std::size_t>(p)].insert(l);
    bool found_square = false;
    for (int p1 = 0; p1 < c.num_points() && !found_square; ++p1)
        for (int p2 = p1 + 1; p2 < c.num_points() && !found_square; ++p2) {
            std::vector<int> common;
            std::set_intersection(lines_of[static_cast<std::size_t>(p1)].begin(),
                                  lines_of[static_cast<std::size_t>(p1)].end(),
                                  lines_of[static_cast<std::size_t>(p2)].begin(),
                                  lines_of[static_cast<std::size_t>(p2)].end(), std::back_inserter(common));
            if (common.size() >= 2) {
                report.fail("four-cycle", "points " + c.point_names()[static_cast<std::size_t>(p1)] + " and " +
                                              c.point_names()[static_cast<std::size_t>(p2)] + " share lines " +
                                              c.line_names()[static_cast<std::size_t>(common[0])] + " and " +
                                              c.line_names()[static_cast<std::size_t>(common[1])]);
                found_square = true;
            }
        }

    // Connectivity of G(C), searched from point 0.
    const auto np = static_cast<std::size_t>(c.num_points());
    std::vector<std::vector<int>> point_adj(np), line_adj(static_cast<std::size_t>(c.num_lines()));
    for (const auto& [p, l] : pairs) {
        point_adj[static_cast<std::size_t>(p)].push_back(l);
        line_adj[static_cast<std::size_t>(l)].push_back(p);
    }
    std::vector<bool> seen_p(np, false), seen_l(static_cast<std::size_t>(c.num_lines()), false);
    std::deque<Vertex> queue{{Side::point, 0}};
    seen_p[0] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        const auto& adj = v.side == Side::point ? point_adj[static_cast<std::size_t>(v.index)]
                                                : line_adj[static_cast<std::size_t>(v.index)];
        auto& seen = v.side == Side::point ? seen_l : seen_p;
        for (int w : adj) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            queue.push_back({v.side == Side::point ? Side::line : Side::point, w});
        }
    }
    for (std::size_t p = 0; p < seen_p.size(); ++p)
        if (!seen_p[p]) {
            report.fail("connectivity", "point " + c.point_names()[p] + " is not reachable from point " +
                                            c.point_names()[0]);
            break;
        }
    for (std::size_t l = 0; l < seen_l.size(); ++l)
        if (!seen_l[l]) {
            report.fail("connectivity", "line " + c.line_names()[l] + " is not reachable from point " +
                                            c.point_names()[0]);
            break;
        }
    return report;
}

Report validate_coloring(const ColoredConfiguration& c) {
    Report report;
    const int k = c.k();
    std::set<std::tuple<int, int, int>> seen_point, seen_line;
    for (const auto& inc : c.incidences()) {
        if (!seen_point.insert({inc.point, inc.color, 0}).second)
            report.fail("proper-coloring", "point " + c.point_names()[static_cast<std::size_t>(inc.point)] +
                                               " has two incidences of color " + std::to_string(inc.color));
        if (!seen_line.insert({inc.line, inc.color, 0}).second)
            report.fail("proper-coloring", "line " + c.line_names()[static_cast<std::size_t>(inc.line)] +
                                               " has two incidences of color " + std::to_string(inc.color));
    }
    if (!report.ok()) return report;
    if (!c.has_complete_coloring()) {
        report.fail("proper-coloring", "some vertex is missing a color; phi maps are not total");
        return report;
    }

    for (Side side : {Side::point, Side::line}) {
        const int count = side == Side::point ? c.num_points() : c.num_lines();
        for (int idx = 0; idx < count; ++idx)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    if (b == a) continue;
                    for (int cc = 1; cc <= k; ++cc) {
                        if (cc == a || cc == b) continue;
                        const Vertex start{side, idx};
                        Vertex v = start;
                        for (int rep = 0; rep < 2; ++rep)
                            for (int color : {a, b, cc}) v = c.phi(v, color);
                        if (!(v == start)) {
                            std::ostringstream os;
                            os << "walk from " << vertex_name(c, start) << " along colors (" << a << "," << b << ","
                               << cc << ") x2 ends at " << vertex_name(c, v);
                            report.fail("six-cycle", os.str());
                            return report;
                        }
                    }
                }
    }
    return report;
}

Report validate_colored_configuration(const ColoredConfiguration& c) {
    Report report = validate_configuration(c);
    if (report.ok()) report.merge(validate_coloring(c));
    return report;
}

bool is_projective_plane(const ColoredConfiguration& c) {
    if (c.num_points() != c.num_lines() || c.num_points() == 0) return false;
    const auto n = static_cast<std::size_t>(c.num_points());
    std::vector<std::vector<int>> point_pairs(n, std::vector<int>(n, 0));
    std::vector<std::vector<int>> line_pairs(n, std::vector<int>(n, 0));
    for (int l = 0; l < c.num_lines(); ++l) {
        const auto pts = c.points_on_line(l);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                ++point_pairs[static_cast<std::size_t>(pts[i])][static_cast<std::size_t>(pts[j])];
    }
    for (int p = 0; p < c.num_points(); ++p) {
        const auto lns = c.lines_through_point(p);
        for (std::size_t i = 0; i < lns.size(); ++i)
            for (std::size_t j = i + 1; j < lns.size(); ++j)
                ++line_pairs[static_cast<std::size_t>(lns[i])][static_cast<std::size_t>(lns[j])];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (point_pairs[i][j] != 1 || line_pairs[i][j] != 1) return false;
    return true;
}

ColoredConfiguration dual(const ColoredConfiguration& c) {
    std::vector<Incidence> incidences;
    incidences.reserve(c.incidences().size());
    for (const auto& inc : c.incidences()) incidences.push_back({inc.line, inc.point, inc.color});
    return ColoredConfiguration(c.k(), c.line_names(), c.point_names(), std::move(incidences));
}

bool Isomorphism::identity_colors() const {
    for (std::size_t i = 0; i < color_map.size(); ++i)
        if (color_map[i] != static_cast<int>(i) + 1) return false;
    return true;
}

namespace {

std::optional<Isomorphism> propagate(const ColoredConfiguration& a, const ColoredConfiguration& b,
                                     const std::vector<int>& colors, int image_of_point0) {
    const auto n = static_cast<std::size_t>(a.num_points());
    Isomorphism iso{std::vector<int>(n, -1), std::vector<int>(n, -1), colors};
    std::vector<bool> used_p(n, false), used_l(n, false);
    iso.point_map[0] = image_of_point0;
    used_p[static_cast<std::size_t>(image_of_point0)] = true;
    std::deque<Vertex> queue{{Side::point, 0}};
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        const int image = (v.side == Side::point ? iso.point_map : iso.line_map)[static_cast<std::size_t>(v.index)];
        for (int c = 1; c <= a.k(); ++c) {
            const Vertex u = a.phi(v, c);
            const Vertex u_img = b.phi({v.side, image}, colors[static_cast<std::size_t>(c - 1)]);
            auto& map = u.side == Side::point ? iso.point_map : iso.line_map;
            auto& used = u.side == Side::point ? used_p : used_l;
            int& slot = map[static_cast<std::size_t>(u.index)];
            if (slot == -1) {
                if (used[static_cast<std::size_t>(u_img.index)]) return std::nullopt;
                slot = u_img.index;
                used[static_cast<std::size_t>(u_img.index)] = true;
                queue.push_back(u);
            } else if (slot != u_img.index) {
                return std::nullopt;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (iso.point_map[i] < 0 || iso.line_map[i] < 0) return std::nullopt;
    return iso;
}

}  // namespace

std::optional<Isomorphism> is_isomorphic(const ColoredConfiguration& a, const ColoredConfiguration& b) {
    if (a.k() != b.k() || a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return std::nullopt;
    if (a.k() > 8) throw InvalidInput("color permutation search too large");
    if (!a.has_complete_coloring() || !b.has_complete_coloring())
        throw InvalidInput("isomorphism search needs complete proper colorings");
    if (a.num_points() == 0) return Isomorphism{};

    std::vector<int> colors(static_cast<std::size_t>(a.k()));
    // Lexicographic order starts at the identity permutation.
    std::iota(colors.begin(), colors.end(), 1);
    do {
        for (int target = 0; target < b.num_points(); ++target)
            if (auto iso = propagate(a, b, colors, target)) return iso;
    } while (std::next_permutation(colors.begin(), colors.end()));
    return std::nullopt;
}

bool is_isomorphism(const ColoredConfiguration& a, const ColoredConfiguration& b, const Isomorphism& iso) {
    if (a.k() != b.k() || iso.point_map.size() != static_cast<std::size_t>(a.num_points()) ||
        iso.line_map.size() != static_cast<std::size_t>(a.num_lines()) ||
        iso.color_map.size() != static_cast<std::size_t>(a.k()))
        return false;
    auto bijective = [](const std::vector<int>& m, int size) {
        std::vector<bool> hit(static_cast<std::size_t>(size), false);
        for (int v : m) {
            if (v < 0 || v >= size || hit[static_cast<std::size_t>(v)]) return false;
            hit[static_cast<std::size_t>(v)] = true;
        }
        return static_cast<int>(m.size()) == size;
    };
    if (!bijective(iso.point_map, b.num_points()) || !bijective(iso.line_map, b.num_lines()) ||
        !bijective([&] {
            std::vector<int> z;
            for (int c : iso.color_map) z.push_back(c - 1);
            return z;
        }(), a.k()))
        return false;
    if (a.incidences().size() != b.incidences().size()) return false;
    std::set<std::tuple<int, int, int>> target;
    for (const auto& inc : b.incidences()) target.insert({inc.point, inc.line, inc.color});
    for (const auto& inc : a.incidences())
        if (!target.count({iso.point_map[static_cast<std::size_t>(inc.point)],
                           iso.line_map[static_cast<std::size_t>(inc.line)],
                           iso.color_map[static_cast<std::size_t>(inc.color - 1)]}))
            return false;
    return true;
}

ConfigAction ConfigAction::trivial(const ColoredConfiguration& c) {
    std::vector<int> p(static_cast<std::size_t>(c.num_points())), l(static_cast<std::size_t>(c.num_lines())),
        col(static_cast<std::size_t>(c.k()));
    std::iota(p.begin(), p.end(), 0);
    std::iota(l.begin(), l.end(), 0);
    std::iota(col.begin(), col.end(), 1);
    return {FiniteAbelianGroup{}, {p}, {l}, {col}};
}

Report verify_free_action(const ColoredConfiguration& c, const ConfigAction& action) {
    Report report;
    const auto order = static_cast<std::size_t>(action.group.order());
    if (action.point_perm.size() != order || action.line_perm.size() != order || action.color_perm.size() != order) {
        report.fail("shape", "action must list one permutation per group element");
        return report;
    }
    const FiniteAbelianGroup& g = action.group;
    for (std::size_t e = 0; e < order; ++e) {
        const Isomorphism iso{action.point_perm[e], action.line_perm[e], action.color_perm[e]};
        if (!is_isomorphism(c, c, iso)) {
            report.fail("automorphism", "element " + g.element_name(g.element_at(static_cast<std::int64_t>(e))) +
                                            " does not preserve incidences and color classes");
            return report;
        }
    }
    // Identity acts trivially; generators compose with every element.
    const auto trivial = ConfigAction::trivial(c);
    if (action.point_perm[0] != trivial.point_perm[0] || action.line_perm[0] != trivial.line_perm[0] ||
        action.color_perm[0] != trivial.color_perm[0])
        report.fail("homomorphism", "identity element does not act trivially");
    for (std::size_t f = 0; f < g.rank(); ++f) {
        GroupElement gen = g.zero();
        gen[f] = 1;
        const auto gi = static_cast<std::size_t>(g.index_of(gen));
        for (std::size_t h = 0; h < order; ++h) {
            const auto sum = static_cast<std::size_t>(g.index_of(g.add(gen, g.element_at(static_cast<std::int64_t>(h)))));
            auto compose = [](const std::vector<int>& outer, const std::vector<int>& inner, int offset) {
                std::vector<int> out(inner.size());
                for (std::size_t i = 0; i < inner.size(); ++i)
                    out[i] = outer[static_cast<std::size_t>(inner[i] - offset)];
                return out;
            };
            if (compose(action.point_perm[gi], action.point_perm[h], 0) != action.point_perm[sum] ||
                compose(action.line_perm[gi], action.line_perm[h], 0) != action.line_perm[sum] ||
                compose(action.color_perm[gi], action.color_perm[h], 1) != action.color_perm[sum]) {
                report.fail("homomorphism", "composition law fails for generator " + g.element_name(gen) +
                                                " and element " +
                                                g.element_name(g.element_at(static_cast<std::int64_t>(h))));
                return report;
            }
        }
    }
    for (std::size_t e = 1; e < order; ++e)
        for (int p = 0; p < c.num_points(); ++p)
            if (action.point_perm[e][static_cast<std::size_t>(p)] == p) {
                report.fail("free", "element " + g.element_name(g.element_at(static_cast<std::int64_t>(e))) +
                                        " fixes point " + c.point_names()[static_cast<std::size_t>(p)]);
                return report;
            }
    return report;
}

}  // namespace configcomplex
