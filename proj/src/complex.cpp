#include "configcomplex/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "configcomplex/error.hpp"
#include "configcomplex/normal_form.hpp"

namespace configcomplex {

namespace {

bool is_subset(const Facet& small, const Facet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Calls f on every size-s subset of `facet` (sorted input gives sorted output).
template <typename F>
void for_each_subset(const Facet& facet, std::size_t s, F&& f) {
    if (s > facet.size() || s == 0) return;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    Facet face(s);
    while (true) {
        for (std::size_t i = 0; i < s; ++i) face[i] = facet[pick[i]];
        f(face);
        std::size_t i = s;
        while (i > 0 && pick[i - 1] == facet.size() - s + (i - 1)) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// Faces of sizes 1..max_size, each list sorted.
std::vector<std::vector<Facet>> enumerate_faces(const SimplicialComplex& x, std::size_t max_size, std::size_t cap) {
    std::vector<std::vector<Facet>> out(max_size);
    std::size_t total = 0;
    for (std::size_t s = 1; s <= max_size; ++s) {
        std::set<Facet> faces;
        for (const auto& f : x.facets()) {
            for_each_subset(f, s, [&](const Facet& face) { faces.insert(face); });
            if (total + faces.size() > cap)
                throw FaceCapExceeded("face count exceeds the cap of " + std::to_string(cap));
        }
        total += faces.size();
        out[s - 1].assign(faces.begin(), faces.end());
    }
    return out;
}

std::vector<Facet> sorted_family(const std::vector<std::vector<int>>& family) {
    std::vector<Facet> out;
    for (auto f : family) {
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> negative_family(const ColoredConfiguration& c, int reference) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(c.num_points()));
    for (int p = 0; p < c.num_points(); ++p)
        for (int i = 1; i <= c.k(); ++i)
            out[static_cast<std::size_t>(p)].push_back(c.line_phi_point(c.point_phi_line(p, i), reference));
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names, std::vector<Facet> facets)
    : vertex_names_(std::move(vertex_names)) {
    const int n = num_vertices();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (auto& f : facets) {
        if (f.empty()) throw InvalidInput("empty facet");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidInput("facet repeats a vertex");
        if (f.front() < 0 || f.back() >= n) throw InvalidInput("facet vertex out of range");
        for (int v : f) used[static_cast<std::size_t>(v)] = true;
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = 0; b < facets.size(); ++b)
            if (a != b && facets[a].size() < facets[b].size() && is_subset(facets[a], facets[b]))
                throw InvalidInput("a facet is contained in another facet");
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)])
            throw InvalidInput("vertex " + vertex_names_[static_cast<std::size_t>(v)] + " lies in no facet");
    facets_ = std::move(facets);
}

int SimplicialComplex::dimension() const {
    std::size_t m = 0;
    for (const auto& f : facets_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
}

Facet QuotientComplex::positive_facet(int line) const {
    Facet f = positive.at(static_cast<std::size_t>(line));
    std::sort(f.begin(), f.end());
    return f;
}

Facet QuotientComplex::negative_facet(int point) const {
    Facet f = negative.at(static_cast<std::size_t>(point));
    std::sort(f.begin(), f.end());
    return f;
}

QuotientComplex quotient_complex(const ColoredConfiguration& c, int reference_color) {
    if (c.k() < 2) throw InvalidInput("quotient complex needs at least 2 colors");
    if (!c.has_complete_coloring()) throw InvalidInput("quotient complex needs a complete proper coloring");
    const int ref = reference_color == 0 ? c.k() : reference_color;
    if (ref < 1 || ref > c.k()) throw InvalidInput("reference color out of range");

    std::vector<std::vector<int>> positive(static_cast<std::size_t>(c.num_lines()));
    for (int l = 0; l < c.num_lines(); ++l)
        for (int i = 1; i <= c.k(); ++i) positive[static_cast<std::size_t>(l)].push_back(c.line_phi_point(l, i));
    auto negative = negative_family(c, ref);

    std::vector<Facet> facets = sorted_family(positive);
    const auto neg_sorted = sorted_family(negative);
    facets.insert(facets.end(), neg_sorted.begin(), neg_sorted.end());

    QuotientComplex out{SimplicialComplex(c.point_names(), std::move(facets)), c.line_names(), ref, std::move(positive),
                        std::move(negative), false, {}};
    std::map<Facet, std::vector<int>> lines_by_facet;
    for (int l = 0; l < c.num_lines(); ++l) lines_by_facet[out.positive_facet(l)].push_back(l);
    for (int p = 0; p < c.num_points(); ++p)
        if (auto it = lines_by_facet.find(out.negative_facet(p)); it != lines_by_facet.end())
            for (int l : it->second) out.coincidences.push_back({l, p});
    out.degenerate = !out.coincidences.empty();
    return out;
}

bool reference_color_independence(const ColoredConfiguration& c) {
    const auto base = sorted_family(negative_family(c, c.k()));
    for (int j = 1; j < c.k(); ++j)
        if (sorted_family(negative_family(c, j)) != base) return false;
    return true;
}

bool cross_check_with_lattice(const ColoredConfiguration& c) {
    const LatticeAction action = LatticeAction::build(c);
    const LinearCode h = stabilizer_code(action);
    const std::size_t k = action.k();
    const auto pivots = h.pivots();

    std::vector<Facet> from_lattice;
    std::vector<std::int64_t> y(k, 0);
    while (true) {
        const LatticeVector x = LatticeVector::from_reduced(y);
        std::vector<std::int64_t> pos_root(x.coords().begin(), x.coords().end());
        std::vector<std::int64_t> neg_root = pos_root;
        pos_root[k] -= 1;
        neg_root[k] += 1;
        for (auto [root, sign] : {std::pair{&pos_root, FacetSign::positive}, std::pair{&neg_root, FacetSign::negative}}) {
            Facet f;
            for (const auto& v : facet_vertices(*root, sign)) f.push_back(action.label(v));
            std::sort(f.begin(), f.end());
            from_lattice.push_back(std::move(f));
        }
        std::size_t i = 0;
        while (i < k && ++y[i] == pivots[i]) y[i++] = 0;
        if (i == k) break;
    }
    std::sort(from_lattice.begin(), from_lattice.end());

    const QuotientComplex q = quotient_complex(c);
    std::vector<Facet> direct = sorted_family(q.positive);
    const auto neg = sorted_family(q.negative);
    direct.insert(direct.end(), neg.begin(), neg.end());
    std::sort(direct.begin(), direct.end());
    return direct == from_lattice;
}

ColoredConfiguration facet_family(const QuotientComplex& x, FacetSign sign) {
    const auto& family = sign == FacetSign::positive ? x.positive : x.negative;
    std::vector<std::string> facet_names;
    for (std::size_t f = 0; f < family.size(); ++f)
        facet_names.push_back((sign == FacetSign::positive ? "+" : "-") + std::to_string(f));
    std::vector<Incidence> incidences;
    for (std::size_t f = 0; f < family.size(); ++f)
        for (std::size_t i = 0; i < family[f].size(); ++i)
            incidences.push_back({family[f][i], static_cast<int>(f), static_cast<int>(i) + 1});
    std::sort(incidences.begin(), incidences.end(), [](const Incidence& a, const Incidence& b) {
        return std::pair(a.point, a.color) < std::pair(b.point, b.color);
    });
    const int k = family.empty() ? 1 : static_cast<int>(family.front().size());
    return ColoredConfiguration(k, x.complex.vertex_names(), std::move(facet_names), std::move(incidences));
}

bool is_two_neighborly(const SimplicialComplex& x) {
    const auto n = static_cast<std::size_t>(x.num_vertices());
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const auto& f : x.facets())
        for (int a : f)
            for (int b : f) seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!seen[a][b]) return false;
    return true;
}

bool faces_have_unique_facets(const SimplicialComplex& x) {
    // A face of dimension >= 2 contains a triangle, so checking triangles suffices.
    std::map<Facet, int> count;
    for (const auto& f : x.facets()) for_each_subset(f, 3, [&](const Facet& t) { ++count[t]; });
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

std::string HomologyGroup::to_string() const {
    std::string s;
    if (rank == 1) s = "Z";
    if (rank > 1) s = "Z^" + std::to_string(rank);
    for (auto t : torsion) s += (s.empty() ? "" : " + ") + ("Z_" + std::to_string(t));
    return s.empty() ? "0" : s;
}

HomologyResult homology(const SimplicialComplex& x, int max_dim, std::size_t face_cap) {
    if (max_dim < 0) throw InvalidInput("max_dim must be nonnegative");
    const auto top = static_cast<std::size_t>(max_dim) + 2;
    const auto faces = enumerate_faces(x, top, face_cap);

    // rank_of[d] and torsion_of[d] describe the boundary map from dimension d.
    std::vector<std::size_t> rank_of(top + 1, 0);
    std::vector<std::vector<std::int64_t>> torsion_of(top + 1);
    for (std::size_t d = 1; d < top; ++d) {
        const auto& hi = faces[d];
        const auto& lo = faces[d - 1];
        SparseIntMatrix m(hi.size(), lo.size());
        for (std::size_t r = 0; r < hi.size(); ++r) {
            Facet sub(d);
            for (std::size_t drop = 0; drop <= d; ++drop) {
                std::size_t w = 0;
                for (std::size_t v = 0; v <= d; ++v)
                    if (v != drop) sub[w++] = hi[r][v];
                const auto col = static_cast<std::size_t>(std::lower_bound(lo.begin(), lo.end(), sub) - lo.begin());
                m.entries[r][col] = drop % 2 == 0 ? 1 : -1;
            }
        }
        const SmithSummary s = smith_summary(std::move(m));
        rank_of[d] = s.rank;
        torsion_of[d] = s.torsion;
    }

    HomologyResult out;
    for (std::size_t d = 0; d < top; ++d) out.face_counts.push_back(static_cast<std::int64_t>(faces[d].size()));
    for (std::size_t d = 0; d + 1 < top; ++d) {
        HomologyGroup g;
        g.rank = static_cast<std::int64_t>(faces[d].size()) - static_cast<std::int64_t>(rank_of[d]) -
                 static_cast<std::int64_t>(rank_of[d + 1]);
        g.torsion = torsion_of[d + 1];
        out.groups.push_back(std::move(g));
    }
    return out;
}

std::vector<std::int64_t> face_counts(const SimplicialComplex& x, std::size_t face_cap) {
    const auto faces = enumerate_faces(x, static_cast<std::size_t>(x.dimension()) + 1, face_cap);
    std::vector<std::int64_t> out;
    for (const auto& f : faces) out.push_back(static_cast<std::int64_t>(f.size()));
    return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& x, std::size_t face_cap) {
    std::int64_t chi = 0;
    const auto counts = face_counts(x, face_cap);
    for (std::size_t d = 0; d < counts.size(); ++d) chi += d % 2 == 0 ? counts[d] : -counts[d];
    return chi;
}

Report verify_complex_action(const QuotientComplex& x, const FiniteAbelianGroup& group,
                             const std::vector<std::vector<int>>& point_perm) {
    Report report;
    const auto n = static_cast<std::size_t>(x.complex.num_vertices());
    const auto order = static_cast<std::size_t>(group.order());
    if (point_perm.size() != order) {
        report.fail("shape", "need one vertex permutation per group element");
        return report;
    }
    for (std::size_t g = 0; g < order; ++g) {
        std::vector<int> sorted = point_perm[g];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t v = 0; v < sorted.size() || v < n; ++v)
            if (sorted.size() != n || sorted[v] != static_cast<int>(v)) {
                report.fail("bijection", "element " + group.element_name(group.element_at(static_cast<std::int64_t>(g))) +
                                             " does not permute the vertices");
                return report;
            }
    }

    std::set<Facet> pos, neg;
    for (std::size_t l = 0; l < x.positive.size(); ++l) pos.insert(x.positive_facet(static_cast<int>(l)));
    for (std::size_t p = 0; p < x.negative.size(); ++p) neg.insert(x.negative_facet(static_cast<int>(p)));

    auto image = [&](std::size_t g, const Facet& f) {
        Facet out;
        for (int v : f) out.push_back(point_perm[g][static_cast<std::size_t>(v)]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (std::size_t g = 0; g < order; ++g) {
        const std::string name = group.element_name(group.element_at(static_cast<std::int64_t>(g)));
        for (const auto& [family, label] : {std::pair{&pos, "positive"}, std::pair{&neg, "negative"}})
            for (const auto& f : *family)
                if (!family->contains(image(g, f))) {
                    report.fail(std::string(label) + "-facets",
                                "element " + name + " maps a " + label + " facet outside its family");
                    return report;
                }
        const bool identity = g == 0;
        for (std::size_t v = 0; v < n; ++v) {
            const bool fixed = point_perm[g][v] == static_cast<int>(v);
            if (identity && !fixed) {
                report.fail("identity", "the zero element moves vertex " + x.complex.vertex_names()[v]);
                return report;
            }
            if (!identity && fixed) {
                report.fail("free", "element " + name + " fixes vertex " + x.complex.vertex_names()[v]);
                return report;
            }
        }
    }

    for (std::size_t i = 0; i < group.rank(); ++i) {
        GroupElement u = group.zero();
        u[i] = 1;
        const auto ui = static_cast<std::size_t>(group.index_of(u));
        for (std::size_t h = 0; h < order; ++h) {
            const auto sum = static_cast<std::size_t>(
                group.index_of(group.add(u, group.element_at(static_cast<std::int64_t>(h)))));
            for (std::size_t v = 0; v < n; ++v)
                if (point_perm[sum][v] != point_perm[ui][static_cast<std::size_t>(point_perm[h][v])]) {
                    report.fail("homomorphism", "action of " + group.element_name(u) + " + " +
                                                    group.element_name(group.element_at(static_cast<std::int64_t>(h))) +
                                                    " is not the composite");
                    return report;
                }
        }
    }
    return report;
}

}  // namespace configcomplex
