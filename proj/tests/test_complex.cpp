#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "configcomplex/complex.hpp"
#include "configcomplex/constructions.hpp"
#include "configcomplex/lattice.hpp"
#include "oracles.hpp"

using namespace configcomplex;

namespace {

ColoredConfiguration fano() { return oracle::cyclic_plane(7, {0, 1, 3}); }

ColoredConfiguration singer_config(std::int64_t q) {
    return config_from_difference_set(singer_difference_set(q)).config;
}

std::set<Facet> translates(std::int64_t n, std::vector<std::int64_t> base) {
    std::set<Facet> out;
    for (std::int64_t t = 0; t < n; ++t) {
        Facet f;
        for (auto b : base) f.push_back(static_cast<int>(oracle::mod(b + t, n)));
        std::sort(f.begin(), f.end());
        out.insert(f);
    }
    return out;
}

// Faces of every dimension by brute-force subset expansion.
std::vector<std::int64_t> brute_face_counts(const SimplicialComplex& x) {
    std::set<Facet> faces;
    for (const auto& f : x.facets())
        for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
            Facet s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            faces.insert(s);
        }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(x.dimension()) + 1, 0);
    for (const auto& s : faces) ++counts[s.size() - 1];
    return counts;
}

std::vector<std::vector<int>> cyclic_perms(int n) {
    std::vector<std::vector<int>> out;
    for (int g = 0; g < n; ++g) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(p)] = (p + g) % n;
        out.push_back(perm);
    }
    return out;
}

}  // namespace

TEST_CASE("simplicial complex construction") {
    const SimplicialComplex t({"a", "b", "c"}, {{2, 1, 0}, {0, 1, 2}});
    CHECK(t.facets() == std::vector<Facet>{{0, 1, 2}});
    CHECK(t.dimension() == 2);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b", "c"}, {{0, 1, 2}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b", "c"}, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 0}, {1}}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex({"a"}, {{}}), InvalidInput);
}

TEST_CASE("the Fano quotient") {
    const auto x = quotient_complex(fano());
    CHECK_FALSE(x.degenerate);
    CHECK(x.complex.num_vertices() == 7);
    CHECK(x.complex.facets().size() == 14);
    std::set<Facet> pos, neg;
    for (int l = 0; l < 7; ++l) pos.insert(x.positive_facet(l));
    for (int p = 0; p < 7; ++p) neg.insert(x.negative_facet(p));
    CHECK(pos == translates(7, {0, 1, 3}));
    CHECK(neg == translates(7, {0, 4, 6}));
    CHECK(x.positive_facet(0) == Facet{0, 1, 3});
    // negative[p][i-1] = phi_3(phi_i(p)) = p - a_i + 3.
    CHECK(x.negative[0] == std::vector<int>{3, 2, 0});
}

TEST_CASE("the hexagon quotient is degenerate") {
    const auto x = quotient_complex(oracle::cycle_config(3));
    CHECK(x.degenerate);
    CHECK(x.coincidences.size() == 3);
    CHECK(x.complex.facets() == std::vector<Facet>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(x.positive.size() == 3);
    CHECK(x.negative.size() == 3);
    const auto h = homology(x.complex, 1);
    CHECK(h.groups[0] == HomologyGroup{1, {}});
    CHECK(h.groups[1] == HomologyGroup{1, {}});
}

TEST_CASE("facet counts") {
    const auto gf3 = quotient_complex(oracle::affine_prime(3));
    CHECK(gf3.complex.num_vertices() == 9);
    CHECK(gf3.complex.facets().size() == 18);
    for (const auto& c : {fano(), singer_config(3), singer_config(4), oracle::affine_prime(5)}) {
        const auto x = quotient_complex(c);
        CHECK(x.complex.facets().size() == static_cast<std::size_t>(2 * c.num_points()));
        for (const auto& f : x.complex.facets()) CHECK(static_cast<int>(f.size()) == c.k());
    }
}

TEST_CASE("reference color independence") {
    CHECK(reference_color_independence(fano()));
    CHECK(reference_color_independence(oracle::cycle_config(4)));
    CHECK(reference_color_independence(config_from_semifield(semifield_from_field(4))));
    CHECK(reference_color_independence(singer_config(4)));
    const auto a = quotient_complex(fano(), 1).complex.facets();
    const auto b = quotient_complex(fano(), 3).complex.facets();
    CHECK(a == b);
}

TEST_CASE("cross check with the lattice quotient") {
    CHECK(cross_check_with_lattice(fano()));
    CHECK(cross_check_with_lattice(oracle::affine_prime(3)));
    CHECK(cross_check_with_lattice(singer_config(3)));
    CHECK(cross_check_with_lattice(singer_config(5)));
    CHECK(cross_check_with_lattice(config_from_semifield(semifield_from_field(4))));
    CHECK(cross_check_with_lattice(oracle::cycle_config(5)));
}

TEST_CASE("neighborliness") {
    CHECK(is_two_neighborly(quotient_complex(fano()).complex));
    CHECK(is_two_neighborly(quotient_complex(singer_config(3)).complex));
    CHECK_FALSE(is_two_neighborly(quotient_complex(oracle::affine_prime(3)).complex));
    CHECK(is_two_neighborly(SimplicialComplex({"a", "b", "c", "d"}, {{0, 1, 2, 3}})));
}

TEST_CASE("faces of dimension two lie in one facet") {
    for (const auto& c : {fano(), singer_config(3), singer_config(4), oracle::affine_prime(3)})
        CHECK(faces_have_unique_facets(quotient_complex(c).complex));
    // Two tetrahedra glued along a triangle.
    CHECK_FALSE(faces_have_unique_facets(SimplicialComplex({"a", "b", "c", "d", "e"}, {{0, 1, 2, 3}, {0, 1, 2, 4}})));
}

TEST_CASE("facet families reproduce the configuration and its dual") {
    for (const auto& c : {fano(), singer_config(3), oracle::affine_prime(3), oracle::affine_prime(5)}) {
        const auto x = quotient_complex(c);
        const auto pos = facet_family(x, FacetSign::positive);
        const auto neg = facet_family(x, FacetSign::negative);
        CHECK(validate_colored_configuration(pos).ok());
        CHECK(validate_colored_configuration(neg).ok());
        CHECK(is_isomorphic(pos, c).has_value());
        CHECK(is_isomorphic(neg, dual(c)).has_value());
    }
}

TEST_CASE("homology examples") {
    const auto fx = homology(quotient_complex(fano()).complex, 2);
    CHECK(fx.groups[0] == HomologyGroup{1, {}});
    CHECK(fx.groups[1] == HomologyGroup{2, {}});
    CHECK(fx.groups[2] == HomologyGroup{1, {}});
    CHECK(fx.groups[1].to_string() == "Z^2");
    CHECK(fx.face_counts == std::vector<std::int64_t>{7, 21, 14, 0});

    const SimplicialComplex triangle({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    const auto th = homology(triangle, 1);
    CHECK(th.groups[0] == HomologyGroup{1, {}});
    CHECK(th.groups[1] == HomologyGroup{1, {}});

    const auto s3 = homology(quotient_complex(singer_config(3)).complex, 1);
    CHECK(s3.groups[1] == HomologyGroup{3, {}});

    // Projective plane as the 6-vertex quotient of the icosahedron: H_1 = Z_2.
    const SimplicialComplex rp2({"1", "2", "3", "4", "5", "6"},
                                {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                 {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    const auto rh = homology(rp2, 2);
    CHECK(rh.groups[0] == HomologyGroup{1, {}});
    CHECK(rh.groups[1] == HomologyGroup{0, {2}});
    CHECK(rh.groups[2] == HomologyGroup{0, {}});
    CHECK(rh.groups[1].to_string() == "Z_2");
    CHECK(rh.groups[2].to_string() == "0");

    // Two disjoint edges.
    const auto two = homology(SimplicialComplex({"a", "b", "c", "d"}, {{0, 1}, {2, 3}}), 1);
    CHECK(two.groups[0].rank == 2);
}

TEST_CASE("first homology of planar quotients is free of rank k") {
    for (std::int64_t q : {2, 3, 4, 5}) {
        const auto h = homology(quotient_complex(singer_config(q)).complex, 1);
        CHECK(h.groups[0] == HomologyGroup{1, {}});
        CHECK(h.groups[1] == HomologyGroup{q, {}});
    }
    CHECK(homology(quotient_complex(oracle::affine_prime(3)).complex, 1).groups[1] == HomologyGroup{2, {}});
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(quotient_complex(fano()).complex) == 0);
    CHECK(euler_characteristic(SimplicialComplex({"a", "b", "c"}, {{0, 1, 2}})) == 1);
    for (const auto& c : {singer_config(3), singer_config(4), oracle::affine_prime(3)}) {
        const auto x = quotient_complex(c).complex;
        CHECK(face_counts(x) == brute_face_counts(x));
        const auto h = homology(x, x.dimension());
        std::int64_t chi = 0;
        for (std::size_t d = 0; d < h.groups.size(); ++d) chi += (d % 2 ? -1 : 1) * h.groups[d].rank;
        CHECK(chi == euler_characteristic(x));
    }
}

TEST_CASE("face cap") {
    const auto x = quotient_complex(singer_config(4)).complex;
    CHECK_THROWS_AS(homology(x, 2, 50), FaceCapExceeded);
    CHECK_THROWS_AS(face_counts(x, 10), FaceCapExceeded);
}

TEST_CASE("group actions on the quotient") {
    const auto fx = quotient_complex(fano());
    CHECK(verify_complex_action(fx, FiniteAbelianGroup::cyclic(7), cyclic_perms(7)).ok());
    CHECK(verify_complex_action(fx, FiniteAbelianGroup{}, {{0, 1, 2, 3, 4, 5, 6}}).ok());

    const auto s3 = singer_config(3);
    CHECK(verify_complex_action(quotient_complex(s3), FiniteAbelianGroup::cyclic(13), cyclic_perms(13)).ok());

    // Negation maps positive facets to negative ones.
    std::vector<std::vector<int>> flip{{0, 1, 2, 3, 4, 5, 6}, {0, 6, 5, 4, 3, 2, 1}};
    CHECK_FALSE(verify_complex_action(fx, FiniteAbelianGroup::cyclic(2), flip).ok());

    // The translation action from the stabilizer works as well.
    const auto gf3 = oracle::affine_prime(3);
    const auto act = LatticeAction::build(gf3);
    const auto t = translation_action(act, stabilizer_code(act));
    CHECK(verify_complex_action(quotient_complex(gf3), t.group, t.point_perm).ok());
}
