#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "configcomplex/constructions.hpp"
#include "configcomplex/correspondence.hpp"
#include "oracles.hpp"

using namespace configcomplex;

namespace {

SidonSet cyclic_sidon(std::int64_t n, std::vector<std::int64_t> elems) {
    SidonSet b{FiniteAbelianGroup::cyclic(n), {}};
    for (auto e : elems) b.elements.push_back({e});
    return b;
}

// {x in A_k : sum x_i b_i = 0 mod n} by brute force over a box.
std::set<oracle::Vec> kernel_in_box(std::int64_t n, const std::vector<std::int64_t>& b, std::int64_t r) {
    std::set<oracle::Vec> out;
    for (const auto& v : oracle::sum_zero_box(b.size() - 1, r)) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < b.size(); ++i) s += v[i] * b[i];
        if (oracle::mod(s, n) == 0) out.insert(v);
    }
    return out;
}

// Is `b` an affine image t + u*a of `a` in Z_n for some unit u?
bool affinely_equivalent(std::int64_t n, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    std::sort(b.begin(), b.end());
    for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        for (std::int64_t t = 0; t < n; ++t) {
            std::vector<std::int64_t> img;
            for (auto x : a) img.push_back(oracle::mod(u * x + t, n));
            std::sort(img.begin(), img.end());
            if (img == b) return true;
        }
    }
    return false;
}

std::vector<std::int64_t> cyclic_values(const SidonSet& b) {
    std::vector<std::int64_t> out;
    for (const auto& e : b.elements) out.push_back(e.at(0));
    return out;
}

std::vector<ColoredConfiguration> constructed() {
    std::vector<ColoredConfiguration> out;
    for (std::int64_t q : {2, 3, 4, 5}) out.push_back(config_from_difference_set(singer_difference_set(q)).config);
    for (std::int64_t q : {2, 3, 4}) out.push_back(config_from_semifield(semifield_from_field(q)));
    out.push_back(oracle::cyclic_plane(7, {0, 1, 3}));
    return out;
}

}  // namespace

TEST_CASE("sidon to code") {
    const auto fano = sidon_to_code(cyclic_sidon(7, {0, 1, 3}));
    CHECK(fano.index() == 7);
    CHECK(code_is_perfect(fano));
    const auto expected = kernel_in_box(7, {0, 1, 3}, 6);
    for (const auto& v : oracle::sum_zero_box(2, 6)) CHECK(fano.contains(v) == expected.contains(v));

    for (std::int64_t n = 3; n <= 9; ++n) {
        const auto l = sidon_to_code(cyclic_sidon(n, {0, 1}));
        CHECK(l.basis() == IntMatrix{{n, -n}});
        CHECK(l.index() == n);
    }

    const auto z8 = sidon_to_code(cyclic_sidon(8, {0, 1, 3}));
    CHECK(z8.index() == 8);
    CHECK(code_is_radius1(z8));
    CHECK_FALSE(code_is_perfect(z8));

    CHECK_THROWS_AS(sidon_to_code(cyclic_sidon(8, {0, 2, 4})), InvalidInput);
}

TEST_CASE("code to sidon") {
    const auto b = code_to_sidon(sidon_to_code(cyclic_sidon(7, {0, 1, 3})));
    CHECK(b.group == FiniteAbelianGroup::cyclic(7));
    CHECK(validate_sidon(b).ok());
    const auto vals = cyclic_values(b);
    CHECK(oracle::planar(7, vals));
    // {0,4,5} is the set of images of e_i - e_3; ours agrees up to an affine map.
    CHECK(affinely_equivalent(7, {0, 4, 5}, vals));

    const auto tri = code_to_sidon(LinearCode::from_generators(IntMatrix{{3, -3}}));
    CHECK(tri.group == FiniteAbelianGroup::cyclic(3));
    const auto tv = cyclic_values(tri);
    CHECK((tv == std::vector<std::int64_t>{0, 1} || tv == std::vector<std::int64_t>{0, 2}));

    CHECK_THROWS_AS(code_to_sidon(LinearCode::from_generators(IntMatrix{{1, -1, 0}, {0, 1, -1}})), InvalidInput);
}

TEST_CASE("sidon round trips on search results") {
    int count = 0;
    for (std::int64_t n = 5; n <= 20; ++n)
        for (std::size_t size = 2; size <= 4; ++size)
            for (const auto& s : search_sidon_sets(FiniteAbelianGroup::cyclic(n), size)) {
                const auto l = sidon_to_code(s);
                CHECK(l.index() == n);
                CHECK(code_is_radius1(l));
                const auto back = code_to_sidon(l);
                CHECK(back.group == FiniteAbelianGroup::cyclic(n));
                CHECK(validate_sidon(back).ok());
                CHECK(sidon_to_code(back) == l);
                CHECK(config_to_code(code_to_config(l)) == l);
                ++count;
            }
    CHECK(count >= 10);

    for (const auto& s : search_sidon_sets(FiniteAbelianGroup({3, 3}), 3)) {
        const auto l = sidon_to_code(s);
        CHECK(l.quotient().group() == FiniteAbelianGroup({3, 3}));
        CHECK(config_to_code(code_to_config(l)) == l);
    }
}

TEST_CASE("eta") {
    const auto fano_code = sidon_to_code(cyclic_sidon(7, {0, 1, 3}));
    const auto fano = code_to_config(fano_code);
    CHECK(fano.num_points() == 7);
    CHECK(validate_colored_configuration(fano).ok());
    CHECK(is_isomorphic(fano, oracle::cyclic_plane(7, {0, 1, 3})).has_value());

    const auto hex = code_to_config(LinearCode::from_generators(IntMatrix{{3, -3}}));
    CHECK(is_isomorphic(hex, oracle::cycle_config(3)).has_value());

    const auto bose = code_to_config(sidon_to_code(cyclic_sidon(8, {0, 1, 3})));
    CHECK(bose.num_points() == 8);
    CHECK(bose.k() == 3);
    CHECK(validate_coloring(bose).ok());
    CHECK(validate_configuration(bose).ok());
    CHECK_FALSE(is_projective_plane(bose));
}

TEST_CASE("theta") {
    CHECK(config_to_code(oracle::cyclic_plane(7, {0, 1, 3})) == sidon_to_code(cyclic_sidon(7, {0, 1, 3})));
    for (int n = 3; n <= 7; ++n)
        CHECK(config_to_code(oracle::cycle_config(n)).basis() == IntMatrix{{n, -n}});

    const auto c = oracle::affine_prime(3);
    auto inc = c.incidences();
    inc.pop_back();
    CHECK_THROWS_AS(config_to_code(ColoredConfiguration(3, c.point_names(), c.line_names(), inc)), InvalidInput);
}

TEST_CASE("configuration round trips") {
    for (const auto& c : constructed()) {
        const auto rt = roundtrip_config(c);
        CHECK(rt.report.ok());
        REQUIRE(rt.isomorphism.has_value());
        CHECK(rt.identity_colors);
        CHECK(is_isomorphism(c, code_to_config(rt.code), *rt.isomorphism));
        CHECK(rt.code == config_to_code(c));
        bool noted = false;
        for (const auto& n : rt.report.notes) noted |= n == "isomorphic (identity color map)";
        CHECK(noted);
    }
}

TEST_CASE("the three representations agree on perfectness") {
    for (const auto& c : constructed()) {
        const auto l = config_to_code(c);
        const auto k = l.k();
        const auto b = code_to_sidon(l);
        const bool plane = is_projective_plane(c);
        CHECK(code_is_perfect(l) == plane);
        CHECK((b.group.order() == static_cast<std::int64_t>(k * k + k + 1)) == plane);
        CHECK(b.elements.size() == k + 1);
    }
}

TEST_CASE("recovering difference sets") {
    const auto fano = recover_difference_set(oracle::cyclic_plane(7, {0, 1, 3}));
    CHECK(fano.group == FiniteAbelianGroup::cyclic(7));
    CHECK(validate_difference_set(fano).ok());
    CHECK(is_isomorphic(config_from_difference_set(fano).config, oracle::cyclic_plane(7, {0, 1, 3})).has_value());

    const auto s3 = recover_difference_set(config_from_difference_set(singer_difference_set(3)).config);
    CHECK(s3.group == FiniteAbelianGroup::cyclic(13));
    CHECK(s3.elements.size() == 4);
    CHECK(validate_difference_set(s3).ok());

    CHECK_THROWS_WITH_AS(recover_difference_set(oracle::affine_prime(3)), doctest::Contains("not a projective plane"),
                         InvalidInput);
}
