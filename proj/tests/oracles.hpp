#pragma once

// Independent test-side oracles. Nothing here calls into the library except
// for the plain data types it is compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "configcomplex/configuration.hpp"
#include "configcomplex/int_matrix.hpp"

namespace oracle {

using configcomplex::ColoredConfiguration;
using configcomplex::Incidence;
using configcomplex::IntMatrix;
using Vec = std::vector<std::int64_t>;

// Bareiss determinant for small square matrices.
inline std::int64_t det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

// Integer combinations of `rows` with coefficients in [-c, c] that land in
// the box [-r, r]^cols.
inline std::set<Vec> lattice_points_in_box(const IntMatrix& rows, std::int64_t r, std::int64_t c) {
    std::set<Vec> out;
    Vec coeff(rows.rows(), -c);
    while (true) {
        Vec v(rows.cols(), 0);
        for (std::size_t i = 0; i < rows.rows(); ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) v[j] += coeff[i] * rows(i, j);
        if (std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x >= -r && x <= r; })) out.insert(v);
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] > c) coeff[i++] = -c;
        if (i == coeff.size()) break;
    }
    return out;
}

// All sum-zero vectors in [-r, r]^(k+1).
inline std::vector<Vec> sum_zero_box(std::size_t k, std::int64_t r) {
    std::vector<Vec> out;
    Vec v(k + 1, -r);
    while (true) {
        std::int64_t s = 0;
        for (auto x : v) s += x;
        if (s == 0) out.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && ++v[i] > r) v[i++] = -r;
        if (i == v.size()) break;
    }
    return out;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Cyclic plane from a difference set written out by hand: points and lines
// are 0..n-1, p ~ l iff p - l = a_c, colored by the position of a_c.
inline ColoredConfiguration cyclic_plane(std::int64_t n, const std::vector<std::int64_t>& sorted_set) {
    std::vector<std::string> names;
    for (std::int64_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    std::vector<Incidence> inc;
    for (std::int64_t p = 0; p < n; ++p)
        for (std::size_t c = 0; c < sorted_set.size(); ++c)
            inc.push_back({static_cast<int>(p), static_cast<int>(mod(p - sorted_set[c], n)), static_cast<int>(c) + 1});
    return ColoredConfiguration(static_cast<int>(sorted_set.size()), names, names, inc);
}

// The 2n-cycle as a 2-configuration: p_i on l_i (color 1) and l_{i-1} (color 2).
inline ColoredConfiguration cycle_config(int n) {
    std::vector<std::string> p, l;
    for (int i = 0; i < n; ++i) {
        p.push_back("p" + std::to_string(i));
        l.push_back("l" + std::to_string(i));
    }
    std::vector<Incidence> inc;
    for (int i = 0; i < n; ++i) {
        inc.push_back({i, i, 1});
        inc.push_back({i, (i + n - 1) % n, 2});
    }
    return ColoredConfiguration(2, p, l, inc);
}

// Affine plane over Z_p: points (x,y), lines [a,b], y = a*x + b, colored by
// x + a. Names follow the semifield construction.
inline ColoredConfiguration affine_prime(int p) {
    std::vector<std::string> pts, lns;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
            pts.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
            lns.push_back("[" + std::to_string(x) + "," + std::to_string(y) + "]");
        }
    std::vector<Incidence> inc;
    for (int x = 0; x < p; ++x)
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                const int y = (a * x + b) % p;
                inc.push_back({x * p + y, a * p + b, (x + a) % p + 1});
            }
    return ColoredConfiguration(p, pts, lns, inc);
}

// Carry-less product modulo a binary polynomial (bit i = coefficient of x^i).
inline std::int64_t gf2_mul(std::int64_t a, std::int64_t b, std::int64_t modulus, int degree) {
    std::int64_t r = 0;
    for (int i = 0; i < 2 * degree; ++i)
        if ((b >> i) & 1) r ^= a << i;
    for (int i = 2 * degree; i >= degree; --i)
        if ((r >> i) & 1) r ^= modulus << (i - degree);
    return r;
}

// Planarity of a subset of Z_n by counting differences.
inline bool planar(std::int64_t n, const std::vector<std::int64_t>& a) {
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (auto x : a)
        for (auto y : a)
            if (x != y) ++count[static_cast<std::size_t>(mod(x - y, n))];
    for (std::int64_t g = 1; g < n; ++g)
        if (count[static_cast<std::size_t>(g)] != 1) return false;
    return true;
}

// Every pair of points on exactly one line, by direct counting.
inline bool every_pair_on_one_line(const ColoredConfiguration& c) {
    std::map<std::pair<int, int>, int> pairs;
    for (int l = 0; l < c.num_lines(); ++l) {
        std::vector<int> pts;
        for (const auto& i : c.incidences())
            if (i.line == l) pts.push_back(i.point);
        for (int a : pts)
            for (int b : pts)
                if (a < b) ++pairs[{a, b}];
    }
    const auto n = c.num_points();
    if (static_cast<int>(pairs.size()) != n * (n - 1) / 2) return false;
    return std::all_of(pairs.begin(), pairs.end(), [](const auto& kv) { return kv.second == 1; });
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

}  // namespace oracle
