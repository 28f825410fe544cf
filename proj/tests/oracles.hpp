#pragma once

// Test-only oracles.  These deliberately avoid the library's code paths:
// Q/Z facts are checked by repeated addition on raw integers, Möbius
// symmetries by solving the 3x4 incidence system for every pair of ordered
// triples.

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Least n >= 1 with n * (num/den) an integer, by repeated addition.
inline std::int64_t brute_order(std::int64_t num, std::int64_t den) {
    std::int64_t acc = 0;
    for (std::int64_t n = 1;; ++n) {
        acc = (acc + num) % den;
        if (acc == 0) return n;
    }
}

/// Projective point [x : y] with integer entries; infinity is [1 : 0].
struct Point {
    BigInt x;
    BigInt y;
    int type;
};

using Matrix = std::array<BigInt, 4>;

inline BigInt det3(const std::array<std::array<BigInt, 4>, 3>& m, int skip) {
    std::array<std::array<BigInt, 3>, 3> s;
    for (int r = 0; r < 3; ++r) {
        int c2 = 0;
        for (int c = 0; c < 4; ++c) {
            if (c == skip) continue;
            s[r][c2++] = m[r][c];
        }
    }
    return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
           s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
}

inline Matrix normalize(Matrix m) {
    BigInt g = 0;
    for (const auto& v : m) g = boost::multiprecision::gcd(g, v);
    for (const auto& v : m) {
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    }
    for (auto& v : m) v /= g;
    return m;
}

inline bool maps_to(const Matrix& g, const Point& z, const Point& w) {
    BigInt u = g[0] * z.x + g[1] * z.y;
    BigInt v = g[2] * z.x + g[3] * z.y;
    return u * w.y - v * w.x == 0;
}

/// All Möbius maps preserving the typed point set, found by trying every
/// pair of type-compatible ordered triples.  Requires at least 3 points.
inline std::set<Matrix> brute_symmetries(const std::vector<Point>& pts) {
    std::set<Matrix> found;
    const std::size_t n = pts.size();
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (i != j && j != k && i != k) triples.push_back({i, j, k});

    for (const auto& src : triples) {
        for (const auto& dst : triples) {
            bool types_ok = true;
            for (int r = 0; r < 3; ++r) types_ok &= pts[src[r]].type == pts[dst[r]].type;
            if (!types_ok) continue;
            // Rows encode (a x + b y) * y' - (c x + d y) * x' = 0.
            std::array<std::array<BigInt, 4>, 3> rows;
            for (int r = 0; r < 3; ++r) {
                const Point& x = pts[src[r]];
                const Point& y = pts[dst[r]];
                rows[r] = {x.x * y.y, x.y * y.y, -x.x * y.x, -x.y * y.x};
            }
            Matrix g{det3(rows, 0), -det3(rows, 1), det3(rows, 2), -det3(rows, 3)};
            if (g[0] * g[3] - g[1] * g[2] == 0) continue;
            bool preserves = true;
            for (const auto& z : pts) {
                bool hit = false;
                for (const auto& w : pts) {
                    if (w.type == z.type && maps_to(g, z, w)) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    preserves = false;
                    break;
                }
            }
            if (preserves) found.insert(normalize(g));
        }
    }
    return found;
}

}  // namespace oracle
