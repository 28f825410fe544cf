#pragma once

// Random typed configurations shared by the rigidity unit test and the
// acceptance suite, plus the conversion into oracle points.

#include <random>
#include <vector>

#include "fmpartners/rigidity.hpp"
#include "oracles.hpp"

namespace rigidity_cases {

/// Point pool closed under several small Möbius maps (z -> -z, 1/z, ...),
/// so symmetric configurations come up often.
inline std::vector<fmp::BasePoint> pool() {
    using fmp::BasePoint;
    return {BasePoint::infinity(), BasePoint(0),     BasePoint(1),     BasePoint(-1),   BasePoint(2),
            BasePoint(-2),         BasePoint(1, 2),  BasePoint(-1, 2), BasePoint(3),    BasePoint(1, 3),
            BasePoint(-3),         BasePoint(-1, 3), BasePoint(3, 2),  BasePoint(2, 3), BasePoint(5, 7)};
}

inline const std::vector<fmp::KodairaFiber>& types() {
    static const std::vector<fmp::KodairaFiber> t{fmp::KodairaFiber::i_n(1), fmp::KodairaFiber::i_n(2),
                                                  fmp::KodairaFiber::iii_star(), fmp::KodairaFiber::ii()};
    return t;
}

/// 3-8 points, 1-4 types.
inline fmp::MarkedConfig random_config(std::mt19937_64& rng) {
    auto pts = pool();
    std::shuffle(pts.begin(), pts.end(), rng);
    std::size_t n = 3 + rng() % 6;
    std::size_t ntypes = 1 + rng() % 4;
    std::vector<fmp::MarkedConfig::Entry> entries;
    for (std::size_t k = 0; k < n; ++k) entries.emplace_back(pts[k], types()[rng() % ntypes]);
    return fmp::MarkedConfig(entries);
}

inline std::vector<oracle::Point> to_oracle(const fmp::MarkedConfig& c) {
    std::vector<oracle::Point> out;
    std::vector<fmp::KodairaFiber> seen;
    for (const auto& [p, f] : c) {
        auto it = std::find(seen.begin(), seen.end(), f);
        if (it == seen.end()) it = seen.insert(seen.end(), f);
        int type = static_cast<int>(it - seen.begin());
        if (p.is_infinity()) {
            out.push_back({1, 0, type});
        } else {
            out.push_back({boost::multiprecision::numerator(p.value()), boost::multiprecision::denominator(p.value()), type});
        }
    }
    return out;
}

/// Compares rigidity_check with the brute-force oracle.
inline bool agrees(const fmp::MarkedConfig& c) {
    auto r = fmp::rigidity_check(c);
    if (c.size() < 3) return !r.rigid && !r.finite;
    auto expected = oracle::brute_symmetries(to_oracle(c));
    std::set<oracle::Matrix> got;
    for (const auto& g : r.symmetries) got.insert({g.a(), g.b(), g.c(), g.d()});
    return got == expected && r.rigid == (expected.size() == 1);
}

}  // namespace rigidity_cases
