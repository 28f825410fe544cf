#pragma once

/**
 * @file rigidity.hpp
 * @brief Möbius symmetries of a typed configuration of points on P^1.
 *
 * PGL_2 acts sharply 3-transitively on P^1, so a symmetry of a configuration
 * with at least three marked points is pinned down by where it sends three
 * fixed marked points.  We fix the first three points and try every
 * type-compatible ordered image triple.
 */

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "fmpartners/surface_model.hpp"

namespace fmp {

/// z -> (a z + b) / (c z + d), scaled to coprime integer entries with the
/// first nonzero entry positive.
class MobiusMap {
public:
    MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        if (m_[0] * m_[3] - m_[1] * m_[2] == 0) throw InvalidArgumentError("singular Möbius matrix");
        BigInt g = 0;
        for (const auto& x : m_) g = boost::multiprecision::gcd(g, x);
        auto lead = std::find_if(m_.begin(), m_.end(), [](const BigInt& x) { return x != 0; });
        if (*lead < 0) g = -g;
        for (auto& x : m_) x /= g;
    }

    static MobiusMap identity() { return {1, 0, 0, 1}; }

    const BigInt& a() const { return m_[0]; }
    const BigInt& b() const { return m_[1]; }
    const BigInt& c() const { return m_[2]; }
    const BigInt& d() const { return m_[3]; }

    BasePoint operator()(const BasePoint& p) const {
        auto [x, y] = p.homogeneous();
        BigInt u = m_[0] * x + m_[1] * y;
        BigInt v = m_[2] * x + m_[3] * y;
        if (v == 0) return BasePoint::infinity();
        return BasePoint(make_rational(std::move(u), std::move(v)));
    }

    bool is_identity() const { return *this == identity(); }

    std::string to_string() const {
        return "z -> (" + m_[0].str() + "*z + " + m_[1].str() + ")/(" + m_[2].str() + "*z + " + m_[3].str() + ")";
    }

    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
    friend bool operator<(const MobiusMap& l, const MobiusMap& r) { return l.m_ < r.m_; }

private:
    std::array<BigInt, 4> m_;
};

struct RigidityResult {
    bool rigid = false;
    /// False when fewer than three points are marked: the stabilizer is then
    /// positive-dimensional and `symmetries` is left empty.
    bool finite = false;
    std::vector<MobiusMap> symmetries;
};

namespace detail {

inline BigInt det2(const std::pair<BigInt, BigInt>& p, const std::pair<BigInt, BigInt>& q) {
    return p.first * q.second - q.first * p.second;
}

/// Matrix of the map sending p1, p2, p3 to 0, 1, infinity.
inline std::array<BigInt, 4> to_standard_frame(const BasePoint& p1, const BasePoint& p2, const BasePoint& p3) {
    auto h1 = p1.homogeneous();
    auto h2 = p2.homogeneous();
    auto h3 = p3.homogeneous();
    BigInt s = det2(h2, h3);
    BigInt t = det2(h2, h1);
    // [x:y] -> [det(p,p1) det(p2,p3) : det(p,p3) det(p2,p1)]
    return {s * h1.second, -s * h1.first, t * h3.second, -t * h3.first};
}

}  // namespace detail

inline RigidityResult rigidity_check(const MarkedConfig& config) {
    const auto& pts = config.entries();
    RigidityResult result;
    if (pts.size() < 3) return result;
    result.finite = true;

    auto src = detail::to_standard_frame(pts[0].first, pts[1].first, pts[2].first);
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (pts[i].second != pts[0].second) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || pts[j].second != pts[1].second) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j || pts[k].second != pts[2].second) continue;
                auto dst = detail::to_standard_frame(pts[i].first, pts[j].first, pts[k].first);
                // g = dst^{-1} * src, with the adjugate standing in for the inverse.
                std::array<BigInt, 4> inv{dst[3], -dst[1], -dst[2], dst[0]};
                MobiusMap g(inv[0] * src[0] + inv[1] * src[2], inv[0] * src[1] + inv[1] * src[3],
                            inv[2] * src[0] + inv[3] * src[2], inv[2] * src[1] + inv[3] * src[3]);
                bool preserves = std::all_of(pts.begin(), pts.end(), [&](const MarkedConfig::Entry& e) {
                    BasePoint image = g(e.first);
                    return config.is_marked(image) && config.fiber_at(image) == e.second;
                });
                if (preserves) result.symmetries.push_back(std::move(g));
            }
        }
    }
    std::sort(result.symmetries.begin(), result.symmetries.end());
    result.rigid = result.symmetries.size() == 1;
    return result;
}

}  // namespace fmp
