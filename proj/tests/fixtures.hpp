#pragma once

#include "fmpartners/catalog.hpp"
#include "fmpartners/weil_chatelet.hpp"

namespace fixtures {

inline fmp::EllipticSurface default_base() { return fmp::catalog_get(fmp::kDefaultBase).surface(); }

/// B twisted at smooth points 2, 3, ... with the given local orders.
inline fmp::TwistedSurface twist_with_orders(const std::vector<std::int64_t>& orders) {
    auto b = default_base();
    std::vector<std::pair<fmp::BasePoint, fmp::TwistDatum>> data;
    std::int64_t point = 2;
    for (auto m : orders) data.emplace_back(fmp::BasePoint(point++), fmp::QZPair{fmp::QZ(1, m), fmp::QZ()});
    return fmp::twist(b, fmp::wc_make(b, data));
}

/// Multiple fibers of multiplicity 2 and 3: kappa = 1.
inline fmp::TwistedSurface dolgachev_2_3() { return twist_with_orders({2, 3}); }

/// Two multiplicity-2 fibers: kappa = 0.
inline fmp::TwistedSurface kappa_zero() { return twist_with_orders({2, 2}); }

}  // namespace fixtures
