#pragma once

// Built-in singular-fiber configurations of rational elliptic surfaces with
// a section.  Only the cited entry is known to be realizable; the rest
// pass the necessary Euler-sum check.  Coordinates are our own choice.

#include <algorithm>
#include <string>
#include <vector>

#include "fmpartners/error.hpp"
#include "fmpartners/surface_model.hpp"

namespace fmp {

enum class Provenance { Cited, EulerCheckedOnly };

inline std::string to_string(Provenance p) {
    return p == Provenance::Cited ? "cited" : "euler-checked-only";
}

struct CatalogEntry {
    std::string name;
    MarkedConfig config;
    Provenance provenance = Provenance::EulerCheckedOnly;

    EllipticSurface surface() const { return EllipticSurface(name, config, true); }
};

inline constexpr const char* kDefaultBase = "persson-III*-I2-I1";

/// Necessary conditions only: Euler sum 12 and no multiple fibers.
inline bool validate_entry(const MarkedConfig& config) {
    if (euler_number(config) != 12) return false;
    return std::none_of(config.begin(), config.end(), [](const auto& e) { return e.second.is_multiple(); });
}
inline bool validate_entry(const CatalogEntry& entry) { return validate_entry(entry.config); }

inline const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = [] {
        using F = KodairaFiber;
        const BasePoint inf = BasePoint::infinity();
        std::vector<MarkedConfig::Entry> twelve;
        for (std::int64_t k = 0; k <= 10; ++k) twelve.emplace_back(BasePoint(k), F::i_n(1));
        twelve.emplace_back(inf, F::i_n(1));

        std::vector<CatalogEntry> list{
            {kDefaultBase, MarkedConfig{{0, F::iii_star()}, {1, F::i_n(2)}, {inf, F::i_n(1)}}, Provenance::Cited},
            {"II*-I1-I1", MarkedConfig{{0, F::ii_star()}, {1, F::i_n(1)}, {inf, F::i_n(1)}}, Provenance::EulerCheckedOnly},
            {"II*-II", MarkedConfig{{0, F::ii_star()}, {inf, F::ii()}}, Provenance::EulerCheckedOnly},
            {"IV*-I3-I1", MarkedConfig{{0, F::iv_star()}, {1, F::i_n(3)}, {inf, F::i_n(1)}}, Provenance::EulerCheckedOnly},
            {"I*4-I1-I1", MarkedConfig{{0, F::i_star(4)}, {1, F::i_n(1)}, {inf, F::i_n(1)}}, Provenance::EulerCheckedOnly},
            {"I9-I1-I1-I1", MarkedConfig{{0, F::i_n(9)}, {1, F::i_n(1)}, {-1, F::i_n(1)}, {inf, F::i_n(1)}},
             Provenance::EulerCheckedOnly},
            {"twelve-I1", MarkedConfig(std::move(twelve)), Provenance::EulerCheckedOnly},
        };
        for (const auto& e : list) {
            if (!validate_entry(e)) throw InvalidConfigError("catalog entry '" + e.name + "' fails validation");
        }
        return list;
    }();
    return entries;
}

inline const CatalogEntry& catalog_get(const std::string& name) {
    const auto& list = catalog_list();
    auto it = std::find_if(list.begin(), list.end(), [&](const CatalogEntry& e) { return e.name == name; });
    if (it == list.end()) throw UnknownEntryError("no catalog entry named '" + name + "'");
    return *it;
}

}  // namespace fmp
