#pragma once

/**
 * @file json_io.hpp
 * @brief Canonical JSON documents for surfaces, twist classes and partner
 * classifications.
 *
 * nlohmann::json objects keep keys sorted, so a dump of the same value is
 * byte-identical.  Rationals are "a/b" strings, points are "a/b" or "inf".
 * Every reader re-validates through the ordinary constructors.
 */

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fmpartners/catalog.hpp"
#include "fmpartners/error.hpp"
#include "fmpartners/fm_partners.hpp"
#include "fmpartners/rigidity.hpp"
#include "fmpartners/surface_model.hpp"
#include "fmpartners/weil_chatelet.hpp"

namespace fmp {

using json = nlohmann::json;

namespace detail {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace detail

inline json fiber_entry_to_json(const BasePoint& point, const KodairaFiber& fiber) {
    return {{"point", point.to_string()}, {"kind", fiber.kind_symbol()}, {"multiplicity", fiber.multiplicity()}};
}

inline json config_to_json(const MarkedConfig& config) {
    json fibers = json::array();
    for (const auto& [point, fiber] : config) fibers.push_back(fiber_entry_to_json(point, fiber));
    return fibers;
}

inline MarkedConfig config_from_json(const json& fibers) {
    if (!fibers.is_array()) throw ParseError("'fibers' must be an array");
    std::vector<MarkedConfig::Entry> entries;
    for (const auto& f : fibers) {
        auto point = BasePoint::parse(detail::field<std::string>(f, "point"));
        auto multiplicity = detail::field<std::int64_t>(f, "multiplicity");
        entries.emplace_back(std::move(point), KodairaFiber::parse(detail::field<std::string>(f, "kind"), multiplicity));
    }
    return MarkedConfig(std::move(entries));
}

inline json surface_to_json(const EllipticSurface& s) {
    return {{"name", s.name()}, {"has_section", s.has_section()}, {"fibers", config_to_json(s.config())}};
}

inline EllipticSurface surface_from_json(const json& j) {
    return EllipticSurface(detail::field<std::string>(j, "name"), config_from_json(j.contains("fibers") ? j["fibers"] : json()),
                           detail::field<bool>(j, "has_section"));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

inline json invariants_to_json(const EllipticSurface& s) {
    json j = {
        {"euler_number", euler_number(s)},
        {"chi", chi(s)},
        {"canonical_degree", format_rational(canonical_degree(s))},
        {"kodaira_dimension", to_string(kodaira_dimension(s))},
        {"rational", is_rational(s)},
    };
    j["lambda"] = s.known_lambda() ? json(*s.known_lambda()) : json(nullptr);
    return j;
}

inline json datum_to_json(const TwistDatum& d) {
    if (const auto* pair = std::get_if<QZPair>(&d)) return json::array({pair->first.to_string(), pair->second.to_string()});
    return std::get<QZ>(d).to_string();
}

inline TwistDatum datum_from_json(const json& j) {
    try {
        if (j.is_array()) {
            if (j.size() != 2) throw ParseError("a (Q/Z)^2 datum has two components");
            return QZPair{QZ::parse(j[0].get<std::string>()), QZ::parse(j[1].get<std::string>())};
        }
        return QZ::parse(j.get<std::string>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("datum: ") + e.what());
    }
}

inline json wc_to_json(const WCElement& xi) {
    json support = json::array();
    for (const auto& [point, datum] : xi.support()) {
        support.push_back({{"point", point.to_string()}, {"datum", datum_to_json(datum)}});
    }
    return {{"base", xi.base().name()}, {"support", support}};
}

inline WCElement wc_from_json(const json& j, const EllipticSurface& base) {
    auto base_name = detail::field<std::string>(j, "base");
    if (base_name != base.name()) {
        throw BaseMismatchError("document refers to base '" + base_name + "', not '" + base.name() + "'");
    }
    if (!j["support"].is_array()) throw ParseError("'support' must be an array");
    std::vector<std::pair<BasePoint, TwistDatum>> assignments;
    for (const auto& entry : j["support"]) {
        if (!entry.contains("datum")) throw ParseError("missing field 'datum'");
        assignments.emplace_back(BasePoint::parse(detail::field<std::string>(entry, "point")),
                                 datum_from_json(entry["datum"]));
    }
    return wc_make(base, assignments);
}

inline json classification_to_json(const PartnerClassification& c) {
    return {
        {"lambda", c.lambda},
        {"index_count", c.index_count},
        {"mode", to_string(c.mode)},
        {"aut_bound", c.aut_bound},
        {"classes", c.classes},
        {"M_min", c.certified_lower_bound},
    };
}

inline json report_to_json(const MainTheoremReport& r) {
    json j = classification_to_json(r.classification);
    j["p"] = r.p;
    j["N"] = r.n;
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline json rigidity_to_json(const RigidityResult& r) {
    json maps = json::array();
    for (const auto& g : r.symmetries) {
        maps.push_back({{"a", g.a().str()}, {"b", g.b().str()}, {"c", g.c().str()}, {"d", g.d().str()}});
    }
    return {{"rigid", r.rigid}, {"finite", r.finite}, {"symmetry_count", r.symmetries.size()}, {"symmetries", maps}};
}

inline json catalog_entry_to_json(const CatalogEntry& e) {
    return {
        {"name", e.name},
        {"provenance", to_string(e.provenance)},
        {"has_section", true},
        {"fibers", config_to_json(e.config)},
        {"euler_number", euler_number(e.config)},
        {"valid", validate_entry(e)},
        {"rigid", rigidity_check(e.config).rigid},
    };
}

}  // namespace fmp
