#pragma once

// Command-line front end.  `run` is the whole program minus process I/O, so
// tests drive it in-process; tools/fmpartners.cpp is a thin wrapper.
//
// Exit status: 0 success, 1 library error, 2 usage error.  Errors are always
// a JSON object {"detail": ..., "error": code} on stdout.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fmpartners/catalog.hpp"
#include "fmpartners/error.hpp"
#include "fmpartners/fm_partners.hpp"
#include "fmpartners/json_io.hpp"
#include "fmpartners/rigidity.hpp"
#include "fmpartners/surface_model.hpp"
#include "fmpartners/weil_chatelet.hpp"

namespace fmp::cli {

struct CommandResult {
    int status = 0;
    std::string out;
};

namespace detail {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string base = kDefaultBase;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> i;
    int aut_bound = 6;
    std::string mode = "bound";
    std::optional<std::string> name;
    bool json = false;
};

inline std::string error_document(const std::string& code, const std::string& detail) {
    return json{{"error", code}, {"detail", detail}}.dump() + "\n";
}

inline std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width + 2)) << k << v << "\n";
    return os.str();
}

inline std::string fibers_summary(const MarkedConfig& config) {
    std::string s;
    for (const auto& [point, fiber] : config) {
        if (!s.empty()) s += ", ";
        s += fiber.to_string() + " @ " + point.to_string();
    }
    return s.empty() ? "(none)" : s;
}

inline std::vector<std::pair<std::string, std::string>> invariant_rows(const EllipticSurface& s) {
    return {
        {"name", s.name()},
        {"fibers", fibers_summary(s.config())},
        {"has_section", s.has_section() ? "true" : "false"},
        {"euler_number", std::to_string(euler_number(s))},
        {"chi", std::to_string(chi(s))},
        {"canonical_degree", format_rational(canonical_degree(s))},
        {"kodaira_dimension", to_string(kodaira_dimension(s))},
        {"rational", is_rational(s) ? "true" : "false"},
        {"lambda", s.known_lambda() ? std::to_string(*s.known_lambda()) : "unknown"},
    };
}

inline json surface_document(const EllipticSurface& s) {
    json j = surface_to_json(s);
    j.update(invariants_to_json(s));
    return j;
}

inline std::string classes_text(const std::vector<std::vector<std::int64_t>>& classes) {
    std::string s;
    for (const auto& c : classes) {
        if (!s.empty()) s += " ";
        s += "{";
        for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
        s += "}";
    }
    return s;
}

/// Catalog name first, then a JSON file in the surface schema.
inline EllipticSurface load_surface(const std::string& base) {
    const auto& list = catalog_list();
    for (const auto& e : list) {
        if (e.name == base) return e.surface();
    }
    return surface_from_json(read_json_file(base));
}

inline EllipticSurface load_twist_base(const std::string& base) {
    EllipticSurface b = load_surface(base);
    if (!b.has_section() || !validate_entry(b.config())) {
        throw InvalidConfigError("base '" + b.name() + "' must have a section, no multiple fibers and Euler number 12");
    }
    return b;
}

inline void require_base_exists(const Options& o) {
    for (const auto& e : catalog_list()) {
        if (e.name == o.base) return;
    }
    if (!std::filesystem::exists(o.base)) {
        throw UsageError("--base '" + o.base + "' is neither a catalog entry nor an existing file");
    }
}

inline void require_prime_p(const Options& o) {
    if (!o.p) throw UsageError("--p is required");
    if (!is_prime(*o.p)) throw UsageError("--p " + std::to_string(*o.p) + " is not prime");
}

inline void require_index(const Options& o) {
    if (o.i && *o.i != 0 && std::gcd(*o.i, *o.p) != 1) {
        throw UsageError("--i " + std::to_string(*o.i) + " is not coprime to --p " + std::to_string(*o.p));
    }
}

inline TwistedSurface build(const Options& o) {
    TwistedSurface s = make_s_p(load_twist_base(o.base), *o.p);
    return o.i ? relative_jacobian_power(s, *o.i) : s;
}

inline std::string cmd_construct(const Options& o) {
    TwistedSurface t = build(o);
    if (o.json) {
        json j = surface_document(t.surface);
        j["twist"] = wc_to_json(t.xi);
        return j.dump(2) + "\n";
    }
    auto rows = invariant_rows(t.surface);
    rows.emplace_back("twist_base", t.base().name());
    rows.emplace_back("twist_order", std::to_string(wc_order(t.xi)));
    return table(rows);
}

inline std::string cmd_invariants(const Options& o) {
    EllipticSurface s = o.p ? build(o).surface : load_surface(o.base);
    if (o.json) return invariants_to_json(s).dump(2) + "\n";
    return table(invariant_rows(s));
}

inline std::string cmd_partners(const Options& o) {
    TwistedSurface s = make_s_p(load_twist_base(o.base), *o.p);
    auto partners = enumerate_partners(s);
    PartnerIndexSet index_set(lambda(s.surface));
    std::vector<std::int64_t> indices = index_set.indices.empty() ? std::vector<std::int64_t>{0} : index_set.indices;
    if (o.json) {
        json list = json::array();
        for (std::size_t k = 0; k < partners.size(); ++k) {
            list.push_back({{"b", indices[k]}, {"surface", surface_document(partners[k].surface)}});
        }
        return json{{"surface", s.surface.name()}, {"lambda", lambda(s.surface)}, {"partners", list}}.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "FM partners of " << s.surface.name() << " (lambda = " << lambda(s.surface) << ")\n";
    os << std::left << std::setw(6) << "b" << std::setw(22) << "surface" << std::setw(5) << "e" << std::setw(8) << "K^2"
       << std::setw(7) << "kappa" << std::setw(10) << "rational" << "multiple fibers\n";
    for (std::size_t k = 0; k < partners.size(); ++k) {
        const auto& t = partners[k].surface;
        std::string multiple;
        for (const auto& [point, fiber] : t.config()) {
            if (fiber.is_multiple()) multiple += (multiple.empty() ? "" : ", ") + fiber.to_string() + " @ " + point.to_string();
        }
        os << std::setw(6) << indices[k] << std::setw(22) << t.name() << std::setw(5) << euler_number(t) << std::setw(8)
           << format_rational(canonical_degree(t)) << std::setw(7) << to_string(kodaira_dimension(t)) << std::setw(10)
           << (is_rational(t) ? "true" : "false") << (multiple.empty() ? "-" : multiple) << "\n";
    }
    return os.str();
}

inline std::string cmd_classify(const Options& o) {
    TwistedSurface s = make_s_p(load_twist_base(o.base), *o.p);
    auto mode = o.mode == "inversion" ? ClassificationMode::InversionOrbits : ClassificationMode::SizeBound;
    PartnerClassification c = classify_partners(s, mode, AutBound(o.aut_bound));
    if (o.json) {
        json j = classification_to_json(c);
        j["p"] = *o.p;
        return j.dump(2) + "\n";
    }
    return table({{"surface", s.surface.name()},
                  {"lambda", std::to_string(c.lambda)},
                  {"index_count", std::to_string(c.index_count)},
                  {"mode", to_string(c.mode)},
                  {"aut_bound", std::to_string(c.aut_bound)},
                  {"class_count", std::to_string(c.classes.size())},
                  {"classes", classes_text(c.classes)},
                  {"M_min", std::to_string(c.certified_lower_bound)}});
}

inline std::string cmd_rigidity(const Options& o) {
    EllipticSurface s = load_surface(o.base);
    RigidityResult r = rigidity_check(s.config());
    if (o.json) {
        json j = rigidity_to_json(r);
        j["name"] = s.name();
        return j.dump(2) + "\n";
    }
    std::vector<std::pair<std::string, std::string>> rows{
        {"name", s.name()},
        {"fibers", fibers_summary(s.config())},
        {"rigid", r.rigid ? "true" : "false"},
        {"symmetries", r.finite ? std::to_string(r.symmetries.size()) : "infinite"},
    };
    for (const auto& g : r.symmetries) rows.emplace_back("", g.to_string());
    return table(rows);
}

inline std::string cmd_verify(const Options& o) {
    MainTheoremReport r = verify_main_theorem(load_twist_base(o.base), *o.p, *o.n);
    if (o.json) return report_to_json(r).dump(2) + "\n";
    return table({{"p", std::to_string(r.p)},
                  {"N", std::to_string(r.n)},
                  {"index_count", std::to_string(r.classification.index_count)},
                  {"aut_bound", std::to_string(r.classification.aut_bound)},
                  {"M_min", std::to_string(r.classification.certified_lower_bound)},
                  {"verdict", to_string(r.verdict)}});
}

inline std::string cmd_catalog(const Options& o) {
    if (o.name) {
        const CatalogEntry& e = catalog_get(*o.name);
        if (o.json) return catalog_entry_to_json(e).dump(2) + "\n";
        return table({{"name", e.name},
                      {"provenance", to_string(e.provenance)},
                      {"fibers", fibers_summary(e.config)},
                      {"euler_number", std::to_string(euler_number(e.config))},
                      {"valid", validate_entry(e) ? "true" : "false"},
                      {"rigid", rigidity_check(e.config).rigid ? "true" : "false"}});
    }
    if (o.json) {
        json list = json::array();
        for (const auto& e : catalog_list()) list.push_back(catalog_entry_to_json(e));
        return list.dump(2) + "\n";
    }
    std::ostringstream os;
    os << std::left << std::setw(22) << "name" << std::setw(20) << "provenance" << std::setw(7) << "rigid" << "fibers\n";
    for (const auto& e : catalog_list()) {
        os << std::setw(22) << e.name << std::setw(20) << to_string(e.provenance) << std::setw(7)
           << (rigidity_check(e.config).rigid ? "true" : "false") << fibers_summary(e.config) << "\n";
    }
    return os.str();
}

}  // namespace detail

inline CommandResult run(const std::vector<std::string>& args) {
    using namespace detail;
    Options o;
    CLI::App app{"Twisted rational elliptic surfaces and their Fourier-Mukai partners", "fmpartners"};
    app.require_subcommand(1);

    auto add_base = [&](CLI::App* sub) {
        sub->add_option("--base", o.base, "catalog entry name or surface JSON file")->capture_default_str();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON instead of a table"); };

    auto* construct = app.add_subcommand("construct", "build S(p), or J^i(S(p)) with --i");
    construct->add_option("--p", o.p, "prime order of the twist class")->required();
    construct->add_option("--i", o.i, "index of the relative Jacobian J^i");
    add_base(construct);
    add_json(construct);

    auto* invariants = app.add_subcommand("invariants", "invariants of the base, or of S(p) / J^i(S(p))");
    invariants->add_option("--p", o.p, "prime order of the twist class");
    invariants->add_option("--i", o.i, "index of the relative Jacobian J^i")->needs(invariants->get_option("--p"));
    add_base(invariants);
    add_json(invariants);

    auto* partners = app.add_subcommand("partners", "enumerate the FM partners J^b(S(p))");
    partners->add_option("--p", o.p, "prime order of the twist class")->required();
    add_base(partners);
    add_json(partners);

    auto* classify = app.add_subcommand("classify", "partition the partner indices into candidate classes");
    classify->add_option("--p", o.p, "prime order of the twist class")->required();
    classify->add_option("--mode", o.mode, "inversion or bound")
        ->check(CLI::IsMember({"inversion", "bound"}))
        ->capture_default_str();
    classify->add_option("--aut-bound", o.aut_bound, "automorphism group bound")
        ->check(CLI::IsMember({2, 4, 6}))
        ->capture_default_str();
    add_base(classify);
    add_json(classify);

    auto* rigidity = app.add_subcommand("rigidity", "Möbius symmetries of the base configuration");
    add_base(rigidity);
    add_json(rigidity);

    auto* verify = app.add_subcommand("verify", "certify N non-isomorphic FM partners of S(p)");
    verify->add_option("--p", o.p, "prime order of the twist class")->required();
    verify->add_option("--n", o.n, "target number of classes")->required();
    add_base(verify);
    add_json(verify);

    auto* catalog = app.add_subcommand("catalog", "list built-in base configurations");
    catalog->add_option("--name", o.name, "show a single entry");
    add_json(catalog);

    std::vector<const char*> argv{"fmpartners"};
    for (const auto& a : args) argv.push_back(a.c_str());

    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        return {2, error_document("usage", e.what())};
    }

    try {
        if (!catalog->parsed()) require_base_exists(o);
        if (o.p) require_prime_p(o);
        require_index(o);
        if (verify->parsed() && *o.n < 1) throw UsageError("--n must be positive");

        if (construct->parsed()) result.out = cmd_construct(o);
        else if (invariants->parsed()) result.out = cmd_invariants(o);
        else if (partners->parsed()) result.out = cmd_partners(o);
        else if (classify->parsed()) result.out = cmd_classify(o);
        else if (rigidity->parsed()) result.out = cmd_rigidity(o);
        else if (verify->parsed()) result.out = cmd_verify(o);
        else result.out = cmd_catalog(o);
    } catch (const UsageError& e) {
        return {2, error_document("usage", e.what())};
    } catch (const Error& e) {
        return {1, error_document(e.code(), e.what())};
    } catch (const std::exception& e) {
        return {1, error_document("internal", e.what())};
    }
    return result;
}

}  // namespace fmp::cli
