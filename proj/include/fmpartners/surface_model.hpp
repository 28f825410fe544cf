#pragma once

/**
 * @file surface_model.hpp
 * @brief Relatively minimal elliptic surfaces over P^1 and their invariants.
 *
 * A surface is described by its marked singular and multiple fibers over
 * exact points of P^1(Q).  Everything else (Euler number, chi(O),
 * canonical degree, Kodaira dimension, rationality) is derived from that
 * data.  lambda, the minimal degree of a multisection, cannot be read off
 * the fibers alone and is carried as provenance: 1 for surfaces with a
 * section, the order of the twist class for surfaces built by twisting.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fmpartners/error.hpp"
#include "fmpartners/fiber_calculus.hpp"

namespace fmp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "a/b" with b >= 1, including integers ("-1/1").
inline std::string format_rational(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// num/den in lowest terms.  Boost 1.74's cpp_rational rejects negative
/// denominators, so the sign is moved to the numerator first.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw InvalidArgumentError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

namespace detail {

inline BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("malformed integer '" + std::string(text) + "'");
    }
    BigInt value{std::string(digits)};
    return (!text.empty() && text[0] == '-') ? BigInt(-value) : value;
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_bigint(text));
    BigInt num = detail::parse_bigint(text.substr(0, slash));
    BigInt den = detail::parse_bigint(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(std::move(num), std::move(den));
}

/// A point of P^1(Q): an exact rational number or infinity.
class BasePoint {
public:
    BasePoint() = default;
    BasePoint(Rational value) : value_(std::move(value)) {}
    BasePoint(std::int64_t value) : value_(Rational(value)) {}
    BasePoint(std::int64_t num, std::int64_t den) {
        if (den == 0) throw InvalidArgumentError("base point denominator is zero");
        value_ = make_rational(BigInt(num), BigInt(den));
    }

    static BasePoint infinity() {
        BasePoint p;
        p.infinite_ = true;
        p.value_ = 0;
        return p;
    }

    static BasePoint parse(std::string_view text) {
        if (text == "inf") return infinity();
        return BasePoint(parse_rational(text));
    }

    bool is_infinity() const noexcept { return infinite_; }

    /// Only meaningful for finite points.
    const Rational& value() const noexcept { return value_; }

    /// Homogeneous coordinates [x : y] with integer entries; infinity is [1 : 0].
    std::pair<BigInt, BigInt> homogeneous() const {
        if (infinite_) return {BigInt(1), BigInt(0)};
        return {boost::multiprecision::numerator(value_), boost::multiprecision::denominator(value_)};
    }

    std::string to_string() const { return infinite_ ? "inf" : format_rational(value_); }

    friend bool operator==(const BasePoint& a, const BasePoint& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    // Finite points in numeric order, infinity last.
    friend std::strong_ordering operator<=>(const BasePoint& a, const BasePoint& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    bool infinite_ = false;
    Rational value_ = 0;
};

/// Typed marked points of P^1, kept sorted by point.
class MarkedConfig {
public:
    using Entry = std::pair<BasePoint, KodairaFiber>;

    MarkedConfig() = default;

    explicit MarkedConfig(std::vector<Entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (k > 0 && entries_[k - 1].first == entries_[k].first) {
                throw DuplicatePointError("point " + entries_[k].first.to_string() + " is marked twice");
            }
            const auto& f = entries_[k].second;
            if (f.kind() == FiberKind::Smooth && !f.is_multiple()) {
                throw InvalidConfigError("smooth non-multiple fiber marked at " + entries_[k].first.to_string());
            }
        }
    }

    MarkedConfig(std::initializer_list<Entry> entries) : MarkedConfig(std::vector<Entry>(entries)) {}

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Fiber over `p`; unmarked points carry the smooth non-multiple fiber.
    KodairaFiber fiber_at(const BasePoint& p) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                                   [](const Entry& e, const BasePoint& q) { return e.first < q; });
        if (it != entries_.end() && it->first == p) return it->second;
        return KodairaFiber::smooth();
    }

    bool is_marked(const BasePoint& p) const {
        return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.first == p; });
    }

    friend bool operator==(const MarkedConfig&, const MarkedConfig&) = default;

private:
    std::vector<Entry> entries_;
};

inline std::int64_t euler_number(const MarkedConfig& config) {
    std::int64_t e = 0;
    for (const auto& [point, fiber] : config) e += euler_contribution(fiber);
    return e;
}

inline std::int64_t chi(const MarkedConfig& config) {
    std::int64_t e = euler_number(config);
    if (e % 12 != 0) throw NotEllipticError("Euler number " + std::to_string(e) + " is not divisible by 12");
    return e / 12;
}

/// A relatively minimal elliptic surface over P^1.
class EllipticSurface {
public:
    /// `known_lambda` is provenance data; it is forced to 1 when the surface
    /// has a section and otherwise stays unknown unless supplied.
    EllipticSurface(std::string name, MarkedConfig config, bool has_section,
                    std::optional<std::int64_t> known_lambda = std::nullopt)
        : name_(std::move(name)), config_(std::move(config)), has_section_(has_section) {
        std::int64_t e = euler_number(config_);
        if (e == 0) throw DegenerateSurfaceError("surface '" + name_ + "' has Euler number 0");
        if (e % 12 != 0) {
            throw NotEllipticError("surface '" + name_ + "' has Euler number " + std::to_string(e) +
                                   ", not divisible by 12");
        }
        if (has_section_) {
            for (const auto& [point, fiber] : config_) {
                if (fiber.is_multiple()) {
                    throw MultiplicityError("surface with a section has multiple fiber " + fiber.to_string() +
                                            " at " + point.to_string());
                }
            }
            if (known_lambda && *known_lambda != 1) {
                throw InvalidArgumentError("a surface with a section has lambda 1");
            }
            lambda_ = 1;
        } else if (known_lambda) {
            if (*known_lambda < 1) throw InvalidArgumentError("lambda must be positive");
            for (const auto& [point, fiber] : config_) {
                if (*known_lambda % fiber.multiplicity() != 0) {
                    throw InvalidArgumentError("fiber multiplicity " + std::to_string(fiber.multiplicity()) +
                                               " does not divide lambda " + std::to_string(*known_lambda));
                }
            }
            lambda_ = known_lambda;
        }
    }

    const std::string& name() const noexcept { return name_; }
    const MarkedConfig& config() const noexcept { return config_; }
    bool has_section() const noexcept { return has_section_; }
    const std::optional<std::int64_t>& known_lambda() const noexcept { return lambda_; }

    EllipticSurface renamed(std::string name) const {
        EllipticSurface s = *this;
        s.name_ = std::move(name);
        return s;
    }

    friend bool operator==(const EllipticSurface&, const EllipticSurface&) = default;

private:
    std::string name_;
    MarkedConfig config_;
    bool has_section_ = false;
    std::optional<std::int64_t> lambda_;
};

inline std::int64_t euler_number(const EllipticSurface& s) { return euler_number(s.config()); }
inline std::int64_t chi(const EllipticSurface& s) { return chi(s.config()); }

/// deg K = -2 + chi + sum over multiple fibers of (1 - 1/m).
inline Rational canonical_degree(const MarkedConfig& config) {
    Rational d = Rational(chi(config) - 2);
    for (const auto& [point, fiber] : config) {
        if (fiber.is_multiple()) d += Rational(1) - Rational(BigInt(1), BigInt(fiber.multiplicity()));
    }
    return d;
}
inline Rational canonical_degree(const EllipticSurface& s) { return canonical_degree(s.config()); }

enum class KodairaDimension { NegativeInfinity, Zero, One };

inline std::string to_string(KodairaDimension k) {
    switch (k) {
        case KodairaDimension::NegativeInfinity: return "-inf";
        case KodairaDimension::Zero: return "0";
        case KodairaDimension::One: return "1";
    }
    return "?";
}

inline KodairaDimension kodaira_dimension(const MarkedConfig& config) {
    Rational d = canonical_degree(config);
    if (d < 0) return KodairaDimension::NegativeInfinity;
    if (d == 0) return KodairaDimension::Zero;
    return KodairaDimension::One;
}
inline KodairaDimension kodaira_dimension(const EllipticSurface& s) { return kodaira_dimension(s.config()); }

inline bool is_rational(const EllipticSurface& s) {
    return kodaira_dimension(s) == KodairaDimension::NegativeInfinity && chi(s) == 1;
}

inline std::int64_t lambda(const EllipticSurface& s) {
    if (!s.known_lambda()) {
        throw UnknownLambdaError("surface '" + s.name() + "' has no section and no twist provenance");
    }
    return *s.known_lambda();
}

}  // namespace fmp
