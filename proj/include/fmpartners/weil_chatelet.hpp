#pragma once

/**
 * @file weil_chatelet.hpp
 * @brief Twist classes of a rational elliptic surface with section.
 *
 * For a rational B with section the Tate-Shafarevich part vanishes, so a
 * twist class is the same thing as a finitely supported choice of local
 * data xi_t in H_1(B_t, Q/Z) for t in P^1.  A class supported at smooth
 * points t with local order m_t gives the surface obtained from B by
 * replacing each such fiber with a multiple fiber m_t I_0; its multisection
 * index is the order of the class.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fmpartners/error.hpp"
#include "fmpartners/fiber_calculus.hpp"
#include "fmpartners/surface_model.hpp"

namespace fmp {

/// Local datum: (Q/Z)^2 over a smooth fiber, Q/Z over an I_n fiber.
using TwistDatum = std::variant<QZ, QZPair>;

inline bool is_zero(const TwistDatum& d) {
    return std::visit([](const auto& x) { return x.is_zero(); }, d);
}
inline std::int64_t datum_order(const TwistDatum& d) {
    return std::visit([](const auto& x) { return qz_order(x); }, d);
}
inline TwistDatum datum_scalar(std::int64_t i, const TwistDatum& d) {
    return std::visit([i](const auto& x) -> TwistDatum { return qz_scalar(i, x); }, d);
}
inline LocalTwistGroup datum_shape(const TwistDatum& d) {
    return std::holds_alternative<QZPair>(d) ? LocalTwistGroup::Two : LocalTwistGroup::One;
}

class WCElement;
WCElement wc_zero(const EllipticSurface& base);
WCElement wc_make(const EllipticSurface& base, const std::vector<std::pair<BasePoint, TwistDatum>>& assignments);
WCElement wc_add(const WCElement& a, const WCElement& b);
WCElement wc_scalar(std::int64_t i, const WCElement& a);

/// An element of WC(B), stored as its nonzero local components.
class WCElement {
public:
    const EllipticSurface& base() const noexcept { return *base_; }
    const std::shared_ptr<const EllipticSurface>& base_ptr() const noexcept { return base_; }
    const std::map<BasePoint, TwistDatum>& support() const noexcept { return support_; }
    bool is_zero() const noexcept { return support_.empty(); }

    bool same_base(const WCElement& other) const {
        return base_ == other.base_ || *base_ == *other.base_;
    }

    friend bool operator==(const WCElement& a, const WCElement& b) {
        return a.same_base(b) && a.support_ == b.support_;
    }

private:
    friend WCElement wc_zero(const EllipticSurface&);
    friend WCElement wc_make(const EllipticSurface&, const std::vector<std::pair<BasePoint, TwistDatum>>&);
    friend WCElement wc_add(const WCElement&, const WCElement&);
    friend WCElement wc_scalar(std::int64_t, const WCElement&);

    explicit WCElement(std::shared_ptr<const EllipticSurface> base) : base_(std::move(base)) {}

    void put(const BasePoint& p, const TwistDatum& d) {
        if (fmp::is_zero(d)) {
            support_.erase(p);
        } else {
            support_.insert_or_assign(p, d);
        }
    }

    std::shared_ptr<const EllipticSurface> base_;
    std::map<BasePoint, TwistDatum> support_;
};

namespace detail {

inline void require_rational_base(const EllipticSurface& base) {
    if (!base.has_section()) {
        throw NotRationalBaseError("twist base '" + base.name() + "' has no section");
    }
    if (!is_rational(base)) {
        throw NotRationalBaseError("twist base '" + base.name() + "' is not rational");
    }
}

inline void require_same_base(const WCElement& a, const WCElement& b) {
    if (!a.same_base(b)) {
        throw BaseMismatchError("WC elements over '" + a.base().name() + "' and '" + b.base().name() + "'");
    }
}

}  // namespace detail

inline WCElement wc_zero(const EllipticSurface& base) {
    detail::require_rational_base(base);
    return WCElement(std::make_shared<const EllipticSurface>(base));
}

inline WCElement wc_make(const EllipticSurface& base,
                         const std::vector<std::pair<BasePoint, TwistDatum>>& assignments) {
    WCElement xi = wc_zero(base);
    std::map<BasePoint, bool> seen;
    for (const auto& [point, datum] : assignments) {
        if (!seen.emplace(point, true).second) {
            throw DuplicatePointError("point " + point.to_string() + " assigned twice");
        }
        KodairaFiber fiber = base.config().fiber_at(point);
        LocalTwistGroup group = local_twist_group(fiber);
        if (group == LocalTwistGroup::Zero) {
            throw AdditiveFiberError("point " + point.to_string() + " lies on additive fiber " + fiber.to_string());
        }
        if (datum_shape(datum) != group) {
            throw ShapeError("point " + point.to_string() + " over " + fiber.to_string() + " needs a datum in " +
                             to_string(group));
        }
        xi.put(point, datum);
    }
    return xi;
}

inline WCElement wc_add(const WCElement& a, const WCElement& b) {
    detail::require_same_base(a, b);
    WCElement sum = a;
    for (const auto& [point, datum] : b.support()) {
        auto it = sum.support_.find(point);
        if (it == sum.support_.end()) {
            sum.put(point, datum);
            continue;
        }
        // Shapes agree because both elements were validated against the same base.
        TwistDatum combined = std::visit(
            [](const auto& x, const auto& y) -> TwistDatum {
                using X = std::decay_t<decltype(x)>;
                using Y = std::decay_t<decltype(y)>;
                if constexpr (std::is_same_v<X, Y>) {
                    return qz_add(x, y);
                } else {
                    throw ShapeError("mismatched local data at one point");
                }
            },
            it->second, datum);
        sum.put(point, combined);
    }
    return sum;
}

inline WCElement wc_scalar(std::int64_t i, const WCElement& a) {
    WCElement result(a.base_);
    for (const auto& [point, datum] : a.support()) result.put(point, datum_scalar(i, datum));
    return result;
}

inline WCElement wc_neg(const WCElement& a) { return wc_scalar(-1, a); }

inline std::int64_t wc_order(const WCElement& a) {
    std::int64_t order = 1;
    for (const auto& [point, datum] : a.support()) order = std::lcm(order, datum_order(datum));
    return order;
}

/// A surface S together with its twist class, i.e. the pair (S, J(S) -> B).
struct TwistedSurface {
    EllipticSurface surface;
    WCElement xi;

    const EllipticSurface& base() const noexcept { return xi.base(); }
};

/// Logarithmic transforms of B at the support of xi.
inline TwistedSurface twist(const EllipticSurface& base, const WCElement& xi,
                            std::optional<std::string> name = std::nullopt) {
    if (!(xi.base() == base)) {
        throw BaseMismatchError("twist class lives over '" + xi.base().name() + "', not '" + base.name() + "'");
    }
    if (xi.is_zero()) {
        return {name ? base.renamed(*name) : base, xi};
    }
    std::vector<MarkedConfig::Entry> entries = base.config().entries();
    for (const auto& [point, datum] : xi.support()) {
        if (!std::holds_alternative<QZPair>(datum)) {
            throw UnsupportedTwistError("twist at the I_n fiber over " + point.to_string() + " is not modeled");
        }
        entries.emplace_back(point, KodairaFiber::smooth(datum_order(datum)));
    }
    std::int64_t order = wc_order(xi);
    std::string label = name ? *name : base.name() + "[twist order " + std::to_string(order) + "]";
    return {EllipticSurface(std::move(label), MarkedConfig(std::move(entries)), false, order), xi};
}

inline const EllipticSurface& jacobian(const TwistedSurface& t) { return t.base(); }

/// J^i(S): the surface whose class is i*xi.  J^0 is the Jacobian and J^1
/// is S itself; otherwise i must be coprime to lambda.
inline TwistedSurface relative_jacobian_power(const TwistedSurface& t, std::int64_t i) {
    if (i == 0) return twist(t.base(), wc_zero(t.base()));
    std::int64_t lam = wc_order(t.xi);
    if (std::gcd(i, lam) != 1) {
        throw NotCoprimeError("index " + std::to_string(i) + " shares a factor with lambda " + std::to_string(lam));
    }
    if (i == 1) return t;
    return twist(t.base(), wc_scalar(i, t.xi), "J^" + std::to_string(i) + "(" + t.surface.name() + ")");
}

/// Smallest non-negative integer point of P^1 with a smooth fiber on B.
inline BasePoint first_smooth_point(const EllipticSurface& base) {
    for (std::int64_t k = 0;; ++k) {
        BasePoint p(k);
        if (!base.config().is_marked(p)) return p;
    }
}

/// S(p): B twisted by a class of order p supported at one smooth point.
inline TwistedSurface make_s_p(const EllipticSurface& base, std::int64_t p) {
    if (p < 1) throw InvalidArgumentError("twist order must be positive, got " + std::to_string(p));
    BasePoint t0 = first_smooth_point(base);
    WCElement xi = wc_make(base, {{t0, QZPair{QZ(1, p), QZ()}}});
    return twist(base, xi, "S(" + std::to_string(p) + ")");
}

}  // namespace fmp
