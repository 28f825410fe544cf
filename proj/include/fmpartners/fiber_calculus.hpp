#pragma once

/**
 * @file fiber_calculus.hpp
 * @brief Exact Q/Z arithmetic and the Kodaira fiber table.
 *
 * Elements of Q/Z are kept as reduced fractions a/m with 0 <= a < m, so
 * equality is structural and the additive order of a/m is exactly m.
 * (Q/Z)^2 is the first homology of a smooth fiber with Q/Z coefficients,
 * Q/Z that of an I_n cycle; additive fibers contribute nothing.
 */

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "fmpartners/error.hpp"

namespace fmp {

namespace detail {

inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t parse_int64(std::string_view text, std::string_view what) {
    if (text.empty()) throw ParseError("empty integer in " + std::string(what));
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw ParseError("malformed integer '" + std::string(text) + "'");
    std::int64_t value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw ParseError("malformed integer '" + std::string(text) + "'");
        if (value > (INT64_MAX - (c - '0')) / 10)
            throw ParseError("integer out of range '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
}

}  // namespace detail

/// An element of Q/Z as a reduced fraction in [0, 1).
class QZ {
public:
    constexpr QZ() = default;

    /// Reduces num/den modulo 1. Throws InvalidArgumentError if den <= 0.
    QZ(std::int64_t num, std::int64_t den) {
        if (den <= 0) throw InvalidArgumentError("Q/Z denominator must be positive");
        std::int64_t r = detail::floor_mod(num, den);
        std::int64_t g = std::gcd(r, den);
        num_ = r / g;
        den_ = den / g;
    }

    static QZ parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return QZ(detail::parse_int64(text, "Q/Z element"), 1);
        }
        return QZ(detail::parse_int64(text.substr(0, slash), "Q/Z numerator"),
                  detail::parse_int64(text.substr(slash + 1), "Q/Z denominator"));
    }

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const QZ&, const QZ&) = default;
    friend auto operator<=>(const QZ&, const QZ&) = default;

    friend std::ostream& operator<<(std::ostream& os, const QZ& a) { return os << a.to_string(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline QZ qz_add(const QZ& a, const QZ& b) {
    std::int64_t g = std::gcd(a.denominator(), b.denominator());
    std::int64_t m = a.denominator() / g * b.denominator();
    __int128 n = static_cast<__int128>(a.numerator()) * (m / a.denominator()) +
                 static_cast<__int128>(b.numerator()) * (m / b.denominator());
    return QZ(static_cast<std::int64_t>(n % m), m);
}

inline QZ qz_neg(const QZ& a) { return QZ(a.denominator() - a.numerator(), a.denominator()); }

inline std::int64_t qz_order(const QZ& a) { return a.denominator(); }

inline QZ qz_scalar(std::int64_t i, const QZ& a) {
    std::int64_t m = a.denominator();
    __int128 n = static_cast<__int128>(detail::floor_mod(i, m)) * a.numerator();
    return QZ(static_cast<std::int64_t>(n % m), m);
}

inline QZ operator+(const QZ& a, const QZ& b) { return qz_add(a, b); }
inline QZ operator-(const QZ& a) { return qz_neg(a); }
inline QZ operator*(std::int64_t i, const QZ& a) { return qz_scalar(i, a); }

/// An element of (Q/Z)^2.
struct QZPair {
    QZ first;
    QZ second;

    bool is_zero() const noexcept { return first.is_zero() && second.is_zero(); }

    friend bool operator==(const QZPair&, const QZPair&) = default;
    friend auto operator<=>(const QZPair&, const QZPair&) = default;
};

inline QZPair qz_add(const QZPair& a, const QZPair& b) {
    return {qz_add(a.first, b.first), qz_add(a.second, b.second)};
}
inline QZPair qz_scalar(std::int64_t i, const QZPair& a) {
    return {qz_scalar(i, a.first), qz_scalar(i, a.second)};
}
inline std::int64_t qz_order(const QZPair& a) {
    return std::lcm(qz_order(a.first), qz_order(a.second));
}

// ---------------------------------------------------------------------------
// Kodaira fibers

enum class FiberKind { Smooth, I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

/// A Kodaira fiber type together with its multiplicity.
///
/// `index` is the n of I_n / I*_n and is zero for every other kind.  Only
/// Smooth and I_n fibers may be multiple.
class KodairaFiber {
public:
    KodairaFiber(FiberKind kind, std::int64_t index = 0, std::int64_t multiplicity = 1)
        : kind_(kind), index_(index), multiplicity_(multiplicity) {
        if (multiplicity < 1) throw MultiplicityError("fiber multiplicity must be >= 1");
        switch (kind) {
            case FiberKind::I:
                if (index < 1) throw InvalidFiberError("I_n requires n >= 1");
                break;
            case FiberKind::IStar:
                if (index < 0) throw InvalidFiberError("I*_n requires n >= 0");
                break;
            default:
                if (index != 0) throw InvalidFiberError("only I_n and I*_n carry an index");
                break;
        }
        if (multiplicity > 1 && kind != FiberKind::Smooth && kind != FiberKind::I) {
            throw MultiplicityError("additive fibers cannot be multiple");
        }
    }

    static KodairaFiber smooth(std::int64_t m = 1) { return {FiberKind::Smooth, 0, m}; }
    static KodairaFiber i_n(std::int64_t n, std::int64_t m = 1) { return {FiberKind::I, n, m}; }
    static KodairaFiber i_star(std::int64_t n) { return {FiberKind::IStar, n, 1}; }
    static KodairaFiber ii() { return {FiberKind::II}; }
    static KodairaFiber iii() { return {FiberKind::III}; }
    static KodairaFiber iv() { return {FiberKind::IV}; }
    static KodairaFiber ii_star() { return {FiberKind::IIStar}; }
    static KodairaFiber iii_star() { return {FiberKind::IIIStar}; }
    static KodairaFiber iv_star() { return {FiberKind::IVStar}; }

    FiberKind kind() const noexcept { return kind_; }
    std::int64_t index() const noexcept { return index_; }
    std::int64_t multiplicity() const noexcept { return multiplicity_; }

    bool is_multiple() const noexcept { return multiplicity_ > 1; }
    bool is_additive() const noexcept { return kind_ != FiberKind::Smooth && kind_ != FiberKind::I; }

    /// Same type with multiplicity 1.
    KodairaFiber reduced() const { return {kind_, index_, 1}; }

    /// Type symbol without multiplicity: "I(0)" (smooth), "I(n)", "I*(n)",
    /// "II", "III", "IV", "II*", "III*", "IV*".
    std::string kind_symbol() const {
        switch (kind_) {
            case FiberKind::Smooth: return "I(0)";
            case FiberKind::I: return "I(" + std::to_string(index_) + ")";
            case FiberKind::IStar: return "I*(" + std::to_string(index_) + ")";
            case FiberKind::II: return "II";
            case FiberKind::III: return "III";
            case FiberKind::IV: return "IV";
            case FiberKind::IIStar: return "II*";
            case FiberKind::IIIStar: return "III*";
            case FiberKind::IVStar: return "IV*";
        }
        return "?";
    }

    /// Conventional name, e.g. "11I_0", "I_2", "III*".
    std::string to_string() const {
        std::string prefix = multiplicity_ > 1 ? std::to_string(multiplicity_) : "";
        switch (kind_) {
            case FiberKind::Smooth: return prefix + "I_0";
            case FiberKind::I: return prefix + "I_" + std::to_string(index_);
            case FiberKind::IStar: return "I*_" + std::to_string(index_);
            default: return kind_symbol();
        }
    }

    static KodairaFiber parse(std::string_view symbol, std::int64_t multiplicity = 1) {
        auto indexed = [&](std::string_view head) -> std::int64_t {
            auto inner = symbol.substr(head.size());
            if (inner.size() < 3 || inner.front() != '(' || inner.back() != ')')
                throw ParseError("malformed fiber kind '" + std::string(symbol) + "'");
            return detail::parse_int64(inner.substr(1, inner.size() - 2), "fiber index");
        };
        if (symbol == "II") return {FiberKind::II, 0, multiplicity};
        if (symbol == "III") return {FiberKind::III, 0, multiplicity};
        if (symbol == "IV") return {FiberKind::IV, 0, multiplicity};
        if (symbol == "II*") return {FiberKind::IIStar, 0, multiplicity};
        if (symbol == "III*") return {FiberKind::IIIStar, 0, multiplicity};
        if (symbol == "IV*") return {FiberKind::IVStar, 0, multiplicity};
        if (symbol.starts_with("I*(")) return {FiberKind::IStar, indexed("I*"), multiplicity};
        if (symbol.starts_with("I(")) {
            std::int64_t n = indexed("I");
            if (n == 0) return {FiberKind::Smooth, 0, multiplicity};
            return {FiberKind::I, n, multiplicity};
        }
        throw ParseError("unknown fiber kind '" + std::string(symbol) + "'");
    }

    friend bool operator==(const KodairaFiber&, const KodairaFiber&) = default;
    friend auto operator<=>(const KodairaFiber&, const KodairaFiber&) = default;

    friend std::ostream& operator<<(std::ostream& os, const KodairaFiber& f) { return os << f.to_string(); }

private:
    FiberKind kind_;
    std::int64_t index_;
    std::int64_t multiplicity_;
};

/// Topological Euler number of the fiber; multiplicity does not enter.
inline std::int64_t euler_contribution(const KodairaFiber& f) {
    switch (f.kind()) {
        case FiberKind::Smooth: return 0;
        case FiberKind::I: return f.index();
        case FiberKind::IStar: return f.index() + 6;
        case FiberKind::II: return 2;
        case FiberKind::III: return 3;
        case FiberKind::IV: return 4;
        case FiberKind::IIStar: return 10;
        case FiberKind::IIIStar: return 9;
        case FiberKind::IVStar: return 8;
    }
    return 0;
}

enum class LocalTwistGroup { Zero, One, Two };

inline std::string to_string(LocalTwistGroup g) {
    switch (g) {
        case LocalTwistGroup::Zero: return "0";
        case LocalTwistGroup::One: return "Q/Z";
        case LocalTwistGroup::Two: return "(Q/Z)^2";
    }
    return "?";
}

/// H_1(fiber, Q/Z) as a group descriptor. Only defined on non-multiple fibers.
inline LocalTwistGroup local_twist_group(const KodairaFiber& f) {
    if (f.is_multiple()) {
        throw MultiplicityError("local twist group is defined on non-multiple fibers only, got " + f.to_string());
    }
    switch (f.kind()) {
        case FiberKind::Smooth: return LocalTwistGroup::Two;
        case FiberKind::I: return LocalTwistGroup::One;
        default: return LocalTwistGroup::Zero;
    }
}

}  // namespace fmp
