#pragma once

/**
 * @file fm_partners.hpp
 * @brief Fourier-Mukai partners of twisted rational elliptic surfaces.
 *
 * For an elliptic surface S with kappa(S) != 0, every FM partner is some
 * J^b(S) with b coprime to lambda.  When S = S(p) the partners J^1..J^{p-1}
 * correspond to the classes i*xi.  Two of them can only be isomorphic
 * through an automorphism of B over P^1 fixing the zero section (the base
 * configuration is Möbius-rigid), and there are at most six of those, so
 * an isomorphism class holds at most six indices.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fmpartners/error.hpp"
#include "fmpartners/rigidity.hpp"
#include "fmpartners/surface_model.hpp"
#include "fmpartners/weil_chatelet.hpp"

namespace fmp {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

/// {b : 1 <= b < lambda, gcd(b, lambda) = 1}.
struct PartnerIndexSet {
    std::int64_t lambda = 1;
    std::vector<std::int64_t> indices;

    explicit PartnerIndexSet(std::int64_t lam) : lambda(lam) {
        if (lam < 1) throw InvalidArgumentError("lambda must be positive");
        for (std::int64_t b = 1; b < lam; ++b) {
            if (std::gcd(b, lam) == 1) indices.push_back(b);
        }
    }

    std::size_t size() const noexcept { return indices.size(); }
};

/// Size of the group of automorphisms of B over P^1 fixing the zero section.
class AutBound {
public:
    constexpr AutBound() = default;
    explicit AutBound(int value) : value_(value) {
        if (value != 1 && value != 2 && value != 3 && value != 4 && value != 6) {
            throw InvalidArgumentError("automorphism bound must be one of 1, 2, 3, 4, 6; got " + std::to_string(value));
        }
    }
    constexpr int value() const noexcept { return value_; }

private:
    int value_ = 6;
};

enum class ClassificationMode { InversionOrbits, SizeBound };

inline std::string to_string(ClassificationMode mode) {
    return mode == ClassificationMode::InversionOrbits ? "inversion" : "bound";
}

struct PartnerClassification {
    std::int64_t lambda = 1;
    std::size_t index_count = 0;
    ClassificationMode mode = ClassificationMode::SizeBound;
    int aut_bound = 6;
    /// InversionOrbits: the orbits {i, lambda - i}.  SizeBound: consecutive
    /// blocks of at most aut_bound indices, the coarsest partition the
    /// class-size bound allows.  For lambda = 1 a single class {0}.
    std::vector<std::vector<std::int64_t>> classes;
    std::int64_t certified_lower_bound = 1;
};

inline std::vector<TwistedSurface> enumerate_partners(const TwistedSurface& t) {
    if (kodaira_dimension(t.surface) == KodairaDimension::Zero) {
        throw KodairaZeroError("surface '" + t.surface.name() + "' has Kodaira dimension 0");
    }
    std::int64_t lam = lambda(t.surface);
    if (lam == 1) return {t};
    std::vector<TwistedSurface> partners;
    for (std::int64_t b : PartnerIndexSet(lam).indices) partners.push_back(relative_jacobian_power(t, b));
    return partners;
}

inline PartnerClassification classify_partners(const TwistedSurface& t, ClassificationMode mode,
                                               AutBound aut = AutBound()) {
    if (!rigidity_check(jacobian(t).config()).rigid) {
        throw NotRigidError("base '" + jacobian(t).name() + "' has a nontrivial Möbius symmetry");
    }
    PartnerClassification out;
    out.lambda = lambda(t.surface);
    out.mode = mode;
    out.aut_bound = aut.value();

    PartnerIndexSet index_set(out.lambda);
    out.index_count = index_set.size();
    if (index_set.indices.empty()) {
        out.classes = {{0}};
        out.certified_lower_bound = 1;
        return out;
    }

    out.certified_lower_bound = ceil_div(static_cast<std::int64_t>(index_set.size()), aut.value());
    if (mode == ClassificationMode::InversionOrbits) {
        for (std::int64_t i : index_set.indices) {
            std::int64_t j = out.lambda - i;
            if (i < j) {
                out.classes.push_back({i, j});
            } else if (i == j) {
                out.classes.push_back({i});
            }
        }
    } else {
        const auto& idx = index_set.indices;
        for (std::size_t start = 0; start < idx.size(); start += aut.value()) {
            std::size_t stop = std::min(idx.size(), start + static_cast<std::size_t>(aut.value()));
            out.classes.emplace_back(idx.begin() + start, idx.begin() + stop);
        }
    }
    return out;
}

enum class Verdict { Certified, Inconclusive };

inline std::string to_string(Verdict v) { return v == Verdict::Certified ? "certified" : "inconclusive"; }

struct MainTheoremReport {
    std::int64_t p = 0;
    std::int64_t n = 0;
    Verdict verdict = Verdict::Inconclusive;
    PartnerClassification classification;
};

/// Certifies at least N pairwise non-isomorphic FM partners of S(p), which
/// holds whenever p > 6(N - 1) + 1.
inline MainTheoremReport verify_main_theorem(const EllipticSurface& base, std::int64_t p, std::int64_t n) {
    if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
    if (n < 1) throw InvalidArgumentError("target class count must be positive");

    TwistedSurface s = make_s_p(base, p);
    if (!is_rational(s.surface)) throw InvalidArgumentError("S(" + std::to_string(p) + ") is not rational");

    MainTheoremReport report;
    report.p = p;
    report.n = n;
    report.classification = classify_partners(s, ClassificationMode::SizeBound, AutBound(6));
    report.verdict = p > 6 * (n - 1) + 1 ? Verdict::Certified : Verdict::Inconclusive;
    return report;
}

}  // namespace fmp
