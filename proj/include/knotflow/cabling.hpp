#pragma once

// Iterated torus knots as explicit braid words via the cabling operation,
// plus (meridian, longitude) curve-class arithmetic on the boundary torus.

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotflow/braid.hpp"

namespace knotflow {

struct CableStage {
    long long p = 2;
    long long q = 3;
};

struct CableDescriptor {
    std::vector<CableStage> stages;
    int orientation = 1;
};

// Diagnostic validation: coprimality at every stage, p >= 2, and p1 < q1 for
// the first stage; later stages carry no magnitude restriction.
inline std::vector<std::string> validate_descriptor(const CableDescriptor& d) {
    std::vector<std::string> violations;
    if (d.orientation != 1 && d.orientation != -1)
        violations.push_back("orientation must be +1 or -1");
    for (std::size_t k = 0; k < d.stages.size(); ++k) {
        const auto& s = d.stages[k];
        const std::string tag = "stage " + std::to_string(k + 1);
        if (s.p < 2) violations.push_back(tag + ": p must be >= 2");
        if (std::gcd(s.p, s.q) != 1)
            violations.push_back(tag + ": gcd(p,q) = " +
                                 std::to_string(std::gcd(s.p, s.q)) + " != 1");
        if (k == 0 && !(s.p < s.q))
            violations.push_back(tag + ": first stage requires p < q");
    }
    return violations;
}

namespace detail {

// Bundle of p strands starting after position a crosses the next bundle of p;
// p^2 letters, emitted row-major, all with the given sign.
inline void emit_block_transposition(std::vector<BraidLetter>& out, int a, int p, int sign) {
    for (int i = 1; i <= p; ++i)
        for (int j = a + p + i - 1; j >= a + i; --j)
            out.push_back({j, sign});
}

}  // namespace detail

// (p,q)-cable of the closure of `base` relative to the Seifert framing:
// p-parallel copy of the word followed by the meridional correction
// (sigma_1 ... sigma_{p-1})^(q - p*w) on the first bundle, w = writhe of base.
inline BraidWord cable_braid(const BraidWord& base, long long p, long long q) {
    base.validate();
    if (p < 2) throw std::invalid_argument("cable_braid needs p >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("cable_braid needs gcd(p,q) = 1");
    if (closure_components(base) != 1)
        throw std::domain_error("cable_braid needs a knot (one-component) base");

    BraidWord out{static_cast<int>(p) * base.strands, {}};
    for (const auto& l : base.letters)
        detail::emit_block_transposition(out.letters, (l.index - 1) * static_cast<int>(p),
                                         static_cast<int>(p), l.sign);

    const long long m = q - p * base.algebraic_length();
    const int sgn = m >= 0 ? 1 : -1;
    for (long long rep = 0; rep < std::llabs(m); ++rep) {
        if (sgn > 0)
            for (int i = 1; i <= static_cast<int>(p) - 1; ++i) out.letters.push_back({i, 1});
        else
            for (int i = static_cast<int>(p) - 1; i >= 1; --i) out.letters.push_back({i, -1});
    }
    return out;
}

// Left fold of cable_braid starting from the unknot (empty word on 1 strand).
inline BraidWord iterated_cable(const CableDescriptor& d) {
    const auto violations = validate_descriptor(d);
    if (!violations.empty()) throw std::invalid_argument("invalid descriptor: " + violations.front());
    BraidWord k{1, {}};
    for (const auto& s : d.stages) k = cable_braid(k, s.p, s.q);
    if (d.orientation < 0) k = k.mirrored();
    return k;
}

// Homology class nu*M + mu*L of a curve on the boundary torus.
struct TorusCurveClass {
    long long nu = 0;
    long long mu = 0;

    friend bool operator==(const TorusCurveClass& a, const TorusCurveClass& b) {
        return a.nu == b.nu && a.mu == b.mu;
    }
};

// nu is defined mod mu; reduce nu into [0, mu) for mu > 0, then divide out the gcd.
inline TorusCurveClass normalize_curve_class(TorusCurveClass c) {
    if (c.nu == 0 && c.mu == 0) return c;
    if (c.mu > 0) c.nu = ((c.nu % c.mu) + c.mu) % c.mu;
    const long long g = std::gcd(c.nu, c.mu);
    if (g > 1) {
        c.nu /= g;
        c.mu /= g;
    }
    return c;
}

}  // namespace knotflow
