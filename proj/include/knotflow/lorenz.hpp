#pragma once

// Lorenz-system integration, symbolic lobe coding of trajectories,
// close-return periodic-orbit candidates, and the template map turning
// periodic LR-words into positive permutation braids.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotflow/braid.hpp"

namespace knotflow {

struct LorenzParams {
    double sigma = 10.0;
    double b = 8.0 / 3.0;
    double r = 24.0;  // Rayleigh number
};

struct LorenzTrajectory {
    double dt = 0.0;
    std::vector<std::array<double, 3>> states;

    double time_at(std::size_t k) const { return dt * static_cast<double>(k); }
};

inline std::array<double, 3> lorenz_rhs(const LorenzParams& p, const std::array<double, 3>& u) {
    return {p.sigma * (u[1] - u[0]),
            p.r * u[0] - u[1] - u[0] * u[2],
            u[0] * u[1] - p.b * u[2]};
}

inline LorenzTrajectory integrate_lorenz(const LorenzParams& p, std::array<double, 3> x0,
                                         double dt, long long steps) {
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    if (!(p.r > 0)) throw std::invalid_argument("Rayleigh number must be positive");
    LorenzTrajectory traj;
    traj.dt = dt;
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.push_back(x0);
    std::array<double, 3> u = x0;
    for (long long s = 0; s < steps; ++s) {
        const auto k1 = lorenz_rhs(p, u);
        std::array<double, 3> v;
        for (int i = 0; i < 3; ++i) v[i] = u[i] + 0.5 * dt * k1[i];
        const auto k2 = lorenz_rhs(p, v);
        for (int i = 0; i < 3; ++i) v[i] = u[i] + 0.5 * dt * k2[i];
        const auto k3 = lorenz_rhs(p, v);
        for (int i = 0; i < 3; ++i) v[i] = u[i] + dt * k3[i];
        const auto k4 = lorenz_rhs(p, v);
        for (int i = 0; i < 3; ++i)
            u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        traj.states.push_back(u);
    }
    return traj;
}

// Cyclic word over {L, R}.
struct SymbolWord {
    std::string symbols;

    void validate() const {
        for (char c : symbols)
            if (c != 'L' && c != 'R') throw std::invalid_argument("symbols must be L or R");
    }

    std::size_t size() const { return symbols.size(); }

    SymbolWord rotated(std::size_t k) const {
        if (symbols.empty()) return *this;
        k %= symbols.size();
        return {symbols.substr(k) + symbols.substr(0, k)};
    }

    // lexicographically least rotation, L < R
    SymbolWord canonical() const {
        SymbolWord best = *this;
        for (std::size_t k = 1; k < symbols.size(); ++k)
            best.symbols = std::min(best.symbols, rotated(k).symbols);
        return best;
    }

    // smallest rotation period; the word is primitive iff period == size
    std::size_t minimal_period() const {
        const std::size_t n = symbols.size();
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) ok = symbols[k] == symbols[k % d];
            if (ok) return d;
        }
        return n;
    }

    bool primitive() const { return !symbols.empty() && minimal_period() == symbols.size(); }

    SymbolWord mirrored() const {
        SymbolWord m = *this;
        for (char& c : m.symbols) c = (c == 'L') ? 'R' : 'L';
        return m;
    }

    friend bool operator==(const SymbolWord& a, const SymbolWord& b) {
        return a.symbols == b.symbols;
    }
};

namespace detail {

struct ZMaximum {
    std::size_t index;  // sample index of the discrete maximum
    double time;        // parabolically refined time
    double x;           // x interpolated at the refined time
};

inline std::vector<ZMaximum> z_maxima(const LorenzTrajectory& traj) {
    std::vector<ZMaximum> out;
    const auto& s = traj.states;
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        const double zm = s[k - 1][2], z0 = s[k][2], zp = s[k + 1][2];
        if (!(z0 >= zm && z0 > zp)) continue;
        // parabola through the three samples; vertex offset in units of dt
        const double denom = zm - 2.0 * z0 + zp;
        double off = 0.0;
        if (denom != 0.0) off = 0.5 * (zm - zp) / denom;
        off = std::clamp(off, -1.0, 1.0);
        const double xq = (off <= 0.0)
            ? s[k][0] + off * (s[k][0] - s[k - 1][0])
            : s[k][0] + off * (s[k + 1][0] - s[k][0]);
        out.push_back({k, traj.time_at(k) + off * traj.dt, xq});
    }
    return out;
}

}  // namespace detail

// One symbol per local maximum of z: L when x < 0 there, R when x > 0.
// A trajectory pinned at a fixed point yields the empty word.
inline SymbolWord lobe_encoding(const LorenzTrajectory& traj) {
    SymbolWord w;
    for (const auto& m : detail::z_maxima(traj)) w.symbols += (m.x < 0.0) ? 'L' : 'R';
    return w;
}

struct CloseReturn {
    double start_time = 0.0;
    double period = 0.0;
    std::size_t start_index = 0;  // sample index of the section point opening the segment
    std::size_t end_index = 0;    // sample index of the returning section point
    SymbolWord word;              // canonical rotation of the segment's symbols
};

// Near-periodic segments: pairs of section points (z-maxima) whose full states
// come back within eps. Each candidate carries the symbol word of the segment.
inline std::vector<CloseReturn> close_return_candidates(const LorenzTrajectory& traj,
                                                        double eps,
                                                        std::size_t max_span = 64) {
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    const auto maxima = detail::z_maxima(traj);
    std::vector<CloseReturn> out;
    for (std::size_t i = 0; i < maxima.size(); ++i) {
        for (std::size_t j = i + 1; j < maxima.size() && j - i <= max_span; ++j) {
            const auto& a = traj.states[maxima[i].index];
            const auto& b = traj.states[maxima[j].index];
            const double d = std::hypot(b[0] - a[0], b[1] - a[1], b[2] - a[2]);
            if (d >= eps) continue;
            SymbolWord w;
            for (std::size_t k = i; k < j; ++k)
                w.symbols += (maxima[k].x < 0.0) ? 'L' : 'R';
            out.push_back({maxima[i].time, maxima[j].time - maxima[i].time,
                           maxima[i].index, maxima[j].index, w.canonical()});
            break;  // shortest return from this start
        }
    }
    return out;
}

struct TemplateBraid {
    BraidWord braid;
    bool primitive = true;
    int multiplicity = 1;  // word = u^multiplicity; closure has >= multiplicity components
};

// Positive permutation braid of the shift map on the cyclic rotations of w,
// rotations ordered lexicographically with L < R. Output is always positive
// and each strand pair crosses at most once. A non-primitive word u^m is
// carried as m parallel copies of the orbit of u, each copy shifting to
// itself, so the closure has at least m components.
inline TemplateBraid template_braid(const SymbolWord& word) {
    word.validate();
    if (word.symbols.empty()) throw std::invalid_argument("template_braid needs a nonempty word");
    const std::size_t k = word.size();
    const std::size_t period = word.minimal_period();
    const std::size_t copies = k / period;

    std::vector<std::size_t> order(period);
    for (std::size_t i = 0; i < period; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return word.rotated(a).symbols < word.rotated(b).symbols;
    });
    std::vector<std::size_t> rank(period);
    for (std::size_t pos = 0; pos < period; ++pos) rank[order[pos]] = pos;

    // strand (orbit point j, copy c) travels to (j+1 mod period, copy c)
    std::vector<int> dest(k);
    for (std::size_t j = 0; j < period; ++j)
        for (std::size_t c = 0; c < copies; ++c)
            dest[rank[j] * copies + c] =
                static_cast<int>(rank[(j + 1) % period] * copies + c);

    BraidWord b{static_cast<int>(k), {}};
    std::vector<int> a = dest;  // bubble-sort to identity, emitting one crossing per swap
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            if (a[j] > a[j + 1]) {
                b.letters.push_back({static_cast<int>(j) + 1, 1});
                std::swap(a[j], a[j + 1]);
                changed = true;
            }
        }
    }

    TemplateBraid result;
    result.braid = std::move(b);
    result.primitive = period == k;
    result.multiplicity = static_cast<int>(copies);
    return result;
}

struct LorenzInvariants {
    int components = 1;
    long long e = 0;
    int n = 1;
    long long beta = 0;
    long long genus = -1;  // (e - n + 1) / 2 for knot closures, -1 otherwise
    int trip = 0;          // number of maximal L-syllables = R-syllables of the cyclic word
    bool positive_braid = true;
};

inline LorenzInvariants lorenz_invariants(const SymbolWord& word) {
    const auto tb = template_braid(word);
    const auto inv = transverse_invariants(tb.braid);
    LorenzInvariants out;
    out.components = inv.components;
    out.e = inv.e;
    out.n = inv.n;
    out.beta = inv.beta;
    if (inv.components == 1) out.genus = (inv.e - inv.n + 1) / 2;
    int alternations = 0;
    const auto& s = word.symbols;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] != s[(k + 1) % s.size()]) ++alternations;
    out.trip = alternations / 2;
    out.positive_braid = tb.braid.positive();
    return out;
}

}  // namespace knotflow
