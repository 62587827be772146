#pragma once

// Braid-group words on n strands: free reduction, closure combinatorics,
// transverse-knot invariants, (de)stabilization, bounded exchange-move search,
// torus braids, and Alexander polynomials through the reduced Burau matrices.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotflow/laurent.hpp"

namespace knotflow {

struct BraidLetter {
    int index = 1;  // generator index, 1 <= index <= strands-1
    int sign = 1;   // +1 or -1

    friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
    friend bool operator<(const BraidLetter& a, const BraidLetter& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.sign < b.sign;
    }
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    void validate() const {
        if (strands < 1) throw std::invalid_argument("braid word needs >= 1 strand");
        for (const auto& l : letters) {
            if (l.index < 1 || l.index > strands - 1)
                throw std::invalid_argument("braid letter index out of range");
            if (l.sign != 1 && l.sign != -1)
                throw std::invalid_argument("braid letter sign must be +-1");
        }
    }

    // writhe of the closed-braid diagram = algebraic length
    long long algebraic_length() const {
        long long e = 0;
        for (const auto& l : letters) e += l.sign;
        return e;
    }

    bool positive() const {
        return std::all_of(letters.begin(), letters.end(),
                           [](const BraidLetter& l) { return l.sign == 1; });
    }

    BraidWord mirrored() const {
        BraidWord m = *this;
        for (auto& l : m.letters) l.sign = -l.sign;
        return m;
    }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }

    // ordering used by the search: shorter first, then fewer strands, then lex
    friend bool operator<(const BraidWord& a, const BraidWord& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        if (a.strands != b.strands) return a.strands < b.strands;
        return a.letters < b.letters;
    }

    std::string str() const {
        std::string s = "B" + std::to_string(strands) + ":";
        for (const auto& l : letters) {
            s += ' ';
            if (l.sign < 0) s += '-';
            s += std::to_string(l.index);
        }
        return s;
    }
};

inline BraidWord free_reduce(const BraidWord& b) {
    b.validate();
    BraidWord out{b.strands, {}};
    for (const auto& l : b.letters) {
        if (!out.letters.empty() && out.letters.back().index == l.index &&
            out.letters.back().sign == -l.sign) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

// permutation underlying the braid: perm[i] = final position of strand i (0-based)
inline std::vector<int> closure_permutation(const BraidWord& b) {
    b.validate();
    std::vector<int> pos(static_cast<std::size_t>(b.strands));
    std::iota(pos.begin(), pos.end(), 0);  // pos[p] = strand currently at position p
    for (const auto& l : b.letters) std::swap(pos[l.index - 1], pos[l.index]);
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    for (int p = 0; p < b.strands; ++p) perm[static_cast<std::size_t>(pos[p])] = p;
    return perm;
}

inline int closure_components(const BraidWord& b) {
    const auto perm = closure_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
        }
    }
    return cycles;
}

struct TransverseInvariants {
    long long e = 0;       // algebraic length
    int n = 1;             // braid index of the given word
    long long beta = 0;    // Bennequin (self-linking) number e - n
    long long writhe = 0;  // equals e for a closed-braid diagram
    int components = 1;
};

inline TransverseInvariants transverse_invariants(const BraidWord& b) {
    TransverseInvariants inv;
    inv.e = b.algebraic_length();
    inv.n = b.strands;
    inv.beta = inv.e - inv.n;
    inv.writhe = inv.e;
    inv.components = closure_components(b);
    return inv;
}

// (sigma_{p-1} ... sigma_1)^|q| on p strands; closure is the (p,q) torus knot/link.
inline BraidWord torus_braid(long long p, long long q, int orientation = 1) {
    if (p < 1) throw std::invalid_argument("torus braid needs p >= 1");
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("orientation must be +-1");
    const int sgn = orientation * (q < 0 ? -1 : 1);
    BraidWord b{static_cast<int>(p), {}};
    for (long long rep = 0; rep < std::llabs(q); ++rep)
        for (long long i = p - 1; i >= 1; --i)
            b.letters.push_back({static_cast<int>(i), sgn});
    return b;
}

inline BraidWord cyclic_rotate(const BraidWord& b, int k) {
    if (b.letters.empty()) return b;
    BraidWord out{b.strands, {}};
    const int len = static_cast<int>(b.letters.size());
    k = ((k % len) + len) % len;
    out.letters.reserve(b.letters.size());
    for (int i = 0; i < len; ++i)
        out.letters.push_back(b.letters[static_cast<std::size_t>((i + k) % len)]);
    return out;
}

// Remove a trivial loop: if some cyclic rotation ends in sigma_{n-1}^{sign} and
// index n-1 occurs nowhere else, drop that letter and the last strand.
inline std::optional<BraidWord> destabilize(const BraidWord& b, int sign) {
    b.validate();
    if (b.strands < 2) return std::nullopt;
    const int top = b.strands - 1;
    int count = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (b.letters[i].index == top) {
            ++count;
            where = i;
        }
    }
    if (count != 1 || b.letters[where].sign != sign) return std::nullopt;
    BraidWord rotated = cyclic_rotate(b, static_cast<int>(where) + 1);
    rotated.letters.pop_back();
    rotated.strands = b.strands - 1;
    return rotated;
}

// All words one braid relation away: far commutation and the triple relation.
inline std::vector<BraidWord> braid_relation_neighbors(const BraidWord& b) {
    std::vector<BraidWord> out;
    const auto& w = b.letters;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (std::abs(w[i].index - w[i + 1].index) >= 2) {
            BraidWord n = b;
            std::swap(n.letters[i], n.letters[i + 1]);
            out.push_back(std::move(n));
        }
    }
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        const int s = w[i].sign;
        if (w[i + 1].sign != s || w[i + 2].sign != s) continue;
        // sigma_i sigma_{i+1} sigma_i  <->  sigma_{i+1} sigma_i sigma_{i+1}
        if (w[i].index == w[i + 2].index &&
            std::abs(w[i].index - w[i + 1].index) == 1) {
            BraidWord n = b;
            n.letters[i].index = w[i + 1].index;
            n.letters[i + 1].index = w[i].index;
            n.letters[i + 2].index = w[i + 1].index;
            out.push_back(std::move(n));
        }
    }
    return out;
}

struct ExchangeReduceResult {
    BraidWord word;
    std::vector<std::string> moves;
    bool budget_exhausted = false;
};

// Bounded breadth-first search over cyclic rotation, free reduction, braid
// relations and +- destabilization. Sound for unlink certification, not a
// complete decision procedure for braid equivalence.
inline ExchangeReduceResult exchange_reduce(const BraidWord& start, long long budget) {
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");
    struct Node {
        BraidWord word;
        std::vector<std::string> moves;
    };
    auto key = [](const BraidWord& w) {
        std::string k = std::to_string(w.strands) + "|";
        for (const auto& l : w.letters) k += std::to_string(l.sign * l.index) + ",";
        return k;
    };

    Node best{free_reduce(start), {}};
    if (best.word.letters.size() != start.letters.size()) best.moves.push_back("free_reduce");
    std::queue<Node> q;
    std::set<std::string> seen;
    q.push(best);
    seen.insert(key(best.word));
    long long visited = 0;
    bool exhausted = false;

    while (!q.empty()) {
        if (visited++ >= budget) {
            exhausted = !q.empty();
            break;
        }
        Node cur = q.front();
        q.pop();
        if (cur.word < best.word) best = cur;

        auto push = [&](BraidWord w, const std::string& mv) {
            w = free_reduce(w);
            const std::string k = key(w);
            if (seen.insert(k).second) {
                Node nxt{std::move(w), cur.moves};
                nxt.moves.push_back(mv);
                q.push(std::move(nxt));
            }
        };

        if (!cur.word.letters.empty()) {
            push(cyclic_rotate(cur.word, 1), "rotate+1");
            push(cyclic_rotate(cur.word, -1), "rotate-1");
        }
        for (auto& n : braid_relation_neighbors(cur.word)) push(std::move(n), "relation");
        for (int s : {1, -1}) {
            if (auto d = destabilize(cur.word, s))
                push(std::move(*d), s > 0 ? "destabilize+" : "destabilize-");
        }
    }
    return {best.word, best.moves, exhausted};
}

// ---- reduced Burau representation and the Alexander polynomial ----

namespace detail {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

inline PolyMatrix poly_identity(int n) {
    PolyMatrix m(static_cast<std::size_t>(n),
                 std::vector<LaurentPolynomial>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPolynomial::one();
    return m;
}

inline PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size();
    PolyMatrix c(n, std::vector<LaurentPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
            }
        }
    return c;
}

// reduced Burau matrix of sigma_i^{+-1} in B_n, size (n-1)x(n-1)
inline PolyMatrix reduced_burau_generator(int n, int i, int sign) {
    PolyMatrix m = poly_identity(n - 1);
    const auto t = LaurentPolynomial::monomial(1, 1);
    const auto tinv = LaurentPolynomial::monomial(1, -1);
    auto at = [&](int r, int c) -> LaurentPolynomial& {
        return m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    };
    if (sign > 0) {
        at(i, i) = -t;
        if (i > 1) at(i, i - 1) = t;
        if (i < n - 1) at(i, i + 1) = LaurentPolynomial::one();
    } else {
        at(i, i) = -tinv;
        if (i > 1) at(i, i - 1) = LaurentPolynomial::one();
        if (i < n - 1) at(i, i + 1) = tinv;
    }
    return m;
}

// fraction-free Bareiss determinant over the Laurent ring
inline LaurentPolynomial poly_det(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPolynomial::one();
    LaurentPolynomial prev = LaurentPolynomial::one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return LaurentPolynomial::zero();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    LaurentPolynomial d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

}  // namespace detail

inline detail::PolyMatrix reduced_burau(const BraidWord& b) {
    b.validate();
    auto m = detail::poly_identity(b.strands - 1);
    for (const auto& l : b.letters)
        m = detail::poly_mul(m, detail::reduced_burau_generator(b.strands, l.index, l.sign));
    return m;
}

// Alexander polynomial of the knot closure, normalized to the symmetric
// exponent window with positive top coefficient. det(I - burau) * (1-t)/(1-t^n)
// is an exact division; Delta(1) = +-1 is asserted for every knot.
inline LaurentPolynomial alexander_from_braid(const BraidWord& b) {
    b.validate();
    if (closure_components(b) != 1)
        throw std::domain_error("alexander_from_braid needs a knot (one-component) closure");
    if (b.strands == 1) return LaurentPolynomial::one();

    auto burau = reduced_burau(b);
    const int n1 = b.strands - 1;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            auto& e = burau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            e = (i == j ? LaurentPolynomial::one() - e : -e);
        }
    const LaurentPolynomial d = detail::poly_det(std::move(burau));

    std::vector<long long> cyc(static_cast<std::size_t>(b.strands), 1);
    const LaurentPolynomial divisor(0, std::move(cyc));  // (1-t^n)/(1-t)
    LaurentPolynomial delta = d.divide_exact(divisor).normalized_symmetric();
    if (std::llabs(delta.eval_one()) != 1)
        throw std::logic_error("alexander polynomial failed Delta(1) = +-1");
    return delta;
}

// ---- transversality margin of a sampled closed space curve ----

struct SampledCurve {
    enum class Frame { cartesian, cylindrical };
    Frame frame = Frame::cartesian;
    std::vector<double> tau;                      // strictly increasing, first/last map to same point
    std::vector<std::array<double, 3>> points;    // (x,y,z) or (r,phi,z)
};

// min over samples of z' - y x' (cartesian) or r^2 phi' + z' (cylindrical),
// derivatives by centered differences on the closed sequence. The last sample
// must land on the first point; in cylindrical coordinates phi is allowed to
// end a full winding ahead, and that winding is used to unwrap differences.
inline double transversality_margin(const SampledCurve& c) {
    const std::size_t n = c.points.size();
    if (n < 3 || c.tau.size() != n)
        throw std::domain_error("curve needs >= 3 samples with matching parameters");
    std::array<double, 3> winding{};  // per-coordinate increment over one period
    for (int d = 0; d < 3; ++d)
        winding[static_cast<std::size_t>(d)] =
            c.points.back()[static_cast<std::size_t>(d)] -
            c.points.front()[static_cast<std::size_t>(d)];
    const bool phi_winds = c.frame == SampledCurve::Frame::cylindrical;
    for (int d = 0; d < 3; ++d) {
        if (phi_winds && d == 1) continue;
        if (winding[static_cast<std::size_t>(d)] != 0.0)
            throw std::domain_error("curve must be closed (first sample = last point)");
    }
    const std::size_t m = n - 1;  // distinct samples
    const double period = c.tau.back() - c.tau.front();
    if (!(period > 0)) throw std::domain_error("degenerate parameterization");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!(c.tau[k + 1] > c.tau[k])) throw std::domain_error("repeated parameter values");

    auto coord = [&](std::size_t idx, int d, double shift_periods) {
        return c.points[idx][static_cast<std::size_t>(d)] +
               shift_periods * winding[static_cast<std::size_t>(d)];
    };
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t prev = (k + m - 1) % m;
        const std::size_t next = (k + 1) % m;
        const double prev_shift = (k == 0) ? -1.0 : 0.0;     // sample taken one period back
        const double next_shift = (k == m - 1) ? 1.0 : 0.0;  // one period ahead
        double dtau = c.tau[next] + next_shift * period - (c.tau[prev] + prev_shift * period);
        std::array<double, 3> dp{};
        for (int d = 0; d < 3; ++d)
            dp[static_cast<std::size_t>(d)] =
                (coord(next, d, next_shift) - coord(prev, d, prev_shift)) / dtau;
        double v = 0;
        if (c.frame == SampledCurve::Frame::cartesian) {
            v = dp[2] - c.points[k][1] * dp[0];
        } else {
            const double r = c.points[k][0];
            v = r * r * dp[1] + dp[2];
        }
        margin = std::min(margin, v);
    }
    return margin;
}

}  // namespace knotflow
