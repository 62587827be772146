#pragma once

// Exact matrix machinery around fibered knots and the punctured-torus group:
// monodromy and Seifert-matrix Alexander polynomials, Markov triples and their
// Vieta involutions, trace-to-matrix reconstruction, geodesic lengths, Dehn
// twist words, and matrix verification of finite group presentations.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotflow/laurent.hpp"
#include "knotflow/mat2.hpp"

namespace knotflow {

// ---- Alexander polynomials from monodromy and Seifert data ----

struct MonodromyAlexander {
    LaurentPolynomial delta;   // t^2 - tr(M) t + det(M), symmetric-normalized
    bool fibered_form = true;  // |constant term| = 1
    bool knot_admissible = true;  // |Delta(1)| = 1
};

inline MonodromyAlexander monodromy_alexander(const MatZ& m) {
    const long long dt = m.det();
    if (dt != 1 && dt != -1)
        throw std::domain_error("monodromy matrix must have determinant +-1");
    LaurentPolynomial delta(0, {dt, -m.trace(), 1});
    MonodromyAlexander out;
    out.fibered_form = std::llabs(dt) == 1;
    out.knot_admissible = std::llabs(delta.eval_one()) == 1;
    out.delta = delta.normalized_symmetric();
    return out;
}

namespace detail {

inline LaurentPolynomial seifert_det(std::vector<std::vector<LaurentPolynomial>> m) {
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
    auto d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

}  // namespace detail

struct SeifertAlexander {
    LaurentPolynomial delta;  // det(V^T - t V), symmetric-normalized
    bool fibered = false;     // monic with |a_0| = |a_2g| = 1
};

inline SeifertAlexander alexander_from_seifert(const std::vector<std::vector<long long>>& v) {
    const std::size_t n = v.size();
    for (const auto& row : v)
        if (row.size() != n) throw std::invalid_argument("Seifert matrix must be square");
    std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = LaurentPolynomial(0, {v[j][i]}) - LaurentPolynomial(1, {v[i][j]});
    SeifertAlexander out;
    out.delta = detail::seifert_det(std::move(m)).normalized_symmetric();
    if (!out.delta.is_zero()) {
        const auto& cs = out.delta.coeffs();
        out.fibered = std::llabs(cs.front()) == 1 && std::llabs(cs.back()) == 1;
    }
    return out;
}

// ---- Markov triples ----

struct MarkovTriple {
    long long m1 = 1, m2 = 1, m3 = 1;

    bool valid() const {
        return m1 > 0 && m2 > 0 && m3 > 0 &&
               m1 * m1 + m2 * m2 + m3 * m3 == 3 * m1 * m2 * m3;
    }

    std::array<long long, 3> sorted() const {
        std::array<long long, 3> a{m1, m2, m3};
        std::sort(a.begin(), a.end());
        return a;
    }

    friend bool operator==(const MarkovTriple& a, const MarkovTriple& b) {
        return a.m1 == b.m1 && a.m2 == b.m2 && a.m3 == b.m3;
    }
};

// The three Vieta involutions m_i -> 3 m_j m_k - m_i, each returned sorted.
inline std::array<MarkovTriple, 3> markov_neighbors(const MarkovTriple& t) {
    if (!t.valid()) throw std::domain_error("not a Markov triple");
    auto mk = [](long long a, long long b, long long c) {
        std::array<long long, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        return MarkovTriple{v[0], v[1], v[2]};
    };
    return {mk(3 * t.m2 * t.m3 - t.m1, t.m2, t.m3),
            mk(t.m1, 3 * t.m1 * t.m3 - t.m2, t.m3),
            mk(t.m1, t.m2, 3 * t.m1 * t.m2 - t.m3)};
}

// Breadth-first orbit of (1,1,1) under the involutions, deduplicated by sort.
inline std::set<std::array<long long, 3>> markov_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    std::set<std::array<long long, 3>> seen;
    std::queue<std::pair<MarkovTriple, int>> q;
    const MarkovTriple root{1, 1, 1};
    seen.insert(root.sorted());
    q.push({root, 0});
    while (!q.empty()) {
        auto [t, d] = q.front();
        q.pop();
        if (d == depth) continue;
        for (const auto& n : markov_neighbors(t))
            if (seen.insert(n.sorted()).second) q.push({n, d + 1});
    }
    return seen;
}

inline std::set<long long> markov_numbers(const std::set<std::array<long long, 3>>& triples) {
    std::set<long long> out;
    for (const auto& t : triples) out.insert(t.begin(), t.end());
    return out;
}

// ---- trace coordinates on the punctured-torus character variety ----

struct TracePair {
    MatQ a, b;
    bool integral = true;  // all entries integers
};

// Reconstruct matrices with tr a = x, tr b = y, tr ab = z from a trace triple
// satisfying x^2 + y^2 + z^2 = xyz (which forces tr[a,b] = -2).
inline TracePair traces_to_matrices(long long x, long long y, long long z) {
    if (z == 0) throw std::domain_error("traces_to_matrices needs z != 0");
    if (x * x + y * y + z * z != x * y * z)
        throw std::domain_error("trace triple must satisfy x^2+y^2+z^2 = xyz");
    TracePair out;
    out.a = {Rational(x * z - y, z), Rational(x, z), Rational(x, z), Rational(y, z)};
    out.b = {Rational(y * z - x, z), Rational(-y, z), Rational(-y, z), Rational(x, z)};
    out.integral = out.a.a.is_integer() && out.a.b.is_integer() && out.a.d.is_integer() &&
                   out.b.a.is_integer() && out.b.b.is_integer() && out.b.d.is_integer();
    return out;
}

// ---- geodesic lengths from traces ----

// l with tr^2 = 4 cosh^2(l/2), hyperbolic case |x| > 2
inline double geodesic_length(double trace) {
    const double a = std::fabs(trace);
    if (!(a > 2.0))
        throw std::domain_error("geodesic length needs a hyperbolic trace, |tr| > 2");
    return 2.0 * std::acosh(a / 2.0);
}

// complex length, branch fixed by Re l > 0
inline std::complex<double> geodesic_length(std::complex<double> trace) {
    if (trace.imag() == 0.0 && std::fabs(trace.real()) <= 2.0)
        throw std::domain_error("real trace in [-2,2] is elliptic/parabolic");
    std::complex<double> l = 2.0 * std::acosh(trace / 2.0);
    if (l.real() < 0.0) l = -l;
    if (l.real() == 0.0)
        throw std::domain_error("trace gives a non-loxodromic element");
    return l;
}

// ---- Dehn twist word calculus in SL(2,Z) ----

enum class TwistLetter { L, R, I };  // longitudinal twist, meridional twist, quarter turn

inline MatZ twist_matrix(TwistLetter g) {
    switch (g) {
        case TwistLetter::L: return {1, 0, 1, 1};
        case TwistLetter::R: return {1, 1, 0, 1};
        case TwistLetter::I: return {0, -1, 1, 0};
    }
    throw std::logic_error("unreachable");
}

struct TwistFactor {
    TwistLetter letter;
    long long exponent = 1;
};

inline MatZ twist_word_eval(const std::vector<TwistFactor>& word) {
    MatZ m = MatZ::identity();
    for (const auto& f : word) m = m * twist_matrix(f.letter).pow(f.exponent);
    return m;
}

// U V^{e1} U V^{e2} ... with U = -I_hat and V = R^{-1}
inline MatZ ghys_word_eval(const std::vector<int>& eps) {
    if (eps.empty()) throw std::invalid_argument("ghys word needs >= 1 exponent");
    const MatZ u = -twist_matrix(TwistLetter::I);
    const MatZ v = twist_matrix(TwistLetter::R).inverse();
    MatZ m = MatZ::identity();
    for (int e : eps) {
        if (e != 1 && e != -1) throw std::invalid_argument("ghys exponents must be +-1");
        m = m * u * v.pow(e);
    }
    return m;
}

// ---- presentation checking ----

struct Presentation {
    std::vector<std::string> generators;
    // relator = product of (generator index, exponent); relator == identity
    std::vector<std::vector<std::pair<int, long long>>> relators;
};

struct RelatorReport {
    bool passes = false;
    std::string relator;
};

// Evaluate each relator left to right under the assignment; a relator passes
// when the product is the identity (+-identity in projective mode). This is a
// sound necessary condition for the representation, not a word-problem solver.
template <class R>
std::vector<RelatorReport> presentation_check(const Presentation& pres,
                                              const std::vector<Mat2<R>>& assignment,
                                              bool projective = false) {
    if (assignment.size() != pres.generators.size())
        throw std::invalid_argument("assignment size must match generator count");
    for (const auto& m : assignment)
        if (m.det() == ring::zero(R{})) throw std::domain_error("singular generator assignment");
    std::vector<RelatorReport> out;
    for (const auto& rel : pres.relators) {
        Mat2<R> prod = Mat2<R>::identity();
        std::string text;
        for (const auto& [g, e] : rel) {
            if (g < 0 || static_cast<std::size_t>(g) >= assignment.size())
                throw std::invalid_argument("relator references unknown generator");
            prod = prod * assignment[static_cast<std::size_t>(g)].pow(e);
            text += pres.generators[static_cast<std::size_t>(g)];
            if (e != 1) text += "^" + std::to_string(e);
            text += " ";
        }
        out.push_back({is_identity(prod, projective), text});
    }
    return out;
}

}  // namespace knotflow
