#pragma once

// Framed-link surgery calculus at the linking-matrix level: blow-ups and
// blow-downs of +-1 framed unknots (Fenn-Rourke twists) and handle slides
// with the framing update n1 + n2 + 2 lk. The geometry beyond pairwise
// linking data is intentionally out of the model.

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotflow/mat2.hpp"

namespace knotflow {

struct FramedLink {
    std::vector<std::string> labels;
    std::vector<std::vector<long long>> matrix;  // symmetric; diagonal = framings

    std::size_t components() const { return labels.size(); }

    void validate() const {
        if (matrix.size() != labels.size())
            throw std::invalid_argument("framed link: matrix size must match labels");
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            if (matrix[i].size() != matrix.size())
                throw std::invalid_argument("framed link: matrix must be square");
            for (std::size_t j = 0; j < i; ++j)
                if (matrix[i][j] != matrix[j][i])
                    throw std::invalid_argument("framed link: matrix must be symmetric");
        }
    }
};

// Signed crossing sum of a diagram; for a two-component diagram the crossing
// sum equals 2 * lk.
inline long long linking_number(const std::vector<int>& crossing_signs) {
    long long s = 0;
    for (int e : crossing_signs) {
        if (e != 1 && e != -1) throw std::invalid_argument("crossing signs must be +-1");
        s += e;
    }
    return s;
}

// Add a split unknot with framing +-1.
inline FramedLink blow_up(const FramedLink& link, int sign, const std::string& label = "") {
    if (sign != 1 && sign != -1) throw std::invalid_argument("blow-up framing must be +-1");
    link.validate();
    FramedLink out = link;
    const std::size_t n = out.components();
    out.labels.push_back(label.empty() ? (sign > 0 ? "u+" : "u-") +
                                             std::to_string(n) : label);
    for (auto& row : out.matrix) row.push_back(0);
    std::vector<long long> newrow(n + 1, 0);
    newrow[n] = sign;
    out.matrix.push_back(std::move(newrow));
    return out;
}

// Delete component i with framing e = +-1 and twist the rest:
// A[j][k] <- A[j][k] - e * A[j][i] * A[i][k]. |det| is preserved and the
// signature drops by e.
inline FramedLink blow_down(const FramedLink& link, std::size_t i) {
    link.validate();
    if (i >= link.components()) throw std::invalid_argument("blow-down: no such component");
    const long long e = link.matrix[i][i];
    if (e != 1 && e != -1)
        throw std::invalid_argument("blow-down needs framing +-1 on the chosen component");
    FramedLink out;
    for (std::size_t j = 0; j < link.components(); ++j)
        if (j != i) out.labels.push_back(link.labels[j]);
    for (std::size_t j = 0; j < link.components(); ++j) {
        if (j == i) continue;
        std::vector<long long> row;
        for (std::size_t k = 0; k < link.components(); ++k) {
            if (k == i) continue;
            row.push_back(link.matrix[j][k] - e * link.matrix[j][i] * link.matrix[i][k]);
        }
        out.matrix.push_back(std::move(row));
    }
    return out;
}

// Slide component i over component j (orientation +1) or over its reverse
// (orientation -1): the congruence A <- E^T A E with E = I + s e_j e_i^T.
// det A is unchanged.
inline FramedLink handle_slide(const FramedLink& link, std::size_t i, std::size_t j,
                               int orientation = 1) {
    link.validate();
    if (i == j) throw std::invalid_argument("handle slide needs two distinct components");
    if (i >= link.components() || j >= link.components())
        throw std::invalid_argument("handle slide: no such component");
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("orientation must be +-1");
    const long long s = orientation;
    FramedLink out = link;
    const std::size_t n = link.components();
    // row/column i gains s * (row/column j); done via fresh values to keep symmetry
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        out.matrix[i][k] = link.matrix[i][k] + s * link.matrix[j][k];
        out.matrix[k][i] = out.matrix[i][k];
    }
    out.matrix[i][i] = link.matrix[i][i] + link.matrix[j][j] + 2 * s * link.matrix[i][j];
    return out;
}

// exact integer determinant (fraction-free elimination)
inline long long linking_matrix_det(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// signature of a symmetric integer matrix by exact congruence diagonalization
inline int signature(const std::vector<std::vector<long long>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("signature needs a square matrix");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    }
    int sig = 0;
    const Rational zero(0);
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == zero) {
            // bring a nonzero diagonal entry into place, or synthesize one from
            // an off-diagonal pair (congruence transforms only)
            std::size_t p = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!(m[i][i] == zero)) {
                    p = i;
                    break;
                }
            if (p != k) {
                std::swap(m[k], m[p]);
                for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][p]);
            } else {
                std::size_t q = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!(m[k][j] == zero)) {
                        q = j;
                        break;
                    }
                if (q == n) continue;  // whole row zero: null direction
                // add +-(row q) so the new diagonal 2 s m[k][q] + m[q][q] is nonzero
                const Rational two_off = m[k][q] + m[k][q];
                const Rational s = (two_off + m[q][q] == zero) ? Rational(-1) : Rational(1);
                for (std::size_t i = 0; i < n; ++i) m[k][i] = m[k][i] + s * m[q][i];
                for (std::size_t i = 0; i < n; ++i) m[i][k] = m[i][k] + s * m[i][q];
            }
        }
        const Rational piv = m[k][k];
        if (piv == zero) continue;
        sig += (Rational(0) < piv) ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == zero) continue;
            const Rational f = m[i][k] / piv;
            for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
            for (std::size_t j = 0; j < n; ++j) m[j][i] = m[j][i] - f * m[j][k];
        }
    }
    return sig;
}

}  // namespace knotflow
