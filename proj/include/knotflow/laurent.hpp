#pragma once

// Integer-coefficient Laurent polynomials in one variable t.
// Coefficients are stored densely from the lowest exponent up; the zero
// polynomial has an empty coefficient vector. All arithmetic is exact.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotflow {

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    LaurentPolynomial(long long low, std::vector<long long> cs)
        : lowest_(low), coeffs_(std::move(cs)) {
        trim();
    }

    static LaurentPolynomial zero() { return {}; }

    static LaurentPolynomial constant(long long c) {
        return LaurentPolynomial(0, {c});
    }

    static LaurentPolynomial one() { return constant(1); }

    // c * t^e
    static LaurentPolynomial monomial(long long c, long long e) {
        return LaurentPolynomial(e, {c});
    }

    bool is_zero() const { return coeffs_.empty(); }
    long long lowest() const { return lowest_; }
    long long highest() const { return lowest_ + static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    // span of exponents; -1 for the zero polynomial
    long long degree_span() const {
        return coeffs_.empty() ? -1 : static_cast<long long>(coeffs_.size()) - 1;
    }

    long long coeff(long long e) const {
        const long long k = e - lowest_;
        if (k < 0 || k >= static_cast<long long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    long long leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    // value at t = 1 (sum of coefficients)
    long long eval_one() const {
        long long s = 0;
        for (long long c : coeffs_) s += c;
        return s;
    }

    long long eval_minus_one() const {
        long long s = 0;
        long long sign = (lowest_ % 2 == 0) ? 1 : -1;
        for (long long c : coeffs_) {
            s += sign * c;
            sign = -sign;
        }
        return s;
    }

    double eval(double t) const {
        double s = 0.0;
        double p = std::pow(t, static_cast<double>(lowest_));
        for (long long c : coeffs_) {
            s += static_cast<double>(c) * p;
            p *= t;
        }
        return s;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long long low = std::min(a.lowest_, b.lowest_);
        const long long high = std::max(a.highest(), b.highest());
        std::vector<long long> cs(static_cast<std::size_t>(high - low + 1), 0);
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
            cs[static_cast<std::size_t>(a.lowest_ - low) + k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
            cs[static_cast<std::size_t>(b.lowest_ - low) + k] += b.coeffs_[k];
        return LaurentPolynomial(low, std::move(cs));
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a + (-b);
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<long long> cs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return LaurentPolynomial(a.lowest_ + b.lowest_, std::move(cs));
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return !(a == b);
    }

    // t^k * this
    LaurentPolynomial shifted(long long k) const {
        LaurentPolynomial r = *this;
        r.lowest_ += k;
        return r;
    }

    // substitute t -> t^p
    LaurentPolynomial compose_power(long long p) const {
        if (is_zero()) return zero();
        if (p < 1) throw std::invalid_argument("compose_power: p must be >= 1");
        std::vector<long long> cs(static_cast<std::size_t>((coeffs_.size() - 1) * p + 1), 0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            cs[k * static_cast<std::size_t>(p)] = coeffs_[k];
        return LaurentPolynomial(lowest_ * p, std::move(cs));
    }

    // substitute t -> 1/t
    LaurentPolynomial mirrored() const {
        if (is_zero()) return zero();
        std::vector<long long> cs(coeffs_.rbegin(), coeffs_.rend());
        return LaurentPolynomial(-highest(), std::move(cs));
    }

    // Exact division; throws std::logic_error when the division is not exact.
    LaurentPolynomial divide_exact(const LaurentPolynomial& d) const {
        if (d.is_zero()) throw std::logic_error("laurent division by zero");
        if (is_zero()) return zero();
        std::vector<long long> rem = coeffs_;
        std::vector<long long> q(coeffs_.size(), 0);
        const auto& dc = d.coeffs_;
        const long long dlead = dc.back();
        // divide from the top down; quotient exponents tracked relative to lowest_
        for (long long k = static_cast<long long>(rem.size()) - 1;
             k >= static_cast<long long>(dc.size()) - 1; --k) {
            const long long rk = rem[static_cast<std::size_t>(k)];
            if (rk == 0) continue;
            if (rk % dlead != 0) throw std::logic_error("laurent division not exact");
            const long long f = rk / dlead;
            const long long off = k - (static_cast<long long>(dc.size()) - 1);
            q[static_cast<std::size_t>(off)] = f;
            for (std::size_t j = 0; j < dc.size(); ++j)
                rem[static_cast<std::size_t>(off) + j] -= f * dc[j];
        }
        for (long long c : rem)
            if (c != 0) throw std::logic_error("laurent division not exact");
        return LaurentPolynomial(lowest_ - d.lowest_, std::move(q));
    }

    // Equality up to a unit +-t^k.
    static bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.coeffs_ == b.coeffs_) return true;
        LaurentPolynomial nb = -b;
        return a.coeffs_ == nb.coeffs_;
    }

    // Canonical representative up to units: symmetric exponent window when the
    // degree span is even, lowest exponent 0 otherwise; top coefficient > 0.
    LaurentPolynomial normalized_symmetric() const {
        if (is_zero()) return zero();
        LaurentPolynomial r = *this;
        const long long span = r.degree_span();
        r.lowest_ = (span % 2 == 0) ? -span / 2 : 0;
        if (r.coeffs_.back() < 0)
            for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long long k = static_cast<long long>(coeffs_.size()) - 1; k >= 0; --k) {
            const long long c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            const long long e = lowest_ + k;
            if (!out.empty()) out += (c > 0) ? " + " : " - ";
            else if (c < 0) out += "-";
            const long long ac = std::llabs(c);
            if (ac != 1 || e == 0) out += std::to_string(ac);
            if (e != 0) {
                if (ac != 1) out += "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void trim() {
        std::size_t front = 0;
        while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
        if (front == coeffs_.size()) {
            coeffs_.clear();
            lowest_ = 0;
            return;
        }
        std::size_t back = coeffs_.size();
        while (back > front && coeffs_[back - 1] == 0) --back;
        coeffs_ = std::vector<long long>(coeffs_.begin() + static_cast<long>(front),
                                         coeffs_.begin() + static_cast<long>(back));
        lowest_ += static_cast<long long>(front);
    }

    long long lowest_ = 0;
    std::vector<long long> coeffs_;
};

}  // namespace knotflow
