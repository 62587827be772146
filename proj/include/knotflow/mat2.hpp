#pragma once

// Exact 2x2 matrix algebra over the rings used by the knot-group machinery:
// plain integers, rationals, and Eisenstein integers u + v*w with w^2+w+1 = 0.

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace knotflow {

// ---- rings ----

struct Eisenstein {
    long long u = 0;  // u + v*w, w a primitive cube root of unity
    long long v = 0;

    friend Eisenstein operator+(Eisenstein a, Eisenstein b) { return {a.u + b.u, a.v + b.v}; }
    friend Eisenstein operator-(Eisenstein a, Eisenstein b) { return {a.u - b.u, a.v - b.v}; }
    friend Eisenstein operator-(Eisenstein a) { return {-a.u, -a.v}; }
    friend Eisenstein operator*(Eisenstein a, Eisenstein b) {
        // (u1 + v1 w)(u2 + v2 w), w^2 = -1 - w
        return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u - a.v * b.v};
    }
    friend bool operator==(Eisenstein a, Eisenstein b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(Eisenstein a, Eisenstein b) { return !(a == b); }

    Eisenstein conj() const { return {u - v, -v}; }  // w -> w^2 = -1-w
    long long norm() const { return u * u - u * v + v * v; }

    // exact division; throws when b does not divide a
    friend Eisenstein operator/(Eisenstein a, Eisenstein b) {
        const long long n = b.norm();
        if (n == 0) throw std::domain_error("Eisenstein division by zero");
        const Eisenstein num = a * b.conj();
        if (num.u % n != 0 || num.v % n != 0)
            throw std::domain_error("Eisenstein division not exact");
        return {num.u / n, num.v / n};
    }

    std::string str() const {
        return "(" + std::to_string(u) + (v >= 0 ? "+" : "") + std::to_string(v) + "w)";
    }
};

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(std::llabs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a) { return Rational(-a.num, a.den); }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace ring {

inline long long zero(long long) { return 0; }
inline long long one(long long) { return 1; }
inline Eisenstein zero(Eisenstein) { return {}; }
inline Eisenstein one(Eisenstein) { return {1, 0}; }
inline Rational zero(Rational) { return Rational(0); }
inline Rational one(Rational) { return Rational(1); }

inline long long divide(long long a, long long b) {
    if (b == 0) throw std::domain_error("integer division by zero");
    if (a % b != 0) throw std::domain_error("integer division not exact");
    return a / b;
}
inline Eisenstein divide(Eisenstein a, Eisenstein b) { return a / b; }
inline Rational divide(Rational a, Rational b) { return a / b; }

}  // namespace ring

// ---- matrices ----

template <class R>
struct Mat2 {
    R a{}, b{}, c{}, d{};  // [[a, b], [c, d]]

    static Mat2 identity() {
        Mat2 m;
        m.a = ring::one(R{});
        m.d = ring::one(R{});
        m.b = ring::zero(R{});
        m.c = ring::zero(R{});
        return m;
    }

    R det() const { return a * d - b * c; }
    R trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    // adjugate / det; exact only when det is a unit of the ring (all uses here
    // are SL or GL matrices)
    Mat2 inverse() const {
        const R dt = det();
        return {ring::divide(d, dt), ring::divide(-b, dt),
                ring::divide(-c, dt), ring::divide(a, dt)};
    }

    Mat2 pow(long long k) const {
        Mat2 base = *this;
        if (k < 0) {
            base = base.inverse();
            k = -k;
        }
        Mat2 acc = identity();
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    Mat2 commutator_with(const Mat2& y) const {
        return *this * y * inverse() * y.inverse();
    }
};

using MatZ = Mat2<long long>;
using MatE = Mat2<Eisenstein>;
using MatQ = Mat2<Rational>;

template <class R>
bool projective_equal(const Mat2<R>& x, const Mat2<R>& y) {
    return x == y || x == -y;
}

template <class R>
bool is_identity(const Mat2<R>& x, bool projective = false) {
    const auto id = Mat2<R>::identity();
    return projective ? projective_equal(x, id) : x == id;
}

}  // namespace knotflow
