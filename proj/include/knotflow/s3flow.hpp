#pragma once

// Contact geometry of the unit 3-sphere in R^4 = {(x1,y1,x2,y2)}: the
// half-scaled contact form, Reeb and Liouville fields, the orthogonal frame
// pair closing on the Reeb field, Runge-Kutta flow integration with conserved
// records, closed-orbit detection, and rational frequency classification.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace knotflow {

struct PointR4 {
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

    std::array<double, 4> as_array() const { return {x1, y1, x2, y2}; }

    double norm() const { return std::sqrt(x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2); }

    PointR4 scaled(double s) const { return {s * x1, s * y1, s * x2, s * y2}; }

    static PointR4 from_array(const std::array<double, 4>& a) {
        return {a[0], a[1], a[2], a[3]};
    }
};

using Vec4 = std::array<double, 4>;

inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double vec_norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

// Reeb field 2(x1 d_y1 - y1 d_x1 + x2 d_y2 - y2 d_x2)
inline Vec4 reeb_at(const PointR4& p) { return {-2 * p.y1, 2 * p.x1, -2 * p.y2, 2 * p.x2}; }

// Liouville (radial) field, half scale
inline Vec4 liouville_at(const PointR4& p) { return {0.5 * p.x1, 0.5 * p.y1, 0.5 * p.x2, 0.5 * p.y2}; }

// quaternionic frame pair orthogonal to both the radial and Reeb directions
inline Vec4 frame_breve_at(const PointR4& p) { return {-p.x2, p.y2, p.x1, -p.y1}; }
inline Vec4 frame_check_at(const PointR4& p) { return {-p.y2, -p.x2, p.y1, p.x1}; }

// alpha = (x1 dy1 - y1 dx1 + x2 dy2 - y2 dx2) / 2 evaluated on a tangent vector
inline double alpha_eval(const PointR4& p, const Vec4& u) {
    return 0.5 * (p.x1 * u[1] - p.y1 * u[0] + p.x2 * u[3] - p.y2 * u[2]);
}

// omega = dx1^dy1 + dx2^dy2 (= d alpha) on a pair of vectors
inline double omega_eval(const Vec4& u, const Vec4& v) {
    return u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2];
}

namespace detail {

inline void require_on_sphere(const PointR4& p, double tol) {
    if (std::fabs(p.norm() - 1.0) >= tol)
        throw std::domain_error("point is not on the unit 3-sphere");
}

}  // namespace detail

struct ReebCheck {
    double alpha_value = 0;     // alpha(Reeb); 1 on the unit sphere
    double d_alpha_defect = 0;  // max |omega(Reeb, t_k)| over a tangent frame
};

inline ReebCheck check_reeb_conditions(const PointR4& p, double tol = 1e-9) {
    detail::require_on_sphere(p, tol);
    const Vec4 reeb = reeb_at(p);
    ReebCheck out;
    out.alpha_value = alpha_eval(p, reeb);
    const std::array<Vec4, 3> frame{reeb, frame_breve_at(p), frame_check_at(p)};
    for (Vec4 t : frame) {
        const double n = vec_norm(t);
        for (double& c : t) c /= n;
        out.d_alpha_defect = std::max(out.d_alpha_defect, std::fabs(omega_eval(reeb, t)));
    }
    return out;
}

// i_Reeb i_Liouville omega = omega(Liouville, Reeb); equals |p|^2, so 1 on S^3
inline double omega_pairing(const PointR4& p, double sphere_tol = 1e-9) {
    if (sphere_tol < 1e9)  // pass a huge tolerance to evaluate off-sphere scaling
        detail::require_on_sphere(p, sphere_tol);
    return omega_eval(liouville_at(p), reeb_at(p));
}

// [breve, check] computed from the constant Jacobians of the linear frame
// fields; equals -2 * Reeb everywhere.
inline Vec4 frame_commutator(const PointR4& p) {
    // breve = A x with A rows {(-x2),(y2),(x1),(-y1)}; check = B x
    static constexpr std::array<std::array<double, 4>, 4> A{{{0, 0, -1, 0},
                                                             {0, 0, 0, 1},
                                                             {1, 0, 0, 0},
                                                             {0, -1, 0, 0}}};
    static constexpr std::array<std::array<double, 4>, 4> B{{{0, 0, 0, -1},
                                                             {0, 0, -1, 0},
                                                             {0, 1, 0, 0},
                                                             {1, 0, 0, 0}}};
    const Vec4 x = p.as_array();
    Vec4 out{};
    for (int i = 0; i < 4; ++i) {
        double s = 0;
        for (int j = 0; j < 4; ++j) {
            double ba = 0, ab = 0;
            for (int k = 0; k < 4; ++k) {
                ba += B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                      A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                ab += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                      B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
            s += (ba - ab) * x[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

// flow selector: the Reeb-direction unit-rate rotation pair, or the weighted
// variant rotating pair i at angular rate 1/r_i
struct FlowField {
    enum class Kind { standard, weighted };
    Kind kind = Kind::standard;
    double r1 = 1.0;
    double r2 = 1.0;

    static FlowField standard() { return {}; }

    static FlowField weighted(double r1, double r2) {
        if (!(r1 > 0) || !(r2 > 0))
            throw std::invalid_argument("weighted flow needs positive radii");
        return {Kind::weighted, r1, r2};
    }

    Vec4 velocity(const PointR4& p) const {
        const double w1 = kind == Kind::standard ? 1.0 : 1.0 / r1;
        const double w2 = kind == Kind::standard ? 1.0 : 1.0 / r2;
        return {-w1 * p.y1, w1 * p.x1, -w2 * p.y2, w2 * p.x2};
    }

    std::array<double, 2> frequencies() const {
        return kind == Kind::standard ? std::array<double, 2>{1.0, 1.0}
                                      : std::array<double, 2>{1.0 / r1, 1.0 / r2};
    }
};

inline double oscillator_energy(const PointR4& p) {
    return 0.5 * (p.x1 * p.x1 + p.x2 * p.x2 + p.y1 * p.y1 + p.y2 * p.y2);
}

// conserved splitting integral (f2 - f1)/2 with f_i the pair amplitudes
inline double bott_integral(const PointR4& p) {
    const double f1 = p.x1 * p.x1 + p.y1 * p.y1;
    const double f2 = p.x2 * p.x2 + p.y2 * p.y2;
    return 0.5 * (f2 - f1);
}

struct TrajectoryS3 {
    std::vector<double> times;
    std::vector<PointR4> points;
    std::vector<double> energy;  // oscillator energy record
    std::vector<double> bott;    // splitting integral record
};

// Classical RK4 with radial renormalization after every step.
inline TrajectoryS3 integrate_flow(const PointR4& x0, const FlowField& field, double dt,
                                   long long steps) {
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    if (steps <= 0) throw std::invalid_argument("steps must be positive");
    detail::require_on_sphere(x0, 1e-9);

    TrajectoryS3 traj;
    traj.times.reserve(static_cast<std::size_t>(steps) + 1);
    traj.points.reserve(static_cast<std::size_t>(steps) + 1);
    auto record = [&](double t, const PointR4& p) {
        traj.times.push_back(t);
        traj.points.push_back(p);
        traj.energy.push_back(oscillator_energy(p));
        traj.bott.push_back(bott_integral(p));
    };

    PointR4 u = x0;
    record(0.0, u);
    for (long long s = 0; s < steps; ++s) {
        const Vec4 k1 = field.velocity(u);
        auto advance = [&](double f, const Vec4& k) {
            return PointR4{u.x1 + f * k[0], u.y1 + f * k[1], u.x2 + f * k[2], u.y2 + f * k[3]};
        };
        const Vec4 k2 = field.velocity(advance(0.5 * dt, k1));
        const Vec4 k3 = field.velocity(advance(0.5 * dt, k2));
        const Vec4 k4 = field.velocity(advance(dt, k3));
        u = PointR4{u.x1 + dt / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
                    u.y1 + dt / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
                    u.x2 + dt / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]),
                    u.y2 + dt / 6.0 * (k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3])};
        u = u.scaled(1.0 / u.norm());
        record(dt * static_cast<double>(s + 1), u);
    }
    return traj;
}

// Smallest T > 0 with |x(T) - x(0)| < eps, refined by linear interpolation
// between the bracketing samples; nullopt when no return occurs in the window.
inline std::optional<double> detect_closed_orbit(const TrajectoryS3& traj, double eps) {
    if (traj.points.empty()) throw std::invalid_argument("empty trajectory");
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    const PointR4 origin = traj.points.front();
    auto dist = [&](const PointR4& p) {
        const double dx1 = p.x1 - origin.x1, dy1 = p.y1 - origin.y1;
        const double dx2 = p.x2 - origin.x2, dy2 = p.y2 - origin.y2;
        return std::sqrt(dx1 * dx1 + dy1 * dy1 + dx2 * dx2 + dy2 * dy2);
    };

    bool left_ball = false;
    for (std::size_t k = 1; k < traj.points.size(); ++k) {
        const double d = dist(traj.points[k]);
        if (!left_ball) {
            if (d > 2.0 * eps) left_ball = true;
            continue;
        }
        if (d >= eps) continue;
        // linear refinement on the two segments surrounding sample k
        double best_t = traj.times[k];
        double best_d = d;
        for (std::size_t seg = k - 1; seg <= k && seg + 1 < traj.points.size(); ++seg) {
            const auto& a = traj.points[seg];
            const auto& b = traj.points[seg + 1];
            const Vec4 ab{b.x1 - a.x1, b.y1 - a.y1, b.x2 - a.x2, b.y2 - a.y2};
            const Vec4 ao{origin.x1 - a.x1, origin.y1 - a.y1, origin.x2 - a.x2,
                          origin.y2 - a.y2};
            const double len2 = dot(ab, ab);
            if (len2 == 0) continue;
            double s = dot(ao, ab) / len2;
            s = std::clamp(s, 0.0, 1.0);
            const Vec4 diff{ao[0] - s * ab[0], ao[1] - s * ab[1], ao[2] - s * ab[2],
                            ao[3] - s * ab[3]};
            const double ds = vec_norm(diff);
            if (ds < best_d) {
                best_d = ds;
                best_t = traj.times[seg] + s * (traj.times[seg + 1] - traj.times[seg]);
            }
        }
        return best_t;
    }
    return std::nullopt;
}

struct TorusKnotType {
    long long p = 1;
    long long q = 1;
    int orientation = 1;
};

// Continued-fraction rational detection of omega1/omega2 with bounded
// denominator; nullopt when no convergent matches within 1e-9.
inline std::optional<TorusKnotType> torus_knot_type(double omega1, double omega2,
                                                    long long max_den) {
    if (!(omega1 > 0) || !(omega2 > 0))
        throw std::invalid_argument("frequencies must be positive");
    if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");
    const double ratio = omega1 / omega2;

    // convergents h_k/k_k of the continued fraction of ratio; the first one
    // inside the tolerance has the smallest possible denominator
    double x = ratio;
    long long h_prev = 0, h = 1, k_prev = 1, k = 0;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(x);
        const long long a = static_cast<long long>(fl);
        const long long hn = a * h + h_prev;
        const long long kn = a * k + k_prev;
        if (kn > max_den) break;
        h_prev = h;
        h = hn;
        k_prev = k;
        k = kn;
        if (k >= 1 && h >= 1 &&
            std::fabs(ratio - static_cast<double>(h) / static_cast<double>(k)) < 1e-9) {
            const long long g = std::gcd(h, k);
            return TorusKnotType{h / g, k / g, 1};
        }
        const double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

// { f, g } with momenta (x1, x2) and coordinates (y1, y2), central differences.
inline double poisson_bracket(const std::function<double(const PointR4&)>& f,
                              const std::function<double(const PointR4&)>& g,
                              const PointR4& p, double h = 1e-6) {
    if (!(h > 0)) throw std::invalid_argument("step must be positive");
    auto partial = [&](const std::function<double(const PointR4&)>& fn, int coord) {
        PointR4 pp = p, pm = p;
        double* fields_p[4] = {&pp.x1, &pp.y1, &pp.x2, &pp.y2};
        double* fields_m[4] = {&pm.x1, &pm.y1, &pm.x2, &pm.y2};
        *fields_p[coord] += h;
        *fields_m[coord] -= h;
        return (fn(pp) - fn(pm)) / (2.0 * h);
    };
    // coords: 0=x1, 1=y1, 2=x2, 3=y2; momentum/coordinate pairs (x1,y1), (x2,y2)
    double s = 0;
    s += partial(f, 0) * partial(g, 1) - partial(f, 1) * partial(g, 0);
    s += partial(f, 2) * partial(g, 3) - partial(f, 3) * partial(g, 2);
    return s;
}

}  // namespace knotflow
