#pragma once

#include <cmath>

#include "latgauge/group.hpp"
#include "latgauge/rng.hpp"

namespace latgauge {

// SU(2) arithmetic in quaternion components: M = q0*I + i(q1 s1 + q2 s2 + q3 s3)
// with s_a the Pauli matrices. For any complex 2x2 matrix M the projection
// w_mu = Re m_mu of its quaternion coordinates is all that enters
// Re Tr(Q M) = 2 (q0 w0 - q.w), which makes the exact single-site heat bath
// and conditional means available even with U(2)-valued environments.

struct Quat {
    double a0 = 1.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;

    double norm() const { return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3); }
    Quat conj() const { return Quat{a0, -a1, -a2, -a3}; }
    Quat scaled(double s) const { return Quat{a0 * s, a1 * s, a2 * s, a3 * s}; }
};

inline Quat quat_mul(const Quat& p, const Quat& q) {
    return Quat{p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
                p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
                p.a0 * q.a2 + p.a2 * q.a0 + p.a3 * q.a1 - p.a1 * q.a3,
                p.a0 * q.a3 + p.a3 * q.a0 + p.a1 * q.a2 - p.a2 * q.a1};
}

/// Real quaternion coordinates of a complex 2x2 matrix (the part that
/// couples to SU(2) in Re Tr(Q M)).
inline Quat quat_re_part(const Mat& m) {
    return Quat{0.5 * (m(0, 0).real() + m(1, 1).real()),
                0.5 * (m(0, 1).imag() + m(1, 0).imag()),
                0.5 * (m(0, 1).real() - m(1, 0).real()),
                0.5 * (m(0, 0).imag() - m(1, 1).imag())};
}

inline Mat quat_to_mat(const Quat& q) {
    Mat m(2, 2);
    m(0, 0) = Cplx(q.a0, q.a3);
    m(0, 1) = Cplx(q.a2, q.a1);
    m(1, 0) = Cplx(-q.a2, q.a1);
    m(1, 1) = Cplx(q.a0, -q.a3);
    return m;
}

/// Uniform point on the sphere of radius r, written into (x,y,z).
inline void sphere_point(Rng& rng, double r, double& x, double& y, double& z) {
    z = r * (2.0 * rng.uniform() - 1.0);
    const double rho = std::sqrt(std::max(r * r - z * z, 0.0));
    const double phi = 6.283185307179586 * rng.uniform();
    x = rho * std::cos(phi);
    y = rho * std::sin(phi);
}

/// Sample a0 with density proportional to sqrt(1-a0^2) exp(alpha a0) on
/// [-1,1]. Kennedy-Pendleton for large alpha, Creutz for moderate alpha,
/// plain rejection from the flat envelope for alpha ~ 0.
inline double su2_trace_sample(double alpha, Rng& rng) {
    if (alpha < 1e-12) {
        while (true) {
            const double a0 = 2.0 * rng.uniform() - 1.0;
            const double u = rng.uniform();
            if (u * u <= 1.0 - a0 * a0) {
                return a0;
            }
        }
    }
    if (alpha <= 2.0) {
        // Creutz: a0 = 1 + log(xl + (1-xl) u)/alpha has density ~ e^{alpha a0}.
        const double xl = std::exp(-2.0 * alpha);
        while (true) {
            const double r = xl + (1.0 - xl) * rng.uniform();
            const double a0 = 1.0 + std::log(r) / alpha;
            const double u = rng.uniform();
            if (u * u <= 1.0 - a0 * a0) {
                return a0;
            }
        }
    }
    // Kennedy-Pendleton: d = 1 - a0 with density ~ sqrt(d) e^{-alpha d},
    // corrected by sqrt(1 - d/2).
    while (true) {
        const double x1 = std::log(rng.uniform_pos());
        const double x2 = std::log(rng.uniform_pos());
        const double c = std::cos(6.283185307179586 * rng.uniform());
        const double d = -(x2 + x1 * c * c) / alpha;
        if (d > 2.0) {
            continue;
        }
        const double u = rng.uniform();
        if (u * u <= 1.0 - 0.5 * d) {
            return 1.0 - d;
        }
    }
}

/// Haar sample on SU(2) in quaternion form (uniform on S^3).
inline Quat su2_haar_quat(Rng& rng) {
    const double a0 = su2_trace_sample(0.0, rng);
    double x, y, z;
    sphere_point(rng, std::sqrt(std::max(1.0 - a0 * a0, 0.0)), x, y, z);
    return Quat{a0, x, y, z};
}

/// Exact sample of Q ~ exp(coeff * Re Tr(Q m)) dHaar on SU(2); `m` may be any
/// complex 2x2 environment (only its real quaternion part enters).
inline Mat su2_heatbath(const Mat& m, double coeff, Rng& rng) {
    const Quat w = quat_re_part(m);
    const double k = w.norm();
    const double alpha = 2.0 * coeff * k;

    if (alpha < 1e-12) {
        return quat_to_mat(su2_haar_quat(rng));
    }
    const double a0 = su2_trace_sample(alpha, rng);
    double x, y, z;
    sphere_point(rng, std::sqrt(std::max(1.0 - a0 * a0, 0.0)), x, y, z);
    const Quat wsample{a0, x, y, z};
    const Quat v = w.scaled(1.0 / k);
    return quat_to_mat(quat_mul(wsample, v.conj())); // Q = W V^{-1}
}

/// I2(x)/I1(x) by the ratio of the two power series.
inline double bessel_i2_over_i1(double x) {
    // I1(x) = (x/2)   sum_k t^k / (k! (k+1)!),  t = x^2/4
    // I2(x) = (x/2)^2 sum_k t^k / (k! (k+2)!)
    const double t = 0.25 * x * x;
    double term1 = 1.0, term2 = 0.5;
    double s1 = term1, s2 = term2;
    for (int k = 1; k < 120; ++k) {
        term1 *= t / (static_cast<double>(k) * (k + 1));
        term2 *= t / (static_cast<double>(k) * (k + 2));
        s1 += term1;
        s2 += term2;
        if (term1 < 1e-18 * s1 && term2 < 1e-18 * s2) {
            break;
        }
    }
    return 0.5 * x * s2 / s1;
}

/// E[Q | environment m] under exp(coeff Re Tr(Q m)) dHaar on SU(2):
/// (I2/I1)(alpha) * V^{-1} with alpha = 2 coeff |w|, V = w/|w|.
inline Mat su2_conditional_mean(const Mat& m, double coeff) {
    const Quat w = quat_re_part(m);
    const double k = w.norm();
    if (k < 1e-300 || coeff == 0.0) {
        return Mat::Zero(2, 2);
    }
    const double alpha = 2.0 * coeff * k;
    const double g = bessel_i2_over_i1(alpha);
    return quat_to_mat(w.conj().scaled(g / k));
}

} // namespace latgauge
