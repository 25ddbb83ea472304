#include "latgauge/group.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace latgauge {

namespace {

constexpr double kPi = 3.14159265358979323846;

const Cplx kI(0.0, 1.0);

} // namespace

std::string family_name(GroupFamily f) {
    switch (f) {
    case GroupFamily::U: return "U";
    case GroupFamily::SU: return "SU";
    case GroupFamily::SO: return "SO";
    }
    return "?";
}

int GroupSpec::algebra_dim() const {
    switch (family) {
    case GroupFamily::U: return n * n;
    case GroupFamily::SU: return n * n - 1;
    case GroupFamily::SO: return n * (n - 1) / 2;
    }
    return 0;
}

void GroupSpec::validate() const {
    if (n < 1 || n > kMaxMatrixSize) {
        throw InvalidArgument("matrix size n must be in [1, 8], got " + std::to_string(n));
    }
    if (family == GroupFamily::SU && n < 2) {
        throw InvalidArgument("SU(1) is trivial and not supported");
    }
}

Mat identity_mat(int n) { return Mat::Identity(n, n); }

double group_residual(const GroupSpec& spec, const Mat& m) {
    const int n = spec.n;
    double r = (m.adjoint() * m - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (spec.family == GroupFamily::SU || spec.family == GroupFamily::SO) {
        r = std::max(r, std::abs(m.determinant() - Cplx(1.0, 0.0)));
    }
    if (spec.family == GroupFamily::SO) {
        r = std::max(r, m.imag().cwiseAbs().maxCoeff());
    }
    return r;
}

bool in_group(const GroupSpec& spec, const Mat& m, double tol) {
    return m.rows() == spec.n && m.cols() == spec.n && group_residual(spec, m) <= tol;
}

double algebra_inner(const Mat& x, const Mat& y) {
    return (x.adjoint() * y).trace().real();
}

// Basis layout. Off-diagonal index pairs (k<l) in lexicographic order:
//   SO:    (E_kl - E_lk)/sqrt(2)
//   U/SU:  (E_kl - E_lk)/sqrt(2), then i(E_kl + E_lk)/sqrt(2)
// followed, for U/SU, by the Cartan directions
//   H_j = i diag(1,...,1,-j,0,...)/sqrt(j(j+1)),  j = 1..n-1
// and, for U only, the trace direction i*I/sqrt(n).
Mat algebra_basis_matrix(const GroupSpec& spec, int a) {
    const int n = spec.n;
    Mat x = Mat::Zero(n, n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    const int n_off_pairs = n * (n - 1) / 2;
    if (spec.family == GroupFamily::SO) {
        int idx = 0;
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l, ++idx) {
                if (idx == a) {
                    x(k, l) = Cplx(inv_sqrt2, 0.0);
                    x(l, k) = Cplx(-inv_sqrt2, 0.0);
                    return x;
                }
            }
        }
        throw InvalidArgument("basis index out of range");
    }

    if (a < 2 * n_off_pairs) {
        const int pair = a / 2;
        const bool sym = (a % 2) == 0;
        int idx = 0;
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l, ++idx) {
                if (idx == pair) {
                    if (sym) {
                        x(k, l) = Cplx(inv_sqrt2, 0.0);
                        x(l, k) = Cplx(-inv_sqrt2, 0.0);
                    } else {
                        x(k, l) = kI * inv_sqrt2;
                        x(l, k) = kI * inv_sqrt2;
                    }
                    return x;
                }
            }
        }
    }
    int rest = a - 2 * n_off_pairs;
    if (rest < n - 1) {
        const int j = rest + 1;
        const double norm = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
        for (int k = 0; k < j; ++k) {
            x(k, k) = kI * norm;
        }
        x(j, j) = -kI * (norm * j);
        return x;
    }
    rest -= n - 1;
    if (spec.family == GroupFamily::U && rest == 0) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(n));
        for (int k = 0; k < n; ++k) {
            x(k, k) = kI * norm;
        }
        return x;
    }
    throw InvalidArgument("basis index out of range");
}

std::vector<AlgebraElement> algebra_basis(const GroupSpec& spec) {
    spec.validate();
    const int dim = spec.algebra_dim();
    std::vector<AlgebraElement> basis;
    basis.reserve(dim);
    for (int a = 0; a < dim; ++a) {
        RVec c = RVec::Zero(dim);
        c[a] = 1.0;
        basis.push_back(AlgebraElement{spec, std::move(c)});
    }
    return basis;
}

RVec algebra_coeffs(const GroupSpec& spec, const Mat& x) {
    const int n = spec.n;
    const int dim = spec.algebra_dim();
    RVec c(dim);
    const double sqrt2 = std::sqrt(2.0);

    if (spec.family == GroupFamily::SO) {
        int idx = 0;
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l, ++idx) {
                // <X_a, x> with X_a = (E_kl - E_lk)/sqrt(2)
                c[idx] = (x(k, l).real() - x(l, k).real()) / sqrt2;
            }
        }
        return c;
    }

    int idx = 0;
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            c[idx++] = (x(k, l).real() - x(l, k).real()) / sqrt2;
            c[idx++] = (x(k, l).imag() + x(l, k).imag()) / sqrt2;
        }
    }
    for (int j = 1; j < n; ++j) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
        double s = 0.0;
        for (int k = 0; k < j; ++k) {
            s += x(k, k).imag();
        }
        s -= j * x(j, j).imag();
        c[idx++] = s * norm;
    }
    if (spec.family == GroupFamily::U) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            s += x(k, k).imag();
        }
        c[idx++] = s / std::sqrt(static_cast<double>(n));
    }
    return c;
}

Mat AlgebraElement::matrix() const {
    const int n = spec.n;
    const int dim = spec.algebra_dim();
    Mat x = Mat::Zero(n, n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    if (spec.family == GroupFamily::SO) {
        int idx = 0;
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l, ++idx) {
                x(k, l) += Cplx(coeffs[idx] * inv_sqrt2, 0.0);
                x(l, k) -= Cplx(coeffs[idx] * inv_sqrt2, 0.0);
            }
        }
        return x;
    }

    int idx = 0;
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const double cs = coeffs[idx++] * inv_sqrt2;
            const double ca = coeffs[idx++] * inv_sqrt2;
            x(k, l) += Cplx(cs, ca);
            x(l, k) += Cplx(-cs, ca);
        }
    }
    for (int j = 1; j < n; ++j) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
        const double cj = coeffs[idx++] * norm;
        for (int k = 0; k < j; ++k) {
            x(k, k) += kI * cj;
        }
        x(j, j) -= kI * (cj * j);
    }
    if (spec.family == GroupFamily::U && idx < dim) {
        const double c0 = coeffs[idx++] / std::sqrt(static_cast<double>(n));
        for (int k = 0; k < n; ++k) {
            x(k, k) += kI * c0;
        }
    }
    return x;
}

Mat project_to_algebra(const GroupSpec& spec, const Mat& m) {
    const int n = spec.n;
    Mat skew = 0.5 * (m - m.adjoint());
    switch (spec.family) {
    case GroupFamily::U:
        return skew;
    case GroupFamily::SU: {
        const Cplx tr = skew.trace();
        return skew - (tr / static_cast<double>(n)) * Mat::Identity(n, n);
    }
    case GroupFamily::SO: {
        Mat re = skew.real().cast<Cplx>();
        return 0.5 * (re - re.transpose());
    }
    }
    return skew;
}

Mat random_algebra(const GroupSpec& spec, Rng& rng, double sigma) {
    const int n = spec.n;
    Mat x = Mat::Zero(n, n);
    const double s2 = sigma / std::sqrt(2.0);

    if (spec.family == GroupFamily::SO) {
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l) {
                const double v = s2 * rng.normal();
                x(k, l) = Cplx(v, 0.0);
                x(l, k) = Cplx(-v, 0.0);
            }
        }
        return x;
    }

    // u(n) Gaussian, then orthogonal projection onto su(n) if needed (the
    // projection of an isotropic Gaussian is the isotropic Gaussian of the
    // subspace).
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const double a = s2 * rng.normal();
            const double b = s2 * rng.normal();
            x(k, l) = Cplx(a, b);
            x(l, k) = Cplx(-a, b);
        }
        x(k, k) = kI * (sigma * rng.normal());
    }
    if (spec.family == GroupFamily::SU) {
        const Cplx tr = x.trace();
        x -= (tr / static_cast<double>(n)) * Mat::Identity(n, n);
    }
    return x;
}

Mat exp_algebra(const GroupSpec& spec, const Mat& x) {
    const int n = spec.n;
    if (n == 1) {
        Mat r(1, 1);
        r(0, 0) = std::exp(x(0, 0));
        return r;
    }
    if (n == 2 && spec.family != GroupFamily::SO) {
        // x = i(a0 I + a.sigma): exp = e^{i a0}(cos|a| I + i sin|a| a_hat.sigma)
        const double a0 = 0.5 * (x(0, 0).imag() + x(1, 1).imag());
        const double a1 = 0.5 * (x(0, 1).imag() + x(1, 0).imag());
        const double a2 = 0.5 * (x(0, 1).real() - x(1, 0).real());
        const double a3 = 0.5 * (x(0, 0).imag() - x(1, 1).imag());
        const double r = std::sqrt(a1 * a1 + a2 * a2 + a3 * a3);
        const double c = std::cos(r);
        const double s = (r > 1e-300) ? std::sin(r) / r : 1.0;
        const Cplx phase = std::exp(kI * a0);
        Mat e(2, 2);
        e(0, 0) = phase * Cplx(c, s * a3);
        e(0, 1) = phase * Cplx(s * a2, s * a1);
        e(1, 0) = phase * Cplx(-s * a2, s * a1);
        e(1, 1) = phase * Cplx(c, -s * a3);
        return e;
    }
    // i*x is Hermitian for skew-Hermitian x; exp(x) = V e^{-i diag} V^dag.
    Eigen::SelfAdjointEigenSolver<Mat> es(kI * x);
    Mat v = es.eigenvectors();
    const int m = es.eigenvalues().size();
    Mat d = Mat::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        d(k, k) = std::exp(-kI * es.eigenvalues()[k]);
    }
    Mat e = v * d * v.adjoint();
    if (spec.family == GroupFamily::SO) {
        e = e.real().cast<Cplx>();
    }
    return e;
}

AlgebraElement algebra_from_coeffs(const GroupSpec& spec, RVec coeffs) {
    if (coeffs.size() != spec.algebra_dim()) {
        throw InvalidArgument("coefficient vector has wrong dimension");
    }
    return AlgebraElement{spec, std::move(coeffs)};
}

GroupElement exp_map(const AlgebraElement& x) {
    Mat e = exp_algebra(x.spec, x.matrix());
    if (group_residual(x.spec, e) > 1e-12) {
        e = project_to_group(x.spec, e);
    }
    return GroupElement{x.spec, std::move(e)};
}

Mat log_group(const GroupSpec& spec, const Mat& q) {
    const int n = spec.n;
    // Unitary matrices are normal, so the Schur form is diagonal and the
    // Schur vectors are an orthonormal eigenbasis.
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(q, true);
    Eigen::MatrixXcd u = schur.matrixU();
    Eigen::MatrixXcd t = schur.matrixT();
    Mat d = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        d(k, k) = kI * std::arg(t(k, k));
    }
    Mat x = Mat(u * d * u.adjoint());
    x = 0.5 * (x - x.adjoint());
    if (spec.family == GroupFamily::SO) {
        Mat re = x.real().cast<Cplx>();
        x = 0.5 * (re - re.transpose());
    }
    return x;
}

Mat haar_sample(const GroupSpec& spec, Rng& rng) {
    const int n = spec.n;

    if (spec.family == GroupFamily::SO) {
        Eigen::MatrixXd g(n, n);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                g(i, j) = rng.normal();
            }
        }
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ();
        Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < n; ++j) {
            if (r(j, j) < 0.0) {
                q.col(j) *= -1.0;
            }
        }
        if (q.determinant() < 0.0) {
            q.row(0) *= -1.0; // reflect onto SO(n); Haar is preserved
        }
        return q.cast<Cplx>();
    }

    Eigen::MatrixXcd g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            g(i, j) = Cplx(rng.normal(), rng.normal());
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Cplx rjj = r(j, j);
        const double a = std::abs(rjj);
        if (a > 0.0) {
            q.col(j) *= rjj / a;
        }
    }
    if (spec.family == GroupFamily::SU) {
        // Scalar phase correction pushes Haar(U(N)) onto Haar(SU(N)).
        const double theta = std::arg(q.determinant());
        q *= std::exp(-kI * (theta / n));
    }
    return Mat(q);
}

Mat project_to_group(const GroupSpec& spec, const Mat& m) {
    const int n = spec.n;
    if (spec.family == GroupFamily::SO) {
        Eigen::MatrixXd mr = m.real();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(mr, Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.singularValues()[n - 1] < 1e-10 * std::max(1.0, svd.singularValues()[0])) {
            throw SingularInput("matrix is rank-deficient");
        }
        Eigen::MatrixXd u = svd.matrixU();
        Eigen::MatrixXd v = svd.matrixV();
        if ((u * v.transpose()).determinant() < 0.0) {
            u.col(n - 1) *= -1.0; // orthogonal Procrustes sign fix
        }
        return (u * v.transpose()).cast<Cplx>();
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()[n - 1] < 1e-10 * std::max(1.0, svd.singularValues()[0])) {
        throw SingularInput("matrix is rank-deficient");
    }
    Eigen::MatrixXcd p = svd.matrixU() * svd.matrixV().adjoint();
    if (spec.family == GroupFamily::SU) {
        const double theta = std::arg(p.determinant());
        p *= std::exp(-kI * (theta / n));
    }
    return Mat(p);
}

std::optional<GroupElement> center_element(const GroupSpec& spec) {
    spec.validate();
    const int n = spec.n;
    switch (spec.family) {
    case GroupFamily::U:
        return GroupElement{spec, Mat(-Mat::Identity(n, n))};
    case GroupFamily::SU: {
        const Cplx z = std::exp(kI * (2.0 * kPi / n));
        return GroupElement{spec, Mat(z * Mat::Identity(n, n))};
    }
    case GroupFamily::SO:
        if (n % 2 == 0) {
            return GroupElement{spec, Mat(-Mat::Identity(n, n))};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace latgauge
