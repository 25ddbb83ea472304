#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "latgauge/errors.hpp"
#include "latgauge/rng.hpp"

namespace latgauge {

using Cplx = std::complex<double>;

// Matrices are dense, column-major, at most 8x8 (stack-allocated). Real
// families (SO) are stored in the same complex type with zero imaginary part;
// serialization strips the imaginary part for them.
using Mat = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 8, 8>;
using RVec = Eigen::VectorXd;

constexpr int kMaxMatrixSize = 8;

enum class GroupFamily { U, SU, SO };

std::string family_name(GroupFamily f);

/// Which compact matrix group: U(n), SU(n) or SO(n).
struct GroupSpec {
    GroupFamily family = GroupFamily::SU;
    int n = 2;

    bool operator==(const GroupSpec&) const = default;

    bool is_complex() const { return family != GroupFamily::SO; }

    /// Dimension of the Lie algebra: n^2 for u(n), n^2-1 for su(n),
    /// n(n-1)/2 for so(n).
    int algebra_dim() const;

    /// Throws InvalidArgument on n out of range (SU needs n >= 2; all
    /// families need 1 <= n <= 8).
    void validate() const;

    std::string name() const { return family_name(family) + "(" + std::to_string(n) + ")"; }
};

/// A group element: spec plus the matrix. Hot loops keep bare `Mat`s with a
/// field-level spec; this struct is the API/serialization form.
struct GroupElement {
    GroupSpec spec;
    Mat mat;
};

/// A Lie algebra element as coefficients in the fixed orthonormal basis
/// (inner product Re Tr(X^dag Y), no extra normalization; all curvature
/// constants in this project are quoted in that metric).
struct AlgebraElement {
    GroupSpec spec;
    RVec coeffs;

    Mat matrix() const;
    double norm2() const { return coeffs.squaredNorm(); }
};

/// Max-norm residual of the defining constraints (unitarity/orthogonality,
/// and the determinant condition for SU/SO, realness for SO).
double group_residual(const GroupSpec& spec, const Mat& m);

/// True when group_residual <= tol (default 1e-10, the invariant tolerance).
bool in_group(const GroupSpec& spec, const Mat& m, double tol = 1e-10);

/// Inner product Re Tr(X^dag Y) on matrices.
double algebra_inner(const Mat& x, const Mat& y);

/// Orthonormal basis of the Lie algebra, deterministic order:
/// off-diagonal pairs (k<l) [symmetric, antisymmetric], then for su/u the
/// diagonal Cartan directions, and for u(N) finally i*I/sqrt(N).
std::vector<AlgebraElement> algebra_basis(const GroupSpec& spec);

/// Matrix of the a-th basis element.
Mat algebra_basis_matrix(const GroupSpec& spec, int a);

/// Coefficient vector of an algebra matrix in the canonical basis.
RVec algebra_coeffs(const GroupSpec& spec, const Mat& x);

/// Orthogonal projection of an arbitrary matrix onto the Lie algebra.
Mat project_to_algebra(const GroupSpec& spec, const Mat& m);

/// Algebra element with iid standard normal coefficients, scaled by sigma.
/// Equivalent to sigma * sum_a N(0,1) X_a but built without materializing
/// the basis.
Mat random_algebra(const GroupSpec& spec, Rng& rng, double sigma = 1.0);

/// exp(X) for an algebra matrix; exact for skew-Hermitian input via
/// eigendecomposition (closed form for n <= 2).
Mat exp_algebra(const GroupSpec& spec, const Mat& x);

AlgebraElement algebra_from_coeffs(const GroupSpec& spec, RVec coeffs);
GroupElement exp_map(const AlgebraElement& x);

/// Principal logarithm of a unitary/orthogonal matrix, as a skew-Hermitian
/// matrix (may carry a central i*pi part when an eigenvalue sits at -1).
Mat log_group(const GroupSpec& spec, const Mat& q);

/// Haar-distributed element: Ginibre + QR with the R-diagonal phase fix;
/// SU(N) corrects the determinant by a scalar phase, SO(N) reflects the
/// first row when det = -1.
Mat haar_sample(const GroupSpec& spec, Rng& rng);

/// Nearest group element (polar factor via SVD, then determinant phase fix).
/// Throws SingularInput when m is rank-deficient.
Mat project_to_group(const GroupSpec& spec, const Mat& m);

/// z*I with z != 1 when the center contains such an element: e^{2 pi i/N} for
/// SU(N), -1 for U(N) and SO(even); nullopt for SO(odd).
std::optional<GroupElement> center_element(const GroupSpec& spec);

Mat identity_mat(int n);

} // namespace latgauge
