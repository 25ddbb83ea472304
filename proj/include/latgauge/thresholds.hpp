#pragma once

#include "latgauge/errors.hpp"
#include "latgauge/group.hpp"

namespace latgauge {

/// 't Hooft-regime coupling threshold of the d-dimensional model:
/// 1/(8(d-1)) for SU(N) and U(N), 1/(16(d-1)) - 1/(8N(d-1)) for SO(N).
inline double beta_threshold(GroupFamily family, int n, int d) {
    if (d < 2) {
        throw InvalidArgument("threshold needs dimension d >= 2");
    }
    const double dm1 = static_cast<double>(d - 1);
    switch (family) {
    case GroupFamily::U:
    case GroupFamily::SU:
        return 1.0 / (8.0 * dm1);
    case GroupFamily::SO:
        return 1.0 / (16.0 * dm1) - 1.0 / (8.0 * n * dm1);
    }
    throw InvalidArgument("unknown family");
}

/// Curvature constant of the boundary-conditioned spin system on the
/// (d-1)-dimensional slice, in the Re Tr(X^dag Y) metric:
///   SU(N): (N+2)/2 - 1 - 4 N beta (d-1)
///   SO(N): (N+2)/4 - 1 - 4 N beta (d-1)
/// Positive exactly when beta < beta_threshold. U(N) has no uniform Ricci
/// lower bound; it is handled through its SU(N) factor.
inline double bakry_emery_constant(GroupFamily family, int n, double beta, int d) {
    if (d < 2) {
        throw InvalidArgument("curvature constant needs dimension d >= 2");
    }
    const double nd = static_cast<double>(n);
    const double coupling = 4.0 * nd * beta * static_cast<double>(d - 1);
    switch (family) {
    case GroupFamily::SU:
        return (nd + 2.0) / 2.0 - 1.0 - coupling;
    case GroupFamily::SO:
        return (nd + 2.0) / 4.0 - 1.0 - coupling;
    case GroupFamily::U:
        throw UnsupportedFamily("U(N) is handled via its SU(N) factor");
    }
    throw InvalidArgument("unknown family");
}

} // namespace latgauge
