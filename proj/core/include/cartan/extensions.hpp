#pragma once

// The SU(1,1) magnetic-mode identity, the instanton connection on M0 x N0
// built from a vortex, and the duality between the vortex families.

#include <string>
#include <vector>

#include "cartan/forms.hpp"
#include "cartan/residual.hpp"
#include "cartan/vortex2d.hpp"
#include "cartan/vortex3d.hpp"

namespace cartan::ext {

/// |F_{A'}(X1, X2) - (lambda |Phi|^2 - 1/4)| with A' = A + (3/4) sigma0. Throws WrongSource unless lambda0 = 1.
ResidualReport magneticModeCheck(const vortex3d::VortexConfiguration& vc, const std::vector<Point>& points);

/// Point (x1, y1, x2, y2) of the product chart M0 x N0.
Point productPoint(std::complex<double> zM, std::complex<double> zN);

/// Sign conventions left open by the construction: the sign in front of the t+
/// term and the orientation of M0 x N0 used for the Hodge star.
struct InstantonSigns {
    int tplus = 1;
    int orientation = 1;
};

/// Values fixed by calibrateInstantonSigns on the hyperbolic example.
inline constexpr InstantonSigns kInstantonSigns{1, 1};

/// A_CD = -(a - Gamma_N) t0 + (i/2) phi ebar_N t- - s (i/2) conj(phi) e_N t+ in Lie(H^1_{-lambda}),
/// with N0 of curvature lambda0 and s = signs.tplus.
dg::AlgebraOneForm instantonConnection(const vortex2d::VortexSolution& vs, InstantonSigns signs = kInstantonSigns);

/// Curvature in the orthonormal frame of ds^2_M0 + ds^2_N0, anti-self-duality defect
/// max(|F12 + F34|, |F13 - F24|, |F14 + F23|) for orientation +1 (signs flipped for -1).
ResidualReport asdResidual(const vortex2d::VortexSolution& vs, const dg::AlgebraOneForm& connection,
                           const std::vector<Point>& points, int orientation = kInstantonSigns.orientation);

/// Product points with zM from the vortex sampler and zN from the N0 sampling disk.
std::vector<Point> productSamplePoints(const vortex2d::VortexSolution& vs, int count, std::uint64_t seed);

/// Tries the four sign combinations on vs and returns the one with the smallest residual.
InstantonSigns calibrateInstantonSigns(const vortex2d::VortexSolution& vs, const std::vector<Point>& points);

struct DualityEntry {
    std::string family;
    double lambda0 = 0.0;
    double lambda = 0.0;
    std::string dualFamily;
    double dualLambda0 = 0.0;
    double dualLambda = 0.0;
};

/// (lambda0, lambda) -> (-lambda, -lambda0).
DualityEntry dualityMap(double lambda0, double lambda);

}  // namespace cartan::ext
