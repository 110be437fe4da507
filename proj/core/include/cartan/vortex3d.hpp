#pragma once

// Vortex configurations (Phi, A) on the group manifold H^1_lambda0, built from
// bundle maps U : H^1_lambda0 -> H^1_lambda that lift a rational map f.

#include <complex>
#include <optional>
#include <vector>

#include "cartan/forms.hpp"
#include "cartan/group.hpp"
#include "cartan/polynomial.hpp"
#include "cartan/residual.hpp"

namespace cartan::vortex3d {

using poly::cd;

enum class LiftMode { Trivial, Homogeneous };

/// F_i(z1, z2) = z1^N f_i(z2 / z1) for the homogeneous lift; (1, f o pi) with
/// N = 0 for the trivial lift, which is not a polynomial pair.
struct HomogeneousPair {
    LiftMode mode = LiftMode::Homogeneous;
    poly::RationalMap f;
    int N = 0;
    double lambda0 = 0.0;
    double lambda = -1.0;

    [[nodiscard]] dg::ScalarField F1() const;
    [[nodiscard]] dg::ScalarField F2() const;
    /// dF_i/dz2 at fixed z1 (homogeneous mode only).
    [[nodiscard]] dg::ScalarField dF1() const;
    [[nodiscard]] dg::ScalarField dF2() const;
    /// |F1|^2 - lambda |F2|^2
    [[nodiscard]] dg::ScalarField D2() const;
    /// Base points over which F1 vanishes (zeros of f1).
    [[nodiscard]] std::vector<cd> singularBase() const { return f.poles(); }
};

/// Throws TrivialLiftUnavailable for the trivial lift into lambda = -1.
HomogeneousPair liftRationalMap(const poly::RationalMap& f, LiftMode mode, double lambda0, double lambda);

/// U = D^{-1} [[F1, lambda conj F2], [F2, conj F1]]. Throws PairDegenerate where D^2 <= 0.
dg::MatrixField bundleMap(const HomogeneousPair& pair);

/// Residual of |U11|^2 - lambda |U21|^2 = 1 and of X0 U = p U t0 (p real).
ResidualReport bundleMapChecks(const HomogeneousPair& pair, const std::vector<Point>& points);

/// U^{-1} dU decoded in the algebra with parameter lambda.
dg::AlgebraOneForm connectionFromBundleMap(const dg::MatrixField& u, double lambda);

struct VortexConfiguration {
    double lambda0 = 0.0;
    double lambda = -1.0;
    dg::ScalarField phi;
    dg::OneForm a;
    dg::AlgebraOneForm connection;  ///< the flat connection the fields were read off
    std::optional<dg::MatrixField> u;
    std::optional<HomogeneousPair> pair;
    std::vector<cd> excluded;  ///< base points whose fibres are excised
};

/// Phi = t- coefficient of A(X-), A = t0 component minus sigma0. Throws
/// NotVortexGauge when A(X0) or A(X-) has the wrong shape at the gauge points.
VortexConfiguration extractConfiguration(const dg::AlgebraOneForm& connection, double lambda0, double lambda,
                                         const std::vector<Point>& gaugePoints);
/// From a bundle map; the pair is kept for normalisation and descent checks.
VortexConfiguration extractConfiguration(const HomogeneousPair& pair);
/// U = identity: the vacuum Phi = 0, A = -sigma0.
VortexConfiguration vacuumConfiguration(double lambda0, double lambda);

/// (A + sigma0) t0 + (Phi sigma t- + conj(Phi) sigmaBar t+) / 2.
dg::AlgebraOneForm reassemble(const VortexConfiguration& vc);

/// vortex_first: (dPhi + i A Phi) ^ sigma; vortex_second: F_A - (i/2)(lambda0 - lambda|Phi|^2) sigmaBar ^ sigma,
/// both on pairs from {X0, X+, X-}; equivariance_phi: X0 Phi + i A(X0) Phi;
/// equivariance_a: i_{X0} dA; and, for homogeneous pairs, normalisation: A(X0) - (N - 1).
ResidualReport configResiduals(const VortexConfiguration& vc, const std::vector<Point>& points);

/// Flatness of the stored connection.
ResidualReport connectionFlatness(const VortexConfiguration& vc, const std::vector<Point>& points);

/// Extracted fields against Phi = (F1 dF2 - F2 dF1)/(z1 D^2) and
/// A = (N - 1) sigma0 + (i/2)(X- ln D^2) sigma - (i/2)(X+ ln D^2) sigmaBar.
ResidualReport closedFormCheck(const HomogeneousPair& pair, const std::vector<Point>& points);

struct Holonomy {
    lie::AlgebraElement value;
    int n = 0;  ///< value = 2 pi n t0
};

/// Integral of the connection over the fibre loop at z. Throws NonQuantized.
Holonomy holonomy(const VortexConfiguration& vc, cd z = 0.0);

/// (e^{-i beta} Phi, A + d beta); with a bundle map, U -> U exp(beta t0) as well.
VortexConfiguration gaugeTransform(const VortexConfiguration& vc, const dg::ScalarField& beta);

/// Re-extraction after U -> U exp(beta t0). Throws Config when vc carries no bundle map.
VortexConfiguration gaugeTransformBundleMap(const VortexConfiguration& vc, const dg::ScalarField& beta);

/// Negative control: Phi -> Phi (1 + eps |z2|^2).
VortexConfiguration perturb(const VortexConfiguration& vc, double eps);

/// Compares f*A_hat with r^{-1} s*A r + r^{-1} dr, r = exp(2 arg(f1) t0), on base points.
ResidualReport descendCheck(const VortexConfiguration& vc, const std::vector<Point>& basePoints);

/// Path-ordered exponential Y' = Y A(gamma'(t)), Y(a) = 1, by the fourth-order
/// two-point Magnus integrator.
lie::Mat2 pathOrderedExponential(const dg::AlgebraOneForm& connection, const dg::ChartMap& path, double a, double b,
                                 int steps = 1000);

/// Chart points over the source sampling disk, excising the fibres over `excluded`.
std::vector<Point> samplePoints(const VortexConfiguration& vc, int count, std::uint64_t seed,
                                double excision = 1e-2);

}  // namespace cartan::vortex3d
