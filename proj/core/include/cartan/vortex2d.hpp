#pragma once

// Integrable (lambda0, lambda) vortices on constant-curvature surfaces built
// from holomorphic maps f : M0 -> M. Conventions: M0 has curvature -lambda0,
// M has curvature -lambda.

#include <complex>
#include <string>
#include <vector>

#include "cartan/forms.hpp"
#include "cartan/polynomial.hpp"
#include "cartan/residual.hpp"
#include "cartan/surface.hpp"

namespace cartan::vortex2d {

using poly::cd;

enum class Family { Hyperbolic, Popov, JackiwPi, AmbjornOlesen, Bradlow, Laplace, Unnamed };

Family classifyFamily(double lambda0, double lambda);
std::string familyName(Family f);
/// Accepts the names produced by familyName (case-insensitive, '-' and '_' ignored).
/// Throws Config for unknown names or Unnamed.
std::pair<double, double> familyParameters(const std::string& name);

struct VortexSolution {
    double lambda0 = 1.0;
    double lambda = 1.0;
    poly::RationalMap f;
    dg::ScalarField phi;
    dg::OneForm a;
    std::vector<cd> singularPoints;  ///< zeros of f1
    std::vector<cd> higgsZeros;      ///< ramification points of f

    [[nodiscard]] surface::SurfaceGeometry source() const { return {-lambda0}; }
    [[nodiscard]] surface::SurfaceGeometry target() const { return {-lambda}; }
    [[nodiscard]] Family family() const { return classifyFamily(lambda0, lambda); }
    /// |phi|^2 from the smooth expression |W|^2 (1+K0|z|^2)^2 / (|f1|^2 + K|f2|^2)^2.
    [[nodiscard]] double phiModulusSquared(cd z) const;
    [[nodiscard]] Jet phiModulusSquared(const Point& p) const;
    /// Points to excise: singular points and, optionally, Higgs zeros.
    [[nodiscard]] std::vector<cd> excisionCentres(bool includeHiggsZeros) const;
};

/// phi = W (conj f1 / f1)(1 + K0|z|^2) / (|f1|^2 + K|f2|^2), a = f*Gamma - Gamma0.
/// Throws ConstantMap, or DomainViolation when f leaves the target chart on the
/// sampling disk of the source.
VortexSolution buildVortex(const poly::RationalMap& f, double lambda0, double lambda);

/// Gauge transform (e^{i beta} phi, a + d beta).
VortexSolution gaugeTransform(const VortexSolution& vs, const dg::ScalarField& beta);

/// Negative control: phi -> phi (1 + eps |z|^2), a -> a + eps y dx.
VortexSolution perturb(const VortexSolution& vs, double eps);

/// |(dphi - i a phi) ^ e0| and |da - (lambda0 - lambda|phi|^2) omega0| on (d/dx, d/dy).
ResidualReport vortexResiduals(const VortexSolution& vs, const std::vector<Point>& points);

/// |-(4/Omega0) d_z d_zbar u - (lambda0 - lambda e^{2u})| with u = ln|phi| + uShift.
ResidualReport taubesResidual(const VortexSolution& vs, const std::vector<Point>& points, double uShift = 0.0);

/// |phi|^2 Omega0.
double baptistaFactor(const VortexSolution& vs, cd z);

/// Magnetic field F_a(d/dx, d/dy) / Omega0 = lambda0 - lambda |phi|^2.
double magneticField(const VortexSolution& vs, cd z);

/// f*A = -(a + Gamma0) t0 + (i/2)(phi e0 t- - conj(phi) ebar0 t+), in the target algebra.
dg::AlgebraOneForm vortexCartanConnection(const VortexSolution& vs);
ResidualReport flatnessResidual(const VortexSolution& vs, const std::vector<Point>& points);

/// Admissible sample points: source sampling disk, excising singular points
/// (and Higgs zeros when asked) by `excision`.
std::vector<Point> samplePoints(const VortexSolution& vs, int count, std::uint64_t seed, double excision = 1e-2,
                                bool avoidHiggsZeros = false);

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
    double tail = 0.0;          ///< extrapolated contribution beyond the cutoff
    double tailExponent = 0.0;  ///< fitted power of the radial integrand, NaN when not needed
    bool compact = false;
};

/// Integral of a radially compactified density over the whole source surface.
/// `density(z)` is the coefficient of dx^dy. Sphere: r = tan(theta/2). Plane:
/// cutoff R = 50 plus a power-law tail fitted on shells [R,2R], [2R,4R], [4R,8R]
/// and Richardson-combined. Disk: r = R/(1+R), same cutoff and tail.
/// Throws TailDivergence when the fitted exponent is >= -1.5, NonConvergence
/// when cubature fails.
IntegralResult integrateOverSource(double sourceCurvature, const std::function<double(cd)>& density,
                                   double relTol = 1e-9);

/// Integral of (lambda0 - lambda|phi|^2) Omega0 over M0.
IntegralResult fluxIntegral(const VortexSolution& vs);

/// Energy of the critical Abelian-Higgs functional. Only for (1, 1); throws WrongFamily.
/// The functional's conformal factor is 2 Omega0, the normalisation under which
/// the Bogomol'nyi equation B = (Omega/2)(1 - |phi|^2) coincides with the second
/// vortex equation above.
IntegralResult energyIntegral(const VortexSolution& vs);

/// Energy density (integrand of dx dy) at z.
double energyDensity(const VortexSolution& vs, cd z);

}  // namespace cartan::vortex2d
