#pragma once

// Constant-curvature Riemann surfaces in a conformal chart z = x + i y with
// metric 4 |dz|^2 / (1 + K |z|^2)^2, and the Cartan connection built from
// the coframe and spin connection.

#include <complex>
#include <vector>

#include "cartan/forms.hpp"
#include "cartan/residual.hpp"

namespace cartan::surface {

using dg::OneForm;
using dg::TwoForm;

struct SurfaceGeometry {
    double K = 1.0;

    /// 1 + K |z|^2 > margin. For K >= 0 every z qualifies.
    [[nodiscard]] bool inDomain(std::complex<double> z, double margin = 0.0) const
    {
        return 1.0 + K * std::norm(z) > margin;
    }
    [[nodiscard]] double conformalFactor(std::complex<double> z) const;
    /// Conformal factor as a jet expression in the chart point.
    [[nodiscard]] Jet conformalFactor(const Point& p) const;
};

inline Complex chartZ(const Point& p) { return {p[0], p[1]}; }

/// dz(v) = v_x + i v_y.
inline Complex dz(const Point& v) { return {v[0], v[1]}; }

/// e = 2 dz / (1 + K |z|^2). Throws OutsideDomain.
OneForm coframe(const SurfaceGeometry& g);
OneForm coframeBar(const SurfaceGeometry& g);
/// Gamma = i K (z dzbar - zbar dz) / (1 + K |z|^2).
OneForm spinConnection(const SurfaceGeometry& g);
/// Kahler form Omega dx^dy = (i/2) e ^ ebar.
TwoForm areaForm(const SurfaceGeometry& g);

/// A = -Gamma t0 + (i/2)(e t- - ebar t+) in the algebra with lambda = -K.
dg::AlgebraOneForm cartanConnection(const SurfaceGeometry& g);

/// Residuals of de - i Gamma ^ e and dGamma - (i/2) K e ^ ebar on (d/dx, d/dy),
/// for caller-supplied coframe and connection (used for negative controls).
ResidualReport structureGaussResiduals(const OneForm& e, const OneForm& gamma, double K,
                                       const std::vector<Point>& points);
ResidualReport structureGaussResiduals(const SurfaceGeometry& g, const std::vector<Point>& points);

/// Sup curvature of the Cartan connection.
ResidualReport flatnessResidual(const SurfaceGeometry& g, const std::vector<Point>& points);

/// Compares the pullback of h^{-1} dh by the section with the Cartan connection,
/// both as matrices and as algebra coefficients, and checks s*sigma = i e and
/// s*sigma0 = -Gamma. Throws ChartBoundary near 1 - lambda |z|^2 = 0.
ResidualReport sectionPullbackCheck(const SurfaceGeometry& g, const std::vector<Point>& points);

/// Reality of the Cartan connection on real tangents.
ResidualReport realityResidual(const SurfaceGeometry& g, const std::vector<Point>& points);

std::vector<Point> samplePoints(const SurfaceGeometry& g, int count, std::uint64_t seed,
                                const std::vector<std::complex<double>>& avoid = {}, double excision = 0.0);

inline Point surfacePoint(std::complex<double> z) { return Point{z.real(), z.imag()}; }

}  // namespace cartan::surface
