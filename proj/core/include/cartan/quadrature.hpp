#pragma once

// Adaptive tensor Gauss-Kronrod cubature on rectangles and composite Gauss
// quadrature along parameterised paths.

#include <complex>
#include <functional>
#include <vector>

#include "cartan/forms.hpp"

namespace cartan::quad {

struct Rectangle {
    double s0 = 0.0;
    double s1 = 1.0;
    double t0 = 0.0;
    double t1 = 1.0;
};

/// Disk in parameter coordinates where the integrand is set to zero.
struct Excision {
    double s = 0.0;
    double t = 0.0;
    double radius = 1e-2;
};

struct Options {
    double relTol = 1e-6;
    double absTol = 1e-12;
    int maxRegions = 4000;
};

struct Result {
    std::complex<double> value;
    double error = 0.0;
    long evaluations = 0;
    int regions = 0;
};

using Integrand2D = std::function<std::complex<double>(double s, double t)>;

/// Globally adaptive 15-point Kronrod tensor rule with the embedded 7-point
/// Gauss rule as error estimate. Regions are split at the midpoint of the
/// longer side; the final sum is taken in creation order so the result does
/// not depend on evaluation scheduling. Throws NonConvergence when the
/// region budget is exhausted.
Result integrate(const Integrand2D& f, const Rectangle& box, const Options& opt = {},
                 const std::vector<Excision>& excisions = {});

/// Integral of omega over the image of `box` under `map` (parameters (s, t) -> chart),
/// oriented by (d/ds, d/dt).
Result integrateTwoForm(const dg::TwoForm& omega, const dg::ChartMap& map, const Rectangle& box,
                        const Options& opt = {}, const std::vector<Excision>& excisions = {});

/// One-dimensional adaptive Gauss-Kronrod integral of a real function.
double integrate1D(const std::function<double(double)>& f, double a, double b, double relTol = 1e-10,
                   int maxIntervals = 2000);

/// Composite 7-point Gauss rule along path(t), t in [a, b], refined by
/// doubling the panel count until successive values agree to `tol`.
std::complex<double> integrateOneFormAlongPath(const dg::OneForm& omega, const dg::ChartMap& path, double a,
                                               double b, double tol = 1e-8);
lie::AlgebraElement integrateOneFormAlongPath(const dg::AlgebraOneForm& omega, const dg::ChartMap& path,
                                              double a, double b, double tol = 1e-8);

}  // namespace cartan::quad
