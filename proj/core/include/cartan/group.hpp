#pragma once

// The group manifold H^1_lambda in the chart h = s(z) exp(chi t0), with
// chart coordinates (x, y, chi), z = x + i y.

#include <array>
#include <complex>
#include <vector>

#include "cartan/forms.hpp"
#include "cartan/residual.hpp"

namespace cartan::group {

using dg::OneForm;
using dg::ScalarField;

struct Embedding {
    Complex z1;
    Complex z2;
};

inline Complex chartZ(const Point& p) { return {p[0], p[1]}; }

/// (z1, z2) = (exp(-i chi/2), z exp(-i chi/2)) / sqrt(1 - lambda |z|^2).
/// Throws ChartBoundary when 1 - lambda |z|^2 <= 1e-12.
Embedding embed(const Point& p, double lambda);

/// Chart point over z with fibre coordinate chi.
Point chartPoint(std::complex<double> z, double chi);

/// h = [[z1, lambda conj(z2)], [z2, conj(z1)]].
lie::Mat2 groupElement(const Point& p, double lambda);

/// Projection h -> z2 / z1.
Complex project(const Embedding& e);

/// The section z -> (x, y, 0) as a chart map from the surface chart.
dg::ChartMap section();

struct Forms {
    OneForm sigma0;
    OneForm sigma;
    OneForm sigmaBar;
    OneForm sigma1;  ///< (sigma + sigmaBar) / 2
    OneForm sigma2;  ///< (sigma - sigmaBar) / (2i)
};

/// Left-invariant forms pulled back from their C^2 expressions through embed.
Forms leftInvariantForms(double lambda);

/// h^{-1} dh as a matrix one-form on the chart.
dg::MatrixOneForm maurerCartanMatrix(double lambda);
/// h^{-1} dh = sigma0 t0 + (sigma t- + sigmaBar t+)/2 in algebra coefficients.
dg::AlgebraOneForm maurerCartanForm(double lambda);

struct Frame {
    Point x0;
    Point x1;
    Point x2;
    [[nodiscard]] ComplexTangent plus() const { return {x1, x2}; }
    [[nodiscard]] ComplexTangent minus() const { return {x1, -1.0 * x2}; }
};

/// Dual frame of (sigma0, sigma1, sigma2) at p: X0 = d/dchi and X1, X2 obtained by
/// inverting the pairing matrix. Components carry jets when p does.
Frame leftInvariantFields(const Point& p, double lambda);

/// Lie bracket of two chart vector fields at p.
Point lieBracket(const std::function<Point(const Point&)>& x, const std::function<Point(const Point&)>& y,
                 const Point& p);

/// Residuals of d sigma - i sigma^sigma0, d sigma0 - (i lambda/2) sigma^sigmaBar and of the
/// matrix Maurer-Cartan equation on the coordinate bivectors. With dropTorsionTerm the
/// i sigma^sigma0 term is omitted (negative control).
ResidualReport maurerCartanResiduals(double lambda, const std::vector<Point>& points, bool dropTorsionTerm = false);

/// Common integer value of 2i (X0 F)/F at the points. Throws NotEquivariant.
int equivariantDegree(const ScalarField& f, const std::vector<Point>& points);

/// ds^2 = (1/4)(-(1/lambda) sigma0^2 + sigma1^2 + sigma2^2). Throws DegenerateMetric at lambda = 0.
double metric(double lambda, const Point& p, const Point& u, const Point& v);
/// Vol = (1/8) sigma1 ^ sigma0 ^ sigma2.
double volume(double lambda, const Point& p, const Point& u, const Point& v, const Point& w);

/// Fibre loop chi -> (z, chi), chi in [0, 4 pi).
dg::ChartMap fibreLoop(std::complex<double> z);

/// Random chart points over the sampling disk of curvature -lambda, chi uniform in [0, 4 pi).
std::vector<Point> samplePoints(double lambda, int count, std::uint64_t seed,
                                const std::vector<std::complex<double>>& avoid = {}, double excision = 0.0);

}  // namespace cartan::group
