#include "cartan/surface.hpp"

#include <random>

#include "cartan/group.hpp"
#include "cartan/sampling.hpp"

namespace cartan::surface {

namespace {

Jet denominator(const SurfaceGeometry& g, const Point& p)
{
    const Jet d = 1.0 + g.K * (p[0] * p[0] + p[1] * p[1]);
    if (d.value() <= 0.0) {
        throw Error(ErrorKind::OutsideDomain, "point lies outside the surface chart");
    }
    return d;
}

double absValue(const Complex& z) { return std::abs(z.value()); }

const Point kDx = Point::basis(2, 0);
const Point kDy = Point::basis(2, 1);

}  // namespace

double SurfaceGeometry::conformalFactor(std::complex<double> z) const
{
    const double d = 1.0 + K * std::norm(z);
    return 4.0 / (d * d);
}

Jet SurfaceGeometry::conformalFactor(const Point& p) const
{
    const Jet d = denominator(*this, p);
    return 4.0 * reciprocal(d * d);
}

OneForm coframe(const SurfaceGeometry& g)
{
    return [g](const Point& p, const Point& v) { return dz(v) * 2.0 / denominator(g, p); };
}

OneForm coframeBar(const SurfaceGeometry& g)
{
    return [g](const Point& p, const Point& v) { return conj(dz(v)) * 2.0 / denominator(g, p); };
}

OneForm spinConnection(const SurfaceGeometry& g)
{
    return [g](const Point& p, const Point& v) {
        const Complex z = chartZ(p);
        const Complex w = dz(v);
        return timesI(z * conj(w) - conj(z) * w) * g.K / denominator(g, p);
    };
}

TwoForm areaForm(const SurfaceGeometry& g)
{
    return [g](const Point& p, const Point& u, const Point& v) {
        return Complex{g.conformalFactor(p) * (u[0] * v[1] - u[1] * v[0])};
    };
}

dg::AlgebraOneForm cartanConnection(const SurfaceGeometry& g)
{
    const OneForm e = coframe(g);
    const OneForm gamma = spinConnection(g);
    const double lambda = -g.K;
    return [e, gamma, lambda](const Point& p, const Point& v) {
        const Complex ev = e(p, v);
        const Complex half = imagUnit() * 0.5;
        return lie::AlgebraElement{-gamma(p, v), -(half * conj(ev)), half * ev, lambda};
    };
}

ResidualReport structureGaussResiduals(const OneForm& e, const OneForm& gamma, double K,
                                       const std::vector<Point>& points)
{
    const TwoForm de = dg::exteriorDerivative(e);
    const TwoForm dGamma = dg::exteriorDerivative(gamma);
    const TwoForm gammaE = dg::wedge(gamma, e);
    const OneForm eBar = [e](const Point& p, const Point& v) { return conj(e(p, v)); };
    const TwoForm eEbar = dg::wedge(e, eBar);
    std::vector<double> structure;
    std::vector<double> gauss;
    for (const Point& p : points) {
        structure.push_back(absValue(de(p, kDx, kDy) - imagUnit() * gammaE(p, kDx, kDy)));
        gauss.push_back(absValue(dGamma(p, kDx, kDy) - imagUnit() * (0.5 * K) * eEbar(p, kDx, kDy)));
    }
    ResidualReport rep;
    rep.add("structure", structure, 1e-10);
    rep.add("gauss", gauss, 1e-10);
    return rep;
}

ResidualReport structureGaussResiduals(const SurfaceGeometry& g, const std::vector<Point>& points)
{
    return structureGaussResiduals(coframe(g), spinConnection(g), g.K, points);
}

ResidualReport flatnessResidual(const SurfaceGeometry& g, const std::vector<Point>& points)
{
    const dg::AlgebraTwoForm f = dg::curvature(cartanConnection(g));
    std::vector<double> r;
    for (const Point& p : points) {
        r.push_back(f(p, kDx, kDy).maxAbs());
    }
    ResidualReport rep;
    rep.add("flatness", r, 1e-9);
    return rep;
}

ResidualReport sectionPullbackCheck(const SurfaceGeometry& g, const std::vector<Point>& points)
{
    const double lambda = -g.K;
    for (const Point& p : points) {
        if (1.0 - lambda * (p.value(0) * p.value(0) + p.value(1) * p.value(1)) <= 1e-8) {
            throw Error(ErrorKind::ChartBoundary, "section undefined where 1 - lambda |z|^2 <= 0");
        }
    }
    const dg::ChartMap s = group::section();
    const dg::MatrixOneForm mc = dg::pullback(s, group::maurerCartanMatrix(lambda));
    const group::Forms forms = group::leftInvariantForms(lambda);
    const OneForm sSigma = dg::pullback(s, forms.sigma);
    const OneForm sSigma0 = dg::pullback(s, forms.sigma0);
    const dg::AlgebraOneForm a = cartanConnection(g);
    const OneForm e = coframe(g);
    const OneForm gamma = spinConnection(g);

    std::vector<double> matrix;
    std::vector<double> coeff;
    std::vector<double> sigma;
    std::vector<double> sigma0;
    for (const Point& p : points) {
        double m = 0.0;
        double c = 0.0;
        double s1 = 0.0;
        double s0 = 0.0;
        for (const Point& v : {kDx, kDy}) {
            const lie::Mat2 pulled = mc(p, v);
            const lie::AlgebraElement av = a(p, v);
            m = std::max(m, (pulled - lie::toMatrix(av)).maxAbs());
            const lie::AlgebraElement decoded = lie::fromMatrix(pulled, lie::GroupParameter{lambda}, lie::Reality::Real);
            c = std::max(c, (decoded - av).maxAbs());
            s1 = std::max(s1, absValue(sSigma(p, v) - timesI(e(p, v))));
            s0 = std::max(s0, absValue(sSigma0(p, v) + gamma(p, v)));
        }
        matrix.push_back(m);
        coeff.push_back(c);
        sigma.push_back(s1);
        sigma0.push_back(s0);
    }
    ResidualReport rep;
    rep.add("section_pullback_matrix", matrix, 1e-10);
    rep.add("section_pullback_coefficients", coeff, 1e-10);
    rep.add("section_sigma", sigma, 1e-10);
    rep.add("section_sigma0", sigma0, 1e-10);
    return rep;
}

ResidualReport realityResidual(const SurfaceGeometry& g, const std::vector<Point>& points)
{
    const dg::AlgebraOneForm a = cartanConnection(g);
    std::vector<double> r;
    for (const Point& p : points) {
        double worst = 0.0;
        for (const Point& v : {kDx, kDy}) {
            const lie::AlgebraElement x = a(p, v);
            worst = std::max({worst, std::abs(x.c0.value().imag()),
                              std::abs(x.cplus.value() - std::conj(x.cminus.value()))});
        }
        r.push_back(worst);
    }
    ResidualReport rep;
    rep.add("reality", r, 1e-12);
    return rep;
}

std::vector<Point> samplePoints(const SurfaceGeometry& g, int count, std::uint64_t seed,
                                const std::vector<std::complex<double>>& avoid, double excision)
{
    std::mt19937_64 rng(seed);
    std::vector<Point> out;
    for (const auto& z : sampleDisk(rng, count, chartSamplingRadius(g.K), avoid, excision)) {
        out.push_back(surfacePoint(z));
    }
    return out;
}

}  // namespace cartan::surface
