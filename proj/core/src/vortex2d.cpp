#include "cartan/vortex2d.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cartan/quadrature.hpp"
#include "cartan/sampling.hpp"

namespace cartan::vortex2d {

namespace {

using std::numbers::pi;

const Point kDx = Point::basis(2, 0);
const Point kDy = Point::basis(2, 1);

double absValue(const Complex& z) { return std::abs(z.value()); }

Complex phiAt(const poly::RationalMap& f, double k0, double k, const Point& p)
{
    const Complex z = surface::chartZ(p);
    const Complex f1 = f.f1()(z);
    const Complex f2 = f.f2()(z);
    const Complex w = f.wronskian()(z);
    const Jet den = norm(f1) + k * norm(f2);
    const Jet conformal = 1.0 + k0 * norm(z);
    return w * conj(f1) / f1 * (conformal / den);
}

dg::ChartMap asChartMap(const poly::RationalMap& f)
{
    return [f](const Point& p) {
        const Complex v = f(surface::chartZ(p));
        Point q = Point::zeros(2);
        q[0] = v.re;
        q[1] = v.im;
        return q;
    };
}

void checkTargetDomain(const poly::RationalMap& f, double sourceK, double targetK)
{
    if (targetK >= 0.0) {
        return;
    }
    const double radius = chartSamplingRadius(sourceK);
    std::mt19937_64 rng(0x5eed);
    auto pts = sampleDisk(rng, 400, radius);
    for (int k = 0; k < 64; ++k) {
        pts.push_back(std::polar(radius, 2.0 * pi * k / 64.0));
    }
    for (const cd& z : pts) {
        const cd v = f(z);
        if (!std::isfinite(std::abs(v)) || 1.0 + targetK * std::norm(v) <= 0.0) {
            throw Error(ErrorKind::DomainViolation, "the map leaves the target chart on the sampled source domain");
        }
    }
}

std::string normalise(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c != '-' && c != '_' && c != ' ') {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

}  // namespace

Family classifyFamily(double lambda0, double lambda)
{
    auto is = [](double a, double b) { return a == b; };
    if (is(lambda0, 1) && is(lambda, 1)) {
        return Family::Hyperbolic;
    }
    if (is(lambda0, -1) && is(lambda, -1)) {
        return Family::Popov;
    }
    if (is(lambda0, 0) && is(lambda, -1)) {
        return Family::JackiwPi;
    }
    if (is(lambda0, 1) && is(lambda, -1)) {
        return Family::AmbjornOlesen;
    }
    if (is(lambda0, 1) && is(lambda, 0)) {
        return Family::Bradlow;
    }
    if (is(lambda0, 0) && is(lambda, 0)) {
        return Family::Laplace;
    }
    return Family::Unnamed;
}

std::string familyName(Family f)
{
    switch (f) {
    case Family::Hyperbolic:
        return "Hyperbolic";
    case Family::Popov:
        return "Popov";
    case Family::JackiwPi:
        return "Jackiw-Pi";
    case Family::AmbjornOlesen:
        return "Ambjorn-Olesen";
    case Family::Bradlow:
        return "Bradlow";
    case Family::Laplace:
        return "Laplace";
    case Family::Unnamed:
        return "Unnamed";
    }
    return "Unnamed";
}

std::pair<double, double> familyParameters(const std::string& name)
{
    const std::string n = normalise(name);
    if (n == "hyperbolic") {
        return {1.0, 1.0};
    }
    if (n == "popov") {
        return {-1.0, -1.0};
    }
    if (n == "jackiwpi") {
        return {0.0, -1.0};
    }
    if (n == "ambjornolesen") {
        return {1.0, -1.0};
    }
    if (n == "bradlow") {
        return {1.0, 0.0};
    }
    if (n == "laplace") {
        return {0.0, 0.0};
    }
    throw Error(ErrorKind::Config, "unknown vortex family '" + name + "'");
}

double VortexSolution::phiModulusSquared(cd z) const
{
    const double k0 = -lambda0;
    const double k = -lambda;
    const double den = std::norm(f.f1()(z)) + k * std::norm(f.f2()(z));
    const double c = 1.0 + k0 * std::norm(z);
    return std::norm(f.wronskian()(z)) * c * c / (den * den);
}

Jet VortexSolution::phiModulusSquared(const Point& p) const
{
    const Complex z = surface::chartZ(p);
    const Jet den = norm(f.f1()(z)) + (-lambda) * norm(f.f2()(z));
    const Jet c = 1.0 + (-lambda0) * norm(z);
    return norm(f.wronskian()(z)) * c * c / (den * den);
}

std::vector<cd> VortexSolution::excisionCentres(bool includeHiggsZeros) const
{
    std::vector<cd> out = singularPoints;
    if (includeHiggsZeros) {
        out.insert(out.end(), higgsZeros.begin(), higgsZeros.end());
    }
    return out;
}

VortexSolution buildVortex(const poly::RationalMap& f, double lambda0, double lambda)
{
    const double k0 = -lambda0;
    const double k = -lambda;
    checkTargetDomain(f, k0, k);
    const surface::SurfaceGeometry src{k0};
    const surface::SurfaceGeometry tgt{k};

    dg::ScalarField phi = [f, k0, k](const Point& p) { return phiAt(f, k0, k, p); };
    const dg::OneForm fGamma = dg::pullback(asChartMap(f), surface::spinConnection(tgt));
    const dg::OneForm gamma0 = surface::spinConnection(src);
    dg::OneForm a = [fGamma, gamma0](const Point& p, const Point& v) { return fGamma(p, v) - gamma0(p, v); };

    std::vector<cd> higgs;
    for (const auto& r : f.ramificationPoints()) {
        higgs.push_back(r.point);
    }
    return VortexSolution{lambda0, lambda, f, std::move(phi), std::move(a), f.poles(), std::move(higgs)};
}

VortexSolution gaugeTransform(const VortexSolution& vs, const dg::ScalarField& beta)
{
    VortexSolution out = vs;
    const dg::ScalarField phi = vs.phi;
    const dg::OneForm a = vs.a;
    out.phi = [phi, beta](const Point& p) { return expI(beta(p).re) * phi(p); };
    const dg::OneForm dBeta = dg::exteriorDerivative(beta);
    out.a = [a, dBeta](const Point& p, const Point& v) { return a(p, v) + Complex{dBeta(p, v).re}; };
    return out;
}

VortexSolution perturb(const VortexSolution& vs, double eps)
{
    VortexSolution out = vs;
    const dg::ScalarField phi = vs.phi;
    const dg::OneForm a = vs.a;
    out.phi = [phi, eps](const Point& p) { return phi(p) * (1.0 + eps * (p[0] * p[0] + p[1] * p[1])); };
    out.a = [a, eps](const Point& p, const Point& v) { return a(p, v) + Complex{eps * p[1] * v[0]}; };
    return out;
}

ResidualReport vortexResiduals(const VortexSolution& vs, const std::vector<Point>& points)
{
    const surface::SurfaceGeometry src = vs.source();
    const dg::OneForm e0 = surface::coframe(src);
    const dg::ScalarField phi = vs.phi;
    const dg::OneForm a = vs.a;
    const dg::OneForm covariant = [phi, a](const Point& p, const Point& v) {
        auto [value, derivative] = dg::valueAndDerivative(phi, p, v);
        return derivative - imagUnit() * a(p, v) * value;
    };
    const dg::TwoForm first = dg::wedge(covariant, e0);
    const dg::TwoForm da = dg::exteriorDerivative(a);
    std::vector<double> r1;
    std::vector<double> r2;
    for (const Point& p : points) {
        r1.push_back(absValue(first(p, kDx, kDy)));
        const double modulus = std::norm(phi(p).value());
        const Complex rhs{(vs.lambda0 - vs.lambda * modulus) * src.conformalFactor(p).value()};
        r2.push_back(absValue(da(p, kDx, kDy) - rhs));
    }
    ResidualReport rep;
    rep.add("vortex_first", r1, 1e-8);
    rep.add("vortex_second", r2, 1e-8);
    return rep;
}

ResidualReport taubesResidual(const VortexSolution& vs, const std::vector<Point>& points, double uShift)
{
    const surface::SurfaceGeometry src = vs.source();
    const dg::ScalarField u = [&vs, uShift](const Point& p) {
        return Complex{0.5 * cartan::log(vs.phiModulusSquared(p)) + uShift};
    };
    std::vector<double> r;
    for (const Point& p : points) {
        const double lap = (dg::secondDerivative(u, p, kDx, kDx) + dg::secondDerivative(u, p, kDy, kDy)).value().real();
        const double omega0 = src.conformalFactor(p).value();
        const double uv = u(p).value().real();
        r.push_back(std::abs(-lap / omega0 - (vs.lambda0 - vs.lambda * std::exp(2.0 * uv))));
    }
    ResidualReport rep;
    rep.add("taubes", r, 1e-6);
    return rep;
}

double baptistaFactor(const VortexSolution& vs, cd z)
{
    return vs.phiModulusSquared(z) * vs.source().conformalFactor(z);
}

double magneticField(const VortexSolution& vs, cd z) { return vs.lambda0 - vs.lambda * vs.phiModulusSquared(z); }

dg::AlgebraOneForm vortexCartanConnection(const VortexSolution& vs)
{
    const surface::SurfaceGeometry src = vs.source();
    const dg::OneForm e0 = surface::coframe(src);
    const dg::OneForm gamma0 = surface::spinConnection(src);
    const dg::ScalarField phi = vs.phi;
    const dg::OneForm a = vs.a;
    const double lambda = vs.lambda;
    return [=](const Point& p, const Point& v) {
        const Complex ph = phi(p);
        const Complex ev = e0(p, v);
        const Complex half = imagUnit() * 0.5;
        return lie::AlgebraElement{-(a(p, v) + gamma0(p, v)), -(half * conj(ph) * conj(ev)), half * ph * ev, lambda};
    };
}

ResidualReport flatnessResidual(const VortexSolution& vs, const std::vector<Point>& points)
{
    const dg::AlgebraTwoForm f = dg::curvature(vortexCartanConnection(vs));
    std::vector<double> r;
    for (const Point& p : points) {
        r.push_back(f(p, kDx, kDy).maxAbs());
    }
    ResidualReport rep;
    rep.add("cartan_flatness", r, 1e-8);
    return rep;
}

std::vector<Point> samplePoints(const VortexSolution& vs, int count, std::uint64_t seed, double excision,
                                bool avoidHiggsZeros)
{
    return surface::samplePoints(vs.source(), count, seed, vs.excisionCentres(avoidHiggsZeros), excision);
}

IntegralResult integrateOverSource(double sourceCurvature, const std::function<double(cd)>& density, double relTol)
{
    quad::Options opt;
    opt.relTol = relTol;
    opt.absTol = 1e-13;
    IntegralResult res;
    if (sourceCurvature > 0.0) {
        const double s = 1.0 / std::sqrt(sourceCurvature);
        auto f = [&](double theta, double psi) {
            const double t = std::tan(0.5 * theta);
            const double r = s * t;
            const double drdtheta = 0.5 * s * (1.0 + t * t);
            return std::complex<double>{density(std::polar(r, psi)) * r * drdtheta, 0.0};
        };
        const auto q = quad::integrate(f, {0.0, pi, 0.0, 2.0 * pi}, opt);
        res.value = q.value.real();
        res.error = q.error;
        res.compact = true;
        res.tailExponent = std::numeric_limits<double>::quiet_NaN();
        return res;
    }

    std::function<std::complex<double>(double, double)> f;
    if (sourceCurvature == 0.0) {
        f = [&](double r, double psi) { return std::complex<double>{density(std::polar(r, psi)) * r, 0.0}; };
    } else {
        const double s = 1.0 / std::sqrt(-sourceCurvature);
        f = [&, s](double big, double psi) {
            const double r = s * big / (1.0 + big);
            const double drdR = s / ((1.0 + big) * (1.0 + big));
            return std::complex<double>{density(std::polar(r, psi)) * r * drdR, 0.0};
        };
    }
    constexpr double kCutoff = 50.0;
    const auto main = quad::integrate(f, {0.0, kCutoff, 0.0, 2.0 * pi}, opt);
    quad::Options tailOpt = opt;
    tailOpt.absTol = std::max(1e-15, 1e-3 * relTol * std::abs(main.value.real()));
    std::array<double, 3> shell{};
    res.value = main.value.real();
    res.error = main.error;
    for (int k = 0; k < 3; ++k) {
        const double lo = kCutoff * std::ldexp(1.0, k);
        const auto q = quad::integrate(f, {lo, 2.0 * lo, 0.0, 2.0 * pi}, tailOpt);
        shell[static_cast<std::size_t>(k)] = q.value.real();
        res.error += q.error;
    }
    const double negligible = 1e-14 * std::max(1.0, std::abs(res.value));
    if (std::all_of(shell.begin(), shell.end(), [&](double x) { return std::abs(x) < negligible; })) {
        res.tail = shell[0] + shell[1] + shell[2];
        res.tailExponent = -std::numeric_limits<double>::infinity();
        res.value += res.tail;
        return res;
    }
    // geometric continuation of the shells from cutoff R (shells 0,1) and 2R (shells 1,2);
    // its error falls like R^-2, so the two are Richardson-combined
    const double near = shell[1] / shell[0];
    const double far = shell[2] / shell[1];
    res.tailExponent = far > 0.0 ? std::log2(far) - 1.0 : std::numeric_limits<double>::quiet_NaN();
    const double nearExponent = near > 0.0 ? std::log2(near) - 1.0 : std::numeric_limits<double>::quiet_NaN();
    if (!(near > 0.0) || !(far > 0.0) || res.tailExponent >= -1.5 || nearExponent >= -1.5) {
        throw Error(ErrorKind::TailDivergence,
                    "integrand does not decay fast enough beyond the cutoff (fitted radial exponent " +
                        std::to_string(res.tailExponent) + ", shell integrals " + std::to_string(shell[0]) + ", " +
                        std::to_string(shell[1]) + ", " + std::to_string(shell[2]) + ")");
    }
    const double tailNear = shell[0] + shell[1] + shell[1] * near / (1.0 - near);
    const double tailFar = shell[0] + shell[1] + shell[2] + shell[2] * far / (1.0 - far);
    res.tail = (4.0 * tailFar - tailNear) / 3.0;
    res.value += res.tail;
    res.error += std::abs(tailFar - tailNear) / 3.0;
    return res;
}

IntegralResult fluxIntegral(const VortexSolution& vs)
{
    const surface::SurfaceGeometry src = vs.source();
    return integrateOverSource(src.K, [&](cd z) { return magneticField(vs, z) * src.conformalFactor(z); });
}

double energyDensity(const VortexSolution& vs, cd z)
{
    const surface::SurfaceGeometry src = vs.source();
    const double omegaE = 2.0 * src.conformalFactor(z);
    const Point p = surface::surfacePoint(z);
    const dg::TwoForm da = dg::exteriorDerivative(vs.a);
    const double b = da(p, kDx, kDy).value().real();
    auto [phi, d1] = dg::valueAndDerivative(vs.phi, p, kDx);
    const Complex d2 = dg::derivativeAlong(vs.phi, p, kDy);
    const Complex cov1 = d1 - imagUnit() * vs.a(p, kDx) * phi;
    const Complex cov2 = d2 - imagUnit() * vs.a(p, kDy) * phi;
    const double m = std::norm(phi.value());
    const double gradient = std::norm(cov1.value()) + std::norm(cov2.value());
    const double potential = 0.25 * (1.0 - m) * (1.0 - m);
    return 0.5 * (b * b / omegaE + gradient + potential * omegaE);
}

IntegralResult energyIntegral(const VortexSolution& vs)
{
    if (vs.family() != Family::Hyperbolic) {
        throw Error(ErrorKind::WrongFamily, "the energy functional is defined for hyperbolic vortices only");
    }
    return integrateOverSource(vs.source().K, [&](cd z) { return energyDensity(vs, z); }, 1e-8);
}

}  // namespace cartan::vortex2d
