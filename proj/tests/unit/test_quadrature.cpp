#include "testkit.hpp"

#include <cmath>
#include <numbers>

#include "cartan/group.hpp"
#include "cartan/quadrature.hpp"
#include "cartan/surface.hpp"

using namespace cartan;
using std::numbers::pi;

namespace {

const dg::ChartMap kIdentity = [](const Point& p) { return p; };

dg::TwoForm scalarArea(std::function<Jet(const Point&)> density)
{
    return [density](const Point& p, const Point& u, const Point& v) {
        return Complex{density(p) * (u[0] * v[1] - u[1] * v[0])};
    };
}

}  // namespace

TEST_CASE("unit square area")
{
    const auto r = quad::integrateTwoForm(scalarArea([](const Point&) { return Jet{1.0}; }), kIdentity, {});
    CHECK(std::abs(r.value - 1.0) < 1e-14);
}

TEST_CASE("radial density 4r/(1+r^2)^2 over the unit disk in polar parameters")
{
    const auto w = scalarArea([](const Point& p) {
        const Jet d = 1.0 + p[0] * p[0];
        return 4.0 * p[0] / (d * d);
    });
    const auto r = quad::integrateTwoForm(w, kIdentity, {0.0, 1.0, 0.0, 2.0 * pi});
    CHECK(std::abs(r.value.real() - 2.0 * pi) < 1e-9);
    CHECK(r.error < 1e-6 * 2.0 * pi);
}

TEST_CASE("round sphere area through the compactifying substitution")
{
    // r = tan(theta/2) maps [0, pi] x [0, 2 pi] onto the whole plane chart
    const surface::SurfaceGeometry g{1.0};
    const dg::TwoForm area = surface::areaForm(g);
    const dg::ChartMap chart = [](const Point& q) {
        const Jet r = cartan::sin(0.5 * q[0]) / cartan::cos(0.5 * q[0]);
        Point p = Point::zeros(2);
        p[0] = r * cartan::cos(q[1]);
        p[1] = r * cartan::sin(q[1]);
        return p;
    };
    const auto res = quad::integrateTwoForm(area, chart, {0.0, pi - 1e-9, 0.0, 2.0 * pi});
    CHECK(std::abs(res.value.real() - 4.0 * pi) < 1e-6 * 4.0 * pi);
}

TEST_CASE("tighter tolerance never increases the true error on reference integrals")
{
    auto f = [](double s, double t) { return std::complex<double>{std::exp(-s * s - 3.0 * t * t) * std::cos(4 * s), 0.0}; };
    const double exact = quad::integrate1D([](double s) { return std::exp(-s * s) * std::cos(4 * s); }, -2.0, 2.0, 1e-14) *
                         quad::integrate1D([](double t) { return std::exp(-3.0 * t * t); }, -1.0, 1.0, 1e-14);
    double prev = 1.0;
    for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
        quad::Options opt;
        opt.relTol = tol;
        const auto r = quad::integrate(f, {-2.0, 2.0, -1.0, 1.0}, opt);
        const double err = std::abs(r.value.real() - exact);
        CHECK(err <= std::max(r.error, 1e-14));
        CHECK(err <= prev + 1e-15);
        prev = err;
    }
}

TEST_CASE("result does not depend on anything but the refinement schedule")
{
    auto f = [](double s, double t) { return std::complex<double>{1.0 / (0.05 + s * s + t * t), s * t}; };
    const auto a = quad::integrate(f, {-1.0, 1.0, -1.0, 1.0});
    const auto b = quad::integrate(f, {-1.0, 1.0, -1.0, 1.0});
    CHECK(a.value == b.value);
    CHECK(a.regions == b.regions);
}

TEST_CASE("exhausted region budget raises NonConvergence")
{
    auto f = [](double s, double t) { return std::complex<double>{std::pow(s * s + t * t, -0.9), 0.0}; };
    quad::Options opt;
    opt.maxRegions = 20;
    opt.relTol = 1e-12;
    try {
        (void)quad::integrate(f, {-1.0, 1.0, -1.0, 1.0}, opt);
        FAIL("expected NonConvergence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonConvergence);
    }
}

TEST_CASE("excised disks are skipped")
{
    auto f = [](double, double) { return std::complex<double>{1.0, 0.0}; };
    quad::Options opt;
    opt.relTol = 1e-3;
    opt.maxRegions = 20000;
    const auto r = quad::integrate(f, {-1.0, 1.0, -1.0, 1.0}, opt, {{0.0, 0.0, 0.5}});
    CHECK(std::abs(r.value.real() - (4.0 - pi * 0.25)) < 5e-3);
}

TEST_CASE("path integrals")
{
    const dg::OneForm dchi = dg::coordinateDifferential(2);
    const auto loop = group::fibreLoop({0.2, -0.1});
    CHECK(std::abs(quad::integrateOneFormAlongPath(dchi, loop, 0.0, 4.0 * pi) - 4.0 * pi) < 1e-12);

    const auto sigma0 = group::leftInvariantForms(-1.0).sigma0;
    CHECK(std::abs(quad::integrateOneFormAlongPath(sigma0, group::fibreLoop({0.0, 0.0}), 0.0, 4.0 * pi) - 4.0 * pi) <
          1e-10);

    // exact form along a closed loop
    const dg::ScalarField f = [](const Point& p) { return Complex{cartan::sin(p[0]) * p[1], p[0] * p[0]}; };
    const dg::OneForm df = dg::exteriorDerivative(f);
    const dg::ChartMap circle = [](const Point& t) {
        Point p = Point::zeros(2);
        p[0] = 0.3 + 1.2 * cartan::cos(t[0]);
        p[1] = -0.1 + 0.7 * cartan::sin(t[0]);
        return p;
    };
    CHECK(std::abs(quad::integrateOneFormAlongPath(df, circle, 0.0, 2.0 * pi)) < 1e-9);
}
