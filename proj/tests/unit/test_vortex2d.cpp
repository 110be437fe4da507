#include "testkit.hpp"

#include <numbers>

#include "cartan/vortex2d.hpp"

using namespace cartan;
using namespace cartan::vortex2d;
using poly::Polynomial;
using poly::RationalMap;

namespace {

using std::numbers::pi;

const Point kDx = Point::basis(2, 0);
const Point kDy = Point::basis(2, 1);

struct Case {
    const char* name;
    double lambda0;
    double lambda;
    RationalMap f;
};

std::vector<Case> corpus()
{
    return {
        {"Popov z", -1, -1, RationalMap::power(1)},
        {"Popov z^2", -1, -1, RationalMap::power(2)},
        {"Hyperbolic z^2", 1, 1, RationalMap::power(2)},
        {"Hyperbolic z^3", 1, 1, RationalMap::power(3)},
        {"Jackiw-Pi 1/z", 0, -1, RationalMap::inversePower(1)},
        {"Jackiw-Pi 1/z^2", 0, -1, RationalMap::inversePower(2)},
        {"Ambjorn-Olesen (1,1)", 1, -1, RationalMap::blaschke({cd{0.3, 0.2}}, {cd{-0.4, 0.1}})},
        {"Bradlow", 1, 0, RationalMap(Polynomial::constant(1.0), Polynomial({0.2, 1.0, 0.5}))},
        {"Laplace", 0, 0, RationalMap(Polynomial::constant(1.0), Polynomial({0.0, 1.0, 0.0, 0.3}))},
    };
}

ErrorKind kindOf(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Config;
}

cd at(const dg::ScalarField& phi, cd z) { return phi(surface::surfacePoint(z)).value(); }

}  // namespace

TEST_CASE("family classification")
{
    CHECK(classifyFamily(1, 1) == Family::Hyperbolic);
    CHECK(classifyFamily(-1, -1) == Family::Popov);
    CHECK(classifyFamily(0, -1) == Family::JackiwPi);
    CHECK(classifyFamily(1, -1) == Family::AmbjornOlesen);
    CHECK(classifyFamily(1, 0) == Family::Bradlow);
    CHECK(classifyFamily(0, 0) == Family::Laplace);
    CHECK(classifyFamily(-1, 1) == Family::Unnamed);
    for (Family f : {Family::Hyperbolic, Family::Popov, Family::JackiwPi, Family::AmbjornOlesen, Family::Bradlow,
                     Family::Laplace}) {
        const auto [l0, l] = familyParameters(familyName(f));
        CHECK(classifyFamily(l0, l) == f);
    }
    CHECK(familyParameters("jackiw_pi") == std::pair{0.0, -1.0});
    CHECK(kindOf([] { (void)familyParameters("Unnamed"); }) == ErrorKind::Config);
}

TEST_CASE("closed-form Higgs fields")
{
    const auto popov = buildVortex(RationalMap::power(1), -1, -1);
    testkit::Gen gen(31);
    for (int k = 0; k < 20; ++k) {
        const cd z = gen.complex(2.0);
        CHECK(std::abs(at(popov.phi, z) - 1.0) < 1e-14);
        CHECK(std::abs(popov.a(surface::surfacePoint(z), gen.point(2, 1.0)).value()) < 1e-14);
    }

    const auto jp = buildVortex(RationalMap::inversePower(1), 0, -1);
    CHECK(std::abs(at(jp.phi, 1.0) - (-0.5)) < 1e-14);
    for (int k = 0; k < 20; ++k) {
        const cd z = gen.complex(2.0);
        CHECK(std::abs(at(jp.phi, z) - (-std::conj(z) / (z * (1.0 + std::norm(z))))) < 1e-13);
    }

    const auto hyp = buildVortex(RationalMap::power(2), 1, 1);
    CHECK(std::abs(at(hyp.phi, 0.5) - 0.8) < 1e-14);
    for (int k = 0; k < 20; ++k) {
        const cd z = gen.inDisk(0.9);
        CHECK(std::abs(at(hyp.phi, z) - 2.0 * z / (1.0 + std::norm(z))) < 1e-13);
        CHECK(std::abs(hyp.phiModulusSquared(z) - std::norm(at(hyp.phi, z))) < 1e-13);
    }
}

TEST_CASE("construction errors")
{
    CHECK(kindOf([] { (void)buildVortex(RationalMap(Polynomial::constant(1.0), Polynomial::constant(2.0)), 1, 1); }) ==
          ErrorKind::ConstantMap);
    // a hyperbolic target needs |f| < 1 on the sampled source disk
    CHECK(kindOf([] {
              (void)buildVortex(RationalMap(Polynomial::constant(1.0), Polynomial({0.0, 2.0})), 1, 1);
          }) == ErrorKind::DomainViolation);
}

TEST_CASE("corpus satisfies the vortex equations and flatness")
{
    for (const auto& c : corpus()) {
        const auto vs = buildVortex(c.f, c.lambda0, c.lambda);
        const auto pts = samplePoints(vs, 200, 41);
        const auto rep = vortexResiduals(vs, pts);
        const auto flat = flatnessResidual(vs, pts);
        INFO(c.name << ": first " << rep.sup("vortex_first") << " second " << rep.sup("vortex_second")
                    << " flatness " << flat.sup("cartan_flatness"));
        CHECK(rep.allPass());
        CHECK(flat.allPass());
        CHECK(rep.allPass() == flat.allPass());
    }
}

TEST_CASE("Taubes equation away from zeros")
{
    for (const auto& c : corpus()) {
        const auto vs = buildVortex(c.f, c.lambda0, c.lambda);
        const auto rep = taubesResidual(vs, samplePoints(vs, 200, 42, 1e-2, true));
        INFO(c.name << ": " << rep.sup("taubes"));
        CHECK(rep.allPass());
    }
    const auto hyp = buildVortex(RationalMap::power(2), 1, 1);
    CHECK(taubesResidual(hyp, {surface::surfacePoint(0.5)}).sup("taubes") < 1e-6);
    const auto jp = buildVortex(RationalMap::inversePower(1), 0, -1);
    CHECK(taubesResidual(jp, {surface::surfacePoint(2.0)}).sup("taubes") < 1e-6);
    CHECK(taubesResidual(hyp, samplePoints(hyp, 50, 43, 1e-2, true), 0.1).sup("taubes") >= 0.01);
}

TEST_CASE("negative controls")
{
    const auto vs = buildVortex(RationalMap::power(2), -1, -1);
    const auto pts = samplePoints(vs, 200, 44);
    auto shifted = vs;
    shifted.a = [a = vs.a](const Point& p, const Point& v) { return a(p, v) + Complex{0.1 * v[0]}; };
    // a constant shift is closed, so it only shows up in the first equation
    CHECK(vortexResiduals(shifted, pts).sup("vortex_first") >= 1e-3);
    const auto bad = perturb(vs, 0.1);
    const auto rep = vortexResiduals(bad, pts);
    CHECK(rep.sup("vortex_first") >= 1e-3);
    CHECK(rep.sup("vortex_second") >= 1e-3);
    CHECK(flatnessResidual(bad, pts).sup("cartan_flatness") >= 1e-3);
}

TEST_CASE("gauge invariance of residual norms")
{
    testkit::Gen gen(45);
    for (const auto& c : corpus()) {
        const auto vs = buildVortex(c.f, c.lambda0, c.lambda);
        const auto pts = samplePoints(vs, 60, 46);
        const auto base = vortexResiduals(vs, pts);
        const auto baseFlat = flatnessResidual(vs, pts);
        for (int trial = 0; trial < 5; ++trial) {
            const double b0 = gen.uniform(-1, 1);
            const double b1 = gen.uniform(-1, 1);
            const double b2 = gen.uniform(-1, 1);
            const double b3 = gen.uniform(-1, 1);
            const dg::ScalarField beta = [=](const Point& p) {
                return Complex{b0 + b1 * p[0] + b2 * p[1] * p[1] + b3 * p[0] * p[1]};
            };
            const auto g = gaugeTransform(vs, beta);
            const auto rep = vortexResiduals(g, pts);
            INFO(c.name);
            CHECK(std::abs(rep.sup("vortex_first") - base.sup("vortex_first")) < 1e-9);
            CHECK(std::abs(rep.sup("vortex_second") - base.sup("vortex_second")) < 1e-9);
            CHECK(std::abs(std::norm(g.phi(pts[0]).value()) - std::norm(vs.phi(pts[0]).value())) < 1e-12);
            // f*A transforms by conjugation with exp(beta t0); its curvature norm is not invariant
            // componentwise, but flatness is
            CHECK(flatnessResidual(g, pts).allPass() == baseFlat.allPass());
        }
    }
}

TEST_CASE("Baptista factor")
{
    const auto popov = buildVortex(RationalMap::power(1), -1, -1);
    testkit::Gen gen(47);
    for (int k = 0; k < 10; ++k) {
        const cd z = gen.complex(2.0);
        CHECK(std::abs(baptistaFactor(popov, z) - popov.source().conformalFactor(z)) < 1e-13);
    }
    const auto jp = buildVortex(RationalMap::inversePower(1), 0, -1);
    CHECK(std::abs(baptistaFactor(jp, 0.0) - 4.0) < 1e-14);

    // log-log slope 2 * multiplicity at each ramification point
    const std::vector<Case> maps = {
        {"Hyperbolic z^2", 1, 1, RationalMap::power(2)},
        {"Hyperbolic z^3", 1, 1, RationalMap::power(3)},
        {"Popov z^3 - 3z", -1, -1, RationalMap(Polynomial::constant(1.0), Polynomial({0.0, -3.0, 0.0, 1.0}))},
    };
    for (const auto& c : maps) {
        const auto vs = buildVortex(c.f, c.lambda0, c.lambda);
        for (const auto& r : c.f.ramificationPoints()) {
            const double t = 0.7;
            const double lo = baptistaFactor(vs, r.point + std::polar(1e-3, t));
            const double hi = baptistaFactor(vs, r.point + std::polar(1e-2, t));
            const double slope = std::log(hi / lo) / std::log(10.0);
            INFO(c.name);
            CHECK(std::abs(slope - 2.0 * r.order) < 0.05);
        }
    }
}

TEST_CASE("bounded modulus and winding phase near a singular point")
{
    const auto jp = buildVortex(RationalMap::inversePower(1), 0, -1);
    const double eps = 1e-3;
    const double m0 = std::abs(at(jp.phi, eps));
    for (double t : {0.3, 1.1, 2.5, 4.0, 5.9}) {
        const cd v = at(jp.phi, std::polar(eps, t));
        CHECK(std::abs(std::abs(v) - m0) < 1e-10);
        CHECK(std::abs(v / std::abs(v) - std::polar(1.0, std::arg(-1.0) - 2.0 * t)) < 1e-9);
    }
}

TEST_CASE("vortex Cartan connection matches the pulled-back surface connection")
{
    testkit::Gen gen(48);
    const auto popov = buildVortex(RationalMap::power(1), -1, -1);
    const auto conn = vortexCartanConnection(popov);
    const auto gamma0 = surface::spinConnection(popov.source());
    for (int k = 0; k < 10; ++k) {
        const Point p = surface::surfacePoint(gen.complex(1.0));
        const Point v = gen.point(2, 1.0);
        CHECK(testkit::dist(conn(p, v).c0, -gamma0(p, v)) < 1e-14);
    }
    for (const auto& c : corpus()) {
        const auto vs = buildVortex(c.f, c.lambda0, c.lambda);
        const auto a = vortexCartanConnection(vs);
        const dg::ChartMap fmap = [f = c.f](const Point& p) {
            const Complex w = f(surface::chartZ(p));
            Point q = Point::zeros(2);
            q[0] = w.re;
            q[1] = w.im;
            return q;
        };
        const auto pulled = dg::pullback(fmap, surface::cartanConnection(vs.target()));
        double worst = 0.0;
        for (const Point& p : samplePoints(vs, 40, 49)) {
            for (const Point& v : {kDx, kDy}) {
                worst = std::max(worst, testkit::dist(a(p, v), pulled(p, v)));
            }
        }
        INFO(c.name << ": " << worst);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("flux quantisation")
{
    const auto popov = fluxIntegral(buildVortex(RationalMap::power(2), -1, -1));
    CHECK(popov.compact);
    CHECK(std::abs(popov.value - 4.0 * pi) < 4e-3 * pi);
    const auto jp = fluxIntegral(buildVortex(RationalMap::inversePower(1), 0, -1));
    CHECK(std::abs(jp.value - 4.0 * pi) < 4e-3 * pi);
    const auto hyp = fluxIntegral(buildVortex(RationalMap::power(2), 1, 1));
    CHECK(std::abs(hyp.value - 2.0 * pi) < 2e-3 * pi);
    // flux / 2pi counts Higgs zeros with multiplicity
    for (const auto& c : {Case{"Hyperbolic z^3", 1, 1, RationalMap::power(3)},
                          Case{"Popov z^3 - 3z", -1, -1,
                               RationalMap(Polynomial::constant(1.0), Polynomial({0.0, -3.0, 0.0, 1.0}))}}) {
        const auto vs = buildVortex(c.f, c.lambda0, c.lambda);
        int zeros = 0;
        for (const auto& r : vs.f.ramificationPoints()) {
            zeros += r.order;
        }
        if (vs.family() == Family::Popov) {
            // on the sphere the polynomial map also ramifies at infinity; Riemann-Hurwitz gives 2d - 2 in total
            zeros = 2 * vs.f.degree() - 2;
        }
        const double n = fluxIntegral(vs).value / (2.0 * pi);
        INFO(c.name << ": " << n);
        CHECK(std::abs(n - zeros) < 1e-3);
    }
    CHECK(kindOf([] { (void)fluxIntegral(buildVortex(RationalMap::power(1), 1, 0)); }) == ErrorKind::TailDivergence);
}

TEST_CASE("quadrature oracle for the compactified integral")
{
    // area of the unit sphere, and of the unit disk in the flat coordinate
    const auto r = integrateOverSource(0.0, [](cd z) { return 4.0 / std::pow(1.0 + std::norm(z), 2); });
    CHECK(std::abs(r.value - 4.0 * pi) < 1e-6);
    const auto s = integrateOverSource(1.0, [](cd z) { return 4.0 / std::pow(1.0 + std::norm(z), 2); });
    CHECK(std::abs(s.value - 4.0 * pi) < 1e-7);
    const auto d = integrateOverSource(-1.0, [](cd) { return 1.0; });
    CHECK(std::abs(d.value - pi) < 1e-5);
    CHECK(kindOf([] { (void)integrateOverSource(0.0, [](cd) { return 1.0; }); }) == ErrorKind::TailDivergence);
}

TEST_CASE("energy saturates the Bogomol'nyi bound")
{
    const auto e2 = energyIntegral(buildVortex(RationalMap::power(2), 1, 1));
    CHECK(std::abs(e2.value - pi) < 5e-3 * pi);
    const auto e3 = energyIntegral(buildVortex(RationalMap::power(3), 1, 1));
    CHECK(std::abs(e3.value - 2.0 * pi) < 1e-2 * pi);
    // the vacuum: f = z on the disk gives phi = 1, a = 0
    const auto vac = buildVortex(RationalMap::power(1), 1, 1);
    CHECK(std::abs(energyDensity(vac, cd{0.3, 0.2})) < 1e-14);
    CHECK(std::abs(energyIntegral(vac).value) < 1e-10);
    CHECK(kindOf([] { (void)energyIntegral(buildVortex(RationalMap::power(2), -1, -1)); }) == ErrorKind::WrongFamily);
}
