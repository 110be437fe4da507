#include "testkit.hpp"

#include "cartan/extensions.hpp"

using namespace cartan;
using poly::cd;
using poly::Polynomial;
using poly::RationalMap;
using vortex3d::LiftMode;

namespace {

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

vortex3d::VortexConfiguration lift(const RationalMap& f, LiftMode mode, double l0, double l)
{
    return vortex3d::extractConfiguration(vortex3d::liftRationalMap(f, mode, l0, l));
}

}  // namespace

TEST_CASE("magnetic mode identity on SU(1,1)")
{
    const std::vector<vortex3d::VortexConfiguration> corpus = {
        lift(RationalMap::power(2), LiftMode::Homogeneous, 1, 1),
        lift(RationalMap::power(3), LiftMode::Homogeneous, 1, 1),
        lift(RationalMap::power(2), LiftMode::Trivial, 1, 1),
        lift(RationalMap::blaschke({cd{0.3, 0.2}}, {cd{-0.4, 0.1}}), LiftMode::Homogeneous, 1, -1),
        lift(RationalMap(Polynomial::constant(1.0), Polynomial({0.2, 1.0, 0.5})), LiftMode::Trivial, 1, 0),
        vortex3d::vacuumConfiguration(1, 1),
    };
    for (const auto& vc : corpus) {
        const auto rep = ext::magneticModeCheck(vc, vortex3d::samplePoints(vc, 100, 71));
        INFO("lambda = " << vc.lambda << ": " << rep.sup("magnetic_mode"));
        CHECK(rep.allPass());
    }
    // vacuum: F_{A'}(X1, X2) = -1/4 exactly
    const auto vac = vortex3d::vacuumConfiguration(1, -1);
    const auto p = group::chartPoint(cd{0.2, 0.3}, 1.0);
    const auto fr = group::leftInvariantFields(p, 1.0);
    const dg::OneForm shifted = [&](const Point& q, const Point& v) {
        return vac.a(q, v) + Complex{0.75} * group::leftInvariantForms(1.0).sigma0(q, v);
    };
    CHECK(std::abs(dg::exteriorDerivative(shifted)(p, fr.x1, fr.x2).value() - (-0.25)) < 1e-12);
    CHECK(kindOf([] {
              (void)ext::magneticModeCheck(vortex3d::vacuumConfiguration(0, -1), {});
          }) == ErrorKind::WrongSource);
}

TEST_CASE("instanton connection components")
{
    const auto vs = vortex2d::buildVortex(RationalMap::power(2), 1, 1);
    const auto conn = ext::instantonConnection(vs);
    const surface::SurfaceGeometry n0{1.0};
    testkit::Gen gen(72);
    for (int k = 0; k < 10; ++k) {
        const Point p = ext::productPoint(gen.inDisk(0.8), gen.complex(2.0));
        const Point vN = Point::basis(4, 2 + k % 2);
        const Point pN = surface::surfacePoint({p[2].value(), p[3].value()});
        // a has no N0 legs, so the t0 part along N0 is Gamma_N
        CHECK(testkit::dist(conn(p, vN).c0, surface::spinConnection(n0)(pN, Point::basis(2, k % 2))) < 1e-14);
        CHECK(conn(p, vN).lambda == -1.0);
        CHECK(conn(p, vN).isReal());
    }
    // pure M0 bivector: F(dx1, dy1) = -da t0 (the Higgs terms have no M0 legs)
    const auto f = dg::curvature(conn);
    const auto da = dg::exteriorDerivative(vs.a);
    for (int k = 0; k < 10; ++k) {
        const cd zM = gen.inDisk(0.8);
        const Point p = ext::productPoint(zM, gen.complex(2.0));
        const auto fxy = f(p, Point::basis(4, 0), Point::basis(4, 1));
        const auto expect = da(surface::surfacePoint(zM), Point::basis(2, 0), Point::basis(2, 1));
        CHECK(testkit::dist(fxy.c0, -1.0 * expect) < 1e-10);
        CHECK(std::abs(fxy.cplus.value()) + std::abs(fxy.cminus.value()) < 1e-12);
    }
}

TEST_CASE("anti-self-duality after calibration")
{
    const auto hyp = vortex2d::buildVortex(RationalMap::power(2), 1, 1);
    const auto calib = ext::calibrateInstantonSigns(hyp, ext::productSamplePoints(hyp, 20, 73));
    CHECK(calib.tplus == ext::kInstantonSigns.tplus);
    CHECK(calib.orientation == ext::kInstantonSigns.orientation);

    const std::vector<vortex2d::VortexSolution> corpus = {
        hyp,
        vortex2d::buildVortex(RationalMap::power(3), 1, 1),
        vortex2d::buildVortex(RationalMap::power(1), -1, -1),
        vortex2d::buildVortex(RationalMap::power(2), -1, -1),
        vortex2d::buildVortex(RationalMap::inversePower(1), 0, -1),
        vortex2d::buildVortex(RationalMap::blaschke({cd{0.3, 0.2}}, {cd{-0.4, 0.1}}), 1, -1),
    };
    for (const auto& vs : corpus) {
        const auto pts = ext::productSamplePoints(vs, 50, 74);
        const auto rep = ext::asdResidual(vs, ext::instantonConnection(vs), pts);
        INFO(vortex2d::familyName(vs.family()) << ": " << rep.sup("anti_self_dual"));
        CHECK(rep.allPass());
    }
    for (const auto& vs : {hyp, vortex2d::buildVortex(RationalMap::power(2), -1, -1)}) {
        const auto pts = ext::productSamplePoints(vs, 50, 75);
        CHECK(ext::asdResidual(vs, ext::instantonConnection(vs), pts, -1).sup("anti_self_dual") >= 0.1);
    }
}

TEST_CASE("duality between families")
{
    using vortex2d::Family;
    auto dual = [](double l0, double l) { return ext::dualityMap(l0, l).dualFamily; };
    CHECK(dual(1, 1) == "Popov");
    CHECK(dual(-1, -1) == "Hyperbolic");
    CHECK(dual(1, 0) == "Jackiw-Pi");
    CHECK(dual(0, -1) == "Bradlow");
    CHECK(dual(1, -1) == "Ambjorn-Olesen");
    CHECK(dual(0, 0) == "Laplace");
    for (double l0 : {-1.0, 0.0, 1.0}) {
        for (double l : {-1.0, 0.0, 1.0}) {
            const auto d = ext::dualityMap(l0, l);
            const auto dd = ext::dualityMap(d.dualLambda0, d.dualLambda);
            CHECK(dd.dualLambda0 == l0);
            CHECK(dd.dualLambda == l);
            CHECK(std::signbit(d.dualLambda0) == (d.dualLambda0 < 0));
        }
    }
}
