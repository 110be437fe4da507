#include "cartan/extensions.hpp"

#include <cmath>
#include <limits>

#include "cartan/group.hpp"
#include "cartan/surface.hpp"

namespace cartan::ext {

namespace {

using lie::AlgebraElement;

Point leftFactor(const Point& p)
{
    Point q = Point::zeros(2);
    q[0] = p[0];
    q[1] = p[1];
    return q;
}

Point rightFactor(const Point& p)
{
    Point q = Point::zeros(2);
    q[0] = p[2];
    q[1] = p[3];
    return q;
}

}  // namespace

ResidualReport magneticModeCheck(const vortex3d::VortexConfiguration& vc, const std::vector<Point>& points)
{
    if (vc.lambda0 != 1.0) {
        throw Error(ErrorKind::WrongSource, "the magnetic-mode identity needs the SU(1,1) source (lambda0 = 1)");
    }
    const dg::OneForm sigma0 = group::leftInvariantForms(1.0).sigma0;
    const dg::OneForm shifted = [a = vc.a, sigma0](const Point& p, const Point& v) {
        return a(p, v) + Complex{0.75} * sigma0(p, v);
    };
    const dg::TwoForm f = dg::exteriorDerivative(shifted);
    std::vector<double> r;
    for (const Point& p : points) {
        const group::Frame fr = group::leftInvariantFields(p, 1.0);
        const double m = std::norm(vc.phi(p).value());
        r.push_back(std::abs(f(p, fr.x1, fr.x2).value() - (vc.lambda * m - 0.25)));
    }
    ResidualReport rep;
    rep.add("magnetic_mode", r, 1e-9);
    return rep;
}

Point productPoint(std::complex<double> zM, std::complex<double> zN)
{
    Point p = Point::zeros(4);
    p[0] = Jet{zM.real()};
    p[1] = Jet{zM.imag()};
    p[2] = Jet{zN.real()};
    p[3] = Jet{zN.imag()};
    return p;
}

dg::AlgebraOneForm instantonConnection(const vortex2d::VortexSolution& vs, InstantonSigns signs)
{
    const surface::SurfaceGeometry n0{vs.lambda0};
    const dg::OneForm eN = surface::coframe(n0);
    const dg::OneForm gammaN = surface::spinConnection(n0);
    const dg::ScalarField phi = vs.phi;
    const dg::OneForm a = vs.a;
    const double lambda = -vs.lambda;
    const double s = signs.tplus;
    return [=](const Point& p, const Point& v) {
        const Point pM = leftFactor(p);
        const Point pN = rightFactor(p);
        const Point vM = leftFactor(v);
        const Point vN = rightFactor(v);
        const Complex ph = phi(pM);
        const Complex e = eN(pN, vN);
        const Complex half = imagUnit() * 0.5;
        return AlgebraElement{-(a(pM, vM) - gammaN(pN, vN)), Complex{-s} * half * conj(ph) * e,
                              half * ph * conj(e), lambda};
    };
}

ResidualReport asdResidual(const vortex2d::VortexSolution& vs, const dg::AlgebraOneForm& connection,
                           const std::vector<Point>& points, int orientation)
{
    const surface::SurfaceGeometry m0 = vs.source();
    const surface::SurfaceGeometry n0{vs.lambda0};
    const dg::AlgebraTwoForm f = dg::curvature(connection);
    const double o = orientation;
    std::vector<double> r;
    for (const Point& p : points) {
        const std::complex<double> zM{p[0].value(), p[1].value()};
        const std::complex<double> zN{p[2].value(), p[3].value()};
        const double sM = 1.0 / std::sqrt(m0.conformalFactor(zM));
        const double sN = 1.0 / std::sqrt(n0.conformalFactor(zN));
        const std::array<double, 4> scale{sM, sM, sN, sN};
        auto fo = [&](int i, int j) {
            return Complex{scale[static_cast<std::size_t>(i)] * scale[static_cast<std::size_t>(j)]} *
                   f(p, Point::basis(4, i), Point::basis(4, j));
        };
        const double d1 = (fo(0, 1) + Complex{o} * fo(2, 3)).maxAbs();
        const double d2 = (fo(0, 2) - Complex{o} * fo(1, 3)).maxAbs();
        const double d3 = (fo(0, 3) + Complex{o} * fo(1, 2)).maxAbs();
        r.push_back(std::max({d1, d2, d3}));
    }
    ResidualReport rep;
    rep.add("anti_self_dual", r, 1e-8);
    return rep;
}

std::vector<Point> productSamplePoints(const vortex2d::VortexSolution& vs, int count, std::uint64_t seed)
{
    const auto left = vortex2d::samplePoints(vs, count, seed);
    const auto right = surface::samplePoints(surface::SurfaceGeometry{vs.lambda0}, count, seed + 1);
    std::vector<Point> out;
    for (std::size_t k = 0; k < left.size() && k < right.size(); ++k) {
        out.push_back(productPoint({left[k][0].value(), left[k][1].value()},
                                   {right[k][0].value(), right[k][1].value()}));
    }
    return out;
}

InstantonSigns calibrateInstantonSigns(const vortex2d::VortexSolution& vs, const std::vector<Point>& points)
{
    InstantonSigns best;
    double bestSup = std::numeric_limits<double>::infinity();
    for (int t : {1, -1}) {
        for (int o : {1, -1}) {
            const InstantonSigns s{t, o};
            const double sup = asdResidual(vs, instantonConnection(vs, s), points, o).sup("anti_self_dual");
            if (sup < bestSup) {
                bestSup = sup;
                best = s;
            }
        }
    }
    return best;
}

DualityEntry dualityMap(double lambda0, double lambda)
{
    const double d0 = lambda == 0.0 ? 0.0 : -lambda;
    const double d = lambda0 == 0.0 ? 0.0 : -lambda0;
    return {vortex2d::familyName(vortex2d::classifyFamily(lambda0, lambda)), lambda0, lambda,
            vortex2d::familyName(vortex2d::classifyFamily(d0, d)), d0, d};
}

}  // namespace cartan::ext
