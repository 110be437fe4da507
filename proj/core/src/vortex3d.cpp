#include "cartan/vortex3d.hpp"

#include <cmath>
#include <numbers>

#include "cartan/quadrature.hpp"
#include "cartan/vortex2d.hpp"

namespace cartan::vortex3d {

namespace {

using std::numbers::pi;
using lie::AlgebraElement;
using lie::Mat2;

const Point kDx = Point::basis(3, 0);
const Point kDy = Point::basis(3, 1);
const Point kDchi = Point::basis(3, 2);

Complex power(const Complex& z, int n)
{
    Complex out{1.0};
    for (int k = 0; k < n; ++k) {
        out = out * z;
    }
    return out;
}

/// sum_k c_k z1^{N-k} z2^k
Complex homogenise(const poly::Polynomial& p, int n, const Complex& z1, const Complex& z2)
{
    Complex acc{0.0};
    for (int k = 0; k <= p.degree(); ++k) {
        acc = acc + Complex{p.coeff(k)} * power(z1, n - k) * power(z2, k);
    }
    return acc;
}

Complex homogeniseDz2(const poly::Polynomial& p, int n, const Complex& z1, const Complex& z2)
{
    Complex acc{0.0};
    for (int k = 1; k <= p.degree(); ++k) {
        acc = acc + Complex{static_cast<double>(k) * p.coeff(k)} * power(z1, n - k) * power(z2, k - 1);
    }
    return acc;
}

lie::Reality decodeReality(double lambda) { return lambda == 0.0 ? lie::Reality::Real : lie::Reality::General; }

double absValue(const Complex& z) { return std::abs(z.value()); }

double realPartOf(const Complex& z) { return z.value().real(); }

void requireHomogeneous(const HomogeneousPair& pair, const char* what)
{
    if (pair.mode != LiftMode::Homogeneous) {
        throw Error(ErrorKind::Config, std::string(what) + " needs a homogeneous lift");
    }
}

VortexConfiguration fromConnection(dg::AlgebraOneForm connection, double lambda0, double lambda)
{
    const group::Forms forms = group::leftInvariantForms(lambda0);
    VortexConfiguration vc;
    vc.lambda0 = lambda0;
    vc.lambda = lambda;
    vc.phi = [connection, lambda0](const Point& p) {
        const group::Frame fr = group::leftInvariantFields(p, lambda0);
        return dg::evaluate(connection, p, fr.minus()).cminus;
    };
    const dg::OneForm sigma0 = forms.sigma0;
    vc.a = [connection, sigma0](const Point& p, const Point& v) { return connection(p, v).c0 - sigma0(p, v); };
    vc.connection = std::move(connection);
    return vc;
}

}  // namespace

dg::ScalarField HomogeneousPair::F1() const
{
    if (mode == LiftMode::Trivial) {
        return [](const Point&) { return Complex{1.0}; };
    }
    return [p = f.f1(), n = N, l0 = lambda0](const Point& x) {
        const group::Embedding e = group::embed(x, l0);
        return homogenise(p, n, e.z1, e.z2);
    };
}

dg::ScalarField HomogeneousPair::F2() const
{
    if (mode == LiftMode::Trivial) {
        return [map = f](const Point& x) { return map(group::chartZ(x)); };
    }
    return [p = f.f2(), n = N, l0 = lambda0](const Point& x) {
        const group::Embedding e = group::embed(x, l0);
        return homogenise(p, n, e.z1, e.z2);
    };
}

dg::ScalarField HomogeneousPair::dF1() const
{
    requireHomogeneous(*this, "dF1");
    return [p = f.f1(), n = N, l0 = lambda0](const Point& x) {
        const group::Embedding e = group::embed(x, l0);
        return homogeniseDz2(p, n, e.z1, e.z2);
    };
}

dg::ScalarField HomogeneousPair::dF2() const
{
    requireHomogeneous(*this, "dF2");
    return [p = f.f2(), n = N, l0 = lambda0](const Point& x) {
        const group::Embedding e = group::embed(x, l0);
        return homogeniseDz2(p, n, e.z1, e.z2);
    };
}

dg::ScalarField HomogeneousPair::D2() const
{
    return [f1 = F1(), f2 = F2(), l = lambda](const Point& x) { return Complex{norm(f1(x)) - l * norm(f2(x))}; };
}

HomogeneousPair liftRationalMap(const poly::RationalMap& f, LiftMode mode, double lambda0, double lambda)
{
    if (mode == LiftMode::Trivial) {
        if (lambda == -1.0) {
            throw Error(ErrorKind::TrivialLiftUnavailable, "the trivial lift needs a trivial target bundle (lambda != -1)");
        }
        return {mode, f, 0, lambda0, lambda};
    }
    return {mode, f, f.degree(), lambda0, lambda};
}

dg::MatrixField bundleMap(const HomogeneousPair& pair)
{
    return [f1 = pair.F1(), f2 = pair.F2(), l = pair.lambda](const Point& x) {
        const Complex a = f1(x);
        const Complex b = f2(x);
        const Jet d2 = norm(a) - l * norm(b);
        if (!(d2.value() > 1e-14)) {
            throw Error(ErrorKind::PairDegenerate, "|F1|^2 - lambda |F2|^2 is not positive");
        }
        const Complex s{1.0 / sqrt(d2)};
        return Mat2{s * a, s * Complex{l} * conj(b), s * b, s * conj(a)};
    };
}

ResidualReport bundleMapChecks(const HomogeneousPair& pair, const std::vector<Point>& points)
{
    const dg::MatrixField u = bundleMap(pair);
    std::vector<double> constraint;
    std::vector<double> fibre;
    for (const Point& p : points) {
        auto [val, der] = dg::valueAndDerivative(u, p, kDchi);
        constraint.push_back(std::abs(std::norm(val(0, 0).value()) - pair.lambda * std::norm(val(1, 0).value()) - 1.0));
        const Mat2 v = val.inverse() * der;
        // X0 U = p U t0 with t0 = -(i/2) diag(1, -1): U^{-1} X0 U is diagonal, imaginary, trace-free
        const double offDiagonal = std::max(std::abs(v(0, 1).value()), std::abs(v(1, 0).value()));
        const double realPart = std::max(std::abs(v(0, 0).value().real()), std::abs(v(1, 1).value().real()));
        const double trace = std::abs(v.trace().value());
        fibre.push_back(std::max({offDiagonal, realPart, trace}));
    }
    ResidualReport rep;
    rep.add("unit_constraint", constraint, 1e-12);
    rep.add("fibre_preserving", fibre, 1e-10);
    return rep;
}

dg::AlgebraOneForm connectionFromBundleMap(const dg::MatrixField& u, double lambda)
{
    return [u, lambda](const Point& p, const Point& v) {
        auto [val, der] = dg::valueAndDerivative(u, p, v);
        return lie::fromMatrix(val.inverse() * der, lie::GroupParameter{lambda}, decodeReality(lambda));
    };
}

VortexConfiguration extractConfiguration(const dg::AlgebraOneForm& connection, double lambda0, double lambda,
                                         const std::vector<Point>& gaugePoints)
{
    for (const Point& p : gaugePoints) {
        const group::Frame fr = group::leftInvariantFields(p, lambda0);
        const AlgebraElement minus = dg::evaluate(connection, p, fr.minus());
        const AlgebraElement vertical = connection(p, fr.x0);
        const double scale = 1.0 + minus.maxAbs() + vertical.maxAbs();
        const double bad = std::max({absValue(minus.cplus), absValue(vertical.cplus), absValue(vertical.cminus),
                                     std::abs(vertical.c0.value().imag())});
        if (bad > 1e-8 * scale) {
            throw Error(ErrorKind::NotVortexGauge, "connection is not in vortex gauge (deviation " +
                                                       std::to_string(bad) + ")");
        }
    }
    return fromConnection(connection, lambda0, lambda);
}

VortexConfiguration extractConfiguration(const HomogeneousPair& pair)
{
    const dg::MatrixField u = bundleMap(pair);
    const dg::AlgebraOneForm conn = connectionFromBundleMap(u, pair.lambda);
    std::vector<cd> excluded;
    if (pair.mode == LiftMode::Homogeneous) {
        excluded = pair.singularBase();
    }
    const auto gaugePoints = group::samplePoints(pair.lambda0, 8, 0x9a0e, excluded, 1e-2);
    VortexConfiguration vc = extractConfiguration(conn, pair.lambda0, pair.lambda, gaugePoints);
    vc.u = u;
    vc.pair = pair;
    vc.excluded = std::move(excluded);
    return vc;
}

VortexConfiguration vacuumConfiguration(double lambda0, double lambda)
{
    const dg::MatrixField u = [](const Point&) { return Mat2::identity(); };
    VortexConfiguration vc = fromConnection(connectionFromBundleMap(u, lambda), lambda0, lambda);
    vc.u = u;
    return vc;
}

dg::AlgebraOneForm reassemble(const VortexConfiguration& vc)
{
    const group::Forms forms = group::leftInvariantForms(vc.lambda0);
    return [phi = vc.phi, a = vc.a, forms, l = vc.lambda](const Point& p, const Point& v) {
        const Complex ph = phi(p);
        const Complex half{0.5};
        return AlgebraElement{a(p, v) + forms.sigma0(p, v), half * conj(ph) * forms.sigmaBar(p, v),
                              half * ph * forms.sigma(p, v), l};
    };
}

ResidualReport configResiduals(const VortexConfiguration& vc, const std::vector<Point>& points)
{
    const group::Forms forms = group::leftInvariantForms(vc.lambda0);
    const dg::ScalarField phi = vc.phi;
    const dg::OneForm a = vc.a;
    const dg::OneForm covariant = [phi, a](const Point& p, const Point& v) {
        auto [value, derivative] = dg::valueAndDerivative(phi, p, v);
        return derivative + imagUnit() * a(p, v) * value;
    };
    const dg::TwoForm first = dg::wedge(covariant, forms.sigma);
    const dg::TwoForm fa = dg::exteriorDerivative(a);
    const dg::TwoForm sbs = dg::wedge(forms.sigmaBar, forms.sigma);

    std::vector<double> r1;
    std::vector<double> r2;
    std::vector<double> eqPhi;
    std::vector<double> eqA;
    std::vector<double> norm1;
    for (const Point& p : points) {
        const group::Frame fr = group::leftInvariantFields(p, vc.lambda0);
        const std::array<ComplexTangent, 3> t{dg::realTangent(fr.x0), fr.plus(), fr.minus()};
        const double m = std::norm(phi(p).value());
        const Complex coefficient = imagUnit() * 0.5 * Complex{vc.lambda0 - vc.lambda * m};
        double s1 = 0.0;
        double s2 = 0.0;
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            s1 = std::max(s1, absValue(dg::evaluate(first, p, t[i], t[j])));
            const Complex lhs = dg::evaluate(fa, p, t[i], t[j]);
            const Complex rhs = coefficient * dg::evaluate(sbs, p, t[i], t[j]);
            s2 = std::max(s2, absValue(lhs - rhs));
        }
        r1.push_back(s1);
        r2.push_back(s2);

        auto [value, derivative] = dg::valueAndDerivative(phi, p, fr.x0);
        const Complex ax0 = a(p, fr.x0);
        eqPhi.push_back(absValue(derivative + imagUnit() * ax0 * value));
        double s3 = 0.0;
        for (const Point& v : {kDx, kDy, kDchi}) {
            s3 = std::max(s3, absValue(fa(p, fr.x0, v)));
        }
        eqA.push_back(s3);
        if (vc.pair && vc.pair->mode == LiftMode::Homogeneous) {
            norm1.push_back(absValue(ax0 - Complex{static_cast<double>(vc.pair->N - 1)}));
        }
    }
    ResidualReport rep;
    rep.add("vortex_first", r1, 1e-8);
    rep.add("vortex_second", r2, 1e-8);
    rep.add("equivariance_phi", eqPhi, 1e-9);
    rep.add("equivariance_a", eqA, 1e-9);
    if (!norm1.empty()) {
        rep.add("normalisation", norm1, 1e-10);
    }
    return rep;
}

ResidualReport connectionFlatness(const VortexConfiguration& vc, const std::vector<Point>& points)
{
    const dg::AlgebraTwoForm f = dg::curvature(vc.connection);
    std::vector<double> r;
    for (const Point& p : points) {
        r.push_back(std::max({f(p, kDx, kDy).maxAbs(), f(p, kDx, kDchi).maxAbs(), f(p, kDy, kDchi).maxAbs()}));
    }
    ResidualReport rep;
    rep.add("flatness", r, 1e-8);
    return rep;
}

ResidualReport closedFormCheck(const HomogeneousPair& pair, const std::vector<Point>& points)
{
    requireHomogeneous(pair, "closedFormCheck");
    const VortexConfiguration vc = extractConfiguration(pair);
    const group::Forms forms = group::leftInvariantForms(pair.lambda0);
    const dg::ScalarField f1 = pair.F1();
    const dg::ScalarField f2 = pair.F2();
    const dg::ScalarField d1 = pair.dF1();
    const dg::ScalarField d2 = pair.dF2();
    const dg::ScalarField dd = pair.D2();
    const dg::ScalarField logD2 = [dd](const Point& p) { return Complex{log(dd(p).re)}; };
    const dg::OneForm dLog = dg::exteriorDerivative(logD2);
    const double l0 = pair.lambda0;

    std::vector<double> rPhi;
    std::vector<double> rA;
    for (const Point& p : points) {
        const group::Embedding e = group::embed(p, l0);
        const Complex closedPhi = (f1(p) * d2(p) - f2(p) * d1(p)) / (e.z1 * dd(p));
        rPhi.push_back(absValue(vc.phi(p) - closedPhi));
        const group::Frame fr = group::leftInvariantFields(p, l0);
        const Complex xMinus = dg::evaluate(dLog, p, fr.minus());
        const Complex xPlus = dg::evaluate(dLog, p, fr.plus());
        const Complex half = imagUnit() * 0.5;
        double worst = 0.0;
        for (const Point& v : {kDx, kDy, kDchi}) {
            const Complex closedA = Complex{static_cast<double>(pair.N - 1)} * forms.sigma0(p, v) +
                                    half * xMinus * forms.sigma(p, v) - half * xPlus * forms.sigmaBar(p, v);
            worst = std::max(worst, absValue(vc.a(p, v) - closedA));
        }
        rA.push_back(worst);
    }
    ResidualReport rep;
    rep.add("closed_phi", rPhi, 1e-10);
    rep.add("closed_a", rA, 1e-10);
    return rep;
}

Holonomy holonomy(const VortexConfiguration& vc, cd z)
{
    const AlgebraElement v = quad::integrateOneFormAlongPath(vc.connection, group::fibreLoop(z), 0.0, 4.0 * pi, 1e-10);
    const double c0 = v.c0.value().real();
    const int n = static_cast<int>(std::lround(c0 / (2.0 * pi)));
    const double off = std::max(absValue(v.cplus), absValue(v.cminus));
    const double miss = std::hypot(c0 - 2.0 * pi * n, v.c0.value().imag());
    if (off > 1e-8 || miss > 1e-6 * std::max(1.0, std::abs(c0))) {
        throw Error(ErrorKind::NonQuantized, "fibre holonomy is not 2 pi n t0 (t0 coefficient " + std::to_string(c0) +
                                                 ", off-diagonal " + std::to_string(off) + ")");
    }
    return {v, n};
}

VortexConfiguration gaugeTransform(const VortexConfiguration& vc, const dg::ScalarField& beta)
{
    VortexConfiguration out = vc;
    const dg::OneForm dBeta = dg::exteriorDerivative(beta);
    out.phi = [phi = vc.phi, beta](const Point& p) { return expI(-beta(p).re) * phi(p); };
    out.a = [a = vc.a, dBeta](const Point& p, const Point& v) { return a(p, v) + Complex{dBeta(p, v).re}; };
    out.connection = [conn = vc.connection, beta, dBeta](const Point& p, const Point& v) {
        const AlgebraElement x = lie::conjugateByExpT0(conn(p, v), beta(p).re);
        return x + Complex{dBeta(p, v).re} * AlgebraElement::t0(x.lambda);
    };
    if (vc.u) {
        out.u = [u = *vc.u, beta](const Point& p) { return u(p) * lie::expT0(beta(p).re); };
    }
    return out;
}

VortexConfiguration gaugeTransformBundleMap(const VortexConfiguration& vc, const dg::ScalarField& beta)
{
    if (!vc.u) {
        throw Error(ErrorKind::Config, "configuration carries no bundle map");
    }
    const dg::MatrixField u = [u0 = *vc.u, beta](const Point& p) { return u0(p) * lie::expT0(beta(p).re); };
    VortexConfiguration out = fromConnection(connectionFromBundleMap(u, vc.lambda), vc.lambda0, vc.lambda);
    out.u = u;
    out.pair = vc.pair;
    out.excluded = vc.excluded;
    return out;
}

VortexConfiguration perturb(const VortexConfiguration& vc, double eps)
{
    VortexConfiguration out = vc;
    out.phi = [phi = vc.phi, eps, l0 = vc.lambda0](const Point& p) {
        const group::Embedding e = group::embed(p, l0);
        return phi(p) * Complex{1.0 + eps * norm(e.z2)};
    };
    return out;
}

ResidualReport descendCheck(const VortexConfiguration& vc, const std::vector<Point>& basePoints)
{
    if (!vc.pair) {
        throw Error(ErrorKind::Config, "descent needs a configuration built from a pair");
    }
    const HomogeneousPair& pair = *vc.pair;
    const vortex2d::VortexSolution vs = vortex2d::buildVortex(pair.f, pair.lambda0, pair.lambda);
    const dg::AlgebraOneForm down = vortex2d::vortexCartanConnection(vs);
    const dg::AlgebraOneForm pulled = dg::pullback(group::section(), vc.connection);
    // r = diag(conj(f1)/|f1|, f1/|f1|); identity for the trivial lift
    const bool trivial = pair.mode == LiftMode::Trivial;
    const dg::MatrixField r = [f1 = pair.f.f1(), trivial](const Point& p) {
        if (trivial) {
            return Mat2::identity();
        }
        const Complex w = f1(Complex{p[0], p[1]});
        const Complex unit = w * Complex{1.0 / abs(w)};
        return Mat2{conj(unit), 0.0, 0.0, unit};
    };
    const lie::GroupParameter lambda{pair.lambda};
    const Point ex = Point::basis(2, 0);
    const Point ey = Point::basis(2, 1);
    std::vector<double> diff;
    for (const Point& p : basePoints) {
        double worst = 0.0;
        for (const Point& v : {ex, ey}) {
            auto [rv, dr] = dg::valueAndDerivative(r, p, v);
            const Mat2 rinv = rv.inverse();
            const Mat2 m = rinv * lie::toMatrix(pulled(p, v)) * rv + rinv * dr;
            const AlgebraElement lifted = lie::fromMatrix(m, lambda, decodeReality(pair.lambda));
            worst = std::max(worst, (lifted - down(p, v)).maxAbs());
        }
        diff.push_back(worst);
    }
    ResidualReport rep;
    rep.add("descent", diff, 1e-8);
    return rep;
}

Mat2 pathOrderedExponential(const dg::AlgebraOneForm& connection, const dg::ChartMap& path, double a, double b,
                            int steps)
{
    const double h = (b - a) / steps;
    const double c1 = 0.5 - std::sqrt(3.0) / 6.0;
    const double c2 = 0.5 + std::sqrt(3.0) / 6.0;
    const Point unit = Point::basis(1, 0);
    auto sample = [&](double t) {
        Point s = Point::zeros(1);
        s[0] = Jet{t};
        auto [q, dq] = dg::pushforward(path, s, unit);
        return lie::toMatrix(connection(q, dq));
    };
    Mat2 y = Mat2::identity();
    for (int k = 0; k < steps; ++k) {
        const double t = a + k * h;
        const Mat2 a1 = sample(t + c1 * h);
        const Mat2 a2 = sample(t + c2 * h);
        const Mat2 omega = Complex{0.5 * h} * (a1 + a2) + Complex{std::sqrt(3.0) / 12.0 * h * h} * (a1 * a2 - a2 * a1);
        y = y * lie::expTraceFree(omega);
    }
    return y;
}

std::vector<Point> samplePoints(const VortexConfiguration& vc, int count, std::uint64_t seed, double excision)
{
    return group::samplePoints(vc.lambda0, count, seed, vc.excluded, excision);
}

}  // namespace cartan::vortex3d
