#include "cartan/group.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cartan/sampling.hpp"

namespace cartan::group {

namespace {

using lie::Mat2;

// (z1, z2) packed in the first row of a Mat2 so dg::valueAndDerivative can split it.
Mat2 packedEmbedding(const Point& p, double lambda)
{
    const Embedding e = embed(p, lambda);
    return {e.z1, e.z2, 0.0, 0.0};
}

struct EmbeddingJet {
    Complex z1, z2, dz1, dz2;
};

EmbeddingJet embeddingJet(const Point& p, const Point& v, double lambda)
{
    auto [val, der] = dg::valueAndDerivative([lambda](const Point& q) { return packedEmbedding(q, lambda); }, p, v);
    return {val.e[0], val.e[1], der.e[0], der.e[1]};
}

Complex sigmaValue(const Point& p, const Point& v, double lambda)
{
    const EmbeddingJet j = embeddingJet(p, v, lambda);
    return timesI(j.z1 * j.dz2 - j.z2 * j.dz1) * 2.0;
}

Complex sigma0Value(const Point& p, const Point& v, double lambda)
{
    const EmbeddingJet j = embeddingJet(p, v, lambda);
    const Complex inner = conj(j.z1) * j.dz1 - lambda * (conj(j.z2) * j.dz2) - j.z1 * conj(j.dz1) +
                          lambda * (j.z2 * conj(j.dz2));
    return timesI(inner);
}

using Jet3 = std::array<std::array<Jet, 3>, 3>;

Jet3 inverse3(const Jet3& m)
{
    const auto& a = m;
    Jet3 c;
    c[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    c[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
    c[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    c[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
    c[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    c[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
    c[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    c[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
    c[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    const Jet det = a[0][0] * c[0][0] + a[0][1] * c[1][0] + a[0][2] * c[2][0];
    if (std::abs(det.value()) < 1e-14) {
        throw Error(ErrorKind::DegenerateRepresentation, "left-invariant coframe is singular");
    }
    const Jet r = reciprocal(det);
    for (auto& row : c) {
        for (auto& x : row) {
            x = x * r;
        }
    }
    return c;
}

double maxAbs(const Complex& z) { return std::abs(z.value()); }

}  // namespace

Embedding embed(const Point& p, double lambda)
{
    const Jet r2 = p[0] * p[0] + p[1] * p[1];
    const Jet q = 1.0 - lambda * r2;
    if (q.value() <= 1e-12) {
        throw Error(ErrorKind::ChartBoundary, "1 - lambda |z|^2 vanishes at this chart point");
    }
    const Jet n = reciprocal(sqrt(q));
    const Complex phase = expI(-0.5 * p[2]) * n;
    return {phase, chartZ(p) * phase};
}

Point chartPoint(std::complex<double> z, double chi) { return Point{z.real(), z.imag(), chi}; }

Mat2 groupElement(const Point& p, double lambda)
{
    const Embedding e = embed(p, lambda);
    return {e.z1, lambda * conj(e.z2), e.z2, conj(e.z1)};
}

Complex project(const Embedding& e) { return e.z2 / e.z1; }

dg::ChartMap section()
{
    return [](const Point& p) {
        Point q = Point::zeros(3);
        q[0] = p[0];
        q[1] = p[1];
        return q;
    };
}

Forms leftInvariantForms(double lambda)
{
    Forms f;
    f.sigma = [lambda](const Point& p, const Point& v) { return sigmaValue(p, v, lambda); };
    f.sigmaBar = [lambda](const Point& p, const Point& v) { return conj(sigmaValue(p, v, lambda)); };
    f.sigma0 = [lambda](const Point& p, const Point& v) { return sigma0Value(p, v, lambda); };
    f.sigma1 = [lambda](const Point& p, const Point& v) { return Complex{sigmaValue(p, v, lambda).re}; };
    f.sigma2 = [lambda](const Point& p, const Point& v) { return Complex{sigmaValue(p, v, lambda).im}; };
    return f;
}

dg::MatrixOneForm maurerCartanMatrix(double lambda)
{
    return dg::logarithmicDerivative([lambda](const Point& p) { return groupElement(p, lambda); });
}

dg::AlgebraOneForm maurerCartanForm(double lambda)
{
    return [lambda](const Point& p, const Point& v) {
        const Complex s = sigmaValue(p, v, lambda);
        return lie::AlgebraElement{sigma0Value(p, v, lambda), conj(s) * 0.5, s * 0.5, lambda};
    };
}

Frame leftInvariantFields(const Point& p, double lambda)
{
    Jet3 s;
    for (int j = 0; j < 3; ++j) {
        const Point dj = Point::basis(3, j);
        const Complex sg = sigmaValue(p, dj, lambda);
        s[0][static_cast<std::size_t>(j)] = sigma0Value(p, dj, lambda).re;
        s[1][static_cast<std::size_t>(j)] = sg.re;
        s[2][static_cast<std::size_t>(j)] = sg.im;
    }
    const Jet3 inv = inverse3(s);
    Frame f;
    f.x0 = Point::basis(3, 2);
    f.x1 = Point::zeros(3);
    f.x2 = Point::zeros(3);
    for (int j = 0; j < 3; ++j) {
        f.x1[j] = inv[static_cast<std::size_t>(j)][1];
        f.x2[j] = inv[static_cast<std::size_t>(j)][2];
    }
    return f;
}

Point lieBracket(const std::function<Point(const Point&)>& x, const std::function<Point(const Point&)>& y,
                 const Point& p)
{
    const Point xp = x(p);
    const Point yp = y(p);
    return dg::derivativeAlong(y, p, xp) - dg::derivativeAlong(x, p, yp);
}

ResidualReport maurerCartanResiduals(double lambda, const std::vector<Point>& points, bool dropTorsionTerm)
{
    const Forms f = leftInvariantForms(lambda);
    const dg::TwoForm dSigma = dg::exteriorDerivative(f.sigma);
    const dg::TwoForm dSigma0 = dg::exteriorDerivative(f.sigma0);
    const dg::TwoForm sigmaSigma0 = dg::wedge(f.sigma, f.sigma0);
    const dg::TwoForm sigmaSigmaBar = dg::wedge(f.sigma, f.sigmaBar);
    const dg::MatrixTwoForm mc = dg::curvature(maurerCartanMatrix(lambda));
    const Complex torsionCoeff = dropTorsionTerm ? Complex{0.0} : imagUnit();
    const Complex gaussCoeff = imagUnit() * (0.5 * lambda);

    std::vector<double> r1;
    std::vector<double> r2;
    std::vector<double> r3;
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const Point& p : points) {
        double a = 0.0;
        double b = 0.0;
        double c = 0.0;
        for (auto [i, j] : pairs) {
            const Point u = Point::basis(3, i);
            const Point v = Point::basis(3, j);
            a = std::max(a, maxAbs(dSigma(p, u, v) - torsionCoeff * sigmaSigma0(p, u, v)));
            b = std::max(b, maxAbs(dSigma0(p, u, v) - gaussCoeff * sigmaSigmaBar(p, u, v)));
            c = std::max(c, mc(p, u, v).maxAbs());
        }
        r1.push_back(a);
        r2.push_back(b);
        r3.push_back(c);
    }
    ResidualReport rep;
    rep.add("structure_sigma", r1, 1e-9);
    rep.add("structure_sigma0", r2, 1e-9);
    rep.add("maurer_cartan_matrix", r3, 1e-9);
    return rep;
}

int equivariantDegree(const ScalarField& f, const std::vector<Point>& points)
{
    if (points.empty()) {
        throw Error(ErrorKind::NotEquivariant, "no sample points");
    }
    const Point x0 = Point::basis(3, 2);
    std::vector<std::complex<double>> w;
    w.reserve(points.size());
    for (const Point& p : points) {
        auto [value, derivative] = dg::valueAndDerivative(f, p, x0);
        if (std::abs(value.value()) < 1e-300) {
            throw Error(ErrorKind::NotEquivariant, "function vanishes at a sample point");
        }
        w.push_back(2.0 * kI * derivative.value() / value.value());
    }
    const double n = std::round(w.front().real());
    for (const auto& x : w) {
        if (std::abs(x - std::complex<double>{n, 0.0}) > 1e-8) {
            throw Error(ErrorKind::NotEquivariant, "2i X0 F / F is not a common integer");
        }
    }
    return static_cast<int>(n);
}

double metric(double lambda, const Point& p, const Point& u, const Point& v)
{
    if (lambda == 0.0) {
        throw Error(ErrorKind::DegenerateMetric, "the lambda = 0 metric is singular");
    }
    const std::complex<double> su = sigmaValue(p, u, lambda).value();
    const std::complex<double> sv = sigmaValue(p, v, lambda).value();
    const double s0u = sigma0Value(p, u, lambda).value().real();
    const double s0v = sigma0Value(p, v, lambda).value().real();
    return 0.25 * (-(1.0 / lambda) * s0u * s0v + su.real() * sv.real() + su.imag() * sv.imag());
}

double volume(double lambda, const Point& p, const Point& u, const Point& v, const Point& w)
{
    std::array<std::array<double, 3>, 3> m{};
    const std::array<const Point*, 3> t{&u, &v, &w};
    for (std::size_t k = 0; k < 3; ++k) {
        const std::complex<double> s = sigmaValue(p, *t[k], lambda).value();
        m[0][k] = s.real();
        m[1][k] = sigma0Value(p, *t[k], lambda).value().real();
        m[2][k] = s.imag();
    }
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det / 8.0;
}

dg::ChartMap fibreLoop(std::complex<double> z)
{
    return [z](const Point& t) {
        Point q = Point::zeros(3);
        q[0] = Jet{z.real()};
        q[1] = Jet{z.imag()};
        q[2] = t[0];
        return q;
    };
}

std::vector<Point> samplePoints(double lambda, int count, std::uint64_t seed,
                                const std::vector<std::complex<double>>& avoid, double excision)
{
    std::mt19937_64 rng(seed);
    const auto zs = sampleDisk(rng, count, chartSamplingRadius(-lambda), avoid, excision);
    std::uniform_real_distribution<double> chi(0.0, 4.0 * std::numbers::pi);
    std::vector<Point> out;
    out.reserve(zs.size());
    for (const auto& z : zs) {
        out.push_back(chartPoint(z, chi(rng)));
    }
    return out;
}

}  // namespace cartan::group
