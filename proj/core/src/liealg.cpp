#include "cartan/liealg.hpp"

#include <algorithm>
#include <cmath>

namespace cartan::lie {

namespace {

void requireSameLambda(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.lambda != b.lambda) {
        throw Error(ErrorKind::MixedLambda, "algebra elements belong to different groups");
    }
}

double absValue(const Complex& z) { return std::abs(z.value()); }

}  // namespace

Mat2 Mat2::inverse() const
{
    const Complex d = det();
    if (std::abs(d.value()) < 1e-300) {
        throw Error(ErrorKind::DegenerateRepresentation, "singular 2x2 matrix");
    }
    const Complex one{1.0};
    const Complex r = one / d;
    return {r * e[3], -(r * e[1]), -(r * e[2]), r * e[0]};
}

double Mat2::maxAbs() const
{
    double m = 0.0;
    for (const auto& z : e) {
        m = std::max(m, absValue(z));
    }
    return m;
}

std::array<Complex, 3> AlgebraElement::realBasis() const
{
    return {c0, cplus + cminus, timesI(cplus - cminus)};
}

bool AlgebraElement::isReal(double tol) const
{
    return std::abs(c0.value().imag()) <= tol && std::abs(cplus.value() - std::conj(cminus.value())) <= tol;
}

double AlgebraElement::maxAbs() const
{
    return std::max({absValue(c0), absValue(cplus), absValue(cminus)});
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b)
{
    requireSameLambda(a, b);
    return {a.c0 + b.c0, a.cplus + b.cplus, a.cminus + b.cminus, a.lambda};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b)
{
    requireSameLambda(a, b);
    return {a.c0 - b.c0, a.cplus - b.cplus, a.cminus - b.cminus, a.lambda};
}

Generators makeGenerators(GroupParameter lambda)
{
    const double l = lambda.lambda;
    const std::complex<double> mi2{0.0, -0.5};
    Generators g;
    g.t0 = Mat2{mi2, 0.0, 0.0, -mi2};
    g.t1 = Mat2{0.0, mi2 * (-l), mi2, 0.0};
    g.t2 = Mat2{0.0, 0.5 * l, 0.5, 0.0};
    return g;
}

std::array<std::array<std::array<double, 3>, 3>, 3> structureConstants(GroupParameter lambda)
{
    std::array<std::array<std::array<double, 3>, 3>, 3> c{};
    c[0][1][2] = 1.0;
    c[1][0][2] = -1.0;
    c[0][2][1] = -1.0;
    c[2][0][1] = 1.0;
    c[1][2][0] = -lambda.lambda;
    c[2][1][0] = lambda.lambda;
    return c;
}

InverseMetric inverseMetric(GroupParameter lambda)
{
    return {{-lambda.lambda, 1.0, 1.0}, lambda.lambda == 0.0};
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b)
{
    requireSameLambda(a, b);
    // [t0, t+-] = -+ i t+-,  [t+, t-] = 2 i lambda t0
    const Complex plus = timesI(a.cplus * b.c0 - a.c0 * b.cplus);
    const Complex minus = timesI(a.c0 * b.cminus - a.cminus * b.c0);
    const Complex zero = timesI(a.cplus * b.cminus - a.cminus * b.cplus) * (2.0 * a.lambda);
    return {zero, plus, minus, a.lambda};
}

Mat2 matrixCommutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Mat2 toMatrix(const AlgebraElement& a)
{
    // c0 t0 + c+ t+ + c- t-  with t+ = [[0, i lambda], [0, 0]], t- = [[0, 0], [-i, 0]]
    const Complex half0 = timesI(a.c0) * 0.5;
    return {-half0, timesI(a.cplus) * a.lambda, -timesI(a.cminus), half0};
}

AlgebraElement fromMatrix(const Mat2& m, GroupParameter lambda, Reality reality)
{
    const double l = lambda.lambda;
    const Complex c0 = timesI(m(0, 0)) * 2.0;
    const Complex cm = timesI(m(1, 0));
    Complex cp;
    if (l != 0.0) {
        cp = -timesI(m(0, 1)) * (1.0 / l);
    } else if (reality == Reality::Real) {
        cp = conj(cm);
    } else {
        throw Error(ErrorKind::DegenerateRepresentation,
                    "t+ has a vanishing matrix image at lambda = 0; decode with Reality::Real");
    }
    AlgebraElement out{c0, cp, cm, l};
    const Mat2 back = toMatrix(out);
    const double scale = std::max(1.0, m.maxAbs());
    if ((back - m).maxAbs() > 1e-10 * scale) {
        throw Error(ErrorKind::OutOfSpan, "matrix is not in the span of t0, t+, t-");
    }
    if (reality == Reality::Real && l != 0.0 && !out.isReal(1e-10 * scale)) {
        throw Error(ErrorKind::OutOfSpan, "matrix is not in the real form of the algebra");
    }
    return out;
}

AlgebraElement conjugateByExpT0(const AlgebraElement& x, const Jet& alpha)
{
    const Complex phase = expI(alpha);
    return {x.c0, x.cplus * phase, x.cminus * conj(phase), x.lambda};
}

Mat2 expT0(const Jet& alpha)
{
    const Complex a = expI(-alpha * 0.5);
    return {a, 0.0, 0.0, conj(a)};
}

Mat2 expTraceFree(const Mat2& m)
{
    const std::complex<double> s2 = -m.det().value();
    const std::complex<double> s = std::sqrt(s2);
    std::complex<double> ch;
    std::complex<double> shOverS;
    if (std::abs(s) < 1e-6) {
        ch = 1.0 + s2 / 2.0 + s2 * s2 / 24.0;
        shOverS = 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
    } else {
        ch = std::cosh(s);
        shOverS = std::sinh(s) / s;
    }
    const Complex c{ch};
    const Complex k{shOverS};
    return {c + k * Complex{m(0, 0).value()}, k * Complex{m(0, 1).value()}, k * Complex{m(1, 0).value()},
            c + k * Complex{m(1, 1).value()}};
}

}  // namespace cartan::lie
