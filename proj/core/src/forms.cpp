#include "cartan/forms.hpp"

namespace cartan::dg {

void splitValue(const Jet& r, int level, Jet& value, Jet& derivative) { r.split(level, value, derivative); }

void splitValue(const Complex& r, int level, Complex& value, Complex& derivative)
{
    r.re.split(level, value.re, derivative.re);
    r.im.split(level, value.im, derivative.im);
}

void splitValue(const AlgebraElement& r, int level, AlgebraElement& value, AlgebraElement& derivative)
{
    value.lambda = r.lambda;
    derivative.lambda = r.lambda;
    splitValue(r.c0, level, value.c0, derivative.c0);
    splitValue(r.cplus, level, value.cplus, derivative.cplus);
    splitValue(r.cminus, level, value.cminus, derivative.cminus);
}

void splitValue(const Mat2& r, int level, Mat2& value, Mat2& derivative)
{
    for (std::size_t k = 0; k < 4; ++k) {
        splitValue(r.e[k], level, value.e[k], derivative.e[k]);
    }
}

void splitValue(const Point& r, int level, Point& value, Point& derivative)
{
    value = Point::zeros(r.dim);
    derivative = Point::zeros(r.dim);
    for (int i = 0; i < r.dim; ++i) {
        r[i].split(level, value[i], derivative[i]);
    }
}

Point seedPoint(const Point& p, const Point& v, int level)
{
    if (p.dim != v.dim) {
        throw Error(ErrorKind::DimensionMismatch, "tangent and point dimensions differ");
    }
    Point q = Point::zeros(p.dim);
    for (int i = 0; i < p.dim; ++i) {
        q[i] = Jet::seed(p[i], v[i], level);
    }
    return q;
}

Complex directionalDerivative(const ScalarField& f, const Point& p, const Point& v)
{
    return derivativeAlong(f, p, v);
}

Complex secondDerivative(const ScalarField& f, const Point& p, const Point& u, const Point& v)
{
    return derivativeAlong([&](const Point& q) { return derivativeAlong(f, q, v, u.depth()); }, p, u, v.depth());
}

std::pair<Point, Point> pushforward(const ChartMap& map, const Point& p, const Point& v)
{
    return valueAndDerivative(map, p, v);
}

OneForm exteriorDerivative(const ScalarField& f)
{
    return [f](const Point& p, const Point& v) { return derivativeAlong(f, p, v); };
}

TwoForm wedge(const OneForm& alpha, const OneForm& beta)
{
    return [alpha, beta](const Point& p, const Point& u, const Point& v) {
        return alpha(p, u) * beta(p, v) - alpha(p, v) * beta(p, u);
    };
}

AlgebraTwoForm wedge(const OneForm& alpha, const AlgebraOneForm& beta)
{
    return [alpha, beta](const Point& p, const Point& u, const Point& v) {
        return alpha(p, u) * beta(p, v) - alpha(p, v) * beta(p, u);
    };
}

MatrixTwoForm wedge(const MatrixOneForm& alpha, const MatrixOneForm& beta)
{
    return [alpha, beta](const Point& p, const Point& u, const Point& v) {
        return alpha(p, u) * beta(p, v) - alpha(p, v) * beta(p, u);
    };
}

AlgebraTwoForm bracketWedge(const AlgebraOneForm& alpha, const AlgebraOneForm& beta)
{
    return [alpha, beta](const Point& p, const Point& u, const Point& v) {
        return lie::bracket(alpha(p, u), beta(p, v)) - lie::bracket(alpha(p, v), beta(p, u));
    };
}

AlgebraTwoForm curvature(const AlgebraOneForm& a)
{
    const AlgebraTwoForm da = exteriorDerivative(a);
    return [a, da](const Point& p, const Point& u, const Point& v) {
        return da(p, u, v) + lie::bracket(a(p, u), a(p, v));
    };
}

MatrixTwoForm curvature(const MatrixOneForm& a)
{
    const MatrixTwoForm da = exteriorDerivative(a);
    return [a, da](const Point& p, const Point& u, const Point& v) {
        const Mat2 au = a(p, u);
        const Mat2 av = a(p, v);
        return da(p, u, v) + (au * av - av * au);
    };
}

ScalarField pullback(const ChartMap& map, const ScalarField& f)
{
    return [map, f](const Point& p) { return f(map(p)); };
}

OneForm coordinateDifferential(int i)
{
    return [i](const Point&, const Point& v) { return Complex{v[i]}; };
}

MatrixOneForm logarithmicDerivative(const MatrixField& g)
{
    return [g](const Point& p, const Point& v) {
        auto [value, derivative] = valueAndDerivative(g, p, v);
        return value.inverse() * derivative;
    };
}

}  // namespace cartan::dg
