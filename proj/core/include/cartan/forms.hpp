#pragma once

// Exterior calculus on real coordinate charts. Forms are evaluation
// procedures: a one-form maps (point, tangent) to a value, a two-form maps
// (point, tangent, tangent). Derivatives are taken by seeding a fresh jet
// infinitesimal, so d, pullback and curvature are exact up to roundoff.

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <utility>

#include "cartan/jet.hpp"
#include "cartan/liealg.hpp"

namespace cartan {

/// Chart point or coordinate tangent of dimension 1..4.
struct Point {
    std::array<Jet, 4> x{};
    int dim = 0;

    Point() = default;
    Point(std::initializer_list<double> v)
    {
        for (double c : v) {
            x[static_cast<std::size_t>(dim++)] = Jet{c};
        }
    }
    static Point zeros(int d)
    {
        Point p;
        p.dim = d;
        return p;
    }
    static Point basis(int d, int i)
    {
        Point p = zeros(d);
        p[i] = Jet{1.0};
        return p;
    }

    Jet& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
    const Jet& operator[](int i) const { return x[static_cast<std::size_t>(i)]; }

    [[nodiscard]] int depth() const
    {
        int d = 0;
        for (int i = 0; i < dim; ++i) {
            d = std::max(d, (*this)[i].depth());
        }
        return d;
    }
    [[nodiscard]] double value(int i) const { return (*this)[i].value(); }
    /// Strip derivative data.
    [[nodiscard]] Point values() const
    {
        Point p = zeros(dim);
        for (int i = 0; i < dim; ++i) {
            p[i] = Jet{value(i)};
        }
        return p;
    }

    friend Point operator+(Point a, const Point& b)
    {
        for (int i = 0; i < a.dim; ++i) {
            a[i] += b[i];
        }
        return a;
    }
    friend Point operator-(Point a, const Point& b)
    {
        for (int i = 0; i < a.dim; ++i) {
            a[i] -= b[i];
        }
        return a;
    }
    friend Point operator*(const Jet& s, Point a)
    {
        for (int i = 0; i < a.dim; ++i) {
            a[i] = s * a[i];
        }
        return a;
    }
};

/// Tangent with complex components, stored as re + i im.
struct ComplexTangent {
    Point re;
    Point im;
};

}  // namespace cartan

namespace cartan::dg {

using lie::AlgebraElement;
using lie::Mat2;

using ScalarField = std::function<Complex(const Point&)>;
using AlgebraField = std::function<AlgebraElement(const Point&)>;
using MatrixField = std::function<Mat2(const Point&)>;
using ChartMap = std::function<Point(const Point&)>;

template <class V>
using OneFormOf = std::function<V(const Point& p, const Point& v)>;
template <class V>
using TwoFormOf = std::function<V(const Point& p, const Point& u, const Point& v)>;

using OneForm = OneFormOf<Complex>;
using TwoForm = TwoFormOf<Complex>;
using AlgebraOneForm = OneFormOf<AlgebraElement>;
using AlgebraTwoForm = TwoFormOf<AlgebraElement>;
using MatrixOneForm = OneFormOf<Mat2>;
using MatrixTwoForm = TwoFormOf<Mat2>;

// ---- infinitesimal bookkeeping ------------------------------------------

void splitValue(const Jet& r, int level, Jet& value, Jet& derivative);
void splitValue(const Complex& r, int level, Complex& value, Complex& derivative);
void splitValue(const AlgebraElement& r, int level, AlgebraElement& value, AlgebraElement& derivative);
void splitValue(const Mat2& r, int level, Mat2& value, Mat2& derivative);
void splitValue(const Point& r, int level, Point& value, Point& derivative);

/// p + e v for a fresh infinitesimal e at `level`.
Point seedPoint(const Point& p, const Point& v, int level);

inline int freshLevel(const Point& p, const Point& v, int contextDepth = 0)
{
    const int level = std::max({p.depth(), v.depth(), contextDepth}) + 1;
    if (level > Jet::kMaxDepth) {
        throw Error(ErrorKind::DifferentiationDepth, "nested differentiation deeper than supported");
    }
    return level;
}

/// Value and exact derivative of t -> f(p + t v) at t = 0.
template <class F>
auto valueAndDerivative(const F& f, const Point& p, const Point& v, int contextDepth = 0)
{
    using V = std::decay_t<decltype(f(p))>;
    const int level = freshLevel(p, v, contextDepth);
    const V r = f(seedPoint(p, v, level));
    std::pair<V, V> out;
    splitValue(r, level, out.first, out.second);
    return out;
}

template <class F>
auto derivativeAlong(const F& f, const Point& p, const Point& v, int contextDepth = 0)
{
    return valueAndDerivative(f, p, v, contextDepth).second;
}

Complex directionalDerivative(const ScalarField& f, const Point& p, const Point& v);

/// Second directional derivative D_u D_v f by nested seeding.
Complex secondDerivative(const ScalarField& f, const Point& p, const Point& u, const Point& v);

/// (map(p), Dmap_p v).
std::pair<Point, Point> pushforward(const ChartMap& map, const Point& p, const Point& v);

// ---- multiplication by i for the complex-linear extension ----------------

inline Complex timesIValue(const Complex& z) { return timesI(z); }
inline AlgebraElement timesIValue(const AlgebraElement& a) { return imagUnit() * a; }
inline Mat2 timesIValue(const Mat2& m) { return imagUnit() * m; }

template <class V>
V evaluate(const OneFormOf<V>& w, const Point& p, const ComplexTangent& v)
{
    return w(p, v.re) + timesIValue(w(p, v.im));
}

template <class V>
V evaluate(const TwoFormOf<V>& w, const Point& p, const ComplexTangent& u, const ComplexTangent& v)
{
    const V rr = w(p, u.re, v.re);
    const V ii = w(p, u.im, v.im);
    const V ri = w(p, u.re, v.im);
    const V ir = w(p, u.im, v.re);
    return (rr - ii) + timesIValue(ri + ir);
}

inline ComplexTangent realTangent(const Point& v) { return {v, Point::zeros(v.dim)}; }

// ---- exterior calculus ---------------------------------------------------

/// df as a one-form.
OneForm exteriorDerivative(const ScalarField& f);

/// d omega(u, v) = D_u[omega(.)(v)] - D_v[omega(.)(u)] for constant coordinate tangents.
template <class V>
TwoFormOf<V> exteriorDerivative(const OneFormOf<V>& omega)
{
    return [omega](const Point& p, const Point& u, const Point& v) -> V {
        const int ctx = std::max(u.depth(), v.depth());
        const V du = derivativeAlong([&](const Point& q) { return omega(q, v); }, p, u, ctx);
        const V dv = derivativeAlong([&](const Point& q) { return omega(q, u); }, p, v, ctx);
        return du - dv;
    };
}

TwoForm wedge(const OneForm& alpha, const OneForm& beta);
/// Scalar one-form times algebra-valued one-form.
AlgebraTwoForm wedge(const OneForm& alpha, const AlgebraOneForm& beta);
/// Matrix-product wedge; A^A(u, v) = [A(u), A(v)].
MatrixTwoForm wedge(const MatrixOneForm& alpha, const MatrixOneForm& beta);
/// Bracket wedge [alpha ^ beta](u, v) = [alpha(u), beta(v)] - [alpha(v), beta(u)].
AlgebraTwoForm bracketWedge(const AlgebraOneForm& alpha, const AlgebraOneForm& beta);

/// F = dA + A ^ A with the bracket of the algebra (equals dA + [A, A] / 2).
AlgebraTwoForm curvature(const AlgebraOneForm& a);
/// F = dA + A ^ A with matrix products.
MatrixTwoForm curvature(const MatrixOneForm& a);

template <class V>
OneFormOf<V> pullback(const ChartMap& map, const OneFormOf<V>& omega)
{
    return [map, omega](const Point& p, const Point& v) -> V {
        auto [q, dq] = pushforward(map, p, v);
        return omega(q, dq);
    };
}

template <class V>
TwoFormOf<V> pullback(const ChartMap& map, const TwoFormOf<V>& omega)
{
    return [map, omega](const Point& p, const Point& u, const Point& v) -> V {
        auto [q, du] = pushforward(map, p, u);
        auto dv = pushforward(map, p, v).second;
        return omega(q, du, dv);
    };
}

ScalarField pullback(const ChartMap& map, const ScalarField& f);

template <class V>
OneFormOf<V> add(OneFormOf<V> a, OneFormOf<V> b)
{
    return [a = std::move(a), b = std::move(b)](const Point& p, const Point& v) { return a(p, v) + b(p, v); };
}

template <class V>
TwoFormOf<V> subtract(TwoFormOf<V> a, TwoFormOf<V> b)
{
    return [a = std::move(a), b = std::move(b)](const Point& p, const Point& u, const Point& v) {
        return a(p, u, v) - b(p, u, v);
    };
}

/// Coordinate one-form dx^i on a chart.
OneForm coordinateDifferential(int i);

/// Matrix one-form g^{-1} dg of a matrix-valued map.
MatrixOneForm logarithmicDerivative(const MatrixField& g);

}  // namespace cartan::dg
