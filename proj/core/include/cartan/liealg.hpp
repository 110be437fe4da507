#pragma once

// The Lie algebras of the three-dimensional groups SU(2), SE_2, SU(1,1)
// realised as one family of 2x2 complex matrices indexed by a real lambda.

#include <array>
#include <complex>

#include "cartan/jet.hpp"

namespace cartan::lie {

/// lambda = -1 : SU(2),  lambda = 0 : SE_2,  lambda = 1 : SU(1,1).
struct GroupParameter {
    double lambda = -1.0;

    constexpr GroupParameter() = default;
    constexpr explicit GroupParameter(double l) : lambda(l) {}
    friend constexpr bool operator==(GroupParameter, GroupParameter) = default;
};

struct Mat2 {
    std::array<Complex, 4> e{};  // row-major

    Mat2() = default;
    Mat2(Complex a, Complex b, Complex c, Complex d) : e{a, b, c, d} {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    friend Mat2 operator+(const Mat2& a, const Mat2& b)
    {
        return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b)
    {
        return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b)
    {
        return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
    }
    friend Mat2 operator*(const Complex& s, const Mat2& a)
    {
        return {s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]};
    }
    friend Mat2 operator*(const Mat2& a, const Complex& s) { return s * a; }

    [[nodiscard]] Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
    [[nodiscard]] Complex trace() const { return e[0] + e[3]; }
    /// Throws DegenerateRepresentation for (numerically) singular input.
    [[nodiscard]] Mat2 inverse() const;
    /// Largest entry modulus of the value part.
    [[nodiscard]] double maxAbs() const;
};

/// Element c0 t0 + cplus t+ + cminus t- of Lie(H^1_lambda) (complexified).
struct AlgebraElement {
    Complex c0;
    Complex cplus;
    Complex cminus;
    double lambda = -1.0;

    AlgebraElement() = default;
    AlgebraElement(Complex a, Complex p, Complex m, double l) : c0(a), cplus(p), cminus(m), lambda(l) {}

    static AlgebraElement zero(double l) { return {0.0, 0.0, 0.0, l}; }
    static AlgebraElement t0(double l) { return {1.0, 0.0, 0.0, l}; }
    static AlgebraElement tplus(double l) { return {0.0, 1.0, 0.0, l}; }
    static AlgebraElement tminus(double l) { return {0.0, 0.0, 1.0, l}; }
    static AlgebraElement t1(double l) { return {0.0, 0.5, 0.5, l}; }
    static AlgebraElement t2(double l) { return {0.0, Complex{0.0, -0.5}, Complex{0.0, 0.5}, l}; }

    /// Real-basis coefficients (c^0, c^1, c^2) with t+- = t1 +- i t2.
    [[nodiscard]] std::array<Complex, 3> realBasis() const;

    /// Real in the sense of the real form: c0 real and cplus = conj(cminus).
    [[nodiscard]] bool isReal(double tol = 1e-12) const;
    [[nodiscard]] double maxAbs() const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a)
    {
        return {-a.c0, -a.cplus, -a.cminus, a.lambda};
    }
    friend AlgebraElement operator*(const Complex& s, const AlgebraElement& a)
    {
        return {s * a.c0, s * a.cplus, s * a.cminus, a.lambda};
    }
    friend AlgebraElement operator*(const AlgebraElement& a, const Complex& s) { return s * a; }
};

struct Generators {
    Mat2 t0;
    Mat2 t1;
    Mat2 t2;
};

Generators makeGenerators(GroupParameter lambda);

/// Structure constants C_{ab}^c in the real basis (t0, t1, t2).
std::array<std::array<std::array<double, 3>, 3>, 3> structureConstants(GroupParameter lambda);

/// Inverse metric g^{ab} = diag(-lambda, 1, 1); singular when lambda = 0.
struct InverseMetric {
    std::array<double, 3> diagonal{};
    bool isDegenerate = false;
};
InverseMetric inverseMetric(GroupParameter lambda);

/// Lie bracket from the structure constants. Throws MixedLambda.
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// Matrix commutator of the representatives. Faithful for lambda != 0 only.
Mat2 matrixCommutator(const Mat2& a, const Mat2& b);

Mat2 toMatrix(const AlgebraElement& a);

enum class Reality {
    General,  ///< arbitrary complexified element
    Real,     ///< caller asserts the element lies in the real form
};

/// Coefficients of m in (t0, t+, t-). Throws OutOfSpan when the round-trip
/// residual exceeds 1e-10 of the entry scale. At lambda = 0 the matrix
/// image of t+ vanishes, so only Reality::Real decodes uniquely; General
/// throws DegenerateRepresentation there.
AlgebraElement fromMatrix(const Mat2& m, GroupParameter lambda, Reality reality = Reality::General);

/// exp(-alpha t0) X exp(alpha t0): t+- pick up exp(+-i alpha).
AlgebraElement conjugateByExpT0(const AlgebraElement& x, const Jet& alpha);

/// exp(alpha t0) = diag(exp(-i alpha/2), exp(i alpha/2)).
Mat2 expT0(const Jet& alpha);

/// Matrix exponential of a trace-free 2x2 matrix (values only).
Mat2 expTraceFree(const Mat2& m);

}  // namespace cartan::lie
