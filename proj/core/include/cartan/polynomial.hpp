#pragma once

// Complex polynomials and rational maps f = f2 / f1.

#include <complex>
#include <vector>

#include "cartan/jet.hpp"

namespace cartan::poly {

using cd = std::complex<double>;

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients in ascending degree; trailing zeros are dropped.
    explicit Polynomial(std::vector<cd> coeffs);

    static Polynomial constant(cd c) { return Polynomial({c}); }
    static Polynomial monomial(int degree, cd c = 1.0);
    /// c * prod (z - r_i)
    static Polynomial fromRoots(const std::vector<cd>& roots, cd c = 1.0);

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }  ///< -1 for zero
    [[nodiscard]] bool isZero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<cd>& coeffs() const { return c_; }
    [[nodiscard]] cd coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : 0.0; }
    [[nodiscard]] cd leading() const { return c_.empty() ? cd{0.0} : c_.back(); }

    [[nodiscard]] cd operator()(cd z) const;
    [[nodiscard]] Complex operator()(const Complex& z) const;
    [[nodiscard]] Polynomial derivative() const;
    /// Roots with multiplicity (companion-matrix eigenvalues, Newton polished).
    [[nodiscard]] std::vector<cd> roots() const;
    /// Polynomial with conjugated coefficients.
    [[nodiscard]] Polynomial conjugateCoefficients() const;
    /// z^n p(1/z) for n >= degree.
    [[nodiscard]] Polynomial reversed(int n) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(cd s, const Polynomial& a);

private:
    void trim();
    std::vector<cd> c_;
};

/// Resultant of a and b via the Sylvester determinant, after scaling each to unit max coefficient.
cd normalizedResultant(const Polynomial& a, const Polynomial& b);

struct Ramification {
    cd point;
    int order = 1;
};

/// f = f2 / f1 with coprime f1, f2 (Sylvester resultant above 1e-10 after normalisation).
class RationalMap {
public:
    /// Throws NotCoprime, or ConstantMap when f2' f1 - f1' f2 vanishes identically.
    RationalMap(Polynomial f1, Polynomial f2);

    /// f = z^n
    static RationalMap power(int n);
    /// f = 1 / z^n
    static RationalMap inversePower(int n);
    /// Blaschke quotient prod (z - c)/(1 - conj(c) z) / prod (z - d)/(1 - conj(d) z), unit constant.
    static RationalMap blaschke(const std::vector<cd>& zeros, const std::vector<cd>& poles);

    [[nodiscard]] const Polynomial& f1() const { return f1_; }
    [[nodiscard]] const Polynomial& f2() const { return f2_; }
    [[nodiscard]] int degree() const { return std::max(f1_.degree(), f2_.degree()); }

    [[nodiscard]] cd operator()(cd z) const { return f2_(z) / f1_(z); }
    [[nodiscard]] Complex operator()(const Complex& z) const { return f2_(z) / f1_(z); }

    /// f2' f1 - f1' f2
    [[nodiscard]] const Polynomial& wronskian() const { return w_; }
    /// Zeros of f1 (poles of f), with multiplicity.
    [[nodiscard]] std::vector<cd> poles() const { return f1_.roots(); }
    /// Finite ramification points: zeros of the Wronskian, plus poles of order m > 1
    /// carried with order m - 1. Nearby numerical roots are clustered.
    [[nodiscard]] std::vector<Ramification> ramificationPoints() const;

private:
    Polynomial f1_;
    Polynomial f2_;
    Polynomial w_;
};

}  // namespace cartan::poly
