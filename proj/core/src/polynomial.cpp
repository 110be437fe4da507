#include "cartan/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cartan/errors.hpp"

namespace cartan::poly {

Polynomial::Polynomial(std::vector<cd> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == cd{0.0, 0.0}) {
        c_.pop_back();
    }
}

Polynomial Polynomial::monomial(int degree, cd c)
{
    std::vector<cd> v(static_cast<std::size_t>(degree + 1), cd{0.0});
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::fromRoots(const std::vector<cd>& roots, cd c)
{
    Polynomial p = constant(c);
    for (const cd& r : roots) {
        p = p * Polynomial({-r, 1.0});
    }
    return p;
}

cd Polynomial::operator()(cd z) const
{
    cd acc{0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Complex Polynomial::operator()(const Complex& z) const
{
    Complex acc{0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z + Complex{*it};
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<cd> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * c_[k];
    }
    return Polynomial(std::move(d));
}

std::vector<cd> Polynomial::roots() const
{
    const int n = degree();
    if (n <= 0) {
        return {};
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (int i = 0; i < n; ++i) {
        companion(i, n - 1) = -c_[static_cast<std::size_t>(i)] / c_.back();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<cd> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    const Polynomial d = derivative();
    for (cd& r : out) {
        for (int it = 0; it < 3; ++it) {
            const cd dv = d(r);
            if (std::abs(dv) < 1e-12) {
                break;
            }
            const cd step = (*this)(r) / dv;
            if (!std::isfinite(std::abs(step)) || std::abs(step) > 1e-3 * (1.0 + std::abs(r))) {
                break;
            }
            r -= step;
        }
    }
    std::sort(out.begin(), out.end(), [](cd a, cd b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    return out;
}

Polynomial Polynomial::conjugateCoefficients() const
{
    std::vector<cd> v = c_;
    for (cd& x : v) {
        x = std::conj(x);
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed(int n) const
{
    std::vector<cd> v(static_cast<std::size_t>(n + 1), cd{0.0});
    for (int k = 0; k <= degree(); ++k) {
        v[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
    }
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<cd> v(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), cd{0.0});
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + cd{-1.0} * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.isZero() || b.isZero()) {
        return {};
    }
    std::vector<cd> v(static_cast<std::size_t>(a.degree() + b.degree() + 1), cd{0.0});
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            v[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(cd s, const Polynomial& a)
{
    std::vector<cd> v = a.coeffs();
    for (cd& x : v) {
        x *= s;
    }
    return Polynomial(std::move(v));
}

cd normalizedResultant(const Polynomial& a, const Polynomial& b)
{
    auto normalized = [](const Polynomial& p) {
        double m = 0.0;
        for (const cd& c : p.coeffs()) {
            m = std::max(m, std::abs(c));
        }
        return cd{1.0 / m} * p;
    };
    const Polynomial p = normalized(a);
    const Polynomial q = normalized(b);
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0) {
        return std::pow(p.coeff(0), n);
    }
    if (n == 0) {
        return std::pow(q.coeff(0), m);
    }
    const int size = m + n;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k <= m; ++k) {
            s(r, r + k) = p.coeff(m - k);
        }
    }
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= n; ++k) {
            s(n + r, r + k) = q.coeff(n - k);
        }
    }
    return s.determinant();
}

RationalMap::RationalMap(Polynomial f1, Polynomial f2) : f1_(std::move(f1)), f2_(std::move(f2))
{
    if (f1_.isZero()) {
        throw Error(ErrorKind::NotCoprime, "denominator polynomial is zero");
    }
    if (!f2_.isZero() && std::abs(normalizedResultant(f1_, f2_)) < 1e-10) {
        throw Error(ErrorKind::NotCoprime, "f1 and f2 share a common zero");
    }
    w_ = f2_.derivative() * f1_ - f1_.derivative() * f2_;
    double scale = 0.0;
    for (const cd& c : w_.coeffs()) {
        scale = std::max(scale, std::abs(c));
    }
    if (w_.isZero() || scale < 1e-14) {
        throw Error(ErrorKind::ConstantMap, "rational map is constant");
    }
}

RationalMap RationalMap::power(int n) { return {Polynomial::constant(1.0), Polynomial::monomial(n)}; }

RationalMap RationalMap::inversePower(int n) { return {Polynomial::monomial(n), Polynomial::constant(1.0)}; }

RationalMap RationalMap::blaschke(const std::vector<cd>& zeros, const std::vector<cd>& poles)
{
    Polynomial f1 = Polynomial::constant(1.0);
    Polynomial f2 = Polynomial::constant(1.0);
    for (const cd& c : zeros) {
        f2 = f2 * Polynomial({-c, 1.0});
        f1 = f1 * Polynomial({1.0, -std::conj(c)});
    }
    for (const cd& d : poles) {
        f2 = f2 * Polynomial({1.0, -std::conj(d)});
        f1 = f1 * Polynomial({-d, 1.0});
    }
    return {f1, f2};
}

std::vector<Ramification> RationalMap::ramificationPoints() const
{
    std::vector<Ramification> out;
    for (const cd& r : w_.roots()) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Ramification& x) { return std::abs(x.point - r) < 1e-4; });
        if (it == out.end()) {
            out.push_back({r, 1});
        } else {
            it->point = (it->point * static_cast<double>(it->order) + r) / static_cast<double>(it->order + 1);
            ++it->order;
        }
    }
    return out;
}

}  // namespace cartan::poly
