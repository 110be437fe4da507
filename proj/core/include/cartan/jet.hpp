#pragma once

// Nested forward-mode dual numbers.
//
// A Jet of depth k carries the truncated Taylor data of a real quantity with
// respect to k independent infinitesimals e_1..e_k with e_i^2 = 0. The
// coefficient of the monomial prod_{i in S} e_i is stored at index mask(S),
// so a depth-k jet has 2^k coefficients. Nesting k directional derivatives
// therefore costs one jet of depth k instead of k template instantiations.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>

#include "cartan/errors.hpp"

namespace cartan {

class Jet {
public:
    static constexpr int kMaxDepth = 3;
    static constexpr int kCapacity = 1 << kMaxDepth;

    constexpr Jet() = default;
    constexpr Jet(double v) : c_{v} {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] constexpr double value() const { return c_[0]; }
    [[nodiscard]] constexpr int depth() const { return depth_; }
    [[nodiscard]] constexpr int size() const { return 1 << depth_; }
    [[nodiscard]] constexpr double coeff(int mask) const { return c_[static_cast<std::size_t>(mask)]; }
    constexpr double& coeff(int mask) { return c_[static_cast<std::size_t>(mask)]; }

    /// Raise the nominal depth without changing the represented quantity.
    void promote(int depth)
    {
        if (depth > kMaxDepth) {
            throw Error(ErrorKind::DifferentiationDepth, "jet nesting exceeds the supported depth");
        }
        if (depth > depth_) {
            for (int m = size(); m < (1 << depth); ++m) {
                c_[static_cast<std::size_t>(m)] = 0.0;
            }
            depth_ = depth;
        }
    }

    /// x + e_{k+1} * dx where k = max(depth(x), depth(dx)).
    static Jet seed(const Jet& x, const Jet& dx, int newDepth)
    {
        Jet r = x;
        r.promote(newDepth);
        const int half = 1 << (newDepth - 1);
        for (int m = 0; m < half; ++m) {
            r.c_[static_cast<std::size_t>(m | half)] = m < dx.size() ? dx.c_[static_cast<std::size_t>(m)] : 0.0;
        }
        return r;
    }

    /// Split off the infinitesimal with bit index `level - 1`:
    /// returns the part free of it (value) and the coefficient of it (derivative).
    void split(int level, Jet& value, Jet& derivative) const
    {
        value = Jet{};
        derivative = Jet{};
        const int bit = 1 << (level - 1);
        value.depth_ = level - 1;
        derivative.depth_ = level - 1;
        if (depth_ < level) {
            // does not depend on this infinitesimal
            for (int m = 0; m < (1 << (level - 1)); ++m) {
                value.c_[static_cast<std::size_t>(m)] = m < size() ? c_[static_cast<std::size_t>(m)] : 0.0;
            }
            value.trim();
            return;
        }
        for (int m = 0; m < bit; ++m) {
            value.c_[static_cast<std::size_t>(m)] = c_[static_cast<std::size_t>(m)];
            derivative.c_[static_cast<std::size_t>(m)] = c_[static_cast<std::size_t>(m | bit)];
        }
        value.trim();
        derivative.trim();
    }

    Jet& operator+=(const Jet& o)
    {
        promote(o.depth_);
        for (int m = 0; m < o.size(); ++m) {
            c_[static_cast<std::size_t>(m)] += o.c_[static_cast<std::size_t>(m)];
        }
        return *this;
    }
    Jet& operator-=(const Jet& o)
    {
        promote(o.depth_);
        for (int m = 0; m < o.size(); ++m) {
            c_[static_cast<std::size_t>(m)] -= o.c_[static_cast<std::size_t>(m)];
        }
        return *this;
    }
    Jet& operator*=(double s)
    {
        for (int m = 0; m < size(); ++m) {
            c_[static_cast<std::size_t>(m)] *= s;
        }
        return *this;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a)
    {
        for (int m = 0; m < a.size(); ++m) {
            a.c_[static_cast<std::size_t>(m)] = -a.c_[static_cast<std::size_t>(m)];
        }
        return a;
    }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, double s) { return a *= 1.0 / s; }

    friend Jet operator*(const Jet& a, const Jet& b)
    {
        if (a.depth_ == 0) {
            return b * a.c_[0];
        }
        if (b.depth_ == 0) {
            return a * b.c_[0];
        }
        Jet r;
        r.depth_ = a.depth_ > b.depth_ ? a.depth_ : b.depth_;
        const int n = r.size();
        for (int s = 0; s < n; ++s) {
            double acc = 0.0;
            // enumerate subsets t of s
            for (int t = s;; t = (t - 1) & s) {
                const int u = s ^ t;
                if (t < a.size() && u < b.size()) {
                    acc += a.c_[static_cast<std::size_t>(t)] * b.c_[static_cast<std::size_t>(u)];
                }
                if (t == 0) {
                    break;
                }
            }
            r.c_[static_cast<std::size_t>(s)] = acc;
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b);

    /// Apply a scalar function given its derivatives d[0..depth] at the value.
    template <class Derivs>
    [[nodiscard]] Jet apply(const Derivs& d) const
    {
        Jet r{d[0]};
        if (depth_ == 0) {
            return r;
        }
        Jet nil = *this;
        nil.c_[0] = 0.0;
        Jet power = nil;
        double factorial = 1.0;
        for (int j = 1; j <= depth_; ++j) {
            factorial *= j;
            r += power * (d[static_cast<std::size_t>(j)] / factorial);
            if (j < depth_) {
                power = power * nil;
            }
        }
        return r;
    }

private:
    void trim()
    {
        while (depth_ > 0) {
            const int half = 1 << (depth_ - 1);
            bool zero = true;
            for (int m = half; m < (1 << depth_); ++m) {
                if (c_[static_cast<std::size_t>(m)] != 0.0) {
                    zero = false;
                    break;
                }
            }
            if (!zero) {
                break;
            }
            --depth_;
        }
    }

    std::array<double, kCapacity> c_{};
    int depth_ = 0;
};

inline Jet reciprocal(const Jet& x)
{
    const double v = x.value();
    const double r = 1.0 / v;
    const std::array<double, 4> d{r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r};
    return x.apply(d);
}

inline Jet operator/(const Jet& a, const Jet& b)
{
    if (b.depth() == 0) {
        return a / b.value();
    }
    return a * reciprocal(b);
}
inline Jet operator/(double a, const Jet& b) { return a * reciprocal(b); }

inline Jet sqrt(const Jet& x)
{
    const double s = std::sqrt(x.value());
    const double v = x.value();
    const std::array<double, 4> d{s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v)};
    return x.apply(d);
}

inline Jet exp(const Jet& x)
{
    const double e = std::exp(x.value());
    const std::array<double, 4> d{e, e, e, e};
    return x.apply(d);
}

inline Jet log(const Jet& x)
{
    const double v = x.value();
    const std::array<double, 4> d{std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v)};
    return x.apply(d);
}

inline Jet sin(const Jet& x)
{
    const double s = std::sin(x.value());
    const double c = std::cos(x.value());
    const std::array<double, 4> d{s, c, -s, -c};
    return x.apply(d);
}

inline Jet cos(const Jet& x)
{
    const double s = std::sin(x.value());
    const double c = std::cos(x.value());
    const std::array<double, 4> d{c, -s, -c, s};
    return x.apply(d);
}

/// x^p for real exponent p (x > 0 unless p is a non-negative integer).
inline Jet pow(const Jet& x, double p)
{
    const double v = x.value();
    std::array<double, 4> d{};
    double coef = 1.0;
    for (int j = 0; j < 4; ++j) {
        d[static_cast<std::size_t>(j)] = coef * std::pow(v, p - j);
        coef *= (p - j);
    }
    return x.apply(d);
}

inline std::ostream& operator<<(std::ostream& os, const Jet& x)
{
    os << x.value();
    if (x.depth() > 0) {
        os << "[";
        for (int m = 1; m < x.size(); ++m) {
            os << (m > 1 ? ", " : "") << x.coeff(m);
        }
        os << "]";
    }
    return os;
}

/// Complex number over jets. std::complex<T> is unspecified for non-floating T.
struct Complex {
    Jet re;
    Jet im;

    constexpr Complex() = default;
    constexpr Complex(double r) : re(r) {}  // NOLINT(google-explicit-constructor)
    constexpr Complex(Jet r) : re(r) {}  // NOLINT(google-explicit-constructor)
    constexpr Complex(Jet r, Jet i) : re(r), im(i) {}
    Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] std::complex<double> value() const { return {re.value(), im.value()}; }
    [[nodiscard]] int depth() const { return re.depth() > im.depth() ? re.depth() : im.depth(); }

    Complex& operator+=(const Complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, double s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(double s, const Complex& a) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const Complex& a, const Jet& s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const Jet& s, const Complex& a) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const Jet& s)
    {
        const Jet r = reciprocal(s);
        return {a.re * r, a.im * r};
    }
    friend Complex operator/(const Complex& a, double s) { return {a.re / s, a.im / s}; }
    friend Complex operator/(const Complex& a, const Complex& b)
    {
        const Jet n = b.re * b.re + b.im * b.im;
        const Jet r = reciprocal(n);
        return {(a.re * b.re + a.im * b.im) * r, (a.im * b.re - a.re * b.im) * r};
    }
};

inline constexpr std::complex<double> kI{0.0, 1.0};

inline Complex imagUnit() { return {Jet{0.0}, Jet{1.0}}; }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Jet norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Jet abs(const Complex& z) { return sqrt(norm(z)); }
/// i * z
inline Complex timesI(const Complex& z) { return {-z.im, z.re}; }
/// exp(i * theta)
inline Complex expI(const Jet& theta) { return {cos(theta), sin(theta)}; }
inline Complex exp(const Complex& z) { return expI(z.im) * exp(z.re); }

inline Complex powInt(const Complex& z, int n)
{
    Complex r{1.0};
    for (int j = 0; j < n; ++j) {
        r = r * z;
    }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const Complex& z)
{
    return os << "(" << z.re << ", " << z.im << ")";
}

}  // namespace cartan
