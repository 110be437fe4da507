#include "cartan/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cartan::quad {

namespace {

// QUADPACK qk15 abscissae and weights on [-1, 1], listed from -1 to 1.
struct Rule15 {
    std::array<double, 15> x{};
    std::array<double, 15> wk{};
    std::array<double, 15> wg{};
};

const Rule15& rule15()
{
    static const Rule15 r = [] {
        const std::array<double, 8> xgk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.0};
        const std::array<double, 8> wgk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        const std::array<double, 4> wg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
        Rule15 out;
        for (int j = 0; j < 8; ++j) {
            const double gauss = (j % 2 == 1) ? wg[static_cast<std::size_t>(j / 2)] : 0.0;
            out.x[static_cast<std::size_t>(j)] = -xgk[static_cast<std::size_t>(j)];
            out.wk[static_cast<std::size_t>(j)] = wgk[static_cast<std::size_t>(j)];
            out.wg[static_cast<std::size_t>(j)] = gauss;
            out.x[static_cast<std::size_t>(14 - j)] = xgk[static_cast<std::size_t>(j)];
            out.wk[static_cast<std::size_t>(14 - j)] = wgk[static_cast<std::size_t>(j)];
            out.wg[static_cast<std::size_t>(14 - j)] = gauss;
        }
        return out;
    }();
    return r;
}

struct Region {
    Rectangle box;
    std::complex<double> value;
    double error = 0.0;
};

bool excised(double s, double t, const std::vector<Excision>& excisions)
{
    return std::any_of(excisions.begin(), excisions.end(), [&](const Excision& e) {
        return std::hypot(s - e.s, t - e.t) < e.radius;
    });
}

Region evaluateRegion(const Integrand2D& f, const Rectangle& box, const std::vector<Excision>& excisions,
                      long& evaluations)
{
    const Rule15& r = rule15();
    const double hs = 0.5 * (box.s1 - box.s0);
    const double ht = 0.5 * (box.t1 - box.t0);
    const double cs = 0.5 * (box.s1 + box.s0);
    const double ct = 0.5 * (box.t1 + box.t0);
    std::complex<double> k{0.0, 0.0};
    std::complex<double> g{0.0, 0.0};
    for (std::size_t i = 0; i < 15; ++i) {
        const double s = cs + hs * r.x[i];
        for (std::size_t j = 0; j < 15; ++j) {
            const double t = ct + ht * r.x[j];
            std::complex<double> v{0.0, 0.0};
            if (!excised(s, t, excisions)) {
                v = f(s, t);
                ++evaluations;
            }
            k += r.wk[i] * r.wk[j] * v;
            g += r.wg[i] * r.wg[j] * v;
        }
    }
    const double jac = hs * ht;
    return {box, k * jac, std::abs(k - g) * std::abs(jac)};
}

}  // namespace

Result integrate(const Integrand2D& f, const Rectangle& box, const Options& opt,
                 const std::vector<Excision>& excisions)
{
    Result res;
    std::vector<Region> regions{evaluateRegion(f, box, excisions, res.evaluations)};
    while (true) {
        std::complex<double> total{0.0, 0.0};
        double error = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < regions.size(); ++i) {
            total += regions[i].value;
            error += regions[i].error;
            if (regions[i].error > regions[worst].error) {
                worst = i;
            }
        }
        if (error <= std::max(opt.absTol, opt.relTol * std::abs(total))) {
            res.value = total;
            res.error = error;
            res.regions = static_cast<int>(regions.size());
            return res;
        }
        if (static_cast<int>(regions.size()) >= opt.maxRegions) {
            throw Error(ErrorKind::NonConvergence, "cubature region budget exhausted (error estimate " +
                                                       std::to_string(error) + ")");
        }
        const Rectangle b = regions[worst].box;
        Rectangle lo = b;
        Rectangle hi = b;
        if (b.s1 - b.s0 >= b.t1 - b.t0) {
            lo.s1 = hi.s0 = 0.5 * (b.s0 + b.s1);
        } else {
            lo.t1 = hi.t0 = 0.5 * (b.t0 + b.t1);
        }
        regions[worst] = evaluateRegion(f, lo, excisions, res.evaluations);
        regions.push_back(evaluateRegion(f, hi, excisions, res.evaluations));
    }
}

Result integrateTwoForm(const dg::TwoForm& omega, const dg::ChartMap& map, const Rectangle& box,
                        const Options& opt, const std::vector<Excision>& excisions)
{
    const Point ds = Point::basis(2, 0);
    const Point dt = Point::basis(2, 1);
    const dg::TwoForm pulled = dg::pullback(map, omega);
    return integrate([&](double s, double t) { return pulled(Point{s, t}, ds, dt).value(); }, box, opt,
                     excisions);
}

double integrate1D(const std::function<double(double)>& f, double a, double b, double relTol, int maxIntervals)
{
    const Rule15& r = rule15();
    struct Piece {
        double a, b, value, error;
    };
    auto eval = [&](double lo, double hi) {
        const double h = 0.5 * (hi - lo);
        const double c = 0.5 * (hi + lo);
        double k = 0.0;
        double g = 0.0;
        for (std::size_t i = 0; i < 15; ++i) {
            const double v = f(c + h * r.x[i]);
            k += r.wk[i] * v;
            g += r.wg[i] * v;
        }
        return Piece{lo, hi, k * h, std::abs((k - g) * h)};
    };
    std::vector<Piece> pieces{eval(a, b)};
    while (true) {
        double total = 0.0;
        double error = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            total += pieces[i].value;
            error += pieces[i].error;
            if (pieces[i].error > pieces[worst].error) {
                worst = i;
            }
        }
        if (error <= std::max(1e-14, relTol * std::abs(total))) {
            return total;
        }
        if (static_cast<int>(pieces.size()) >= maxIntervals) {
            throw Error(ErrorKind::NonConvergence, "1D quadrature interval budget exhausted");
        }
        const Piece p = pieces[worst];
        const double m = 0.5 * (p.a + p.b);
        pieces[worst] = eval(p.a, m);
        pieces.push_back(eval(m, p.b));
    }
}

namespace {

template <class V>
V panelSum(const dg::OneFormOf<V>& omega, const dg::ChartMap& path, double a, double b, int panels, V zero)
{
    const Rule15& r = rule15();
    const Point unit = Point::basis(1, 0);
    const double h = (b - a) / panels;
    V total = zero;
    for (int k = 0; k < panels; ++k) {
        const double c = a + (k + 0.5) * h;
        for (std::size_t i = 1; i < 15; i += 2) {
            auto [q, dq] = dg::pushforward(path, Point{c + 0.5 * h * r.x[i]}, unit);
            total = total + Complex{0.5 * h * r.wg[i]} * omega(q, dq);
        }
    }
    return total;
}

template <class V, class Dist>
V refine(const dg::OneFormOf<V>& omega, const dg::ChartMap& path, double a, double b, double tol, V zero,
         Dist dist)
{
    int panels = 4;
    V prev = panelSum(omega, path, a, b, panels, zero);
    for (int iter = 0; iter < 12; ++iter) {
        panels *= 2;
        V next = panelSum(omega, path, a, b, panels, zero);
        if (dist(next, prev) <= tol) {
            return next;
        }
        prev = next;
    }
    throw Error(ErrorKind::NonConvergence, "path quadrature did not converge");
}

}  // namespace

std::complex<double> integrateOneFormAlongPath(const dg::OneForm& omega, const dg::ChartMap& path, double a,
                                               double b, double tol)
{
    const Complex v = refine<Complex>(omega, path, a, b, tol, Complex{0.0},
                                      [](const Complex& x, const Complex& y) { return std::abs((x - y).value()); });
    return v.value();
}

lie::AlgebraElement integrateOneFormAlongPath(const dg::AlgebraOneForm& omega, const dg::ChartMap& path,
                                              double a, double b, double tol)
{
    const Point probe = path(Point{a});
    const double lambda = omega(probe, Point::zeros(probe.dim)).lambda;
    return refine<lie::AlgebraElement>(
        omega, path, a, b, tol, lie::AlgebraElement::zero(lambda),
        [](const lie::AlgebraElement& x, const lie::AlgebraElement& y) { return (x - y).maxAbs(); });
}

}  // namespace cartan::quad
