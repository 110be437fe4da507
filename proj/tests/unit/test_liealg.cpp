#include "testkit.hpp"

#include "cartan/liealg.hpp"

using namespace cartan;
using namespace cartan::lie;
using testkit::dist;

namespace {

// Independent oracle: bracket through explicit matrix commutators for lambda != 0.
AlgebraElement matrixBracket(const AlgebraElement& a, const AlgebraElement& b)
{
    return fromMatrix(matrixCommutator(toMatrix(a), toMatrix(b)), GroupParameter{a.lambda});
}

std::array<AlgebraElement, 3> realBasisElements(double l)
{
    return {AlgebraElement::t0(l), AlgebraElement::t1(l), AlgebraElement::t2(l)};
}

}  // namespace

TEST_CASE("generators match the defining matrices")
{
    for (double l : {-1.0, 0.0, 1.0}) {
        const Generators g = makeGenerators(GroupParameter{l});
        const std::complex<double> mi2{0.0, -0.5};
        CHECK(dist(g.t0, testkit::mat(mi2, 0.0, 0.0, -mi2)) == 0.0);
        CHECK(dist(g.t1, toMatrix(AlgebraElement::t1(l))) < 1e-15);
        CHECK(dist(g.t2, toMatrix(AlgebraElement::t2(l))) < 1e-15);
    }
    const Generators g0 = makeGenerators(GroupParameter{0.0});
    CHECK(std::abs(g0.t1(0, 1).value()) == 0.0);
    CHECK(std::abs(g0.t1(1, 0).value() - std::complex<double>{0.0, -0.5}) == 0.0);
}

TEST_CASE("matrix commutators of generators reproduce the structure constants")
{
    for (double l : {-1.0, 1.0, 0.5, -2.0}) {
        const Generators g = makeGenerators(GroupParameter{l});
        const std::array<Mat2, 3> t{g.t0, g.t1, g.t2};
        const auto c = structureConstants(GroupParameter{l});
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                Mat2 expect;
                for (std::size_t k = 0; k < 3; ++k) {
                    expect = expect + Complex{c[a][b][k]} * t[k];
                }
                CHECK(dist(matrixCommutator(t[a], t[b]), expect) < 1e-15);
            }
        }
    }
}

TEST_CASE("bracket table equals the structure constants exactly")
{
    for (double l : {-1.0, 0.0, 1.0}) {
        const auto c = structureConstants(GroupParameter{l});
        CHECK(c[0][1][2] == 1.0);
        CHECK(c[0][2][1] == -1.0);
        CHECK(c[1][2][0] == -l);
        const auto basis = realBasisElements(l);
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                AlgebraElement expect = AlgebraElement::zero(l);
                for (std::size_t k = 0; k < 3; ++k) {
                    expect = expect + Complex{c[a][b][k]} * basis[k];
                }
                CHECK(dist(bracket(basis[a], basis[b]), expect) == 0.0);
            }
        }
    }
}

TEST_CASE("bracket examples")
{
    const double l = -1.0;
    CHECK(dist(bracket(AlgebraElement::t0(l), AlgebraElement::t1(l)), AlgebraElement::t2(l)) == 0.0);
    CHECK(dist(bracket(AlgebraElement::t0(l), AlgebraElement::t0(l)), AlgebraElement::zero(l)) == 0.0);
    for (double lam : {-1.0, 0.0, 1.0}) {
        const auto pm = bracket(AlgebraElement::tplus(lam), AlgebraElement::tminus(lam));
        CHECK(dist(pm, Complex{std::complex<double>{0.0, 2.0 * lam}} * AlgebraElement::t0(lam)) == 0.0);
        CHECK(dist(bracket(AlgebraElement::t0(lam), AlgebraElement::tplus(lam)),
                   Complex{std::complex<double>{0.0, -1.0}} * AlgebraElement::tplus(lam)) == 0.0);
        CHECK(dist(bracket(AlgebraElement::t0(lam), AlgebraElement::tminus(lam)),
                   Complex{std::complex<double>{0.0, 1.0}} * AlgebraElement::tminus(lam)) == 0.0);
    }
}

TEST_CASE("bracket agrees with matrix commutator where the representation is faithful")
{
    testkit::Gen gen(21);
    for (int k = 0; k < 100; ++k) {
        const double l = gen.uniform(-2.0, 2.0);
        if (std::abs(l) < 1e-3) {
            continue;
        }
        const auto a = gen.element(l);
        const auto b = gen.element(l);
        CHECK(dist(bracket(a, b), matrixBracket(a, b)) < 1e-12);
    }
}

TEST_CASE("Jacobi identity holds on basis triples and random elements")
{
    testkit::Gen gen(3);
    for (double l : {-1.0, 0.0, 1.0}) {
        const std::array<AlgebraElement, 5> b{AlgebraElement::t0(l), AlgebraElement::t1(l), AlgebraElement::t2(l),
                                              AlgebraElement::tplus(l), AlgebraElement::tminus(l)};
        for (const auto& x : b) {
            for (const auto& y : b) {
                for (const auto& z : b) {
                    const auto j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
                    CHECK(j.maxAbs() <= 1e-14);
                }
            }
        }
        for (int k = 0; k < 50; ++k) {
            const auto x = gen.element(l);
            const auto y = gen.element(l);
            const auto z = gen.element(l);
            const auto j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
            CHECK(j.maxAbs() <= 1e-13);
        }
    }
}

TEST_CASE("mixed lambda is rejected")
{
    try {
        (void)bracket(AlgebraElement::t0(1.0), AlgebraElement::t0(-1.0));
        FAIL("expected MixedLambda");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MixedLambda);
    }
}

TEST_CASE("fromMatrix round trips and rejects matrices outside the span")
{
    testkit::Gen gen(8);
    for (double l : {-1.0, 1.0, 0.3}) {
        for (int k = 0; k < 100; ++k) {
            const auto a = gen.element(l);
            CHECK(dist(fromMatrix(toMatrix(a), GroupParameter{l}), a) < 1e-12);
        }
    }
    for (int k = 0; k < 50; ++k) {
        const auto a = gen.realElement(0.0);
        CHECK(dist(fromMatrix(toMatrix(a), GroupParameter{0.0}, Reality::Real), a) < 1e-12);
    }
    const auto t2 = fromMatrix(makeGenerators(GroupParameter{-1.0}).t2, GroupParameter{-1.0});
    CHECK(dist(t2, AlgebraElement::t2(-1.0)) < 1e-15);
    CHECK(std::abs(t2.cplus.value() - std::complex<double>{0.0, -0.5}) < 1e-15);
    const auto t0 = fromMatrix(makeGenerators(GroupParameter{1.0}).t0, GroupParameter{1.0});
    CHECK(dist(t0, AlgebraElement::t0(1.0)) < 1e-15);

    auto expectKind = [](auto&& fn, ErrorKind kind) {
        try {
            fn();
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.kind() == kind);
        }
    };
    expectKind([] { (void)fromMatrix(Mat2::identity(), GroupParameter{1.0}); }, ErrorKind::OutOfSpan);
    expectKind([] { (void)fromMatrix(toMatrix(AlgebraElement::t1(0.0)), GroupParameter{0.0}); },
               ErrorKind::DegenerateRepresentation);
}

TEST_CASE("reality predicate and real basis coordinates")
{
    testkit::Gen gen(13);
    for (int k = 0; k < 50; ++k) {
        const auto a = gen.realElement(-1.0);
        CHECK(a.isReal());
        const auto c = a.realBasis();
        for (const auto& x : c) {
            CHECK(std::abs(x.value().imag()) < 1e-15);
        }
        const auto rebuilt = c[0] * AlgebraElement::t0(-1.0) + c[1] * AlgebraElement::t1(-1.0) +
                             c[2] * AlgebraElement::t2(-1.0);
        CHECK(dist(rebuilt, a) < 1e-15);
    }
    CHECK_FALSE(AlgebraElement::tplus(-1.0).isReal());
}

TEST_CASE("real elements exponentiate into the real group")
{
    testkit::Gen gen(17);
    for (double l : {-1.0, 0.0, 1.0}) {
        for (int k = 0; k < 30; ++k) {
            const Mat2 g = expTraceFree(toMatrix(gen.realElement(l)));
            // [[a, lambda conj(b)], [b, conj(a)]] with |a|^2 - lambda |b|^2 = 1
            CHECK(std::abs(g(0, 1).value() - l * std::conj(g(1, 0).value())) < 1e-12);
            CHECK(std::abs(g(1, 1).value() - std::conj(g(0, 0).value())) < 1e-12);
            CHECK(std::abs(std::norm(g(0, 0).value()) - l * std::norm(g(1, 0).value()) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("conjugation by exp(alpha t0) matches matrix conjugation")
{
    testkit::Gen gen(19);
    for (int k = 0; k < 30; ++k) {
        const double l = gen.uniform(-1.5, 1.5);
        const double alpha = gen.uniform(-3.0, 3.0);
        const auto x = gen.element(l);
        const Mat2 direct = expT0(Jet{-alpha}) * toMatrix(x) * expT0(Jet{alpha});
        CHECK(dist(toMatrix(conjugateByExpT0(x, Jet{alpha})), direct) < 1e-13);
        CHECK(dist(expT0(Jet{alpha}), expTraceFree(toMatrix(Complex{alpha} * AlgebraElement::t0(l)))) < 1e-13);
    }
}

TEST_CASE("inverse metric is diag(-lambda, 1, 1) with a degeneracy flag")
{
    CHECK(inverseMetric(GroupParameter{0.0}).isDegenerate);
    CHECK_FALSE(inverseMetric(GroupParameter{1.0}).isDegenerate);
    CHECK(inverseMetric(GroupParameter{-1.0}).diagonal[0] == 1.0);
}
