#include <doctest.h>

#include <cmath>

#include <gsl/gsl_integration.h>

#include "momsynth/kernel_moments.hpp"
#include "momsynth/seq_algebra.hpp"
#include "test_support.hpp"

using namespace momsynth;
using testing::cr;
using testing::rational_seq;

namespace {

// Adaptive GSL integration of x^k * phi(x - shift) on [shift, shift + 1].
double adaptive_shifted_bump_moment(unsigned k, double shift) {
    struct Params {
        unsigned k;
        double shift;
    } p{k, shift};
    gsl_function fn;
    fn.function = [](double x, void* raw) {
        const auto* q = static_cast<Params*>(raw);
        return std::pow(x, q->k) * bump_profile(x - q->shift);
    };
    fn.params = &p;
    gsl_integration_workspace* ws = gsl_integration_workspace_alloc(1000);
    double result = 0, error = 0;
    gsl_integration_qags(&fn, shift, shift + 1.0, 1e-14, 1e-13, 1000, ws, &result, &error);
    gsl_integration_workspace_free(ws);
    return result;
}

} // namespace

TEST_CASE("box kernel moments") {
    // int_0^1 x^k dx = 1/(k+1)
    CHECK(box_moments(BoxKernel::unit(1), 3) == rational_seq(1, 3, {cr(1), cr(1, 2), cr(1, 3), cr(1, 4)}));
    // int_1^2 x dx = 3/2
    CHECK(box_moments(BoxKernel({Rational(1)}), 1) == rational_seq(1, 1, {cr(1), cr(3, 2)}));
    const auto t2 = box_moments(BoxKernel::unit(2), 4);
    for (const auto& alpha : t2.indices())
        CHECK(t2.at(alpha) == ComplexRational(Rational(1, (alpha[0] + 1) * (alpha[1] + 1))));
    CHECK(t2.at({1, 1}) == cr(1, 4));
}

TEST_CASE("box moments are positive with unit mass") {
    for (const auto& offset : {std::vector<Rational>{0, 0}, std::vector<Rational>{Rational(1, 3), 2}}) {
        const auto t = box_moments(BoxKernel(offset), 5);
        CHECK(t[0] == cr(1));
        for (const auto& v : t.values()) {
            CHECK(sgn(v.re) > 0);
            CHECK(sgn(v.im) == 0);
        }
    }
}

TEST_CASE("box kernel rejects negative offsets") {
    CHECK_THROWS_AS(BoxKernel({Rational(-1, 2)}), std::invalid_argument);
}

TEST_CASE("point moments") {
    CHECK(point_moments({0}, 2) == rational_seq(1, 2, {cr(1), cr(0), cr(0)}));
    CHECK(point_moments({2}, 3) == rational_seq(1, 3, {cr(1), cr(2), cr(4), cr(8)}));
    const auto p = point_moments({1, 2}, 2);
    CHECK(p.at({1, 1}) == cr(2));
    CHECK(p.at({0, 2}) == cr(4));
}

TEST_CASE("shifted box moments equal moments of the shifted box") {
    const Kernel unit = BoxKernel::unit(1);
    CHECK(std::get<RationalSequence>(shifted_kernel_moments(unit, {1}, 1)) ==
          rational_seq(1, 1, {cr(1), cr(3, 2)}));
    CHECK(std::get<RationalSequence>(shifted_kernel_moments(unit, {0}, 3)) == box_moments(BoxKernel::unit(1), 3));

    for (const auto& a : {std::vector<Rational>{0, 0}, std::vector<Rational>{1, Rational(1, 2)}}) {
        for (const auto& y : index_set(2, 3)->indices()) {
            const auto shifted = std::get<RationalSequence>(shifted_kernel_moments(BoxKernel(a), y, 4));
            std::vector<Rational> moved{a[0] + y[0], a[1] + y[1]};
            CHECK(shifted == box_moments(BoxKernel(moved), 4));
        }
    }
}

TEST_CASE("bump moments") {
    const auto t = bump_moments(BumpKernel(1), 6);
    CHECK(t[0].real() > 0.0);
    CHECK(t[1].real() / t[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    // odd central moments about 1/2 vanish
    for (unsigned k : {1u, 3u, 5u}) {
        double central = 0.0;
        for (unsigned j = 0; j <= k; ++j) {
            const double c = std::tgamma(k + 1.0) / (std::tgamma(j + 1.0) * std::tgamma(k - j + 1.0));
            central += c * t[j].real() * std::pow(-0.5, k - j);
        }
        CHECK(std::abs(central) < 1e-12);
    }
    // adaptive oracle
    for (unsigned k = 0; k <= 6; ++k)
        CHECK(std::abs(t[k].real() - adaptive_shifted_bump_moment(k, 0.0)) < 1e-12);

    const auto t2 = bump_moments(BumpKernel(2), 3);
    CHECK(t2.at({1, 2}).real() == doctest::Approx(t[1].real() * t[2].real()).epsilon(1e-14));
}

TEST_CASE("bump panel doubling is stable") {
    QuadratureConfig cfg;
    const auto coarse = bump_moments(BumpKernel(1), 5, cfg);
    const auto fine = bump_moments(BumpKernel(1), 5, cfg.refined());
    for (std::size_t r = 0; r < fine.size(); ++r)
        CHECK(std::abs(coarse[r] - fine[r]) < cfg.tolerance);
}

TEST_CASE("bump quadrature that cannot converge is reported") {
    QuadratureConfig crude{2, 1, 1e-14};
    CHECK_THROWS_AS(bump_moments(BumpKernel(1), 4, crude), QuadratureNotConverged);
    CHECK_THROWS_AS(bump_moments(BumpKernel(1), 2, QuadratureConfig{1, 1, 1e-3}), std::invalid_argument);
}

TEST_CASE("shifted bump moments match direct quadrature") {
    const auto shifted = std::get<FloatSequence>(shifted_kernel_moments(BumpKernel(1), {2}, 2));
    for (unsigned k = 0; k <= 2; ++k)
        CHECK(std::abs(shifted[k].real() - adaptive_shifted_bump_moment(k, 2.0)) < 1e-8);
}
