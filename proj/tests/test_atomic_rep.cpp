#include <doctest.h>

#include <cmath>

#include "momsynth/atomic_rep.hpp"
#include "momsynth/seq_algebra.hpp"
#include "test_support.hpp"

using namespace momsynth;
using testing::cr;
using testing::rational_seq;

namespace {

std::vector<ComplexRational> weights(const RationalMeasure& mu) {
    std::vector<ComplexRational> w;
    for (const auto& a : mu.atoms())
        w.push_back(a.weight);
    return w;
}

} // namespace

TEST_CASE("principal lattice atoms") {
    CHECK(choose_atoms(1, 2) == std::vector<MultiIndex>{{0}, {1}, {2}});
    CHECK(choose_atoms(2, 1) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}});
    const auto six = choose_atoms(2, 2);
    CHECK(six.size() == 6);
    for (const auto& y : six)
        CHECK(y.degree() <= 2);
}

TEST_CASE("moment system is the Vandermonde matrix for n = 1") {
    const auto sys = build_moment_system(1, 3);
    REQUIRE(sys.order() == 4);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), j, k);
            CHECK(sys(k, j) == Rational(p));
        }
}

TEST_CASE("solve_measure examples") {
    CHECK(weights(solve_measure(rational_seq(1, 2, {cr(1), cr(0), cr(0)}))) ==
          std::vector<ComplexRational>{cr(1), cr(0), cr(0)});
    const auto mu = solve_measure(rational_seq(1, 2, {cr(0), cr(1), cr(0)}));
    CHECK(weights(mu) == std::vector<ComplexRational>{cr(-3, 2), cr(2), cr(-1, 2)});
    // substitution: sum_j c_j j^k
    for (unsigned k = 0; k <= 2; ++k) {
        ComplexRational sum(0);
        for (const auto& a : mu.atoms()) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), a.point[0], k);
            sum += a.weight * ComplexRational(Rational(p));
        }
        CHECK(sum == (k == 1 ? cr(1) : cr(0)));
    }
    CHECK(weights(solve_measure(rational_seq(1, 1, {cr(1), cr(-1, 2)}))) ==
          std::vector<ComplexRational>{cr(3, 2), cr(-1, 2)});
}

TEST_CASE("measure_moments examples") {
    const RationalMeasure delta0(1, {{MultiIndex{0}, cr(1)}});
    CHECK(measure_moments(delta0, 3) == identity<ComplexRational>(1, 3));
    const RationalMeasure two(1, {{MultiIndex{1}, cr(1)}, {MultiIndex{2}, cr(-1)}});
    CHECK(measure_moments(two, 2) == rational_seq(1, 2, {cr(0), cr(-1), cr(-3)}));
}

TEST_CASE("atomic measures reject repeated or misshapen atoms") {
    CHECK_THROWS_AS(RationalMeasure(1, {{MultiIndex{1}, cr(1)}, {MultiIndex{1}, cr(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(RationalMeasure(2, {{MultiIndex{1}, cr(1)}}), ShapeMismatch);
}

TEST_CASE("roundtrip, linearity and total variation") {
    testing::RandomRationals rnd(31337);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (unsigned d = 0; d <= 6; ++d) {
            for (int trial = 0; trial < 8; ++trial) {
                const auto u = rnd.sequence(n, d);
                const auto v = rnd.sequence(n, d);
                const auto mu = solve_measure(u);
                CHECK(measure_moments(mu, d) == u);
                CHECK(std::isfinite(mu.total_variation()));

                const ComplexRational a = rnd.complex(), b = rnd.complex();
                const auto combined = solve_measure(add(scale(a, u), scale(b, v)));
                const auto mv = solve_measure(v);
                for (std::size_t j = 0; j < combined.size(); ++j)
                    CHECK(combined.atoms()[j].weight == a * mu.atoms()[j].weight + b * mv.atoms()[j].weight);
            }
        }
    }
    const RationalSequence zero(2, 3);
    CHECK(solve_measure(zero).total_variation() == 0.0);
    CHECK(solve_measure(rational_seq(1, 1, {cr(1), cr(0)})).total_variation() > 0.0);
}

TEST_CASE("n = 1 weights equal Lagrange coefficients") {
    testing::RandomRationals rnd(8);
    for (unsigned d = 0; d <= 8; ++d) {
        const auto target = rnd.sequence(1, d);
        CHECK(weights(solve_measure(target)) == testing::lagrange_weights(target));
    }
}

TEST_CASE("parallel elimination agrees with the serial reference") {
    testing::RandomRationals rnd(4);
    for (unsigned d : {2u, 5u, 7u}) {
        const auto target = rnd.sequence(2, d);
        CHECK(solve_measure(target) == reference::solve_measure_serial(target));
    }
}

TEST_CASE("float solve") {
    testing::RandomRationals rnd(12);
    for (unsigned d = 0; d <= 8; ++d) {
        const auto exact = rnd.sequence(1, d);
        const auto approx = solve_measure(to_float(exact));
        const auto reference = solve_measure(exact);
        for (std::size_t j = 0; j < approx.size(); ++j) {
            const auto ref = ScalarTraits<ComplexRational>::to_complex(reference.atoms()[j].weight);
            CHECK(std::abs(approx.atoms()[j].weight - ref) <= 1e-7 * (1.0 + std::abs(ref)));
        }
    }
    // beyond the float envelope the residual check must fire
    CHECK_THROWS_AS(solve_measure(to_float(rnd.sequence(1, 10))), ResidualTooLarge);
    SolveOptions strict;
    strict.residual_factor = 1e-30;
    CHECK_THROWS_AS(solve_measure(to_float(rnd.sequence(1, 12)), strict), ResidualTooLarge);
}
