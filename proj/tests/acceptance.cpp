// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <gsl/gsl_integration.h>

#include "momsynth/kernel_moments.hpp"
#include "momsynth/seq_algebra.hpp"
#include "momsynth/synthesis.hpp"
#include "momsynth/verify.hpp"
#include "test_support.hpp"

using namespace momsynth;
using testing::cr;
using testing::rational_seq;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition && pass) {
            pass = false;
            detail << "first failure: " << what << "; ";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string shape(std::size_t n, unsigned d) {
    return "n=" + std::to_string(n) + " d=" + std::to_string(d);
}

// |s| * |t| entrywise: the natural scale of the rounding error in s * t.
FloatSequence magnitude_convolution(const FloatSequence& s, const FloatSequence& t) {
    auto abs_seq = [](const FloatSequence& x) {
        std::vector<ComplexDouble> v;
        for (const auto& e : x.values())
            v.emplace_back(std::abs(e), 0.0);
        return FloatSequence(x.dimension(), x.degree(), std::move(v));
    };
    return convolve(abs_seq(s), abs_seq(t));
}

// max_alpha |a - b| / max(scale_alpha, tiny)
double relative_error(const FloatSequence& a, const FloatSequence& b, const FloatSequence& scale) {
    double worst = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r)
        worst = std::max(worst, std::abs(a[r] - b[r]) / std::max(scale[r].real(), 1e-300));
    return worst;
}

// 1. group axioms
Outcome group_axioms() {
    Outcome o;
    constexpr int trials = 100;
    constexpr double float_tol = 1e-12;
    testing::RandomRationals rnd(1001);
    double worst_float = 0.0;
    const auto start = Clock::now();
    for (std::size_t n = 1; n <= 3; ++n) {
        for (unsigned d = 0; d <= 6; ++d) {
            const auto e = identity<ComplexRational>(n, d);
            const auto ef = identity<ComplexDouble>(n, d);
            for (int trial = 0; trial < trials; ++trial) {
                const auto s = rnd.sequence(n, d, true);
                const auto t = rnd.sequence(n, d, true);
                const auto u = rnd.sequence(n, d, true);
                const auto st = convolve(s, t);
                o.require(st == convolve(t, s), "commutativity " + shape(n, d));
                o.require(convolve(st, u) == convolve(s, convolve(t, u)), "associativity " + shape(n, d));
                o.require(convolve(s, e) == s, "identity " + shape(n, d));
                o.require(convolve(s, inverse(s)) == e, "inverse " + shape(n, d));

                const auto sf = to_float(s), tf = to_float(t), uf = to_float(u);
                const auto stf = convolve(sf, tf);
                const auto st_scale = magnitude_convolution(sf, tf);
                const auto stu_scale = magnitude_convolution(st_scale, magnitude_convolution(uf, ef));
                const auto sinv = inverse(sf);
                double err = relative_error(stf, convolve(tf, sf), st_scale);
                err = std::max(err, relative_error(convolve(stf, uf), convolve(sf, convolve(tf, uf)), stu_scale));
                err = std::max(err, relative_error(convolve(sf, ef), sf, magnitude_convolution(sf, ef)));
                err = std::max(err, relative_error(convolve(sf, sinv), ef, magnitude_convolution(sf, sinv)));
                worst_float = std::max(worst_float, err);
            }
        }
    }
    const double elapsed = seconds_since(start);
    o.require(worst_float <= float_tol, "float relative error " + std::to_string(worst_float));
    o.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
    o.detail << "21 configurations x " << trials << " trials, float worst relative error " << worst_float
             << ", " << elapsed << " s";
    return o;
}

// 2. Dirac / binomial identity
Outcome dirac_identity() {
    Outcome o;
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto points = index_set(n, 10)->indices();
        for (unsigned d = 0; d <= 6; ++d) {
            for (const auto& a : points) {
                if (*std::max_element(a.entries().begin(), a.entries().end()) > 5)
                    continue;
                for (const auto& b : points) {
                    if (*std::max_element(b.entries().begin(), b.entries().end()) > 5)
                        continue;
                    std::vector<std::uint32_t> sum(n);
                    for (std::size_t i = 0; i < n; ++i)
                        sum[i] = a[i] + b[i];
                    o.require(convolve(point_moments(a, d), point_moments(b, d)) ==
                                  point_moments(MultiIndex(sum), d),
                              a.to_string() + " + " + b.to_string() + " " + shape(n, d));
                    ++checks;
                }
            }
        }
    }
    o.detail << checks << " pairs, a, b in {0..5}^n";
    return o;
}

// 3. worked example
Outcome worked_example() {
    Outcome o;
    const auto s = rational_seq(1, 1, {cr(1), cr(0)});
    const auto f = synthesize(s, BoxKernel::unit(1));
    o.require(f.kernel_moments == rational_seq(1, 1, {cr(1), cr(1, 2)}), "t = (1, 1/2)");
    o.require(f.measure_moments == rational_seq(1, 1, {cr(1), cr(-1, 2)}), "u = (1, -1/2)");
    o.require(f.measure.size() == 2 && f.measure.atoms()[0].weight == cr(3, 2) &&
                  f.measure.atoms()[1].weight == cr(-1, 2),
              "weights 3/2, -1/2");
    for (auto [x, expected] : {std::pair{0.5, 1.5}, {1.5, -0.5}, {-0.3, 0.0}, {1.0, -0.5}, {2.0, 0.0}}) {
        const std::array<double, 1> p{x};
        o.require(evaluate(f, p) == ComplexDouble(expected, 0.0), "f(" + std::to_string(x) + ")");
    }
    o.require(moments_of(f) == s, "moments_of = (1, 0)");
    o.require(integrate_moments_exact(f, 1) == s, "integrate_moments_exact = (1, 0)");
    o.detail << "f = 3/2 1[0,1) - 1/2 1[1,2), moments (1, 0) by both routes";
    return o;
}

// 4. moment fidelity through the closed-form oracle
Outcome moment_fidelity() {
    Outcome o;
    constexpr int trials = 100;
    testing::RandomRationals rnd(4004);
    const auto start = Clock::now();
    int count = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        for (long a = 0; a <= 1; ++a) {
            const BoxKernel g(std::vector<Rational>(n, Rational(a)));
            for (int trial = 0; trial < trials; ++trial) {
                const unsigned d = static_cast<unsigned>(trial % 6);
                const auto s = rnd.sequence(n, d);
                const auto f = synthesize(s, g);
                o.require(integrate_moments_exact(f, d) == s,
                          "target " + std::to_string(trial) + " " + shape(n, d) + " a=" + std::to_string(a));
                ++count;
            }
        }
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
    o.detail << count << " exact round trips (n in {1,2}, d <= 5, a in {0,1}), " << elapsed << " s";
    return o;
}

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
    gsl_integration_qags(&fn, shift, shift + 1.0, 1e-15, 1e-13, 1000, ws, &result, &error);
    gsl_integration_workspace_free(ws);
    return result;
}

// 5. bump kernel path
Outcome bump_path() {
    Outcome o;
    constexpr int trials = 20;
    constexpr double oracle_tol = 1e-6;
    constexpr double shift_tol = 1e-8;
    testing::RandomRationals rnd(5005);
    double worst = 0.0;
    for (unsigned d = 0; d <= 4; ++d) {
        for (int trial = 0; trial < trials; ++trial) {
            const auto s = to_float(rnd.sequence(1, d));
            const auto f = synthesize(s, BumpKernel(1));
            const auto report = compare(s, integrate_moments_quadrature(f, d), oracle_tol);
            worst = std::max(worst, report.max_abs_error);
            o.require(report.pass, "quadrature oracle d=" + std::to_string(d));
        }
    }
    double worst_shift = 0.0;
    for (unsigned y = 0; y <= 4; ++y) {
        const auto shifted = std::get<FloatSequence>(shifted_kernel_moments(BumpKernel(1), {y}, 4));
        for (unsigned k = 0; k <= 4; ++k) {
            const double err = std::abs(shifted[k] - adaptive_shifted_bump_moment(k, y));
            worst_shift = std::max(worst_shift, err);
            o.require(err <= shift_tol, "shift identity y=" + std::to_string(y) + " k=" + std::to_string(k));
        }
    }
    o.detail << 5 * trials << " targets, worst oracle error " << worst << " (tol " << oracle_tol
             << "); shift identity worst " << worst_shift << " (tol " << shift_tol << ")";
    return o;
}

// 6. support containment
Outcome support_containment() {
    Outcome o;
    testing::RandomRationals rnd(6006);
    auto& rng = rnd.engine();
    std::size_t functions = 0, probes = 0;

    auto probe = [&](const auto& f, const std::string& label) {
        const std::size_t n = f.dimension();
        const AxisBox box = support_bound(f);
        if (box.empty())
            return;
        for (std::size_t i = 0; i < n; ++i)
            o.require(box.lower[i] >= 0.0, label + " lower corner negative");
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> axis(0, n - 1);
        std::vector<double> x(n);
        for (int k = 0; k < 1000; ++k) {
            // inside the bound everywhere, then push one coordinate out
            for (std::size_t i = 0; i < n; ++i)
                x[i] = box.lower[i] - 1.0 + (box.upper[i] - box.lower[i] + 2.0) * unit(rng);
            const std::size_t i = axis(rng);
            switch (k % 3) {
            case 0: x[i] = -1e-9 - 5.0 * unit(rng); break;                       // negative coordinate
            case 1: x[i] = box.upper[i] + 1e-9 + 5.0 * unit(rng); break;         // beyond the top
            default: x[i] = box.lower[i] - 1e-9 - box.lower[i] * unit(rng); break; // below the bottom
            }
            o.require(evaluate(f, x) == ComplexDouble(0.0, 0.0), label + " nonzero outside bound");
            ++probes;
        }
        ++functions;
    };

    for (std::size_t n = 1; n <= 2; ++n)
        for (long a = 0; a <= 1; ++a)
            for (unsigned d = 0; d <= 4; ++d)
                probe(synthesize(rnd.sequence(n, d), BoxKernel(std::vector<Rational>(n, Rational(a)))),
                      "box " + shape(n, d));
    for (unsigned d = 0; d <= 4; ++d)
        probe(synthesize(to_float(rnd.sequence(1, d)), BumpKernel(1)), "bump " + shape(1, d));

    // offset a = 1: nothing below x_i = 1
    std::size_t offset_probes = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto f = synthesize(rnd.sequence(n, 4), BoxKernel(std::vector<Rational>(n, Rational(1))));
        const auto lower = support_bound(f).lower;
        o.require(*std::min_element(lower.begin(), lower.end()) >= 1.0, "offset lower corner");
        std::uniform_real_distribution<double> below(-1.0, 1.0), anywhere(-1.0, 7.0);
        std::vector<double> x(n);
        for (int k = 0; k < 1000; ++k) {
            for (auto& xi : x)
                xi = anywhere(rng);
            x[static_cast<std::size_t>(k) % n] = below(rng);
            o.require(evaluate(f, x) == ComplexDouble(0.0, 0.0), "offset box nonzero below 1");
            ++offset_probes;
        }
    }
    o.detail << functions << " functions, " << probes << " outside probes, " << offset_probes
             << " offset-a=1 probes";
    return o;
}

// 7. truncation consistency
Outcome truncation_consistency() {
    Outcome o;
    testing::RandomRationals rnd(7007);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const unsigned d = 6;
            const auto s = rnd.sequence(n, d);
            const BoxKernel g(std::vector<Rational>(n, Rational(trial % 2)));
            const auto f = synthesize(s, g);
            const auto full = moments_of(f);
            for (unsigned dp = 0; dp < d; ++dp) {
                const auto sp = s.truncated(dp);
                o.require(full.truncated(dp) == sp, "moments_of restricted " + shape(n, dp));
                o.require(integrate_moments_exact(f, dp) == sp, "integrated restricted " + shape(n, dp));
                o.require(moments_of(synthesize(sp, g)) == sp, "synthesized restriction " + shape(n, dp));
            }
        }
    }
    o.detail << "n in {1,2}, d = 6 restricted to every d' < 6";
    return o;
}

// 8. n = 1 Lagrange oracle
Outcome lagrange_oracle() {
    Outcome o;
    testing::RandomRationals rnd(8008);
    for (unsigned d = 0; d <= 8; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto target = rnd.sequence(1, d);
            const auto mu = solve_measure(target);
            const auto expected = testing::lagrange_weights(target);
            bool same = mu.size() == expected.size();
            for (std::size_t j = 0; same && j < expected.size(); ++j)
                same = mu.atoms()[j].point == MultiIndex{static_cast<std::uint32_t>(j)} &&
                       mu.atoms()[j].weight == expected[j];
            o.require(same, "d=" + std::to_string(d));
        }
    }
    o.detail << "d = 0..8, 10 targets each, exact";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 group axioms", group_axioms},
        {"AC2 Dirac binomial identity", dirac_identity},
        {"AC3 worked end-to-end example", worked_example},
        {"AC4 moment fidelity (box kernels)", moment_fidelity},
        {"AC5 bump kernel path", bump_path},
        {"AC6 support containment", support_containment},
        {"AC7 truncation consistency", truncation_consistency},
        {"AC8 n=1 Lagrange oracle", lagrange_oracle},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail.str() << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
