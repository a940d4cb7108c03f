#include "momsynth/kernel_moments.hpp"

#include <cmath>
#include <sstream>

#include "momsynth/seq_algebra.hpp"

namespace momsynth {

namespace {

Rational power(const Rational& base, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= base;
    return r;
}

// int_0^1 x^k phi(x) dx for k = 0..d
std::vector<double> bump_moments_1d(unsigned d, int nodes, int panels) {
    const Rule1D rule = composite_rule(0.0, 1.0, nodes, panels);
    std::vector<double> m(d + 1, 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double term = rule.w[i] * bump_profile(rule.x[i]);
        for (unsigned k = 0; k <= d; ++k) {
            m[k] += term;
            term *= rule.x[i];
        }
    }
    return m;
}

FloatSequence product_moments(std::size_t n, unsigned d, const std::vector<double>& m) {
    return FloatSequence::generate(n, d, [&](const MultiIndex& alpha) {
        double v = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            v *= m[alpha[i]];
        return ComplexDouble(v, 0.0);
    });
}

} // namespace

RationalSequence box_moments(const BoxKernel& g, unsigned d) {
    const std::size_t n = g.dimension();
    // per-coordinate 1-D moments, then products
    std::vector<std::vector<Rational>> axis(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& a = g.offset[i];
        const Rational b = a + 1;
        for (unsigned k = 0; k <= d; ++k) {
            Rational v = (power(b, k + 1) - power(a, k + 1)) / Rational(k + 1);
            axis[i].push_back(v);
        }
    }
    return RationalSequence::generate(n, d, [&](const MultiIndex& alpha) {
        Rational v(1);
        for (std::size_t i = 0; i < n; ++i)
            v *= axis[i][alpha[i]];
        return ComplexRational(v);
    });
}

FloatSequence bump_moments(const BumpKernel& g, unsigned d, const QuadratureConfig& cfg) {
    cfg.validate();
    const auto coarse = product_moments(g.n, d, bump_moments_1d(d, cfg.nodes, cfg.panels));
    const auto fine = product_moments(g.n, d, bump_moments_1d(d, cfg.nodes, 2 * cfg.panels));
    for (std::size_t r = 0; r < fine.size(); ++r) {
        const double diff = std::abs(coarse[r] - fine[r]);
        if (!within_tolerance(diff, std::abs(fine[r]), cfg.tolerance)) {
            std::ostringstream msg;
            msg << "bump moment " << fine.indices()[r].to_string() << " changed by " << diff
                << " under panel doubling (tolerance " << cfg.tolerance << ")";
            throw QuadratureNotConverged(msg.str());
        }
    }
    return fine;
}

AnySequence kernel_moments(const Kernel& g, unsigned d, const QuadratureConfig& cfg) {
    if (const auto* box = std::get_if<BoxKernel>(&g))
        return box_moments(*box, d);
    return bump_moments(std::get<BumpKernel>(g), d, cfg);
}

RationalSequence point_moments(const MultiIndex& y, unsigned d) {
    const std::size_t n = y.size();
    return RationalSequence::generate(n, d, [&](const MultiIndex& alpha) {
        mpz_class v(1);
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), y[i], alpha[i]); // 0^0 = 1
            v *= p;
        }
        return ComplexRational(Rational(v));
    });
}

AnySequence shifted_kernel_moments(const Kernel& g, const MultiIndex& y, unsigned d,
                                   const QuadratureConfig& cfg) {
    if (y.size() != dimension_of(g))
        throw ShapeMismatch("shift point dimension does not match the kernel");
    const auto shift = point_moments(y, d);
    if (const auto* box = std::get_if<BoxKernel>(&g))
        return convolve(box_moments(*box, d), shift);
    return convolve(bump_moments(std::get<BumpKernel>(g), d, cfg), to_float(shift));
}

} // namespace momsynth
