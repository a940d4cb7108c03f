#include "momsynth/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "momsynth/errors.hpp"

namespace momsynth {

BoxKernel::BoxKernel(std::vector<Rational> a) : offset(std::move(a)) {
    if (offset.empty())
        throw std::invalid_argument("box kernel needs dimension >= 1");
    for (auto& v : offset) {
        v.canonicalize();
        if (sgn(v) < 0)
            throw std::invalid_argument("box kernel offset must be non-negative, got " +
                                        format_rational(v));
    }
}

BoxKernel BoxKernel::unit(std::size_t n) { return BoxKernel(std::vector<Rational>(n, Rational(0))); }

BumpKernel::BumpKernel(std::size_t dim) : n(dim) {
    if (dim == 0)
        throw std::invalid_argument("bump kernel needs dimension >= 1");
}

std::size_t dimension_of(const Kernel& g) {
    return std::visit([](const auto& k) { return k.dimension(); }, g);
}

bool AxisBox::contains(std::span<const double> x) const {
    if (empty() || x.size() != lower.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < lower[i] || x[i] > upper[i])
            return false;
    return true;
}

AxisBox kernel_support(const Kernel& g) {
    AxisBox box;
    if (const auto* b = std::get_if<BoxKernel>(&g)) {
        for (const auto& a : b->offset) {
            box.lower.push_back(a.get_d());
            box.upper.push_back(a.get_d() + 1.0);
        }
    } else {
        const auto n = std::get<BumpKernel>(g).n;
        box.lower.assign(n, 0.0);
        box.upper.assign(n, 1.0);
    }
    return box;
}

double bump_profile(double t) {
    if (!(t > 0.0 && t < 1.0))
        return 0.0;
    return std::exp(-1.0 / (t * (1.0 - t)));
}

double evaluate_kernel(const Kernel& g, std::span<const double> x) {
    if (x.size() != dimension_of(g))
        throw ShapeMismatch("kernel evaluated at a point of the wrong dimension");
    if (const auto* b = std::get_if<BoxKernel>(&g)) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double a = b->offset[i].get_d();
            if (!(x[i] >= a && x[i] < a + 1.0))
                return 0.0;
        }
        return 1.0;
    }
    double v = 1.0;
    for (double xi : x) {
        v *= bump_profile(xi);
        if (v == 0.0)
            break;
    }
    return v;
}

} // namespace momsynth
