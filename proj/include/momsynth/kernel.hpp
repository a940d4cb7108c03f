#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "momsynth/scalar.hpp"

namespace momsynth {

/// Indicator of the half-open unit box [a_1, a_1+1) x ... x [a_n, a_n+1), a_i >= 0.
struct BoxKernel {
    std::vector<Rational> offset;

    explicit BoxKernel(std::vector<Rational> a);
    /// Box at offset 0 in dimension n.
    static BoxKernel unit(std::size_t n);

    std::size_t dimension() const { return offset.size(); }
    friend bool operator==(const BoxKernel&, const BoxKernel&) = default;
};

/// prod_i exp(-1/(x_i (1 - x_i))) on (0,1)^n, zero elsewhere. Smooth, compactly
/// supported, positive in the open cube.
struct BumpKernel {
    std::size_t n;

    explicit BumpKernel(std::size_t dim);
    std::size_t dimension() const { return n; }
    friend bool operator==(const BumpKernel&, const BumpKernel&) = default;
};

using Kernel = std::variant<BoxKernel, BumpKernel>;

std::size_t dimension_of(const Kernel& g);

/// Closed axis-aligned box; empty() when it holds no points.
struct AxisBox {
    std::vector<double> lower;
    std::vector<double> upper;

    bool empty() const { return lower.empty(); }
    bool contains(std::span<const double> x) const;
};

/// Closure of the kernel's support.
AxisBox kernel_support(const Kernel& g);

/// One-dimensional profile exp(-1/(t(1-t))) on (0,1), zero outside.
double bump_profile(double t);

double evaluate_kernel(const Kernel& g, std::span<const double> x);

} // namespace momsynth
