#pragma once

#include <vector>

#include "momsynth/quadrature.hpp"
#include "momsynth/synthesis.hpp"

namespace momsynth {

/// Moments of a box-kernel f by closed-form integration of x^alpha over each
/// shifted box, summed with the atom weights. Uses no convolution code.
/// Throws UnsupportedKernel for the bump.
template <class S>
Sequence<S> integrate_moments_exact(const SynthesizedFunction<S>& f, unsigned d);

/// Tensor-product Gauss-Legendre integration of x^alpha f(x) over
/// support_bound(f). Panels are aligned with the unit cells of the atom grid so
/// a box-kernel integrand is polynomial on every panel. The run is repeated
/// with doubled panels; QuadratureNotConverged if any moment moves by more
/// than cfg.tolerance * max(1, |moment|).
template <class S>
FloatSequence integrate_moments_quadrature(const SynthesizedFunction<S>& f, unsigned d,
                                           const QuadratureConfig& cfg = {});

/// int |x^alpha f(x)| dx over support_bound(f), by graded-lex rank.
template <class S>
std::vector<double> integrate_abs_moments(const SynthesizedFunction<S>& f, unsigned d,
                                          const QuadratureConfig& cfg = {});

struct ComparisonReport {
    std::vector<MultiIndex> alphas;
    std::vector<double> errors;
    /// Indices whose error exceeds the tolerance (or differ, in exact mode).
    std::vector<MultiIndex> failures;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    /// Both sides rational and tolerance 0: equality is tested exactly.
    bool exact = false;
    bool pass = true;
};

/// Per-alpha absolute errors. Throws ShapeMismatch when n or d differ.
ComparisonReport compare(const AnySequence& expected, const AnySequence& actual, double tolerance);

namespace reference {

template <class S>
FloatSequence integrate_moments_quadrature_serial(const SynthesizedFunction<S>& f, unsigned d,
                                                  const QuadratureConfig& cfg = {});

} // namespace reference

} // namespace momsynth
