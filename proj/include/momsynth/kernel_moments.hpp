#pragma once

#include "momsynth/kernel.hpp"
#include "momsynth/multi_index.hpp"
#include "momsynth/quadrature.hpp"
#include "momsynth/sequence.hpp"

namespace momsynth {

/// Exact moments of the unit box at offset a:
/// t_alpha = prod_i ((a_i+1)^(alpha_i+1) - a_i^(alpha_i+1)) / (alpha_i+1).
RationalSequence box_moments(const BoxKernel& g, unsigned d);

/// Moments of the product bump by composite Gauss-Legendre quadrature on each
/// coordinate. The run is repeated with twice the panels; any t_alpha moving by
/// more than cfg.tolerance raises QuadratureNotConverged.
FloatSequence bump_moments(const BumpKernel& g, unsigned d, const QuadratureConfig& cfg = {});

/// Rational backend for box kernels, float backend for the bump.
AnySequence kernel_moments(const Kernel& g, unsigned d, const QuadratureConfig& cfg = {});

/// Moments y^alpha of the Dirac measure at y (0^0 = 1).
RationalSequence point_moments(const MultiIndex& y, unsigned d);

/// Moments of x -> g(x - y), i.e. kernel_moments(g) convolved with point_moments(y).
AnySequence shifted_kernel_moments(const Kernel& g, const MultiIndex& y, unsigned d,
                                   const QuadratureConfig& cfg = {});

} // namespace momsynth
