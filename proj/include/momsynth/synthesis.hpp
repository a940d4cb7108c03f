#pragma once

#include <span>
#include <variant>

#include "momsynth/atomic_rep.hpp"
#include "momsynth/kernel.hpp"
#include "momsynth/quadrature.hpp"
#include "momsynth/seq_algebra.hpp"
#include "momsynth/sequence.hpp"

namespace momsynth {

/// f(x) = sum_y c_y g(x - y): a kernel smeared over an atomic measure.
/// The kernel moments t and the measure moments u = t^{-1} * s are kept with
/// f, so its moments are available without integration.
template <class S>
struct SynthesizedFunction {
    Kernel kernel;
    AtomicMeasure<S> measure;
    Sequence<S> kernel_moments;
    Sequence<S> measure_moments;
    Sequence<S> target;

    std::size_t dimension() const { return target.dimension(); }
    unsigned degree() const { return target.degree(); }
};

using RationalSynthesis = SynthesizedFunction<ComplexRational>;
using FloatSynthesis = SynthesizedFunction<ComplexDouble>;
using AnySynthesis = std::variant<RationalSynthesis, FloatSynthesis>;

struct SynthesisOptions {
    QuadratureConfig quadrature;
    InverseOptions inverse;
    SolveOptions solve;
};

/// t = moments of g, u = t^{-1} * s, mu = lattice measure with moments u.
/// Exact throughout for a box kernel and rational target.
RationalSynthesis synthesize(const RationalSequence& s, const BoxKernel& g);

/// Float pipeline; box moments are rounded, bump moments come from quadrature.
FloatSynthesis synthesize(const FloatSequence& s, const Kernel& g, const SynthesisOptions& options = {});

/// Dispatches on the target backend. A rational target with a bump kernel has
/// no exact kernel moments and raises BackendMismatch.
AnySynthesis synthesize(const AnySequence& s, const Kernel& g, const SynthesisOptions& options = {});

/// t * u; never integrates.
template <class S>
Sequence<S> moments_of(const SynthesizedFunction<S>& f);

template <class S>
ComplexDouble evaluate(const SynthesizedFunction<S>& f, std::span<const double> x);

/// Box containing supp f: nonzero-weight atoms plus the kernel support.
/// Empty when every weight vanishes.
template <class S>
AxisBox support_bound(const SynthesizedFunction<S>& f);

} // namespace momsynth
