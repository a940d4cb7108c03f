#include "momsynth/synthesis.hpp"

#include <algorithm>

#include "momsynth/kernel_moments.hpp"

namespace momsynth {

namespace {

void require_kernel_dimension(std::size_t target_n, const Kernel& g) {
    if (target_n != dimension_of(g))
        throw ShapeMismatch("kernel dimension " + std::to_string(dimension_of(g)) +
                            " does not match target dimension " + std::to_string(target_n));
}

template <class S>
SynthesizedFunction<S> assemble(Kernel g, Sequence<S> t, const Sequence<S>& s, AtomicMeasure<S> mu,
                                Sequence<S> u) {
    return SynthesizedFunction<S>{std::move(g), std::move(mu), std::move(t), std::move(u), s};
}

} // namespace

RationalSynthesis synthesize(const RationalSequence& s, const BoxKernel& g) {
    require_kernel_dimension(s.dimension(), g);
    auto t = box_moments(g, s.degree());
    auto u = convolve(inverse(t), s);
    auto mu = solve_measure(u);
    return assemble<ComplexRational>(g, std::move(t), s, std::move(mu), std::move(u));
}

FloatSynthesis synthesize(const FloatSequence& s, const Kernel& g, const SynthesisOptions& options) {
    require_kernel_dimension(s.dimension(), g);
    FloatSequence t = std::holds_alternative<BoxKernel>(g)
                          ? to_float(box_moments(std::get<BoxKernel>(g), s.degree()))
                          : bump_moments(std::get<BumpKernel>(g), s.degree(), options.quadrature);
    auto u = convolve(inverse(t, options.inverse), s);
    auto mu = solve_measure(u, options.solve);
    return assemble<ComplexDouble>(g, std::move(t), s, std::move(mu), std::move(u));
}

AnySynthesis synthesize(const AnySequence& s, const Kernel& g, const SynthesisOptions& options) {
    if (const auto* exact = std::get_if<RationalSequence>(&s)) {
        if (const auto* box = std::get_if<BoxKernel>(&g))
            return synthesize(*exact, *box);
        throw BackendMismatch("the bump kernel has no exact moments; use the float backend");
    }
    return synthesize(std::get<FloatSequence>(s), g, options);
}

template <class S>
Sequence<S> moments_of(const SynthesizedFunction<S>& f) {
    return convolve(f.kernel_moments, f.measure_moments);
}

template <class S>
ComplexDouble evaluate(const SynthesizedFunction<S>& f, std::span<const double> x) {
    const std::size_t n = f.dimension();
    if (x.size() != n)
        throw ShapeMismatch("evaluation point has dimension " + std::to_string(x.size()) +
                            ", function has " + std::to_string(n));
    std::vector<double> shifted(n);
    ComplexDouble value{0.0, 0.0};
    for (const auto& atom : f.measure.atoms()) {
        for (std::size_t i = 0; i < n; ++i)
            shifted[i] = x[i] - static_cast<double>(atom.point[i]);
        const double g = evaluate_kernel(f.kernel, shifted);
        if (g != 0.0)
            value += ScalarTraits<S>::to_complex(atom.weight) * g;
    }
    return value;
}

template <class S>
AxisBox support_bound(const SynthesizedFunction<S>& f) {
    const std::size_t n = f.dimension();
    const AxisBox kernel = kernel_support(f.kernel);
    AxisBox box;
    for (const auto& atom : f.measure.atoms()) {
        if (ScalarTraits<S>::is_zero(atom.weight))
            continue;
        if (box.empty()) {
            box.lower.assign(n, 0.0);
            box.upper.assign(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                box.lower[i] = box.upper[i] = static_cast<double>(atom.point[i]);
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            box.lower[i] = std::min(box.lower[i], static_cast<double>(atom.point[i]));
            box.upper[i] = std::max(box.upper[i], static_cast<double>(atom.point[i]));
        }
    }
    if (box.empty())
        return box;
    for (std::size_t i = 0; i < n; ++i) {
        box.lower[i] += kernel.lower[i];
        box.upper[i] += kernel.upper[i];
    }
    return box;
}

template Sequence<ComplexRational> moments_of(const RationalSynthesis&);
template Sequence<ComplexDouble> moments_of(const FloatSynthesis&);
template ComplexDouble evaluate(const RationalSynthesis&, std::span<const double>);
template ComplexDouble evaluate(const FloatSynthesis&, std::span<const double>);
template AxisBox support_bound(const RationalSynthesis&);
template AxisBox support_bound(const FloatSynthesis&);

} // namespace momsynth
