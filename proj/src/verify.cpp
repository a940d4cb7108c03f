#include "momsynth/verify.hpp"

#include <cmath>
#include <sstream>

namespace momsynth {

namespace {

template <class S>
using RealOf = std::conditional_t<ScalarTraits<S>::backend == Backend::rational, Rational, double>;

template <class R>
R real_power(const R& base, unsigned k) {
    R r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= base;
    return r;
}

template <class S>
S from_real(const RealOf<S>& v) {
    if constexpr (ScalarTraits<S>::backend == Backend::rational)
        return ComplexRational(v);
    else
        return {v, 0.0};
}

// Weighted atoms in double precision, for repeated evaluation.
struct DenseAtoms {
    std::size_t n = 0;
    std::vector<double> points; // row-major
    std::vector<ComplexDouble> weights;
};

template <class S>
DenseAtoms dense_atoms(const SynthesizedFunction<S>& f) {
    DenseAtoms out;
    out.n = f.dimension();
    for (const auto& atom : f.measure.atoms()) {
        if (ScalarTraits<S>::is_zero(atom.weight))
            continue;
        for (std::size_t i = 0; i < out.n; ++i)
            out.points.push_back(static_cast<double>(atom.point[i]));
        out.weights.push_back(ScalarTraits<S>::to_complex(atom.weight));
    }
    return out;
}

ComplexDouble evaluate_dense(const DenseAtoms& atoms, const Kernel& g, const double* x,
                             std::vector<double>& scratch) {
    ComplexDouble value{0.0, 0.0};
    for (std::size_t j = 0; j < atoms.weights.size(); ++j) {
        for (std::size_t i = 0; i < atoms.n; ++i)
            scratch[i] = x[i] - atoms.points[j * atoms.n + i];
        const double gv = evaluate_kernel(g, scratch);
        if (gv != 0.0)
            value += atoms.weights[j] * gv;
    }
    return value;
}

// One tensor-product pass. `absolute` integrates |x^alpha f(x)| instead.
template <class S>
std::vector<ComplexDouble> quadrature_pass(const SynthesizedFunction<S>& f, unsigned d, int nodes,
                                           int panels, bool absolute, bool parallel) {
    const std::size_t n = f.dimension();
    const auto idx = index_set(n, d);
    const std::size_t moments = idx->size();
    std::vector<ComplexDouble> total(moments, {0.0, 0.0});

    const AxisBox box = support_bound(f);
    if (box.empty())
        return total;

    std::vector<Rule1D> rules;
    std::vector<std::vector<double>> powers; // powers[i][node * (d+1) + k] = x^k
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        rules.push_back(aligned_rule(box.lower[i], box.upper[i], nodes, panels));
        const auto& r = rules.back();
        std::vector<double> p(r.size() * (d + 1));
        for (std::size_t q = 0; q < r.size(); ++q) {
            double v = 1.0;
            for (unsigned k = 0; k <= d; ++k) {
                p[q * (d + 1) + k] = v;
                v *= r.x[q];
            }
        }
        powers.push_back(std::move(p));
        count *= r.size();
    }

    const DenseAtoms atoms = dense_atoms(f);
    const auto total_nodes = static_cast<std::ptrdiff_t>(count);

#pragma omp parallel if (parallel)
    {
        std::vector<ComplexDouble> local(moments, {0.0, 0.0});
        std::vector<std::size_t> node(n);
        std::vector<double> x(n), scratch(n);

#pragma omp for schedule(static)
        for (std::ptrdiff_t linear = 0; linear < total_nodes; ++linear) {
            auto rem = static_cast<std::size_t>(linear);
            double weight = 1.0;
            for (std::size_t i = n; i-- > 0;) {
                node[i] = rem % rules[i].size();
                rem /= rules[i].size();
                x[i] = rules[i].x[node[i]];
                weight *= rules[i].w[node[i]];
            }
            ComplexDouble fx = evaluate_dense(atoms, f.kernel, x.data(), scratch);
            if (fx == ComplexDouble(0.0, 0.0))
                continue;
            if (absolute)
                fx = std::abs(fx);
            fx *= weight;
            for (std::size_t r = 0; r < moments; ++r) {
                const auto& alpha = (*idx)[r];
                double mono = 1.0;
                for (std::size_t i = 0; i < n; ++i)
                    mono *= powers[i][node[i] * (d + 1) + alpha[i]];
                local[r] += fx * (absolute ? std::abs(mono) : mono);
            }
        }

#pragma omp critical
        for (std::size_t r = 0; r < moments; ++r)
            total[r] += local[r];
    }
    return total;
}

template <class S>
std::vector<ComplexDouble> converged_quadrature(const SynthesizedFunction<S>& f, unsigned d,
                                                const QuadratureConfig& cfg, bool absolute,
                                                bool parallel) {
    cfg.validate();
    if (f.dimension() == 0)
        throw ShapeMismatch("function has no dimension");
    const auto coarse = quadrature_pass(f, d, cfg.nodes, cfg.panels, absolute, parallel);
    const auto fine = quadrature_pass(f, d, cfg.nodes, 2 * cfg.panels, absolute, parallel);
    const auto idx = index_set(f.dimension(), d);
    for (std::size_t r = 0; r < fine.size(); ++r) {
        const double diff = std::abs(coarse[r] - fine[r]);
        if (!within_tolerance(diff, std::abs(fine[r]), cfg.tolerance)) {
            std::ostringstream msg;
            msg << "quadrature of moment " << (*idx)[r].to_string() << " changed by " << diff
                << " under panel doubling (tolerance " << cfg.tolerance << ")";
            throw QuadratureNotConverged(msg.str());
        }
    }
    return fine;
}

} // namespace

template <class S>
Sequence<S> integrate_moments_exact(const SynthesizedFunction<S>& f, unsigned d) {
    const auto* box = std::get_if<BoxKernel>(&f.kernel);
    if (!box)
        throw UnsupportedKernel("closed-form moment integration needs a box kernel");
    using R = RealOf<S>;
    const std::size_t n = f.dimension();
    const auto idx = index_set(n, d);
    std::vector<S> out(idx->size(), ScalarTraits<S>::zero());

    for (const auto& atom : f.measure.atoms()) {
        if (ScalarTraits<S>::is_zero(atom.weight))
            continue;
        // axis[i][k] = int_{lo}^{lo+1} x^k dx, lo = a_i + y_i
        std::vector<std::vector<R>> axis(n);
        for (std::size_t i = 0; i < n; ++i) {
            R lo;
            if constexpr (std::is_same_v<R, Rational>)
                lo = box->offset[i] + Rational(atom.point[i]);
            else
                lo = box->offset[i].get_d() + static_cast<double>(atom.point[i]);
            const R hi = lo + R(1);
            for (unsigned k = 0; k <= d; ++k) {
                R v = (real_power(hi, k + 1) - real_power(lo, k + 1)) / R(k + 1);
                axis[i].push_back(v);
            }
        }
        for (std::size_t r = 0; r < idx->size(); ++r) {
            const auto& alpha = (*idx)[r];
            R v(1);
            for (std::size_t i = 0; i < n; ++i)
                v *= axis[i][alpha[i]];
            out[r] += atom.weight * from_real<S>(v);
        }
    }
    return Sequence<S>(n, d, std::move(out));
}

template <class S>
FloatSequence integrate_moments_quadrature(const SynthesizedFunction<S>& f, unsigned d,
                                           const QuadratureConfig& cfg) {
    return FloatSequence(f.dimension(), d, converged_quadrature(f, d, cfg, false, true));
}

template <class S>
std::vector<double> integrate_abs_moments(const SynthesizedFunction<S>& f, unsigned d,
                                          const QuadratureConfig& cfg) {
    const auto values = converged_quadrature(f, d, cfg, true, true);
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(v.real());
    return out;
}

ComparisonReport compare(const AnySequence& expected, const AnySequence& actual, double tolerance) {
    if (dimension_of(expected) != dimension_of(actual) || degree_of(expected) != degree_of(actual))
        throw ShapeMismatch("compare: sequences differ in dimension or degree");
    if (!(tolerance >= 0.0))
        throw std::invalid_argument("compare: tolerance must be non-negative");

    ComparisonReport report;
    report.tolerance = tolerance;
    const auto* e_exact = std::get_if<RationalSequence>(&expected);
    const auto* a_exact = std::get_if<RationalSequence>(&actual);
    report.exact = e_exact && a_exact && tolerance == 0.0;

    const auto as_float = [](const AnySequence& s) {
        if (const auto* r = std::get_if<RationalSequence>(&s))
            return to_float(*r);
        return std::get<FloatSequence>(s);
    };

    const auto& idx = index_set(dimension_of(expected), degree_of(expected))->indices();
    report.alphas = idx;
    if (report.exact) {
        for (std::size_t r = 0; r < idx.size(); ++r) {
            const ComplexRational diff = (*e_exact)[r] - (*a_exact)[r];
            report.errors.push_back(ScalarTraits<ComplexRational>::magnitude(diff));
            if (!diff.is_zero())
                report.failures.push_back(idx[r]);
        }
    } else {
        const FloatSequence e = as_float(expected);
        const FloatSequence a = as_float(actual);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            const double err = std::abs(e[r] - a[r]);
            report.errors.push_back(err);
            if (!(err <= tolerance))
                report.failures.push_back(idx[r]);
        }
    }
    for (double err : report.errors)
        report.max_abs_error = std::max(report.max_abs_error, err);
    report.pass = report.failures.empty();
    return report;
}

namespace reference {

template <class S>
FloatSequence integrate_moments_quadrature_serial(const SynthesizedFunction<S>& f, unsigned d,
                                                  const QuadratureConfig& cfg) {
    return FloatSequence(f.dimension(), d, converged_quadrature(f, d, cfg, false, false));
}

} // namespace reference

#define MOMSYNTH_INSTANTIATE(S)                                                                    \
    template Sequence<S> integrate_moments_exact(const SynthesizedFunction<S>&, unsigned);         \
    template FloatSequence integrate_moments_quadrature(const SynthesizedFunction<S>&, unsigned,   \
                                                        const QuadratureConfig&);                  \
    template std::vector<double> integrate_abs_moments(const SynthesizedFunction<S>&, unsigned,    \
                                                       const QuadratureConfig&);                   \
    template FloatSequence reference::integrate_moments_quadrature_serial(                         \
        const SynthesizedFunction<S>&, unsigned, const QuadratureConfig&);

MOMSYNTH_INSTANTIATE(ComplexRational)
MOMSYNTH_INSTANTIATE(ComplexDouble)

#undef MOMSYNTH_INSTANTIATE

} // namespace momsynth
