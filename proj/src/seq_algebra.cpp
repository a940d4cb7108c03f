#include "momsynth/seq_algebra.hpp"

#include <cmath>

namespace momsynth {

namespace {

// Below this many convolution terms the thread start-up dominates.
constexpr std::size_t parallel_threshold = 2048;

template <class S>
void require_invertible(const Sequence<S>& t, const InverseOptions& options) {
    if constexpr (ScalarTraits<S>::backend == Backend::rational) {
        if (t[0].is_zero())
            throw ZeroConstantTerm("sequence has zero constant term; no convolution inverse exists");
    } else {
        if (!(std::abs(t[0]) > options.zero_threshold))
            throw ZeroConstantTerm("constant term |t_0| = " + std::to_string(std::abs(t[0])) +
                                   " is below the zero threshold " +
                                   std::to_string(options.zero_threshold));
    }
}

} // namespace

template <class S>
Sequence<S> identity(std::size_t n, unsigned d) {
    std::vector<S> values(index_count(n, d), ScalarTraits<S>::zero());
    values[0] = ScalarTraits<S>::one();
    return Sequence<S>(n, d, std::move(values));
}

template <class S>
Sequence<S> convolve(const Sequence<S>& s, const Sequence<S>& t) {
    require_same_shape(s, t, "convolve");
    auto plan = convolution_plan(s.dimension(), s.degree());
    const auto count = static_cast<std::ptrdiff_t>(s.size());
    std::vector<S> out(s.size());

#pragma omp parallel for schedule(dynamic, 4) if (plan->terms.size() > parallel_threshold)
    for (std::ptrdiff_t a = 0; a < count; ++a) {
        S acc = ScalarTraits<S>::zero();
        for (auto k = plan->offsets[a]; k < plan->offsets[a + 1]; ++k) {
            const auto& term = plan->terms[k];
            acc += ScalarTraits<S>::times_integer(s[term.beta] * t[term.rest], term.coefficient);
        }
        out[a] = std::move(acc);
    }
    return Sequence<S>(s.dimension(), s.degree(), std::move(out));
}

template <class S>
Sequence<S> inverse(const Sequence<S>& t, const InverseOptions& options) {
    require_invertible(t, options);
    auto plan = convolution_plan(t.dimension(), t.degree());
    const auto& idx = t.indices();
    const S inv0 = ScalarTraits<S>::one() / t[0];
    std::vector<S> u(t.size(), ScalarTraits<S>::zero());
    u[0] = inv0;

    for (unsigned k = 1; k <= t.degree(); ++k) {
        const auto first = static_cast<std::ptrdiff_t>(idx.degree_begin(k));
        const auto last = static_cast<std::ptrdiff_t>(idx.degree_begin(k + 1));
#pragma omp parallel for schedule(dynamic, 4) if (plan->terms.size() > parallel_threshold)
        for (std::ptrdiff_t a = first; a < last; ++a) {
            S acc = ScalarTraits<S>::zero();
            for (auto j = plan->offsets[a]; j < plan->offsets[a + 1]; ++j) {
                const auto& term = plan->terms[j];
                // beta == alpha is the term being solved for
                if (term.beta == static_cast<std::uint32_t>(a))
                    continue;
                acc += ScalarTraits<S>::times_integer(t[term.rest] * u[term.beta], term.coefficient);
            }
            u[a] = -(inv0 * acc);
        }
    }
    return Sequence<S>(t.dimension(), t.degree(), std::move(u));
}

template <class S>
Sequence<S> add(const Sequence<S>& a, const Sequence<S>& b) {
    require_same_shape(a, b, "add");
    std::vector<S> out(a.values().begin(), a.values().end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return Sequence<S>(a.dimension(), a.degree(), std::move(out));
}

template <class S>
Sequence<S> scale(const S& factor, const Sequence<S>& s) {
    std::vector<S> out;
    out.reserve(s.size());
    for (const auto& v : s.values())
        out.push_back(factor * v);
    return Sequence<S>(s.dimension(), s.degree(), std::move(out));
}

FloatSequence to_float(const RationalSequence& s) {
    std::vector<ComplexDouble> out;
    out.reserve(s.size());
    for (const auto& v : s.values())
        out.push_back(ScalarTraits<ComplexRational>::to_complex(v));
    return FloatSequence(s.dimension(), s.degree(), std::move(out));
}

RationalSequence to_rational(const FloatSequence& s) {
    std::vector<ComplexRational> out;
    out.reserve(s.size());
    for (const auto& v : s.values()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("non-finite value cannot be converted to a rational");
        out.emplace_back(Rational(v.real()), Rational(v.imag()));
    }
    return RationalSequence(s.dimension(), s.degree(), std::move(out));
}

namespace reference {

template <class S>
Sequence<S> convolve_serial(const Sequence<S>& s, const Sequence<S>& t) {
    require_same_shape(s, t, "convolve");
    const std::size_t n = s.dimension();
    std::vector<S> out;
    out.reserve(s.size());
    for (const auto& alpha : s.indices()) {
        S acc = ScalarTraits<S>::zero();
        std::vector<std::uint32_t> beta(n, 0);
        while (true) {
            MultiIndex b(beta);
            acc += ScalarTraits<S>::times_integer(s.at(b) * t.at(alpha.minus(b)), binomial(alpha, b));
            std::size_t i = 0;
            while (i < n && beta[i] == alpha[i])
                beta[i++] = 0;
            if (i == n)
                break;
            ++beta[i];
        }
        out.push_back(std::move(acc));
    }
    return Sequence<S>(n, s.degree(), std::move(out));
}

template <class S>
Sequence<S> inverse_serial(const Sequence<S>& t, const InverseOptions& options) {
    require_invertible(t, options);
    const std::size_t n = t.dimension();
    const S inv0 = ScalarTraits<S>::one() / t[0];
    std::vector<S> u;
    u.reserve(t.size());
    for (const auto& alpha : t.indices()) {
        if (alpha.degree() == 0) {
            u.push_back(inv0);
            continue;
        }
        S acc = ScalarTraits<S>::zero();
        std::vector<std::uint32_t> beta(n, 0);
        while (true) {
            MultiIndex b(beta);
            if (b != alpha)
                acc += ScalarTraits<S>::times_integer(t.at(alpha.minus(b)) * u[t.indices().rank(b)],
                                                      binomial(alpha, b));
            std::size_t i = 0;
            while (i < n && beta[i] == alpha[i])
                beta[i++] = 0;
            if (i == n)
                break;
            ++beta[i];
        }
        u.push_back(-(inv0 * acc));
    }
    return Sequence<S>(n, t.degree(), std::move(u));
}

} // namespace reference

#define MOMSYNTH_INSTANTIATE(S)                                                          \
    template Sequence<S> identity<S>(std::size_t, unsigned);                             \
    template Sequence<S> convolve<S>(const Sequence<S>&, const Sequence<S>&);            \
    template Sequence<S> inverse<S>(const Sequence<S>&, const InverseOptions&);          \
    template Sequence<S> add<S>(const Sequence<S>&, const Sequence<S>&);                 \
    template Sequence<S> scale<S>(const S&, const Sequence<S>&);                         \
    template Sequence<S> reference::convolve_serial<S>(const Sequence<S>&, const Sequence<S>&); \
    template Sequence<S> reference::inverse_serial<S>(const Sequence<S>&, const InverseOptions&);

MOMSYNTH_INSTANTIATE(ComplexRational)
MOMSYNTH_INSTANTIATE(ComplexDouble)

#undef MOMSYNTH_INSTANTIATE

} // namespace momsynth
